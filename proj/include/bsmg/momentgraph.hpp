#pragma once

#include <cstdint>
#include <vector>

#include "bsmg/poly.hpp"
#include "bsmg/weyl.hpp"

namespace bsmg {

// The Bruhat moment graph on a lower-closed vertex set, with labels reduced
// to the field. Edge labels live in the (fundamental weights, delta) basis.
class MomentGraph {
public:
    struct Edge {
        ElementId from; // smaller endpoint
        ElementId to;   // larger endpoint, to = s_label * from
        AffineRoot label;
        std::vector<FieldScalar> label_image; // rank+1 coords over F
    };

    struct GkmViolation {
        ElementId vertex;
        std::size_t edge_a;
        std::size_t edge_b;
    };

    // Vertices must form a lower-closed set (the builders below guarantee
    // this; arbitrary subsets are rejected so that d_of_x stays correct).
    static MomentGraph build_interval(WeylGroup& group, ElementId top,
                                      std::uint32_t characteristic);
    static MomentGraph build_on(WeylGroup& group, std::vector<ElementId> vertices,
                                std::uint32_t characteristic);

    const std::vector<ElementId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::uint32_t characteristic() const { return char_; }
    WeylGroup& group() const { return *group_; }

    bool has_vertex(ElementId x) const;
    // Indices of edges incident with x (either end).
    std::vector<std::size_t> incident(ElementId x) const;
    // Indices of edges ending at x.
    std::vector<std::size_t> ending_at(ElementId x) const;

    // Empty report means the GKM property holds.
    std::vector<GkmViolation> gkm_check() const;

    // D(x): the product of -label over all edges of the full Bruhat graph
    // ending at x; homogeneous of degree 2*length(x).
    MultiPoly d_of_x(ElementId x) const;

private:
    WeylGroup* group_ = nullptr;
    std::uint32_t char_ = 0;
    std::vector<ElementId> vertices_;
    std::vector<Edge> edges_;
};

// True iff the two coordinate vectors are proportional over their field,
// decided by vanishing of all 2x2 minors.
bool proportional(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b);

// Label image of an affine root in F^(rank+1), weight basis plus delta.
// All-zero image -> ZeroLabel.
std::vector<FieldScalar> label_image(const AffineRoot& root, std::uint32_t characteristic);

// The degree-2 linear form of a label image.
MultiPoly label_form(const std::vector<FieldScalar>& image, std::uint32_t characteristic);

} // namespace bsmg
