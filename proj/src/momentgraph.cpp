#include "bsmg/momentgraph.hpp"

#include <algorithm>
#include <set>

namespace bsmg {

std::vector<FieldScalar> label_image(const AffineRoot& root, std::uint32_t p) {
    std::vector<FieldScalar> image;
    image.reserve(root.weight_coords.size());
    bool nonzero = false;
    for (int c : root.weight_coords) {
        image.push_back(FieldScalar::of_int(p, c));
        nonzero = nonzero || !image.back().is_zero();
    }
    if (!nonzero)
        throw ZeroLabel("edge label " + root.str() + " reduces to zero");
    return image;
}

MultiPoly label_form(const std::vector<FieldScalar>& image, std::uint32_t p) {
    return MultiPoly::linear_form(p, static_cast<int>(image.size()), image);
}

bool proportional(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            FieldScalar minor = a[i] * b[j] - a[j] * b[i];
            if (!minor.is_zero()) return false;
        }
    return true;
}

MomentGraph MomentGraph::build_interval(WeylGroup& group, ElementId top,
                                        std::uint32_t characteristic) {
    return build_on(group, group.bruhat_interval(top), characteristic);
}

MomentGraph MomentGraph::build_on(WeylGroup& group, std::vector<ElementId> vertices,
                                  std::uint32_t characteristic) {
    if (characteristic == 2)
        throw UsageError("characteristic 2 is not supported");
    MomentGraph g;
    g.group_ = &group;
    g.char_ = characteristic;
    g.vertices_ = std::move(vertices);
    std::set<ElementId> vset(g.vertices_.begin(), g.vertices_.end());

    // Every edge below a vertex must stay inside the set; this is exactly
    // lower closure, since s_beta x < x lands in the interval below x.
    for (ElementId x : g.vertices_) {
        for (const AffineRoot& beta : group.left_inversions(x)) {
            ElementId y = group.mul(group.reflection(beta), x);
            if (!vset.count(y))
                throw IncompleteInterval("vertex set is not lower closed at " +
                                         group.word_str(x));
            Edge e;
            e.from = y;
            e.to = x;
            e.label = beta;
            e.label_image = label_image(beta, characteristic);
            g.edges_.push_back(std::move(e));
        }
    }
    return g;
}

bool MomentGraph::has_vertex(ElementId x) const {
    return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end();
}

std::vector<std::size_t> MomentGraph::incident(ElementId x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].from == x || edges_[i].to == x) out.push_back(i);
    return out;
}

std::vector<std::size_t> MomentGraph::ending_at(ElementId x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].to == x) out.push_back(i);
    return out;
}

std::vector<MomentGraph::GkmViolation> MomentGraph::gkm_check() const {
    std::vector<GkmViolation> out;
    for (ElementId x : vertices_) {
        auto inc = incident(x);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (proportional(edges_[inc[i]].label_image, edges_[inc[j]].label_image))
                    out.push_back({x, inc[i], inc[j]});
    }
    return out;
}

MultiPoly MomentGraph::d_of_x(ElementId x) const {
    if (!has_vertex(x))
        throw UsageError("vertex not in graph");
    auto in = ending_at(x);
    if (static_cast<int>(in.size()) != group_->length(x))
        throw IncompleteInterval("missing edges below vertex " + group_->word_str(x));
    int nv = group_->dim();
    MultiPoly d = MultiPoly::constant(char_, nv, FieldScalar::one(char_));
    for (std::size_t i : in)
        d = d * (-label_form(edges_[i].label_image, char_));
    return d;
}

} // namespace bsmg
