#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bsmg/bstree.hpp"
#include "bsmg/hecke.hpp"
#include "bsmg/momentgraph.hpp"

namespace bsmg {

// The transition matrix from the stalk basis to the costalk basis at x,
// with the degree bookkeeping needed to slice out scalar blocks.
struct PhiMatrix {
    std::vector<std::vector<MultiPoly>> entries;
    std::vector<int> stalk_degrees;  // d_i = deg pi^(i)
    std::vector<int> kernel_degrees; // k_j = 2(|s| - length(x)) - d_j
};

// Defect polynomial: nonnegative coefficients supported on nonpositive
// exponents for the inputs produced here.
using DefectPoly = LaurentPoly;

struct Summand {
    ElementId z;
    int shift; // r in B(z)<r>
    int multiplicity;
};
using Decomposition = std::vector<Summand>;

// Shared per-word state: fibers, the moment graph on J(s), and the GKM
// verdict required by the transition-matrix formula.
class DefectWorkspace {
public:
    DefectWorkspace(WeylGroup& group, Word word, std::uint32_t characteristic);

    WeylGroup& group() const { return *group_; }
    const Word& word() const { return word_; }
    std::uint32_t characteristic() const { return char_; }
    const std::map<ElementId, std::int64_t>& fibers() const { return fiber_sizes_; }
    const MomentGraph& graph() const { return graph_; }
    bool word_is_reduced() const;

    PhiMatrix phi(ElementId x) const;
    DefectPoly defect_at(ElementId x) const;
    Decomposition decompose() const;

private:
    WeylGroup* group_;
    Word word_;
    std::uint32_t char_;
    std::map<ElementId, std::int64_t> fiber_sizes_;
    MomentGraph graph_;
};

PhiMatrix phi_matrix(WeylGroup& group, const Word& word, ElementId x,
                     std::uint32_t characteristic);
DefectPoly defect_at(WeylGroup& group, const Word& word, ElementId x,
                     std::uint32_t characteristic);
Decomposition decompose(WeylGroup& group, const Word& word, std::uint32_t characteristic);

// Closed forms for ungraded stalk rank 2 and 3: v^-2 resp. 2v^-2 when
// length(x) = |s| - 2, zero otherwise. Fiber sizes outside {2,3} are not
// covered -> NotApplicable.
DefectPoly low_rank_defect(WeylGroup& group, const Word& word, ElementId x);

// Graded ranks of the indecomposable projective with top w over the field,
// derived from canonical-word decompositions. cache maps w to its table.
using BMCache = std::map<ElementId, std::map<ElementId, LaurentPoly>>;
const std::map<ElementId, LaurentPoly>& bm_character(WeylGroup& group, ElementId w,
                                                     std::uint32_t characteristic,
                                                     BMCache& cache);

// n-reachability: w is n-reachable iff some reduced expression of w has all
// its lower Bott-Samelson coefficients f satisfying f(1) <= n with an
// n-reachable base, or f in vZ[v]. Products are deduplicated per element,
// which collapses commutation-equivalent expressions.
class Reachability {
public:
    explicit Reachability(WeylGroup& group) : group_(&group) {}
    bool reachable(ElementId w, int n);
    // All distinct Bott-Samelson products over reduced words of w.
    const std::vector<HeckeElement>& products(ElementId w);

private:
    WeylGroup* group_;
    std::map<ElementId, std::vector<HeckeElement>> products_;
    std::map<std::pair<ElementId, int>, bool> memo_;
};

// Number of n-reachable elements of the finite Weyl group of the given type.
int census(char type, int rank, int n, int threads = 1);

} // namespace bsmg
