#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "bsmg/rootsys.hpp"

namespace bsmg {

// Simple-reflection indices: 1..rank are the finite simple roots, 0 is the
// affine reflection at (-highest, 1).
using Word = std::vector<int>;

using ElementId = std::uint32_t;

// A computation context for one (finite or affine) Weyl group.
//
// Elements are interned canonical integer matrices of the dual action on the
// root lattice plus delta, in the basis (alpha_1..alpha_r, delta). Length and
// the canonical reduced word are computed once per element by greedy descent
// (smallest simple index whose root is sent negative). The Bruhat memo table
// lives here; contexts are not shared across threads, elements may be.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& roots);

    const RootSystem& roots() const { return roots_; }
    int dim() const { return roots_.rank() + 1; }

    ElementId identity() const { return identity_; }
    ElementId generator(int simple_index);
    ElementId mul(ElementId a, ElementId b);
    ElementId inverse(ElementId a);
    ElementId ev_word(const Word& w);

    AffineRoot act(ElementId a, const AffineRoot& beta) const;
    // True iff a(beta) is a positive affine root.
    bool sends_positive(ElementId a, const AffineRoot& beta) const;

    int length(ElementId a);
    const Word& canonical_word(ElementId a);

    bool bruhat_leq(ElementId x, ElementId w);
    // All x <= w, sorted by (length, canonical word).
    std::vector<ElementId> bruhat_interval(ElementId w);

    // The length(x) positive roots beta with s_beta x < x, in the order
    // induced by the canonical word of x.
    std::vector<AffineRoot> left_inversions(ElementId x);

    // Reflection s_beta as a group element.
    ElementId reflection(const AffineRoot& beta);

    std::string word_str(ElementId a);
    const std::vector<int>& matrix(ElementId a) const { return elements_[a]; }

private:
    ElementId intern(std::vector<int> matrix);
    std::vector<int> apply(const std::vector<int>& m, const std::vector<int>& v) const;

    const RootSystem& roots_;
    std::vector<std::vector<int>> elements_;
    std::unordered_map<std::uint64_t, std::vector<ElementId>> lookup_;
    std::vector<int> lengths_;
    std::vector<Word> words_;
    std::vector<AffineRoot> simples_;
    std::vector<ElementId> generators_;
    ElementId identity_;
    std::map<std::pair<ElementId, ElementId>, bool> leq_memo_;
};

} // namespace bsmg
