#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "bsmg/laurent.hpp"
#include "bsmg/poly.hpp"
#include "bsmg/weyl.hpp"

namespace bsmg {

enum class Tilt { Vertical, Left, Right };

struct TreeEdge {
    int level = 0;        // 1..l
    int simple_index = 0; // r(edge) is the simple root of this index
    int color = 0;        // -1, 0, 1
    Tilt tilt = Tilt::Vertical;
};

// Vertex of T(s,x) with its evaluation and ordered children (left before
// right). Subtrees are immutable and shared between trees of the same word.
struct TreeNode {
    ElementId ev;
    int level;
    struct Child {
        TreeEdge edge;
        std::shared_ptr<const TreeNode> node;
    };
    std::vector<Child> children;
};

// A maximal path, one edge per level from a leaf up to the root.
// evs[i] is the evaluation of the length-i prefix (evs[0] = e at the leaf),
// mask has bit i-1 set iff the level-i edge has nonzero color.
struct TreePath {
    std::vector<TreeEdge> edges;
    std::vector<ElementId> evs;
    std::uint64_t mask = 0;
    int degree = 0; // number of left tilted edges times 2
};

// Subsequences of a word are bitmasks over its positions.
// Fiber lists are ordered to match the left-to-right order of tree paths.
using FiberMap = std::map<ElementId, std::vector<std::uint64_t>>;

ElementId ev_mask(WeylGroup& group, const Word& word, std::uint64_t mask);
FiberMap subword_fibers(WeylGroup& group, const Word& word);
// |I(s)_x| for every x in J(s), cheap DP without materializing sequences.
std::map<ElementId, std::int64_t> fiber_sizes(WeylGroup& group, const Word& word);

class SubwordTree {
public:
    // Empty fiber gives an empty tree (root() == nullptr).
    SubwordTree(WeylGroup& group, Word word, ElementId x);

    WeylGroup& group() const { return *group_; }
    const Word& word() const { return word_; }
    ElementId target() const { return x_; }
    bool empty() const { return root_ == nullptr; }
    const std::shared_ptr<const TreeNode>& root() const { return root_; }

    // Maximal paths counted from left to right.
    const std::vector<TreePath>& paths() const { return paths_; }

private:
    WeylGroup* group_;
    Word word_;
    ElementId x_;
    std::shared_ptr<const TreeNode> root_;
    std::vector<TreePath> paths_;
};

// E(s,x) together with the degree and diagonal data the defect computation
// needs. The diagonal entry i is the product of diag_factors[i] (linear
// forms), which keeps the exact divisions in the transition matrix cheap.
struct PathProductMatrix {
    std::vector<std::vector<MultiPoly>> entries;
    std::vector<int> path_degrees;
    std::vector<std::vector<MultiPoly>> diag_factors;
};

// Image of w(alpha_idx) in F^(rank+1) as a linear form (may be zero mod p).
MultiPoly root_image(WeylGroup& group, ElementId w, int simple_index,
                     std::uint32_t characteristic);

PathProductMatrix e_matrix(const SubwordTree& tree, std::uint32_t characteristic);

// Sum of v^{-deg pi} over maximal paths; zero for an empty fiber.
LaurentPoly graded_rank(WeylGroup& group, const Word& word, ElementId x);

// Per-path invariants of the tree calculus.
MultiPoly q_value(const SubwordTree& tree, const TreePath& path, std::uint32_t characteristic);
MultiPoly p_value(const SubwordTree& tree, const TreePath& path, std::uint32_t characteristic);
MultiPoly d_value(const SubwordTree& tree, const TreePath& path, std::uint32_t characteristic);
std::vector<MultiPoly> q_values(const SubwordTree& tree, std::uint32_t characteristic);

} // namespace bsmg
