#include "bsmg/bstree.hpp"

#include <algorithm>

#include "bsmg/errors.hpp"

namespace bsmg {

ElementId ev_mask(WeylGroup& group, const Word& word, std::uint64_t mask) {
    ElementId x = group.identity();
    for (std::size_t i = 0; i < word.size(); ++i)
        if (mask & (std::uint64_t(1) << i))
            x = group.mul(x, group.generator(word[i]));
    return x;
}

std::map<ElementId, std::int64_t> fiber_sizes(WeylGroup& group, const Word& word) {
    std::map<ElementId, std::int64_t> cur;
    cur.emplace(group.identity(), 1);
    for (int idx : word) {
        ElementId s = group.generator(idx);
        std::map<ElementId, std::int64_t> next;
        for (const auto& [x, n] : cur) {
            next[x] += n;
            next[group.mul(x, s)] += n;
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Fiber lists ordered like the tree: at each level the block through the
// smaller of {x, xs} comes first, matching the left subtree.
const std::vector<std::uint64_t>& fibers_of(
    WeylGroup& group, const Word& word,
    std::vector<std::map<ElementId, std::int64_t>>& sizes, int i, ElementId x,
    std::map<std::pair<int, ElementId>, std::vector<std::uint64_t>>& memo) {
    auto key = std::make_pair(i, x);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::uint64_t> list;
    if (i == 0) {
        if (x == group.identity()) list.push_back(0);
    } else {
        ElementId xs = group.mul(x, group.generator(word[i - 1]));
        auto count = [&](ElementId z) {
            auto jt = sizes[i - 1].find(z);
            return jt == sizes[i - 1].end() ? 0 : jt->second;
        };
        std::uint64_t bit = std::uint64_t(1) << (i - 1);
        bool x_first = group.length(x) < group.length(xs);
        auto append = [&](ElementId z, bool took) {
            for (std::uint64_t m : fibers_of(group, word, sizes, i - 1, z, memo))
                list.push_back(took ? (m | bit) : m);
        };
        std::int64_t nx = count(x), nxs = count(xs);
        if (nx > 0 && nxs > 0) {
            if (x_first) {
                append(x, false);
                append(xs, true);
            } else {
                append(xs, true);
                append(x, false);
            }
        } else if (nx > 0) {
            append(x, false);
        } else if (nxs > 0) {
            append(xs, true);
        }
    }
    return memo.emplace(key, std::move(list)).first->second;
}

std::vector<std::map<ElementId, std::int64_t>> prefix_sizes(WeylGroup& group,
                                                            const Word& word) {
    std::vector<std::map<ElementId, std::int64_t>> sizes(word.size() + 1);
    sizes[0].emplace(group.identity(), 1);
    for (std::size_t i = 1; i <= word.size(); ++i) {
        ElementId s = group.generator(word[i - 1]);
        for (const auto& [x, n] : sizes[i - 1]) {
            sizes[i][x] += n;
            sizes[i][group.mul(x, s)] += n;
        }
    }
    return sizes;
}

} // namespace

FiberMap subword_fibers(WeylGroup& group, const Word& word) {
    auto sizes = prefix_sizes(group, word);
    std::map<std::pair<int, ElementId>, std::vector<std::uint64_t>> memo;
    FiberMap out;
    for (const auto& [x, n] : sizes[word.size()])
        out.emplace(x, fibers_of(group, word, sizes, static_cast<int>(word.size()), x, memo));
    return out;
}

namespace {

using NodePtr = std::shared_ptr<const TreeNode>;

NodePtr build_node(WeylGroup& group, const Word& word,
                   const std::vector<std::map<ElementId, std::int64_t>>& sizes,
                   int i, ElementId x, std::map<std::pair<int, ElementId>, NodePtr>& memo) {
    auto key = std::make_pair(i, x);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    NodePtr result;
    auto count = [&](int level, ElementId z) -> std::int64_t {
        auto jt = sizes[level].find(z);
        return jt == sizes[level].end() ? 0 : jt->second;
    };
    if (count(i, x) == 0) {
        result = nullptr;
    } else if (i == 0) {
        auto node = std::make_shared<TreeNode>();
        node->ev = x;
        node->level = 0;
        result = node;
    } else {
        int idx = word[i - 1];
        ElementId xs = group.mul(x, group.generator(idx));
        ElementId y = group.length(x) < group.length(xs) ? x : xs;
        ElementId z = y == x ? xs : x;
        std::int64_t ny = count(i - 1, y), nz = count(i - 1, z);
        auto node = std::make_shared<TreeNode>();
        node->ev = x;
        node->level = i;
        if (ny > 0 && nz > 0) {
            // Two children: the left subtree sits over the smaller element y.
            TreeEdge left_edge{i, idx, x == z ? 1 : 0, Tilt::Right};
            TreeEdge right_edge{i, idx, x == z ? 0 : -1, Tilt::Left};
            node->children.push_back({left_edge, build_node(group, word, sizes, i - 1, y, memo)});
            node->children.push_back({right_edge, build_node(group, word, sizes, i - 1, z, memo)});
        } else {
            // One child. The nonempty side is always the smaller element y.
            if (ny == 0)
                throw InternalInvariant("single-child tree with empty lower fiber");
            TreeEdge edge{i, idx, x == y ? 0 : 1, Tilt::Vertical};
            node->children.push_back({edge, build_node(group, word, sizes, i - 1, y, memo)});
        }
        result = node;
    }
    memo.emplace(key, result);
    return result;
}

void collect_paths(const NodePtr& node, std::vector<TreeEdge>& edge_stack,
                   std::vector<TreePath>& out) {
    if (node->children.empty()) {
        TreePath p;
        p.edges.assign(edge_stack.rbegin(), edge_stack.rend());
        out.push_back(std::move(p));
        return;
    }
    for (const auto& child : node->children) {
        edge_stack.push_back(child.edge);
        collect_paths(child.node, edge_stack, out);
        edge_stack.pop_back();
    }
}

} // namespace

SubwordTree::SubwordTree(WeylGroup& group, Word word, ElementId x)
    : group_(&group), word_(std::move(word)), x_(x) {
    if (word_.size() > 62)
        throw UsageError("word too long for subsequence masks");
    auto sizes = prefix_sizes(group, word_);
    std::map<std::pair<int, ElementId>, NodePtr> memo;
    root_ = build_node(group, word_, sizes, static_cast<int>(word_.size()), x_, memo);
    if (!root_) return;
    std::vector<TreeEdge> stack;
    collect_paths(root_, stack, paths_);
    for (TreePath& p : paths_) {
        p.evs.resize(p.edges.size() + 1);
        p.evs[0] = group.identity();
        for (std::size_t k = 0; k < p.edges.size(); ++k) {
            const TreeEdge& e = p.edges[k];
            p.evs[k + 1] = e.color == 0
                               ? p.evs[k]
                               : group.mul(p.evs[k], group.generator(e.simple_index));
            if (e.color != 0) p.mask |= std::uint64_t(1) << (e.level - 1);
            if (e.tilt == Tilt::Left) p.degree += 2;
        }
    }
}

MultiPoly root_image(WeylGroup& group, ElementId w, int simple_index,
                     std::uint32_t characteristic) {
    AffineRoot image = group.act(w, group.roots().simple_by_index(simple_index));
    int nv = group.dim();
    std::vector<FieldScalar> coeffs;
    coeffs.reserve(nv);
    for (int c : image.weight_coords)
        coeffs.push_back(FieldScalar::of_int(characteristic, c));
    return MultiPoly::linear_form(characteristic, nv, coeffs);
}

namespace {

using Matrix = std::vector<std::vector<MultiPoly>>;

struct PairKey {
    const TreeNode* a;
    const TreeNode* b;
    bool operator<(const PairKey& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

// Path-product matrices over pairs of equal-level vertices, built jointly
// bottom-up so that factors above a merge are computed once.
const Matrix& pair_matrix(WeylGroup& group, std::uint32_t p, const TreeNode* a,
                          const TreeNode* b, std::map<PairKey, Matrix>& memo) {
    auto key = PairKey{a, b};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Matrix m;
    if (a->children.empty()) {
        m = {{MultiPoly::constant(p, group.dim(), FieldScalar::one(p))}};
    } else {
        FieldScalar half = FieldScalar::of_int(p, 2).inverse();
        // Row blocks follow the children of a, column blocks those of b.
        std::vector<std::size_t> row_offsets, col_offsets;
        std::size_t rows = 0, cols = 0;
        std::vector<const Matrix*> blocks;
        for (const auto& ca : a->children) {
            for (const auto& cb : b->children)
                blocks.push_back(&pair_matrix(group, p, ca.node.get(), cb.node.get(), memo));
        }
        std::vector<std::size_t> rsz, csz;
        for (const auto& ca : a->children)
            rsz.push_back(pair_matrix(group, p, ca.node.get(), ca.node.get(), memo).size());
        for (const auto& cb : b->children)
            csz.push_back(pair_matrix(group, p, cb.node.get(), cb.node.get(), memo).size());
        for (std::size_t s : rsz) rows += s;
        for (std::size_t s : csz) cols += s;
        m.assign(rows, std::vector<MultiPoly>(cols, MultiPoly::zero(p, group.dim())));
        std::size_t roff = 0;
        std::size_t bi = 0;
        for (std::size_t ia = 0; ia < a->children.size(); ++ia) {
            const auto& ca = a->children[ia];
            std::size_t coff = 0;
            for (std::size_t ib = 0; ib < b->children.size(); ++ib) {
                const auto& cb = b->children[ib];
                const Matrix& sub = *blocks[bi++];
                if (ca.edge.tilt == Tilt::Left) {
                    // merge factor (ev(pi)(r) + ev(rho)(r)) / 2, both
                    // evaluations taken below the new edges
                    MultiPoly f = (root_image(group, ca.node->ev, ca.edge.simple_index, p) +
                                   root_image(group, cb.node->ev, ca.edge.simple_index, p))
                                      .scaled(half);
                    for (std::size_t r = 0; r < sub.size(); ++r)
                        for (std::size_t c = 0; c < sub[r].size(); ++c)
                            m[roff + r][coff + c] = f * sub[r][c];
                } else {
                    for (std::size_t r = 0; r < sub.size(); ++r)
                        for (std::size_t c = 0; c < sub[r].size(); ++c)
                            m[roff + r][coff + c] = sub[r][c];
                }
                coff += csz[ib];
            }
            roff += rsz[ia];
        }
    }
    return memo.emplace(key, std::move(m)).first->second;
}

} // namespace

PathProductMatrix e_matrix(const SubwordTree& tree, std::uint32_t p) {
    if (p == 2)
        throw UsageError("characteristic 2 is not supported");
    PathProductMatrix out;
    if (tree.empty()) return out;
    WeylGroup& group = tree.group();
    std::map<PairKey, Matrix> memo;
    out.entries = pair_matrix(group, p, tree.root().get(), tree.root().get(), memo);
    for (const TreePath& path : tree.paths()) {
        out.path_degrees.push_back(path.degree);
        std::vector<MultiPoly> factors;
        for (std::size_t k = 0; k < path.edges.size(); ++k)
            if (path.edges[k].tilt == Tilt::Left)
                factors.push_back(root_image(group, path.evs[k], path.edges[k].simple_index, p));
        out.diag_factors.push_back(std::move(factors));
    }
    return out;
}

LaurentPoly graded_rank(WeylGroup& group, const Word& word, ElementId x) {
    SubwordTree tree(group, word, x);
    LaurentPoly r;
    for (const TreePath& path : tree.paths())
        r.add_term(-path.degree, 1);
    return r;
}

MultiPoly q_value(const SubwordTree& tree, const TreePath& path, std::uint32_t p) {
    WeylGroup& group = tree.group();
    MultiPoly q = MultiPoly::constant(p, group.dim(), FieldScalar::one(p));
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
        const TreeEdge& e = path.edges[k];
        if (e.color == 1) continue;
        MultiPoly im = root_image(group, path.evs[k + 1], e.simple_index, p);
        q = e.color == 0 ? q * im : -(q * im * im);
    }
    return q;
}

MultiPoly p_value(const SubwordTree& tree, const TreePath& path, std::uint32_t p) {
    WeylGroup& group = tree.group();
    MultiPoly out = MultiPoly::constant(p, group.dim(), FieldScalar::one(p));
    for (std::size_t k = 0; k < path.edges.size(); ++k)
        out = out * root_image(group, path.evs[k + 1], path.edges[k].simple_index, p);
    return out;
}

MultiPoly d_value(const SubwordTree& tree, const TreePath& path, std::uint32_t p) {
    WeylGroup& group = tree.group();
    MultiPoly out = MultiPoly::constant(p, group.dim(), FieldScalar::one(p));
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
        const TreeEdge& e = path.edges[k];
        MultiPoly im = root_image(group, path.evs[k + 1], e.simple_index, p);
        if (e.color == 1) {
            out = out * im;
        } else if (e.color == -1) {
            if (im.is_zero())
                throw NonGKMInput("zero root image in costalk division");
            out = -out.divide_exact_by_linear(im);
        }
    }
    return out;
}

std::vector<MultiPoly> q_values(const SubwordTree& tree, std::uint32_t p) {
    if (p == 2)
        throw UsageError("characteristic 2 is not supported");
    std::vector<MultiPoly> out;
    for (const TreePath& path : tree.paths()) out.push_back(q_value(tree, path, p));
    return out;
}

} // namespace bsmg
