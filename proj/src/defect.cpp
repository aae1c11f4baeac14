#include "bsmg/defect.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "bsmg/errors.hpp"

namespace bsmg {

namespace {

std::vector<ElementId> sorted_keys(const std::map<ElementId, std::int64_t>& m) {
    std::vector<ElementId> out;
    out.reserve(m.size());
    for (const auto& [x, n] : m) out.push_back(x);
    return out;
}

// Rank over the field by Gaussian elimination.
int matrix_rank(std::vector<std::vector<FieldScalar>> m) {
    int rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        FieldScalar inv = m[row][col].inverse();
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            FieldScalar f = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

DefectWorkspace::DefectWorkspace(WeylGroup& group, Word word, std::uint32_t characteristic)
    : group_(&group), word_(std::move(word)), char_(characteristic),
      fiber_sizes_(fiber_sizes(group, word_)),
      graph_(MomentGraph::build_on(group, sorted_keys(fiber_sizes_), characteristic)) {
    if (characteristic == 2)
        throw UsageError("characteristic 2 is not supported");
    if (!graph_.gkm_check().empty())
        throw NonGKMInput("moment graph on J(s) violates the GKM property");
}

bool DefectWorkspace::word_is_reduced() const {
    ElementId w = group_->ev_word(word_);
    return group_->length(w) == static_cast<int>(word_.size());
}

PhiMatrix DefectWorkspace::phi(ElementId x) const {
    WeylGroup& group = *group_;
    SubwordTree tree(group, word_, x);
    PhiMatrix out;
    if (tree.empty())
        throw UsageError("empty fiber at the requested element");
    PathProductMatrix E = e_matrix(tree, char_);
    std::vector<MultiPoly> Q = q_values(tree, char_);
    std::size_t n = E.entries.size();
    int big = 2 * (static_cast<int>(word_.size()) - group.length(x));
    out.stalk_degrees = E.path_degrees;
    for (int d : E.path_degrees) out.kernel_degrees.push_back(big - d);

    // Solve E^T Phi E = diag(Q) for Phi entrywise. At position (a,b) the
    // only new unknown is Phi[a][b] with coefficient E[a][a] E[b][b]; the
    // divisions by the diagonal's linear factors come out exact because the
    // transition matrix is polynomial.
    int nv = group.dim();
    out.entries.assign(n, std::vector<MultiPoly>(n, MultiPoly::zero(char_, nv)));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            MultiPoly rhs = a == b ? Q[a] : MultiPoly::zero(char_, nv);
            for (std::size_t i = 0; i <= a; ++i) {
                if (E.entries[i][a].is_zero()) continue;
                for (std::size_t j = 0; j <= b; ++j) {
                    if (i == a && j == b) continue;
                    if (E.entries[j][b].is_zero()) continue;
                    const MultiPoly& phi_ij = i <= j ? out.entries[i][j] : out.entries[j][i];
                    if (phi_ij.is_zero()) continue;
                    rhs = rhs - E.entries[i][a] * phi_ij * E.entries[j][b];
                }
            }
            try {
                for (const MultiPoly& f : E.diag_factors[a])
                    rhs = rhs.divide_exact_by_linear(f);
                for (const MultiPoly& f : E.diag_factors[b])
                    rhs = rhs.divide_exact_by_linear(f);
            } catch (const NotDivisible&) {
                throw InternalInvariant("transition matrix entry is not polynomial");
            }
            out.entries[a][b] = rhs;
            if (a != b) out.entries[b][a] = std::move(rhs);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (out.entries[i][j].is_zero()) continue;
            if (out.entries[i][j].homogeneous_degree() !=
                out.kernel_degrees[j] - out.stalk_degrees[i])
                throw InternalInvariant("transition matrix entry degree mismatch");
        }
    return out;
}

DefectPoly DefectWorkspace::defect_at(ElementId x) const {
    auto it = fiber_sizes_.find(x);
    if (it == fiber_sizes_.end() || it->second == 0) return DefectPoly();
    PhiMatrix phi_x = phi(x);
    std::size_t n = phi_x.entries.size();
    DefectPoly d;
    std::set<int> degrees(phi_x.stalk_degrees.begin(), phi_x.stalk_degrees.end());
    for (int deg : degrees) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < n; ++i) {
            if (phi_x.stalk_degrees[i] == deg) rows.push_back(i);
            if (phi_x.kernel_degrees[i] == deg) cols.push_back(i);
        }
        if (rows.empty() || cols.empty()) continue;
        std::vector<std::vector<FieldScalar>> block(
            rows.size(), std::vector<FieldScalar>(cols.size(), FieldScalar::zero(char_)));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                block[r][c] = phi_x.entries[rows[r]][cols[c]].as_scalar();
        d.add_term(-deg, matrix_rank(std::move(block)));
    }
    return d;
}

Decomposition DefectWorkspace::decompose() const {
    std::vector<ElementId> order = sorted_keys(fiber_sizes_);
    std::stable_sort(order.begin(), order.end(), [this](ElementId a, ElementId b) {
        return group_->length(a) > group_->length(b);
    });
    Decomposition out;
    for (ElementId x : order) {
        DefectPoly d = defect_at(x);
        for (const auto& [exp, coeff] : d.terms()) {
            if (coeff < 0)
                throw InternalInvariant("negative defect coefficient");
            out.push_back({x, exp, static_cast<int>(coeff)});
        }
    }
    return out;
}

PhiMatrix phi_matrix(WeylGroup& group, const Word& word, ElementId x,
                     std::uint32_t characteristic) {
    return DefectWorkspace(group, word, characteristic).phi(x);
}

DefectPoly defect_at(WeylGroup& group, const Word& word, ElementId x,
                     std::uint32_t characteristic) {
    return DefectWorkspace(group, word, characteristic).defect_at(x);
}

Decomposition decompose(WeylGroup& group, const Word& word, std::uint32_t characteristic) {
    return DefectWorkspace(group, word, characteristic).decompose();
}

DefectPoly low_rank_defect(WeylGroup& group, const Word& word, ElementId x) {
    ElementId w = group.ev_word(word);
    if (group.length(w) != static_cast<int>(word.size()))
        throw NotReduced("closed forms require a reduced word");
    auto sizes = fiber_sizes(group, word);
    auto it = sizes.find(x);
    std::int64_t n = it == sizes.end() ? 0 : it->second;
    if (n != 2 && n != 3)
        throw NotApplicable("closed forms cover fiber sizes 2 and 3 only");
    DefectPoly d;
    if (group.length(x) == static_cast<int>(word.size()) - 2)
        d.add_term(-2, n == 2 ? 1 : 2);
    return d;
}

const std::map<ElementId, LaurentPoly>& bm_character(WeylGroup& group, ElementId w,
                                                     std::uint32_t characteristic,
                                                     BMCache& cache) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::map<ElementId, LaurentPoly> table;
    if (w == group.identity()) {
        table.emplace(w, LaurentPoly::constant(1));
    } else {
        const Word& word = group.canonical_word(w);
        DefectWorkspace ws(group, word, characteristic);
        Decomposition dec = ws.decompose();
        for (ElementId x : group.bruhat_interval(w)) {
            LaurentPoly grk = graded_rank(group, word, x);
            if (!grk.is_zero()) table.emplace(x, std::move(grk));
        }
        bool top_seen = false;
        for (const Summand& s : dec) {
            if (s.z == w) {
                if (s.shift != 0 || s.multiplicity != 1)
                    throw InternalInvariant("unexpected top summand in decomposition");
                top_seen = true;
                continue;
            }
            const auto& sub = bm_character(group, s.z, characteristic, cache);
            for (const auto& [x, g] : sub) {
                LaurentPoly delta = -g.shift(s.shift) * LaurentPoly::constant(s.multiplicity);
                auto [jt, fresh] = table.emplace(x, delta);
                if (!fresh) {
                    jt->second += delta;
                    if (jt->second.is_zero()) table.erase(jt);
                }
            }
        }
        if (!top_seen)
            throw InternalInvariant("decomposition is missing its top summand");
    }
    return cache.emplace(w, std::move(table)).first->second;
}

namespace {

bool product_admissible(ElementId w, const HeckeElement& h, int n,
                        const std::map<ElementId, bool>& lower) {
    for (const auto& [x, f] : h) {
        if (x == w) continue;
        if (f.in_v_times_int_poly()) continue;
        if (f.evaluate_at_one() > n) return false;
        auto it = lower.find(x);
        if (it == lower.end())
            throw InternalInvariant("reachability of a lower element is unknown");
        if (!it->second) return false;
    }
    return true;
}

} // namespace

const std::vector<HeckeElement>& Reachability::products(ElementId w) {
    auto it = products_.find(w);
    if (it != products_.end()) return it->second;
    std::vector<HeckeElement> out;
    if (w == group_->identity()) {
        HeckeElement unit;
        unit.emplace(w, LaurentPoly::constant(1));
        out.push_back(std::move(unit));
    } else {
        std::set<HeckeElement> dedup;
        for (int idx : group_->roots().simple_indices()) {
            ElementId ws = group_->mul(w, group_->generator(idx));
            if (group_->length(ws) >= group_->length(w)) continue;
            for (const HeckeElement& h : products(ws))
                dedup.insert(mult_by_Hs_bar(*group_, h, idx));
        }
        out.assign(dedup.begin(), dedup.end());
    }
    return products_.emplace(w, std::move(out)).first->second;
}

bool Reachability::reachable(ElementId w, int n) {
    if (w == group_->identity()) return true;
    auto key = std::make_pair(w, n);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // Reachability of everything below w first, so the check sees a
    // complete lower table.
    std::map<ElementId, bool> lower;
    for (ElementId x : group_->bruhat_interval(w))
        if (x != w) lower.emplace(x, reachable(x, n));
    bool ok = false;
    for (const HeckeElement& h : products(w)) {
        if (product_admissible(w, h, n, lower)) {
            ok = true;
            break;
        }
    }
    memo_.emplace(key, ok);
    return ok;
}

int census(char type, int rank, int n, int threads) {
    RootSystem roots(type, rank, false);
    WeylGroup group(roots);

    // Enumerate the finite group and freeze right-multiplication and length
    // tables, so the per-length workers below never touch the group context.
    std::vector<ElementId> all;
    {
        std::set<ElementId> seen = {group.identity()};
        std::vector<ElementId> queue = {group.identity()};
        while (!queue.empty()) {
            ElementId x = queue.back();
            queue.pop_back();
            for (int idx : roots.simple_indices()) {
                ElementId y = group.mul(x, group.generator(idx));
                if (seen.insert(y).second) queue.push_back(y);
            }
        }
        all.assign(seen.begin(), seen.end());
    }
    std::size_t order = all.size();
    std::vector<int> gens = roots.simple_indices();
    std::vector<ElementId> right_mul(order * gens.size());
    std::vector<int> len(order);
    int max_len = 0;
    for (ElementId x : all) {
        len[x] = group.length(x);
        max_len = std::max(max_len, len[x]);
        for (std::size_t g = 0; g < gens.size(); ++g)
            right_mul[x * gens.size() + g] = group.mul(x, group.generator(gens[g]));
    }
    std::vector<std::vector<ElementId>> by_length(max_len + 1);
    for (ElementId x : all) by_length[len[x]].push_back(x);

    // H_x (H_s + v) = H_{xs} + v^{+-1} H_x through the frozen tables.
    auto mult = [&](const HeckeElement& h, std::size_t g) {
        HeckeElement out;
        for (const auto& [x, c] : h) {
            ElementId xs = right_mul[x * gens.size() + g];
            bool up = len[xs] > len[x];
            auto add = [&out](ElementId y, LaurentPoly c2) {
                auto [it, fresh] = out.emplace(y, c2);
                if (!fresh) {
                    it->second += c2;
                    if (it->second.is_zero()) out.erase(it);
                }
            };
            add(xs, c);
            add(x, c.shift(up ? 1 : -1));
        }
        return out;
    };

    // Layered product sets: length L only needs length L-1.
    std::map<ElementId, std::vector<HeckeElement>> prev, cur;
    std::map<ElementId, bool> reach;
    prev.emplace(group.identity(), std::vector<HeckeElement>{
                                       {{group.identity(), LaurentPoly::constant(1)}}});
    reach.emplace(group.identity(), true);
    int count = 1;
    for (int len_now = 1; len_now <= max_len; ++len_now) {
        cur.clear();
        const auto& layer = by_length[len_now];
        std::vector<std::vector<HeckeElement>> results(layer.size());
        auto work = [&](std::size_t i) {
            ElementId w = layer[i];
            std::set<HeckeElement> dedup;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                ElementId ws = right_mul[w * gens.size() + g];
                auto it = prev.find(ws);
                if (it == prev.end()) continue;
                for (const HeckeElement& h : it->second) dedup.insert(mult(h, g));
            }
            results[i].assign(dedup.begin(), dedup.end());
        };
        int nthreads = std::max(1, threads);
        if (nthreads > 1 && layer.size() > 1) {
            std::vector<std::thread> pool;
            std::atomic<std::size_t> next{0};
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < layer.size();
                         i = next.fetch_add(1))
                        work(i);
                });
            for (auto& th : pool) th.join();
        } else {
            for (std::size_t i = 0; i < layer.size(); ++i) work(i);
        }
        for (std::size_t i = 0; i < layer.size(); ++i) {
            ElementId w = layer[i];
            bool ok = false;
            for (const HeckeElement& h : results[i])
                if (product_admissible(w, h, n, reach)) {
                    ok = true;
                    break;
                }
            reach.emplace(w, ok);
            if (ok) ++count;
            cur.emplace(w, std::move(results[i]));
        }
        prev = std::move(cur);
    }
    return count;
}

} // namespace bsmg
