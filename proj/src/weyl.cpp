#include "bsmg/weyl.hpp"

#include <algorithm>

namespace bsmg {

namespace {

std::uint64_t hash_matrix(const std::vector<int>& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : m) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

WeylGroup::WeylGroup(const RootSystem& roots) : roots_(roots) {
    int n = dim();
    std::vector<int> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    identity_ = intern(std::move(id));
    lengths_[identity_] = 0;
    words_[identity_] = {};

    // Generators, indexed by simple index (slot 0 unused for finite groups).
    simples_.resize(roots_.rank() + 1);
    generators_.assign(roots_.rank() + 1, identity_);
    for (int idx : roots_.simple_indices()) {
        AffineRoot gamma = roots_.simple_by_index(idx);
        simples_[idx] = gamma;
        // Column j of the matrix is s_gamma(e_j) with e_j the j-th basis
        // vector of (root basis, delta).
        std::vector<int> m(n * n, 0);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[j] = 1;
            // s_gamma(v) = v - <v,gamma>' gamma, with <.,.>' linear in v.
            int p = 0;
            if (j < roots_.rank()) {
                AffineRoot ej = roots_.make_root(std::vector<int>(e.begin(), e.end() - 1), 0);
                p = roots_.pairing_prime(ej, gamma);
            }
            for (int i = 0; i < roots_.rank(); ++i)
                m[i * n + j] = e[i] - p * gamma.root_coords[i];
            m[(n - 1) * n + j] = e[n - 1] - p * gamma.level;
        }
        generators_[idx] = intern(std::move(m));
        lengths_[generators_[idx]] = 1;
        words_[generators_[idx]] = {idx};
    }
}

ElementId WeylGroup::intern(std::vector<int> matrix) {
    std::uint64_t h = hash_matrix(matrix);
    auto& bucket = lookup_[h];
    for (ElementId id : bucket)
        if (elements_[id] == matrix) return id;
    ElementId id = static_cast<ElementId>(elements_.size());
    elements_.push_back(std::move(matrix));
    lengths_.push_back(-1);
    words_.emplace_back();
    bucket.push_back(id);
    return id;
}

ElementId WeylGroup::generator(int simple_index) {
    if (simple_index < 0 || simple_index > roots_.rank() ||
        (simple_index == 0 && !roots_.affine()))
        throw UsageError("simple index out of range: " + std::to_string(simple_index));
    return generators_[simple_index];
}

std::vector<int> WeylGroup::apply(const std::vector<int>& m, const std::vector<int>& v) const {
    int n = dim();
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
        out[i] = s;
    }
    return out;
}

ElementId WeylGroup::mul(ElementId a, ElementId b) {
    int n = dim();
    const auto& ma = elements_[a];
    const auto& mb = elements_[b];
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = ma[i * n + k];
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) m[i * n + j] += x * mb[k * n + j];
        }
    return intern(std::move(m));
}

ElementId WeylGroup::inverse(ElementId a) {
    // Inverse via the canonical word reversed.
    Word w = canonical_word(a);
    std::reverse(w.begin(), w.end());
    return ev_word(w);
}

ElementId WeylGroup::ev_word(const Word& w) {
    ElementId x = identity_;
    for (int idx : w) x = mul(x, generator(idx));
    return x;
}

AffineRoot WeylGroup::act(ElementId a, const AffineRoot& beta) const {
    int n = dim();
    std::vector<int> v = beta.root_coords;
    v.push_back(beta.level);
    std::vector<int> out = apply(elements_[a], v);
    int level = out[n - 1];
    out.pop_back();
    return roots_.make_root(std::move(out), level);
}

bool WeylGroup::sends_positive(ElementId a, const AffineRoot& beta) const {
    return roots_.is_positive(act(a, beta));
}

int WeylGroup::length(ElementId a) {
    canonical_word(a);
    return lengths_[a];
}

const Word& WeylGroup::canonical_word(ElementId a) {
    if (lengths_[a] >= 0) return words_[a];
    // Greedy descent: repeatedly strip the smallest simple index gamma with
    // w(gamma) < 0. Each step shortens the element, and indices collected in
    // reverse give a reduced word evaluating back to the element.
    std::vector<int> collected;
    ElementId cur = a;
    std::vector<ElementId> chain;
    while (cur != identity_) {
        if (lengths_[cur] >= 0) break;
        chain.push_back(cur);
        bool found = false;
        for (int idx : roots_.simple_indices()) {
            if (!sends_positive(cur, simples_[idx])) {
                collected.push_back(idx);
                cur = mul(cur, generators_[idx]);
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalInvariant("non-identity element with no descent");
    }
    // cur has known length; unwind the chain. chain[k] = chain[k+1] * s_c[k],
    // so each canonical word extends the previous one on the right.
    Word word = words_[cur];
    int len = lengths_[cur];
    for (std::size_t k = chain.size(); k-- > 0;) {
        word.push_back(collected[k]);
        ++len;
        lengths_[chain[k]] = len;
        words_[chain[k]] = word;
    }
    return words_[a];
}

bool WeylGroup::bruhat_leq(ElementId x, ElementId w) {
    if (x == w) return true;
    if (length(x) >= length(w)) return false;
    auto key = std::make_pair(x, w);
    auto it = leq_memo_.find(key);
    if (it != leq_memo_.end()) return it->second;
    // Subword-property recursion on the first letter s of the canonical word
    // of w: with sw < w, x <= w iff (sx < x ? sx <= sw : x <= sw).
    int s = canonical_word(w).front();
    ElementId sw = mul(generators_[s], w);
    ElementId sx = mul(generators_[s], x);
    bool res = length(sx) < length(x) ? bruhat_leq(sx, sw) : bruhat_leq(x, sw);
    leq_memo_.emplace(key, res);
    return res;
}

std::vector<ElementId> WeylGroup::bruhat_interval(ElementId w) {
    const Word& word = canonical_word(w);
    std::vector<ElementId> cur = {identity_};
    for (int idx : word) {
        std::vector<ElementId> next = cur;
        for (ElementId x : cur) next.push_back(mul(x, generators_[idx]));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [this](ElementId a, ElementId b) {
        int la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return canonical_word(a) < canonical_word(b);
    });
    return cur;
}

std::vector<AffineRoot> WeylGroup::left_inversions(ElementId x) {
    const Word& word = canonical_word(x);
    std::vector<AffineRoot> out;
    ElementId prefix = identity_;
    for (int idx : word) {
        AffineRoot beta = act(prefix, simples_[idx]);
        if (!roots_.is_positive(beta)) {
            for (int& c : beta.root_coords) c = -c;
            beta = roots_.make_root(beta.root_coords, -beta.level);
        }
        out.push_back(beta);
        prefix = mul(prefix, generators_[idx]);
    }
    return out;
}

ElementId WeylGroup::reflection(const AffineRoot& beta) {
    int n = dim();
    std::vector<int> m(n * n, 0);
    for (int j = 0; j < n; ++j) {
        int p = 0;
        if (j < roots_.rank()) {
            std::vector<int> e(roots_.rank(), 0);
            e[j] = 1;
            p = roots_.pairing_prime(roots_.make_root(std::move(e), 0), beta);
        }
        for (int i = 0; i < roots_.rank(); ++i)
            m[i * n + j] = (i == j ? 1 : 0) - p * beta.root_coords[i];
        m[(n - 1) * n + j] = (j == n - 1 ? 1 : 0) - p * beta.level;
    }
    return intern(std::move(m));
}

std::string WeylGroup::word_str(ElementId a) {
    const Word& w = canonical_word(a);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out;
}

} // namespace bsmg
