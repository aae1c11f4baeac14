#include "bsmg/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bsmg {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
    auto bad = [&] {
        throw UnsupportedType(std::string("unsupported Cartan datum ") + type +
                              std::to_string(rank));
    };
    int r = rank;
    if (r < 1) bad();
    std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    switch (type) {
    case 'A':
        chain(r);
        break;
    case 'B': // alpha_r short: <alpha_r, alpha_{r-1}^vee> = -1, <alpha_{r-1}, alpha_r^vee> = -2
        if (r < 2) bad();
        chain(r);
        c[r - 1][r - 2] = -2;
        break;
    case 'C':
        if (r < 2) bad();
        chain(r);
        c[r - 2][r - 1] = -2;
        break;
    case 'D':
        if (r < 3) bad();
        chain(r - 1);
        c[r - 3][r - 1] = -1;
        c[r - 1][r - 3] = -1;
        break;
    case 'E':
        if (r < 6 || r > 8) bad();
        // Bourbaki numbering: node 2 attaches to node 4.
        for (int i : {0, 2}) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        for (int i = 3; i + 1 < r; ++i) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        c[1][3] = -1;
        c[3][1] = -1;
        break;
    case 'F':
        if (r != 4) bad();
        chain(r);
        c[1][2] = -2;
        c[2][1] = -1;
        break;
    case 'G':
        if (r != 2) bad();
        c[0][1] = -3;
        c[1][0] = -1;
        break;
    default:
        bad();
    }
    return c;
}

} // namespace

std::string AffineRoot::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < root_coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(root_coords[i]);
    }
    out += "]+" + std::to_string(level) + "d";
    return out;
}

RootSystem::RootSystem(char type, int rank, bool affine)
    : type_(type), rank_(rank), affine_(affine), cartan_(cartan_matrix(type, rank)) {
    // Symmetrizer d with d_i c_ij = d_j c_ji; gives the invariant form
    // (alpha_i, alpha_j) = d_j c_ji used for general coroot pairings. Only
    // the ratios matter, so propagate as fractions and clear denominators.
    std::vector<std::int64_t> dnum(rank_, 0), dden(rank_, 1);
    dnum[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) {
                if (cartan_[i][j] == 0 || i == j || dnum[i] == 0 || dnum[j] != 0)
                    continue;
                // d_j / d_i = c_ij / c_ji
                dnum[j] = dnum[i] * cartan_[i][j];
                dden[j] = dden[i] * cartan_[j][i];
                if (dnum[j] < 0) { dnum[j] = -dnum[j]; dden[j] = -dden[j]; }
                changed = true;
            }
    }
    std::int64_t common = 1;
    for (int i = 0; i < rank_; ++i) common = std::lcm(common, dden[i]);
    symmetrizer_.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) symmetrizer_[i] = dnum[i] * (common / dden[i]);

    // Positive roots: orbit of the simple roots under simple reflections,
    // restricted to the nonnegative cone.
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> e(rank_, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank_; ++i) {
            // <beta, alpha_i^vee> = sum_j c_ij beta_j
            int p = 0;
            for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * beta[j];
            auto im = beta;
            im[i] -= p;
            if (all.insert(im).second) queue.push_back(im);
        }
    }
    for (const auto& beta : all) {
        bool pos = true, nonzero = false;
        for (int x : beta) {
            if (x < 0) pos = false;
            if (x != 0) nonzero = true;
        }
        if (pos && nonzero) positive_.push_back(beta);
    }
    std::sort(positive_.begin(), positive_.end());
    int best = -1;
    for (const auto& beta : positive_) {
        int h = 0;
        for (int x : beta) h += x;
        if (h > best) {
            best = h;
            highest_ = beta;
        }
    }
}

bool RootSystem::is_finite_root(const std::vector<int>& coords) const {
    std::vector<int> a = coords;
    bool neg = std::any_of(a.begin(), a.end(), [](int x) { return x < 0; });
    if (neg)
        for (int& x : a) x = -x;
    return std::binary_search(positive_.begin(), positive_.end(), a);
}

AffineRoot RootSystem::make_root(std::vector<int> root_coords, int level) const {
    if (!is_finite_root(root_coords))
        throw Error("InvalidRoot", "finite part is not a root");
    AffineRoot r;
    r.root_coords = std::move(root_coords);
    r.level = level;
    r.weight_coords.assign(rank_ + 1, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            r.weight_coords[i] += cartan_[i][j] * r.root_coords[j];
    r.weight_coords[rank_] = level;
    return r;
}

AffineRoot RootSystem::simple_root(int i) const {
    std::vector<int> e(rank_, 0);
    e[i - 1] = 1;
    return make_root(std::move(e), 0);
}

std::vector<int> RootSystem::simple_indices() const {
    std::vector<int> out;
    if (affine_) out.push_back(0);
    for (int i = 1; i <= rank_; ++i) out.push_back(i);
    return out;
}

AffineRoot RootSystem::simple_by_index(int idx) const {
    if (idx == 0) {
        if (!affine_)
            throw UsageError("index 0 requires the affine flag");
        std::vector<int> h = highest_;
        for (int& x : h) x = -x;
        return make_root(std::move(h), 1);
    }
    if (idx < 1 || idx > rank_)
        throw UsageError("simple index out of range: " + std::to_string(idx));
    return simple_root(idx);
}

std::vector<AffineRoot> RootSystem::affine_simple_system() const {
    std::vector<AffineRoot> out;
    for (int idx : simple_indices()) out.push_back(simple_by_index(idx));
    return out;
}

int RootSystem::form(const std::vector<int>& a, const std::vector<int>& b) const {
    // (a, b) with (alpha_i, alpha_j) = d_j c_ji, in the symmetrizer scale.
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += static_cast<std::int64_t>(a[i]) * b[j] * symmetrizer_[j] * cartan_[j][i];
    return static_cast<int>(s);
}

int RootSystem::pairing_prime(const AffineRoot& beta, const AffineRoot& alpha) const {
    int num = 2 * form(beta.root_coords, alpha.root_coords);
    int den = form(alpha.root_coords, alpha.root_coords);
    if (den == 0 || num % den != 0)
        throw InternalInvariant("coroot pairing is not integral");
    return num / den;
}

AffineRoot RootSystem::reflect(const AffineRoot& beta, const AffineRoot& alpha) const {
    int p = pairing_prime(beta, alpha);
    std::vector<int> coords = beta.root_coords;
    for (int i = 0; i < rank_; ++i) coords[i] -= p * alpha.root_coords[i];
    return make_root(std::move(coords), beta.level - p * alpha.level);
}

bool RootSystem::is_positive(const AffineRoot& beta) const {
    if (beta.level != 0) return beta.level > 0;
    for (int x : beta.root_coords)
        if (x != 0) return x > 0;
    throw InternalInvariant("zero vector is not a root");
}

} // namespace bsmg
