#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsmg/errors.hpp"

namespace bsmg {

// Affine root (alpha, n) = alpha + n*delta with alpha a nonzero finite root.
// root_coords are the coordinates of alpha in the simple-root basis;
// weight_coords are the coordinates of the whole root in the basis
// (fundamental weights, delta), cached at construction.
struct AffineRoot {
    std::vector<int> root_coords;
    int level = 0;
    std::vector<int> weight_coords;

    bool operator==(const AffineRoot& o) const {
        return root_coords == o.root_coords && level == o.level;
    }
    bool operator!=(const AffineRoot& o) const { return !(*this == o); }

    // e.g. "[1,1]+0d"
    std::string str() const;
};

// Finite irreducible root system from Cartan data, plus the associated
// affine simple system when the affine flag is set.
class RootSystem {
public:
    // type in {A,B,C,D,E,F,G}; rank checked against the type.
    RootSystem(char type, int rank, bool affine);

    char type() const { return type_; }
    int rank() const { return rank_; }
    bool affine() const { return affine_; }
    // Cartan matrix entry c[i][j] = <alpha_j, alpha_i^vee>.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
    const std::vector<int>& highest_root() const { return highest_; }

    AffineRoot make_root(std::vector<int> root_coords, int level) const;
    AffineRoot simple_root(int i) const; // i in 1..rank, level 0
    // Simple system indices: 1..rank always; 0 = (-highest, 1) when affine.
    std::vector<int> simple_indices() const;
    AffineRoot simple_by_index(int idx) const;
    std::vector<AffineRoot> affine_simple_system() const;

    // <beta, alpha>' : Cartan pairing of finite parts, levels ignored.
    int pairing_prime(const AffineRoot& beta, const AffineRoot& alpha) const;
    // s_alpha(beta) = beta - <beta,alpha>' alpha.
    AffineRoot reflect(const AffineRoot& beta, const AffineRoot& alpha) const;

    bool is_positive(const AffineRoot& beta) const;
    bool is_finite_root(const std::vector<int>& coords) const;

private:
    int form(const std::vector<int>& a, const std::vector<int>& b) const;

    char type_;
    int rank_;
    bool affine_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::int64_t> symmetrizer_;
    std::vector<std::vector<int>> positive_;
    std::vector<int> highest_;
};

} // namespace bsmg
