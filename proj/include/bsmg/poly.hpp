#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bsmg/field.hpp"

namespace bsmg {

// Sparse multivariate polynomial over the active field.
//
// There are nvars variables: variable i for 0 <= i < r is the image of the
// (i+1)-st fundamental weight, variable r is the image of delta. Every
// variable has degree 2, so a monomial of exponent sum k has degree 2k.
// Monomials are packed 8 bits per variable into a 64-bit key, which bounds
// nvars by 8 and individual exponents by 255 (far beyond anything the tree
// calculus produces).
class MultiPoly {
public:
    MultiPoly() : p_(0), nvars_(0) {}
    MultiPoly(std::uint32_t characteristic, int nvars)
        : p_(characteristic), nvars_(nvars) {}

    static MultiPoly zero(std::uint32_t p, int nvars) { return MultiPoly(p, nvars); }
    static MultiPoly constant(std::uint32_t p, int nvars, const FieldScalar& c);
    static MultiPoly variable(std::uint32_t p, int nvars, int index);
    // Linear form sum_i coeffs[i] * x_i.
    static MultiPoly linear_form(std::uint32_t p, int nvars,
                                 const std::vector<FieldScalar>& coeffs);

    std::uint32_t characteristic() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const FieldScalar& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Degree of a nonzero homogeneous polynomial (each variable has degree 2).
    // Mixed degrees -> NotHomogeneous, zero input -> ZeroPolynomial.
    int homogeneous_degree() const;

    // Exact division by a nonzero linear form (homogeneous of degree 2),
    // performed as univariate long division in the smallest variable with a
    // nonzero coefficient in ell. Nonzero remainder -> NotDivisible.
    MultiPoly divide_exact_by_linear(const MultiPoly& ell) const;

    // The constant monomial's coefficient (zero scalar if absent).
    FieldScalar constant_term() const;
    // For degree-0 entries of scalar blocks: the whole polynomial must be a
    // constant, otherwise InternalInvariant.
    FieldScalar as_scalar() const;

    std::vector<int> unpack(std::uint64_t key) const;
    const std::map<std::uint64_t, FieldScalar>& terms() const { return terms_; }
    void add_term(std::uint64_t key, const FieldScalar& c);

    std::string str() const;

private:
    void check_compatible(const MultiPoly& o) const;

    std::uint32_t p_;
    int nvars_;
    std::map<std::uint64_t, FieldScalar> terms_;
};

} // namespace bsmg
