#pragma once

#include <cstdint>
#include <string>

#include "bsmg/errors.hpp"

namespace bsmg {

// Exact scalar in Q (characteristic 0) or F_p (odd prime p).
//
// Rationals are kept in lowest terms with positive denominator; residues are
// kept in [0, p). The characteristic travels with the value so that values
// from different fields cannot be combined silently.
class FieldScalar {
public:
    FieldScalar() : p_(0), num_(0), den_(1) {}

    static FieldScalar rational(std::int64_t num, std::int64_t den = 1);
    static FieldScalar mod(std::uint32_t p, std::int64_t value);
    // Integer n in the active field (p == 0 means Q).
    static FieldScalar of_int(std::uint32_t p, std::int64_t n);
    static FieldScalar zero(std::uint32_t p) { return of_int(p, 0); }
    static FieldScalar one(std::uint32_t p) { return of_int(p, 1); }

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;

    bool operator==(const FieldScalar& o) const {
        return p_ == o.p_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    // Lowest-terms numerator/denominator (denominator is 1 in F_p).
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string str() const;

private:
    FieldScalar(std::uint32_t p, std::int64_t num, std::int64_t den)
        : p_(p), num_(num), den_(den) {}
    void check_same_field(const FieldScalar& o) const;

    std::uint32_t p_;
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace bsmg
