#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace bsmg {

// Element of Z[v, v^-1], sparse map exponent -> integer coefficient.
// No stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(std::int64_t c);
    static LaurentPoly v_power(int exponent, std::int64_t coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    LaurentPoly shift(int by) const;      // multiply by v^by
    LaurentPoly bar() const;              // v -> v^-1
    std::int64_t evaluate_at_one() const; // sum of coefficients

    // True iff all exponents >= 1 (the zero polynomial qualifies).
    bool in_v_times_int_poly() const;

    // Display form, exponents descending, e.g. "1+3v^-2+v^-4".
    std::string str() const;

    void add_term(int exponent, std::int64_t coeff);

private:
    std::map<int, std::int64_t> terms_;
};

} // namespace bsmg
