#include "bsmg/field.hpp"

#include <numeric>

namespace bsmg {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw Error("Overflow", "rational coefficient exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

std::int64_t mod_reduce(std::uint32_t p, __int128 v) {
    __int128 m = static_cast<__int128>(p);
    __int128 r = v % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

// Extended Euclid modular inverse, p odd prime.
std::int64_t mod_inverse(std::uint32_t p, std::int64_t a) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1)
        throw DivisionByZero("value not invertible mod p");
    if (t < 0) t += p;
    return t;
}

} // namespace

FieldScalar FieldScalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
    return FieldScalar(0, num, den);
}

FieldScalar FieldScalar::mod(std::uint32_t p, std::int64_t value) {
    return FieldScalar(p, mod_reduce(p, value), 1);
}

FieldScalar FieldScalar::of_int(std::uint32_t p, std::int64_t n) {
    return p == 0 ? rational(n) : mod(p, n);
}

void FieldScalar::check_same_field(const FieldScalar& o) const {
    if (p_ != o.p_)
        throw FieldMismatch("scalars from different fields");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same_field(o);
    if (p_ != 0)
        return mod(p_, checked(static_cast<__int128>(num_) + o.num_));
    __int128 n = static_cast<__int128>(num_) * o.den_ +
                 static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return rational(checked(n), checked(d));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same_field(o);
    if (p_ != 0)
        return mod(p_, mod_reduce(p_, static_cast<__int128>(num_) * o.num_));
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return rational(checked(n), checked(d));
}

FieldScalar FieldScalar::operator-() const {
    if (p_ != 0) return mod(p_, -num_);
    return FieldScalar(0, -num_, den_);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    if (p_ != 0)
        return FieldScalar(p_, mod_inverse(p_, num_), 1);
    return rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
}

std::string FieldScalar::str() const {
    if (p_ != 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace bsmg
