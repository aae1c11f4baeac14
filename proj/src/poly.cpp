#include "bsmg/poly.hpp"

#include "bsmg/errors.hpp"

namespace bsmg {

namespace {

int exponent_of(std::uint64_t key, int var) {
    return static_cast<int>((key >> (8 * var)) & 0xffu);
}

std::uint64_t with_exponent(std::uint64_t key, int var, int e) {
    std::uint64_t mask = ~(std::uint64_t(0xff) << (8 * var));
    return (key & mask) | (static_cast<std::uint64_t>(e) << (8 * var));
}

int exponent_sum(std::uint64_t key) {
    int s = 0;
    while (key) {
        s += static_cast<int>(key & 0xffu);
        key >>= 8;
    }
    return s;
}

} // namespace

MultiPoly MultiPoly::constant(std::uint32_t p, int nvars, const FieldScalar& c) {
    MultiPoly r(p, nvars);
    r.add_term(0, c);
    return r;
}

MultiPoly MultiPoly::variable(std::uint32_t p, int nvars, int index) {
    MultiPoly r(p, nvars);
    r.add_term(std::uint64_t(1) << (8 * index), FieldScalar::one(p));
    return r;
}

MultiPoly MultiPoly::linear_form(std::uint32_t p, int nvars,
                                 const std::vector<FieldScalar>& coeffs) {
    MultiPoly r(p, nvars);
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        r.add_term(std::uint64_t(1) << (8 * i), coeffs[i]);
    return r;
}

void MultiPoly::add_term(std::uint64_t key, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_)
        throw FieldMismatch("polynomials over different rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(p_, nvars_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1 + k2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(p_, nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const FieldScalar& c) const {
    MultiPoly r(p_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [k, cc] : terms_) r.add_term(k, cc * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

int MultiPoly::homogeneous_degree() const {
    if (terms_.empty())
        throw ZeroPolynomial("degree of the zero polynomial");
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int dk = 2 * exponent_sum(k);
        if (d < 0) d = dk;
        else if (d != dk)
            throw NotHomogeneous("mixed monomial degrees");
    }
    return d;
}

MultiPoly MultiPoly::divide_exact_by_linear(const MultiPoly& ell) const {
    if (ell.is_zero())
        throw DivisionByZero("division by the zero linear form");
    check_compatible(ell);
    if (ell.homogeneous_degree() != 2)
        throw NotDivisible("divisor is not a linear form");

    // Pivot: smallest variable index with a nonzero coefficient in ell.
    int pivot = -1;
    FieldScalar pivot_coeff;
    for (int v = 0; v < nvars_ && pivot < 0; ++v) {
        auto it = ell.terms_.find(std::uint64_t(1) << (8 * v));
        if (it != ell.terms_.end()) {
            pivot = v;
            pivot_coeff = it->second;
        }
    }
    if (pivot < 0)
        throw NotDivisible("divisor has no variable support");
    FieldScalar inv = pivot_coeff.inverse();

    MultiPoly rem = *this;
    MultiPoly quot(p_, nvars_);
    while (!rem.terms_.empty()) {
        // Highest pivot-exponent slice of the remainder.
        int dmax = 0;
        for (const auto& [k, c] : rem.terms_)
            dmax = std::max(dmax, exponent_of(k, pivot));
        if (dmax == 0) break;
        MultiPoly t(p_, nvars_);
        for (const auto& [k, c] : rem.terms_)
            if (exponent_of(k, pivot) == dmax)
                t.add_term(with_exponent(k, pivot, dmax - 1), c * inv);
        quot = quot + t;
        rem = rem - t * ell;
    }
    if (!rem.terms_.empty())
        throw NotDivisible("nonzero remainder in linear division");
    return quot;
}

FieldScalar MultiPoly::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? FieldScalar::zero(p_) : it->second;
}

FieldScalar MultiPoly::as_scalar() const {
    if (terms_.empty()) return FieldScalar::zero(p_);
    if (terms_.size() != 1 || terms_.begin()->first != 0)
        throw InternalInvariant("expected a constant polynomial");
    return terms_.begin()->second;
}

std::vector<int> MultiPoly::unpack(std::uint64_t key) const {
    std::vector<int> e(nvars_);
    for (int v = 0; v < nvars_; ++v) e[v] = exponent_of(key, v);
    return e;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            int e = exponent_of(k, v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (v == nvars_ - 1) ? "d" : "w" + std::to_string(v + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string term = c.str();
        if (!mono.empty()) {
            if (term == "1") term = mono;
            else if (term == "-1") term = "-" + mono;
            else term += "*" + mono;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

} // namespace bsmg
