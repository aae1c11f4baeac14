#include "bsmg/laurent.hpp"

namespace bsmg {

LaurentPoly LaurentPoly::constant(std::int64_t c) { return v_power(0, c); }

LaurentPoly LaurentPoly::v_power(int exponent, std::int64_t coeff) {
    LaurentPoly r;
    r.add_term(exponent, coeff);
    return r;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shift(int by) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::int64_t LaurentPoly::evaluate_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::in_v_times_int_poly() const {
    return terms_.empty() || terms_.begin()->first >= 1;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::int64_t c = it->second;
        int e = it->first;
        if (!out.empty())
            out += c < 0 ? "-" : "+";
        else if (c < 0)
            out += "-";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) out += std::to_string(a);
        if (e != 0) {
            out += "v";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace bsmg
