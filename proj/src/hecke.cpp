#include "bsmg/hecke.hpp"

#include <algorithm>

#include "bsmg/errors.hpp"

namespace bsmg {

HeckeElement mult_by_Hs_bar(WeylGroup& group, const HeckeElement& h, int simple_index) {
    ElementId s = group.generator(simple_index);
    HeckeElement out;
    auto add = [&out](ElementId x, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.emplace(x, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [x, c] : h) {
        ElementId xs = group.mul(x, s);
        bool up = group.length(xs) > group.length(x);
        add(xs, c);
        add(x, c.shift(up ? 1 : -1));
    }
    return out;
}

HeckeElement bs_character(WeylGroup& group, const Word& word) {
    HeckeElement h;
    h.emplace(group.identity(), LaurentPoly::constant(1));
    for (int idx : word) h = mult_by_Hs_bar(group, h, idx);
    return h;
}

const HeckeElement& kl_element(WeylGroup& group, ElementId w, KLTable& table) {
    auto it = table.find(w);
    if (it != table.end()) return it->second;
    HeckeElement result;
    if (w == group.identity()) {
        result.emplace(w, LaurentPoly::constant(1));
    } else {
        const Word& word = group.canonical_word(w);
        int s = word.back();
        ElementId ws = group.mul(w, group.generator(s));
        result = mult_by_Hs_bar(group, kl_element(group, ws, table), s);
        // The product is self-dual; subtracting integer multiples of smaller
        // KL elements keeps it so while clearing constant terms below w.
        std::vector<ElementId> support;
        for (const auto& [x, c] : result)
            if (x != w) support.push_back(x);
        std::stable_sort(support.begin(), support.end(),
                         [&group](ElementId a, ElementId b) {
                             return group.length(a) > group.length(b);
                         });
        for (ElementId x : support) {
            auto cur = result.find(x);
            if (cur == result.end()) continue;
            std::int64_t c0 = cur->second.coeff(0);
            if (c0 == 0) continue;
            const HeckeElement& hx = kl_element(group, x, table);
            for (const auto& [y, cy] : hx) {
                LaurentPoly delta = cy * LaurentPoly::constant(-c0);
                auto [jt, fresh] = result.emplace(y, delta);
                if (!fresh) {
                    jt->second += delta;
                    if (jt->second.is_zero()) result.erase(jt);
                }
            }
        }
#ifndef NDEBUG
        if (result.find(w) == result.end() || result.at(w) != LaurentPoly::constant(1))
            throw InternalInvariant("KL element top coefficient is not 1");
        for (const auto& [x, c] : result)
            if (x != w && !c.in_v_times_int_poly())
                throw InternalInvariant("KL coefficient outside vZ[v]");
        if (!hecke_equal(bar(group, result), result))
            throw InternalInvariant("KL element is not self-dual");
#endif
    }
    auto [jt, ok] = table.emplace(w, std::move(result));
    (void)ok;
    return jt->second;
}

std::map<ElementId, LaurentPoly> f_coeffs(WeylGroup& group, const Word& word) {
    ElementId w = group.ev_word(word);
    if (group.length(w) != static_cast<int>(word.size()))
        throw NotReduced("word is not reduced");
    HeckeElement h = bs_character(group, word);
    if (h.find(w) == h.end() || h.at(w) != LaurentPoly::constant(1))
        throw InternalInvariant("top coefficient of a reduced product is not 1");
    std::map<ElementId, LaurentPoly> out;
    for (const auto& [x, c] : h)
        if (x != w) out.emplace(x, c);
    return out;
}

HeckeElement bar(WeylGroup& group, const HeckeElement& h) {
    // bar(H_s) = H_s + v - v^-1 for generators; bar(H_x) is the product of
    // bar(H_s) along any reduced word of x.
    HeckeElement out;
    for (const auto& [x, c] : h) {
        HeckeElement term;
        term.emplace(group.identity(), c.bar());
        for (int idx : group.canonical_word(x)) {
            HeckeElement t = mult_by_Hs_bar(group, term, idx); // * (H_s + v)
            // subtract term * v^-1 to get * (H_s + v - v^-1)
            for (const auto& [y, cy] : term) {
                LaurentPoly delta = -cy.shift(-1);
                auto [jt, fresh] = t.emplace(y, delta);
                if (!fresh) {
                    jt->second += delta;
                    if (jt->second.is_zero()) t.erase(jt);
                }
            }
            term = std::move(t);
        }
        out = hecke_add(out, term);
    }
    return out;
}

bool hecke_equal(const HeckeElement& a, const HeckeElement& b) { return a == b; }

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement out = a;
    for (const auto& [x, c] : b) {
        auto [it, fresh] = out.emplace(x, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

HeckeElement hecke_scale(const HeckeElement& a, const LaurentPoly& c) {
    HeckeElement out;
    if (c.is_zero()) return out;
    for (const auto& [x, cx] : a) out.emplace(x, cx * c);
    return out;
}

} // namespace bsmg
