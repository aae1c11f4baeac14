#pragma once

#include <map>

#include "bsmg/laurent.hpp"
#include "bsmg/weyl.hpp"

namespace bsmg {

// Element of the Hecke algebra in the H-basis: finite-support map
// x -> coefficient. No stored zero coefficients.
using HeckeElement = std::map<ElementId, LaurentPoly>;

// Memo table w -> KL basis element, single writer per computation context.
using KLTable = std::map<ElementId, HeckeElement>;

// h * (H_s + v), extended linearly: H_x (H_s + v) = H_{xs} + v^{+-1} H_x.
HeckeElement mult_by_Hs_bar(WeylGroup& group, const HeckeElement& h, int simple_index);

// The product (H_{s_1}+v)...(H_{s_l}+v) starting from H_e.
HeckeElement bs_character(WeylGroup& group, const Word& word);

// The Kazhdan-Lusztig basis element of w: self-dual, h_{w,w} = 1 and
// h_{x,w} in v Z[v] for x < w. Computed by multiplying the previous KL
// element by (H_s + v) and peeling off constant terms with smaller KL
// elements, longest support first.
const HeckeElement& kl_element(WeylGroup& group, ElementId w, KLTable& table);

// H-basis coefficients f_{x,w} of bs_character(word) for x strictly below
// w = ev(word); the word must be reduced.
std::map<ElementId, LaurentPoly> f_coeffs(WeylGroup& group, const Word& word);

// The bar involution v -> v^-1, H_x -> (H_{x^-1})^-1.
HeckeElement bar(WeylGroup& group, const HeckeElement& h);

bool hecke_equal(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const LaurentPoly& c);

} // namespace bsmg
