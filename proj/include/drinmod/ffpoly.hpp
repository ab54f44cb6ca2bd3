/*
   Copyright 2026 the drinmod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINMOD_FFPOLY_HPP
#define DRINMOD_FFPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drinmod/extfield.hpp"

namespace drinmod {

// Univariate polynomial with coefficients in an ExtField.  Thin value type;
// all arithmetic goes through free functions taking the field.
struct FFPoly {
    std::vector<FFElem> c;  // low to high, normalized

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
};

FFPoly ffp_zero();
FFPoly ffp_one(const ExtField& F);
FFPoly ffp_x(const ExtField& F);
FFPoly ffp_const(const ExtField& F, const FFElem& a);
FFPoly ffp_from_coeffs(const ExtField& F, std::vector<FFElem> cs);
// lift of a polynomial over F_q, coefficients embedded as constants
FFPoly ffp_lift(const ExtField& F, const Poly& p);

void ffp_trim(const ExtField& F, FFPoly& a);
bool ffp_eq(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_add(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_sub(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_neg(const ExtField& F, const FFPoly& a);
FFPoly ffp_mul(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_scale(const ExtField& F, const FFPoly& a, const FFElem& s);
FFPoly ffp_shift(const ExtField& F, const FFPoly& a, int k);  // * x^k
std::pair<FFPoly, FFPoly> ffp_divrem(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_mod(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_div(const ExtField& F, const FFPoly& a, const FFPoly& b);
FFPoly ffp_gcd(const ExtField& F, const FFPoly& a, const FFPoly& b);  // monic
FFPoly ffp_monic(const ExtField& F, const FFPoly& a);
FFPoly ffp_derivative(const ExtField& F, const FFPoly& a);
FFElem ffp_eval(const ExtField& F, const FFPoly& a, const FFElem& x);
FFPoly ffp_pow_mod(const ExtField& F, const FFPoly& b, uint64_t e, const FFPoly& m);
FFPoly ffp_pow_mod_big(const ExtField& F, const FFPoly& b, const BigUInt& e, const FFPoly& m);

// Newton interpolation through distinct nodes.
FFPoly ffp_interpolate(const ExtField& F, const std::vector<FFElem>& xs,
                       const std::vector<FFElem>& ys);

// Characteristic-p aware squarefree part.
FFPoly ffp_squarefree_part(const ExtField& F, const FFPoly& a);

// Full factorization into monic irreducibles with multiplicities.
std::vector<std::pair<FFPoly, int>> ffp_factor(const ExtField& F, const FFPoly& a);

// All roots of a lying in F itself, with multiplicities, canonically ordered.
std::vector<std::pair<FFElem, int>> ffp_roots_in_field(const ExtField& F, const FFPoly& a);

// canonical order on field elements (matches code order where codes exist)
bool ff_less(const FFElem& a, const FFElem& b);

std::string ffp_to_string(const ExtField& F, const FFPoly& a, const std::string& var = "Y");

}  // namespace drinmod

#endif
