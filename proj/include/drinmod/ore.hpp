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

#ifndef DRINMOD_ORE_HPP
#define DRINMOD_ORE_HPP

#include <string>
#include <vector>

#include "drinmod/extfield.hpp"

namespace drinmod {

// Twisted polynomial sum a_i t^i over a coefficient field L containing F_q,
// subject to t x = x^q t.  These are exactly the F_q-linear maps
// x -> sum a_i x^(q^i) on L and its extensions.
struct OrePoly {
    std::vector<FFElem> c;  // a_0 .. a_n, normalized

    bool is_zero() const { return c.empty(); }
    int tdeg() const { return (int)c.size() - 1; }
};

OrePoly ore_zero();
OrePoly ore_one(const ExtField& L);                 // t^0
OrePoly ore_t(const ExtField& L);                   // the twist t
OrePoly ore_const(const ExtField& L, const FFElem& a);
OrePoly ore_from_coeffs(const ExtField& L, std::vector<FFElem> cs);

void ore_trim(const ExtField& L, OrePoly& f);
bool ore_eq(const ExtField& L, const OrePoly& f, const OrePoly& g);
OrePoly ore_add(const ExtField& L, const OrePoly& f, const OrePoly& g);
OrePoly ore_sub(const ExtField& L, const OrePoly& f, const OrePoly& g);
OrePoly ore_scale(const ExtField& L, const OrePoly& f, const FFElem& s);

// Non-commutative product: (a t^i)(b t^j) = a b^(q^i) t^(i+j).
OrePoly ore_mul(const ExtField& L, const OrePoly& f, const OrePoly& g);

// Right division: f = q * g + r with tdeg(r) < tdeg(g); unique.
std::pair<OrePoly, OrePoly> ore_right_divide(const ExtField& L, const OrePoly& f,
                                             const OrePoly& g);

// Evaluation as an additive polynomial: sum a_i x^(q^i).
FFElem ore_eval(const ExtField& L, const OrePoly& f, const FFElem& x);

// Monic additive polynomial with root set exactly the F_q-span of the given
// basis vectors; t-degree = basis size.  Assumes the vectors are
// F_q-independent.
OrePoly ore_kernel_poly_from_basis(const ExtField& L, const std::vector<FFElem>& basis);

// Same, from the full subspace given as a set of elements; verifies the set
// is an F_q-subspace (throws otherwise).
OrePoly ore_kernel_poly(const ExtField& L, const std::vector<FFElem>& subspace);

// Coefficient-wise application of a field embedding.
OrePoly ore_map(const Embedding& e, const OrePoly& f);

std::string ore_to_string(const ExtField& L, const OrePoly& f);
OrePoly ore_parse(const ExtField& L, const std::string& s);

}  // namespace drinmod

#endif
