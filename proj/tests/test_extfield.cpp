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

#include "doctest.h"
#include "drinmod/extfield.hpp"
#include "drinmod/ffpoly.hpp"

using namespace drinmod;

TEST_CASE("extension field arithmetic") {
    const Fq& f3 = fq_cache_q(3);
    const ExtField& F9 = ext_field(f3, 2);
    CHECK(F9.order_u64() == 9);
    CHECK(F9.modulus().to_string() == "T^2+1");  // first irreducible quadratic

    // field axioms by enumeration
    for (uint64_t a = 0; a < 9; ++a) {
        FFElem ea = F9.from_code(a);
        CHECK(F9.to_code(ea) == a);
        CHECK(F9.eq(F9.add(ea, F9.zero()), ea));
        CHECK(F9.eq(F9.mul(ea, F9.one()), ea));
        if (a) CHECK(F9.is_one(F9.mul(ea, F9.inv(ea))));
        for (uint64_t b = 0; b < 9; ++b) {
            FFElem eb = F9.from_code(b);
            CHECK(F9.eq(F9.mul(ea, eb), F9.mul(eb, ea)));
            // Zech path agrees with vector path
            CHECK(F9.to_code(F9.mul(ea, eb)) == F9.zc_mul(a, b));
            CHECK(F9.to_code(F9.add(ea, eb)) == F9.zc_add(a, b));
            CHECK(F9.to_code(F9.sub(ea, eb)) == F9.zc_sub(a, b));
        }
    }
    // Frobenius has order n and fixes exactly the base field
    const ExtField& F81 = ext_field(f3, 4);
    int fixed = 0;
    for (uint64_t a = 0; a < 81; ++a) {
        FFElem ea = F81.from_code(a);
        FFElem x = ea;
        for (uint32_t i = 0; i < 4; ++i) x = F81.frob_q(x);
        CHECK(F81.eq(x, ea));
        if (F81.eq(F81.frob_q(ea), ea)) ++fixed;
    }
    CHECK(fixed == 3);
}

TEST_CASE("embeddings respect arithmetic and compose with pullback") {
    const Fq& f3 = fq_cache_q(3);
    const ExtField& F9 = ext_field(f3, 2);
    const ExtField& F81 = ext_field(f3, 4);
    const Embedding& e = embedding(F9, F81);
    for (uint64_t a = 0; a < 9; ++a) {
        FFElem ea = F9.from_code(a);
        FFElem ia = e.apply(ea);
        auto back = e.pull_back(ia);
        REQUIRE(back.has_value());
        CHECK(F9.eq(*back, ea));
        for (uint64_t b = 0; b < 9; ++b) {
            FFElem eb = F9.from_code(b);
            CHECK(F81.eq(e.apply(F9.mul(ea, eb)), F81.mul(e.apply(ea), e.apply(eb))));
            CHECK(F81.eq(e.apply(F9.add(ea, eb)), F81.add(e.apply(ea), e.apply(eb))));
        }
    }
    // something outside the subfield does not pull back
    int outside = 0;
    for (uint64_t c = 0; c < 81; ++c) {
        if (!e.pull_back(F81.from_code(c)).has_value()) ++outside;
    }
    CHECK(outside == 81 - 9);
}

TEST_CASE("ffpoly: division, gcd, interpolation") {
    const Fq& f3 = fq_cache_q(3);
    const ExtField& F9 = ext_field(f3, 2);
    FFPoly a = ffp_from_coeffs(F9, {F9.from_code(2), F9.from_code(5), F9.one()});
    FFPoly b = ffp_from_coeffs(F9, {F9.from_code(7), F9.one()});
    auto [q, r] = ffp_divrem(F9, a, b);
    CHECK(ffp_eq(F9, ffp_add(F9, ffp_mul(F9, q, b), r), a));

    // interpolation reproduces a polynomial from values
    FFPoly p = ffp_from_coeffs(F9, {F9.from_code(3), F9.from_code(1), F9.from_code(6)});
    std::vector<FFElem> xs, ys;
    for (uint64_t c = 0; c < 4; ++c) {
        xs.push_back(F9.from_code(c));
        ys.push_back(ffp_eval(F9, p, xs.back()));
    }
    FFPoly p2 = ffp_interpolate(F9, xs, ys);
    CHECK(ffp_eq(F9, p, p2));
}

TEST_CASE("ffpoly factorization and roots") {
    const Fq& f3 = fq_cache_q(3);
    const ExtField& F9 = ext_field(f3, 2);
    // build (x - a)(x - b)^2 (x^2 + ...) style products and refactor
    FFElem a = F9.from_code(4), b = F9.from_code(7);
    FFPoly la = ffp_from_coeffs(F9, {F9.neg(a), F9.one()});
    FFPoly lb = ffp_from_coeffs(F9, {F9.neg(b), F9.one()});
    FFPoly prod = ffp_mul(F9, la, ffp_mul(F9, lb, lb));
    auto roots = ffp_roots_in_field(F9, prod);
    REQUIRE(roots.size() == 2);
    // canonical order, multiplicities kept
    bool found_a = false, found_b = false;
    for (auto& [r, m] : roots) {
        if (F9.eq(r, a)) {
            found_a = true;
            CHECK(m == 1);
        }
        if (F9.eq(r, b)) {
            found_b = true;
            CHECK(m == 2);
        }
    }
    CHECK(found_a);
    CHECK(found_b);

    // an irreducible quadratic over F9 has no roots in F9 but two in F81
    const ExtField& F81 = ext_field(f3, 4);
    // x^2 - c where c is a non-square of F9
    FFElem nonsq;
    for (uint64_t c = 1; c < 9; ++c)
        if (!F9.is_square(F9.from_code(c))) {
            nonsq = F9.from_code(c);
            break;
        }
    REQUIRE(!nonsq.empty());
    FFPoly quad = ffp_from_coeffs(F9, {F9.neg(nonsq), F9.zero(), F9.one()});
    CHECK(ffp_roots_in_field(F9, quad).empty());
    const Embedding& e = embedding(F9, F81);
    FFPoly quad_up = ffp_from_coeffs(
        F81, {e.apply(F9.neg(nonsq)), F81.zero(), F81.one()});
    auto rr = ffp_roots_in_field(F81, quad_up);
    CHECK(rr.size() == 2);
    for (auto& [r, m] : rr) CHECK(F81.eq(F81.mul(r, r), e.apply(nonsq)));
}
