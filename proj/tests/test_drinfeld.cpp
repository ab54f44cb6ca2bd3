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

#include <algorithm>

#include "doctest.h"
#include "drinmod/drinfeld.hpp"

using namespace drinmod;

namespace {

struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    FFElem elem(const ExtField& F) {
        FFElem e(F.n(), 0);
        for (auto& c : e) c = (Fq::Elem)(next() % F.base().q());
        return e;
    }
    Poly poly(const Fq& f, int maxdeg) {
        std::vector<Fq::Elem> c;
        int d = (int)(next() % (maxdeg + 1));
        for (int i = 0; i <= d; ++i) c.push_back((Fq::Elem)(next() % f.q()));
        return Poly(f, c);
    }
};

AField test_afield_f9() {
    const Fq& f3 = fq_cache_q(3);
    const ExtField& F9 = ext_field(f3, 2);
    return AField::make(F9, F9.gen());  // t = w, characteristic T^2+1
}

}  // namespace

TEST_CASE("A-field structure map") {
    AField K = test_afield_f9();
    CHECK(K.characteristic.to_string() == "T^2+1");
    CHECK(is_irreducible(K.characteristic));
    // gamma is a ring homomorphism
    Rng rng;
    const Fq& f3 = fq_cache_q(3);
    for (int it = 0; it < 20; ++it) {
        Poly a = rng.poly(f3, 3), b = rng.poly(f3, 3);
        CHECK(K.L->eq(K.gamma(a * b), K.L->mul(K.gamma(a), K.gamma(b))));
        CHECK(K.L->eq(K.gamma(a + b), K.L->add(K.gamma(a), K.gamma(b))));
    }
    CHECK(K.L->is_zero(K.gamma(K.characteristic)));
}

TEST_CASE("phi_a expansion") {
    AField K = test_afield_f9();
    const ExtField& L = *K.L;
    Rng rng;
    FFElem g = rng.elem(L);
    FFElem delta = L.one();
    DrinfeldModule phi = DrinfeldModule::make(K, g, delta);
    const Fq& f3 = fq_cache_q(3);

    // a = T: the defining polynomial itself
    Poly T = Poly::t(f3);
    CHECK(ore_eq(L, phi_a(phi, T), phi.phi_t()));
    // a = T^2: t-degree 4, constant coefficient gamma(T)^2
    OrePoly p2 = phi_a(phi, T * T);
    CHECK(p2.tdeg() == 4);
    CHECK(L.eq(p2.c[0], L.mul(K.t, K.t)));
    // additivity: phi_{T^2+T} = phi_{T^2} + phi_T coefficientwise
    OrePoly sum = phi_a(phi, T * T + T);
    CHECK(ore_eq(L, sum, ore_add(L, p2, phi.phi_t())));
    // ring homomorphism on random pairs
    for (int it = 0; it < 15; ++it) {
        Poly a = rng.poly(f3, 2), b = rng.poly(f3, 2);
        CHECK(ore_eq(L, phi_a(phi, a + b), ore_add(L, phi_a(phi, a), phi_a(phi, b))));
        CHECK(ore_eq(L, phi_a(phi, a * b), ore_mul(L, phi_a(phi, a), phi_a(phi, b))));
    }
}

TEST_CASE("j-invariant and canonical representative") {
    AField K = test_afield_f9();
    const ExtField& L = *K.L;
    // g = 0 -> j = 0; g = 1, delta = 1 -> j = 1
    CHECK(L.is_zero(j_invariant(DrinfeldModule::make(K, L.zero(), L.one()))));
    CHECK(L.is_one(j_invariant(DrinfeldModule::make(K, L.one(), L.one()))));
    // twist invariance: (g, delta) -> (c^(q-1) g, c^(q^2-1) delta)
    Rng rng;
    for (int it = 0; it < 20; ++it) {
        FFElem g = rng.elem(L);
        FFElem d = rng.elem(L);
        if (L.is_zero(d)) continue;
        FFElem c = rng.elem(L);
        if (L.is_zero(c)) continue;
        DrinfeldModule phi = DrinfeldModule::make(K, g, d);
        DrinfeldModule tw = DrinfeldModule::make(
            K, L.mul(g, L.pow(c, 2)), L.mul(d, L.pow(c, 8)));
        CHECK(L.eq(j_invariant(phi), j_invariant(tw)));
    }
    // fromJ round trip
    for (uint64_t code = 0; code < 9; ++code) {
        FFElem j = L.from_code(code);
        CHECK(L.eq(j_invariant(from_j(K, j)), j));
    }
    CHECK(L.eq(from_j(K, L.zero()).delta, L.one()));
}

TEST_CASE("isogeny test") {
    AField K = test_afield_f9();
    const ExtField& L = *K.L;
    Rng rng;
    FFElem g = rng.elem(L);
    DrinfeldModule phi = DrinfeldModule::make(K, g, L.one());
    // identity
    CHECK(is_isogeny(ore_one(L), phi, phi));
    // tau against the coefficientwise Frobenius twist
    DrinfeldModule phiq = DrinfeldModule::make(
        AField{K.L, L.frob_q(K.t), K.characteristic}, L.frob_q(phi.g), L.frob_q(phi.delta));
    CHECK(is_isogeny(ore_t(L), phi, phiq));
    // wrong target
    DrinfeldModule other = DrinfeldModule::make(K, L.add(g, L.one()), L.one());
    CHECK_FALSE(is_isogeny(ore_one(L), phi, other));
}

TEST_CASE("torsion structure") {
    AField K = test_afield_f9();
    const Fq& f3 = fq_cache_q(3);
    const ExtField& L = *K.L;
    DrinfeldModule phi = from_j(K, L.gen());

    // trivial module for a = 1
    TorsionModule t1 = torsion(phi, Poly::one(f3));
    CHECK(t1.fq_dim() == 0);

    // prime coprime to characteristic: (A/p)^2 with |p|^2 points
    Poly p = Poly::parse(f3, "T");
    TorsionModule tp = torsion(phi, p);
    CHECK(tp.fq_dim() == 2);
    REQUIRE(tp.invariant_factors.size() == 2);
    CHECK(tp.invariant_factors[0] == p);
    CHECK(tp.invariant_factors[1] == p);
    // every root really is killed by phi_p
    OrePoly paM = ore_map(*tp.embed, phi_a(phi, p));
    for (auto& b : tp.basis) CHECK(tp.M->is_zero(ore_eval(*tp.M, paM, b)));

    // characteristic prime: rank drops to A/p or 0
    TorsionModule tc = torsion(phi, K.characteristic);
    bool ordinary = is_ordinary(phi);
    if (ordinary) {
        CHECK(tc.fq_dim() == (size_t)K.characteristic.degree());
        REQUIRE(tc.invariant_factors.size() == 1);
        CHECK(tc.invariant_factors[0] == K.characteristic);
    } else {
        CHECK(tc.fq_dim() == 0);
    }
}

TEST_CASE("quotient by kernel") {
    AField K = test_afield_f9();
    const Fq& f3 = fq_cache_q(3);
    const ExtField& L = *K.L;
    DrinfeldModule phi = from_j(K, L.gen());

    // kernel {0}: identity isogeny
    Isogeny id = quotient_by_kernel(phi, {L.zero()});
    CHECK(id.f.tdeg() == 0);
    CHECK(L.eq(id.target.g, phi.g));
    CHECK(L.eq(id.target.delta, phi.delta));

    // one line of phi[p], deg p = 1: cyclic isogeny of degree p
    Poly p = Poly::parse(f3, "T");
    TorsionModule tp = torsion(phi, p);
    const ExtField& M = *tp.M;
    DrinfeldModule phiM = tp.phiM;
    // line spanned by the first basis vector under the A-action
    std::vector<FFElem> line;
    for (Fq::Elem c = 0; c < 3; ++c) line.push_back(M.mul_base(tp.basis[0], c));
    Isogeny iso = quotient_by_kernel(phiM, line);
    CHECK(is_isogeny(iso.f, phiM, iso.target));
    REQUIRE(iso.degree_ideal().has_value());
    CHECK(*iso.degree_ideal() == p);

    // dual direction: j(phi) appears in the Hecke image of j(phi') under p
    FFElem j1 = j_invariant(phiM);
    FFElem j2 = j_invariant(iso.target);
    AField KM{&M, tp.phiM.base.t, K.characteristic};
    HeckeImage back = hecke_image(KM, j2, p, {64});
    bool found = false;
    for (auto& v : back.values)
        if (back.M->eq(v, back.embed->apply(j1))) found = true;
    CHECK(found);

    // a non-stable kernel is rejected
    std::vector<FFElem> bogus;
    for (Fq::Elem c = 0; c < 3; ++c) bogus.push_back(M.mul_base(M.one(), c));
    bool stable_ok = true;
    try {
        quotient_by_kernel(phiM, bogus);
    } catch (const std::invalid_argument&) {
        stable_ok = false;
    }
    CHECK_FALSE(stable_ok);
}

TEST_CASE("hecke image counts, symmetry, composition") {
    AField K = test_afield_f9();
    const Fq& f3 = fq_cache_q(3);
    const ExtField& L = *K.L;
    TorsionOptions opt{64};

    // psi values
    CHECK(psi_count(f3, Poly::parse(f3, "T")) == 4);
    CHECK(psi_count(f3, Poly::parse(f3, "T^2+T")) == 16);

    Poly p1 = Poly::parse(f3, "T");
    Poly p2 = Poly::parse(f3, "T+1");

    FFElem j = L.gen();
    HeckeImage h1 = hecke_image(K, j, p1, opt);
    CHECK(h1.values.size() == 4);  // |p| + 1 with multiplicity

    // symmetry: j' in T_p(j) iff j in T_p(j')
    AField KM{h1.M, h1.embed->apply(K.t), K.characteristic};
    for (auto& jp : h1.values) {
        HeckeImage back = hecke_image(KM, jp, p1, opt);
        bool found = false;
        for (auto& v : back.values)
            if (back.M->eq(v, back.embed->apply(h1.embed->apply(j)))) found = true;
        CHECK(found);
    }

    // composition: T_{p1} T_{p2} = T_{p1 p2} as multisets, via the
    // Galois-stable characteristic polynomials over L
    FFPoly direct = hecke_char_poly(K, j, p1 * p2, opt);
    HeckeImage step1 = hecke_image(K, j, p2, opt);
    AField K1{step1.M, step1.embed->apply(K.t), K.characteristic};
    FFPoly chain = ffp_one(*step1.M);
    for (auto& jp : step1.values) {
        FFPoly inner = hecke_char_poly(K1, jp, p1, opt);  // over M1
        chain = ffp_mul(*step1.M, chain, inner);
    }
    // pull the chain product back to L
    FFPoly chain_L;
    for (auto& c : chain.c) {
        auto back = step1.embed->pull_back(c);
        REQUIRE(back.has_value());
        chain_L.c.push_back(*back);
    }
    ffp_trim(L, chain_L);
    CHECK(ffp_eq(L, direct, chain_L));
}
