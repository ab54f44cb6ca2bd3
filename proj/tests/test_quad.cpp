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

#include <cmath>
#include <set>

#include "doctest.h"
#include "drinmod/quad.hpp"

using namespace drinmod;

namespace {

// Hasse-Weil window with exact handling when sqrt(q) is an integer.
bool hasse_weil_ok(uint32_t q, int g, uint64_t h) {
    long double sq = std::sqrt((long double)q);
    long double lo = std::pow(sq - 1.0L, 2 * g);
    long double hi = std::pow(sq + 1.0L, 2 * g);
    return (long double)h >= lo - 1e-9L && (long double)h <= hi + 1e-9L;
}

// lower bound of the explicit class-number estimate, as a ceiling
uint64_t boundh_floor(uint32_t q, int g) {
    if (g == 0) return 1;
    long double qg = std::pow((long double)q, g);
    long double q2g = qg * qg;
    long double num = (q - 1.0L) * (q2g - 2.0L * g * qg + 1.0L);
    long double den = 2.0L * g * (std::pow((long double)q, g + 1) - 1.0L);
    long double v = num / den;
    if (v <= 0) return 0;
    return (uint64_t)std::ceil(v - 1e-9L);
}

}  // namespace

TEST_CASE("imaginary type classification") {
    const Fq& f3 = fq_cache_q(3);
    CHECK(*imaginary_type(Poly::parse(f3, "T^3+2*T")) == InfinityType::Ramified);  // T^3 - T
    CHECK(*imaginary_type(Poly::parse(f3, "2*T^2+1")) == InfinityType::Inert);
    CHECK_FALSE(imaginary_type(Poly::parse(f3, "T^2+1")).has_value());  // lc is a square
    CHECK_THROWS(imaginary_type(Poly::parse(f3, "T^2")));               // not squarefree
    CHECK_THROWS(imaginary_type(Poly::constant(f3, 2)));                // constant
    CHECK(ImagQuadField::make(Poly::parse(f3, "T^3+2*T")).genus == 1);
    CHECK(ImagQuadField::make(Poly::parse(f3, "2*T^2+1")).genus == 0);
    CHECK(ImagQuadField::make(Poly::parse(f3, "T^5+2*T")).genus == 2);
}

TEST_CASE("point counts: hand-computed oracle and serial/parallel agreement") {
    const Fq& f3 = fq_cache_q(3);
    Poly D = Poly::parse(f3, "T^3+2*T");  // T^3 - T
    // oracle: brute force over F_3 with raw table arithmetic
    uint64_t affine = 0;
    for (Fq::Elem t = 0; t < 3; ++t) {
        Fq::Elem v = D.eval(t);
        affine += 1 + f3.chi(v);
    }
    CHECK(affine == 3);  // all three values vanish
    CHECK(curve_point_count_serial(D, InfinityType::Ramified, 1) == 4);  // + 1 at infinity
    for (uint32_t i = 1; i <= 3; ++i)
        CHECK(curve_point_count(D, InfinityType::Ramified, i) ==
              curve_point_count_serial(D, InfinityType::Ramified, i));
}

TEST_CASE("class numbers: spot value, genus zero, bounds") {
    const Fq& f3 = fq_cache_q(3);
    ImagQuadField K = ImagQuadField::make(Poly::parse(f3, "T^3+2*T"));
    // N1 = 4 gives a = 0, P(t) = 1 + 3 t^2, h = P(1) = 4
    CHECK(class_number_max(K) == 4);
    // genus 0 (deg D = 1) has h = 1
    CHECK(class_number_max(ImagQuadField::make(Poly::parse(f3, "T"))) == 1);
    CHECK(class_number_max(ImagQuadField::make(Poly::parse(f3, "2*T^2+1"))) == 1);
    // explicit lower bound: q=3, g=1 -> ceil(2*(9-6+1)/(2*8)) = 1
    CHECK(boundh_floor(3, 1) == 1);
    CHECK(class_number_max(K) >= boundh_floor(3, 1));
    CHECK(hasse_weil_ok(3, K.genus, class_number_max(K)));
}

TEST_CASE("reduced forms: spot enumeration for T^3 - T") {
    const Fq& f3 = fq_cache_q(3);
    Poly d = Poly::parse(f3, "T^3+2*T");
    auto raw = enumerate_reduced_forms_raw(f3, d);
    CHECK(raw.size() == 4);
    auto reps = enumerate_reduced_forms(f3, d);
    CHECK(reps.size() == 4);  // ramified: one reduced form per class
    for (auto& F : reps) {
        CHECK(is_reduced(F));
        CHECK(F.disc() == d);
    }
    // principal form is reduced and present
    QuadForm P = principal_form(f3, d);
    CHECK(is_reduced(P));
    CHECK(std::count(reps.begin(), reps.end(), reduce_form(P)) == 1);
}

TEST_CASE("inert discriminants: raw reduced forms overcount classes") {
    const Fq& f3 = fq_cache_q(3);
    Poly d = Poly::parse(f3, "2*T^2+1");
    // five syntactically reduced forms but only two proper classes
    auto raw = enumerate_reduced_forms_raw(f3, d);
    CHECK(raw.size() == 5);
    auto reps = enumerate_reduced_forms(f3, d);
    CHECK(reps.size() == 2);
    // the orbit partition covers the raw set exactly
    std::set<QuadForm> covered;
    for (auto& r : reps)
        for (auto& G : reduced_class_orbit(r)) {
            CHECK(!covered.count(G));
            covered.insert(G);
        }
    CHECK(covered.size() == raw.size());
    // and matches the order count h * d_inf = 1 * 2
    ImagQuadField K = ImagQuadField::make(d);
    QuadOrder O = QuadOrder::make(K, Poly::one(f3));
    CHECK(pic_order(O) == 2);
}

TEST_CASE("reduce form: idempotence and canonical representatives") {
    const Fq& f3 = fq_cache_q(3);
    Poly d = Poly::parse(f3, "T^3+2*T");
    QuadForm P = principal_form(f3, d);
    CHECK(reduce_form(P) == P);
    CHECK(reduce_form(reduce_form(P)) == reduce_form(P));
    // random equivalent pairs reduce to the same representative: apply
    // random proper substitutions
    uint64_t s = 42;
    auto next = [&] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (auto& d2 : {Poly::parse(f3, "T^3+2*T"), Poly::parse(f3, "2*T^2+1"),
                     Poly::parse(f3, "T^5+2*T")}) {
        for (auto& F : enumerate_reduced_forms(f3, d2)) {
            QuadForm G = F;
            for (int step = 0; step < 6; ++step) {
                if (next() % 2) {
                    // translation by a random small mu
                    Poly mu = Poly::from_code(f3, next() % 9);
                    Poly b2 = G.b + G.a * mu * f3.from_int(2);
                    Poly c2 = G.a * mu * mu + G.b * mu + G.c;
                    G = QuadForm{G.a, b2, c2};
                } else {
                    G = QuadForm{G.c * f3.inv(G.c.lc()), -G.b, G.a * G.c.lc()};
                }
                CHECK(G.disc() == d2);
            }
            CHECK(reduce_form(G) == F);
        }
    }
}

TEST_CASE("composition: group law on canonical representatives") {
    const Fq& f3 = fq_cache_q(3);
    for (auto& dstr : {"T^3+2*T", "2*T^2+1", "T^5+2*T"}) {
        Poly d = Poly::parse(f3, dstr);
        auto reps = enumerate_reduced_forms(f3, d);
        QuadForm P = reduce_form(principal_form(f3, d));
        // identity and inverse laws
        for (auto& F : reps) {
            CHECK(compose_forms(F, P) == F);
            CHECK(compose_forms(P, F) == F);
            CHECK(compose_forms(F, reduce_form(inverse_form(F))) == P);
        }
        // closure and commutativity, plus associativity on all triples
        for (auto& F : reps)
            for (auto& G : reps) {
                QuadForm FG = compose_forms(F, G);
                CHECK(std::count(reps.begin(), reps.end(), FG) == 1);
                CHECK(compose_forms(G, F) == FG);
            }
        if (reps.size() <= 6) {
            for (auto& F : reps)
                for (auto& G : reps)
                    for (auto& H : reps)
                        CHECK(compose_forms(compose_forms(F, G), H) ==
                              compose_forms(F, compose_forms(G, H)));
        }
    }
}

TEST_CASE("pic order: conductor formula against form enumeration") {
    const Fq& f3 = fq_cache_q(3);
    // the spec's worked pair: D = T^3 - T with conductor T
    ImagQuadField K = ImagQuadField::make(Poly::parse(f3, "T^3+2*T"));
    QuadOrder O = QuadOrder::make(K, Poly::parse(f3, "T"));
    CHECK(pic_order(O) == enumerate_reduced_forms(f3, O.disc).size());
    // ramified, conductor 1: pic order equals the field class number
    QuadOrder O1 = QuadOrder::make(K, Poly::one(f3));
    CHECK(pic_order(O1) == class_number_max(K));
    // a systematic small sweep at q = 3
    for (int degD = 1; degD <= 4; ++degD) {
        for (auto& m : enumerate_monic(f3, degD)) {
            for (Fq::Elem lc : {1u, 2u}) {
                Poly D = m * lc;
                if (!is_squarefree(D)) continue;
                auto ty = imaginary_type(D);
                if (!ty) continue;
                ImagQuadField Kx = ImagQuadField::make(D);
                for (int degf = 0; degf <= 1; ++degf) {
                    for (auto& f : enumerate_monic(f3, degf)) {
                        QuadOrder Ox = QuadOrder::make(Kx, f);
                        CHECK(pic_order(Ox) == enumerate_reduced_forms(f3, Ox.disc).size());
                    }
                }
            }
        }
    }
}

TEST_CASE("class group structure") {
    const Fq& f3 = fq_cache_q(3);
    ImagQuadField K = ImagQuadField::make(Poly::parse(f3, "T^3+2*T"));
    ClassGroup G = ClassGroup::build(QuadOrder::make(K, Poly::one(f3)));
    REQUIRE(G.reps.size() == 4);
    // y^2 = T^3 - T over F_3 has full 2-torsion
    for (size_t i = 0; i < G.reps.size(); ++i) {
        CHECK(G.compose(i, G.identity_index) == i);
        CHECK(G.compose(i, G.inverse(i)) == G.identity_index);
        uint64_t ord = G.element_order(i);
        CHECK(G.reps.size() % ord == 0);
        CHECK(ord <= 2);
    }
}

TEST_CASE("splits and frobenius classes") {
    const Fq& f3 = fq_cache_q(3);
    ImagQuadField K = ImagQuadField::make(Poly::parse(f3, "T^3+2*T"));
    QuadOrder O = QuadOrder::make(K, Poly::one(f3));
    // tabulate all primes of degree <= 2 against the legendre oracle
    for (uint32_t t = 1; t <= 2; ++t)
        for (auto& p : prime_table(f3, t)) {
            bool expect = !(O.conductor % p).is_zero() ? legendre(K.D, p) == 1 : false;
            CHECK(splits(O, p) == expect);
        }
    // conductor divisibility and ramified primes do not split
    QuadOrder Of = QuadOrder::make(K, Poly::parse(f3, "T+1"));
    CHECK_FALSE(splits(Of, Poly::parse(f3, "T+1")));
    CHECK_FALSE(splits(O, Poly::parse(f3, "T")));  // T | D
    // frobenius classes land in the group and have dividing order
    ClassGroup G = ClassGroup::build(O);
    int principal_split = 0, total_split = 0;
    for (uint32_t t = 1; t <= 4; ++t)
        for (auto& p : prime_table(f3, t)) {
            if (!splits(O, p)) continue;
            ++total_split;
            QuadForm F = frobenius_form(O, p);
            size_t idx = G.index_of(F);
            uint64_t ord = G.element_order(idx);
            CHECK(G.reps.size() % ord == 0);
            if (idx == G.identity_index) ++principal_split;
        }
    CHECK(total_split > 0);
    CHECK(principal_split > 0);
    // density sanity at small height: at least 1/(2h) of all primes up to
    // the cutoff, with generous slack
    int total_primes = 0;
    for (uint32_t t = 1; t <= 4; ++t) total_primes += (int)prime_table(f3, t).size();
    double frac = (double)principal_split / total_primes;
    CHECK(frac >= 0.5 / (2.0 * G.reps.size()));
}

TEST_CASE("j-valuation estimate and height bound") {
    // q = 9, deg d = 3, a = 1: |z| = 27, log_9 B_9 = 15, prediction 405
    const Fq& f9 = fq_cache_q(9);
    Poly d9 = Poly::parse(f9, "T^3+T+1");
    REQUIRE(is_squarefree(d9));
    QuadForm P9 = principal_form(f9, d9);
    JEstimate est = j_valuation_estimate(P9);
    CHECK_FALSE(est.upper_bound);
    CHECK(est.value == doctest::Approx(405.0));

    const Fq& f3 = fq_cache_q(3);
    // |z| = 1 boundary form: (T, 1, T) of discriminant 2 T^2 + 1
    QuadForm B{Poly::parse(f3, "T"), Poly::one(f3), Poly::parse(f3, "T")};
    REQUIRE(is_reduced(B));
    JEstimate estb = j_valuation_estimate(B);
    CHECK(estb.upper_bound);
    CHECK(estb.value == doctest::Approx(-1.0));
    // non-reduced input rejected
    QuadForm NR{Poly::parse(f3, "T^2"), Poly::zero(f3),
                Poly::parse(f3, "2*T")};
    CHECK_THROWS(j_valuation_estimate(NR));

    // principal form maximizes the estimate over its discriminant
    Poly d = Poly::parse(f3, "T^3+2*T");
    double pmax = j_valuation_estimate(reduce_form(principal_form(f3, d))).value;
    for (auto& F : enumerate_reduced_forms(f3, d)) {
        JEstimate e = j_valuation_estimate(F);
        double v = e.upper_bound ? -1.0 : e.value;
        CHECK(v <= pmax + 1e-9);
        if (!(F == reduce_form(principal_form(f3, d)))) CHECK(v < pmax - 1e-9);
    }

    // height bound values
    ImagQuadField K = ImagQuadField::make(d);
    CHECK(height_bound(QuadOrder::make(K, Poly::one(f3))) ==
          doctest::Approx(std::pow(3.0, 1.5) + std::sqrt(3.0) * 2.0));
    ImagQuadField K2 = ImagQuadField::make(Poly::parse(f3, "2*T^2+1"));
    CHECK(height_bound(QuadOrder::make(K2, Poly::one(f3))) == doctest::Approx(6.0));
}

TEST_CASE("CM point counting") {
    const Fq& f3 = fq_cache_q(3);
    CHECK(count_cm_points(f3, 0) == 0);
    CHECK(count_cm_points(f3, 2) == 0);
    // t = q: only deg d = 1, both leading classes, h = 1 each
    CHECK(count_cm_points(f3, 3) == 6);
    CHECK(count_cm_points_serial(f3, 3) == 6);
    // serial and parallel kernels agree on a larger range
    CHECK(count_cm_points(f3, 243) == count_cm_points_serial(f3, 243));
    // monotone in t
    uint64_t prev = 0;
    for (uint64_t t : {3ull, 9ull, 27ull, 81ull, 243ull}) {
        uint64_t v = count_cm_points(f3, t);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("cebotarev counts sit inside the window") {
    const Fq& f3 = fq_cache_q(3);
    // oracle at t = 1 for D = T^3 - T: all three linear primes divide D
    ImagQuadField K = ImagQuadField::make(Poly::parse(f3, "T^3+2*T"));
    CebotarevCount c1 = cebotarev_count(K, 1);
    CHECK(c1.exact == 0);
    CHECK(c1.window_ok);
    for (uint32_t t = 1; t <= 6; ++t) {
        CebotarevCount c = cebotarev_count(K, t);
        CHECK(c.window_ok);
        CHECK(std::abs((double)c.exact - c.center) < c.radius);
    }
}
