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

#ifndef DRINMOD_QUAD_HPP
#define DRINMOD_QUAD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drinmod/poly.hpp"

namespace drinmod {

enum class InfinityType { Ramified, Inert };

// Imaginary quadratic extension K = k(sqrt(D)), D squarefree nonconstant.
// Ramified at infinity when deg D is odd; inert when deg D is even with a
// non-square leading coefficient.
struct ImagQuadField {
    Poly D;
    InfinityType type;
    int genus;

    static ImagQuadField make(const Poly& D);
};

// deg D odd -> ramified; deg D even + non-square lc -> inert; else not
// imaginary.  Throws on non-squarefree or constant D.
std::optional<InfinityType> imaginary_type(const Poly& D);

// Order A[f sqrt(D)] of conductor f, discriminant d = f^2 D.
struct QuadOrder {
    ImagQuadField field;
    Poly conductor;  // monic
    Poly disc;       // f^2 D

    static QuadOrder make(const ImagQuadField& K, const Poly& f);
    AbsLog cm_height() const { return disc.abslog(); }
};

// Number of points of y^2 = D over F_{q^i} (smooth model, including the
// places at infinity).  Serial reference and parallel kernel agree exactly.
uint64_t curve_point_count_serial(const Poly& D, InfinityType type, uint32_t i);
uint64_t curve_point_count(const Poly& D, InfinityType type, uint32_t i);

// h(K) = P(1) where P is the L-polynomial numerator, computed from point
// counts over F_{q^i}, i = 1..genus, via Newton's identities and the
// functional equation.
uint64_t class_number_max(const ImagQuadField& K);

// #Pic(O) from h(K), the degree of the infinite place, and the conductor:
//   h(K) * d_inf * prod_{P | f} |P|^(e_P - 1) (|P| - chi(P))
// with chi(P) the Legendre symbol of D mod P and d_inf = 1 (ramified) or
// 2 (inert).
uint64_t pic_order(const QuadOrder& O);

// Binary quadratic form a x^2 + b xy + c y^2 over A.
struct QuadForm {
    Poly a, b, c;

    Poly disc() const { return b * b - a * c * a.field().from_int(4); }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const;
    std::string to_string() const;
};

QuadForm principal_form(const Fq& fq, const Poly& d);
bool is_reduced(const QuadForm& F);     // |b| < |a| <= |c|, a monic, primitive
bool is_primitive(const QuadForm& F);

// Reduction to the canonical representative of the proper equivalence
// class: translation/swap reduction first, then the minimum of the orbit of
// reduced forms of the class (the orbit is a singleton in the ramified
// case).  Idempotent; preserves the discriminant and the class.
QuadForm reduce_form(const QuadForm& F);
// Plain translation/swap reduction, no canonicalization.
QuadForm reduce_form_raw(const QuadForm& F);
// All reduced forms properly equivalent to the given reduced form.
std::vector<QuadForm> reduced_class_orbit(const QuadForm& F);

// All syntactically reduced primitive forms of discriminant d.
std::vector<QuadForm> enumerate_reduced_forms_raw(const Fq& fq, const Poly& d);
// Canonical representatives, one per proper equivalence class; the count
// matches pic_order of the order of discriminant d.
std::vector<QuadForm> enumerate_reduced_forms(const Fq& fq, const Poly& d);

// Gauss composition, realized through ideal multiplication in A[sqrt(d)]
// and Hermite reduction of the product module; result is canonical-reduced.
QuadForm compose_forms(const QuadForm& F1, const QuadForm& F2);
QuadForm inverse_form(const QuadForm& F);
bool is_principal_class(const QuadForm& F);

// The class group Pic(O) on canonical reduced representatives.
struct ClassGroup {
    QuadOrder order;
    std::vector<QuadForm> reps;       // sorted, reps[identity_index] principal
    size_t identity_index;

    static ClassGroup build(const QuadOrder& O);
    size_t index_of(const QuadForm& F) const;  // class lookup via equivalence
    size_t compose(size_t i, size_t j) const;
    size_t inverse(size_t i) const;
    uint64_t element_order(size_t i) const;
};

// p splits in O: p does not divide the conductor and legendre(D, p) = +1.
bool splits(const QuadOrder& O, const Poly& p);

// Frobenius class of a split prime: the class of a form (p, b, *), b a
// square root of d mod p (the lex-smaller branch).
QuadForm frobenius_form(const QuadOrder& O, const Poly& p);

// log_q |j(z)| prediction for a reduced form z = (-b + sqrt(d))/2a:
// exact value |z| log_q(B_q) when |z| > 1, upper bound -1 when |z| = 1.
struct JEstimate {
    bool upper_bound;  // true: |j| <= q^value; false: |j| = q^value exactly
    double value;
};
JEstimate j_valuation_estimate(const QuadForm& F);

// q^(deg d / 2) + C_q, the arithmetic-height bound attached to the order.
double height_bound(const QuadOrder& O);

// Number of CM j-classes of height at most t: sum of #Pic(O_d) over valid
// imaginary discriminants d with |d| <= t (orders counted once; D is
// normalized modulo square scalars).  Serial reference and parallel kernel.
uint64_t count_cm_points_serial(const Fq& fq, uint64_t t);
uint64_t count_cm_points(const Fq& fq, uint64_t t);

// Exact number of monic degree-t primes split in K, plus the Chebotarev
// window |pi - q^t/(2t)| < 4(g+2) q^(t/2).  window_ok is the exact integer
// comparison (2t pi - q^t)^2 < 64 t^2 (g+2)^2 q^t.
struct CebotarevCount {
    uint64_t exact;
    double center;
    double radius;
    bool window_ok;
};
CebotarevCount cebotarev_count(const ImagQuadField& K, uint32_t t);

// All monic primes of given degree, cached per (q, degree).
const std::vector<Poly>& prime_table(const Fq& fq, uint32_t degree);

}  // namespace drinmod

#endif
