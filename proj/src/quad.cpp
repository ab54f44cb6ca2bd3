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

#include "drinmod/quad.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "drinmod/extfield.hpp"
#include "drinmod/ffpoly.hpp"
#include "drinmod/parallel.hpp"

namespace drinmod {

std::optional<InfinityType> imaginary_type(const Poly& D) {
    if (D.is_zero() || D.is_constant())
        throw std::invalid_argument("imaginary_type: D must be nonconstant");
    if (!is_squarefree(D)) throw std::invalid_argument("imaginary_type: D must be squarefree");
    if (D.degree() % 2 == 1) return InfinityType::Ramified;
    if (!D.field().is_square(D.lc())) return InfinityType::Inert;
    return std::nullopt;
}

ImagQuadField ImagQuadField::make(const Poly& D) {
    auto t = imaginary_type(D);
    if (!t) throw std::invalid_argument("ImagQuadField: D is not imaginary");
    int g = (D.degree() % 2 == 1) ? (D.degree() - 1) / 2 : (D.degree() - 2) / 2;
    return ImagQuadField{D, *t, g};
}

QuadOrder QuadOrder::make(const ImagQuadField& K, const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("QuadOrder: conductor must be monic");
    return QuadOrder{K, f, f * f * K.D};
}

uint64_t curve_point_count_serial(const Poly& D, InfinityType type, uint32_t i) {
    const Fq& fq = D.field();
    const ExtField& F = ext_field(fq, i);
    if (!F.has_zech()) throw std::invalid_argument("point count: field too large");
    uint64_t n = F.order_u64();
    // lift D's coefficients once
    std::vector<uint64_t> coeff_codes;
    for (int k = 0; k <= D.degree(); ++k) coeff_codes.push_back(F.to_code(F.from_base(D.coeff(k))));
    uint64_t affine = 0;
    for (uint64_t t = 0; t < n; ++t) {
        uint64_t v = 0;
        for (size_t k = coeff_codes.size(); k-- > 0;) v = F.zc_add(F.zc_mul(v, t), coeff_codes[k]);
        affine += (uint64_t)(1 + F.zc_chi(v));
    }
    uint64_t inf = type == InfinityType::Ramified ? 1 : (i % 2 == 0 ? 2 : 0);
    return affine + inf;
}

uint64_t curve_point_count(const Poly& D, InfinityType type, uint32_t i) {
    const Fq& fq = D.field();
    const ExtField& F = ext_field(fq, i);
    if (!F.has_zech()) throw std::invalid_argument("point count: field too large");
    uint64_t n = F.order_u64();
    std::vector<uint64_t> coeff_codes;
    for (int k = 0; k <= D.degree(); ++k) coeff_codes.push_back(F.to_code(F.from_base(D.coeff(k))));
    uint64_t affine = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : affine) schedule(static) \
    num_threads(effective_workers()) if (n > 4096)
#endif
    for (int64_t t = 0; t < (int64_t)n; ++t) {
        uint64_t v = 0;
        for (size_t k = coeff_codes.size(); k-- > 0;)
            v = F.zc_add(F.zc_mul(v, (uint64_t)t), coeff_codes[k]);
        affine += (uint64_t)(1 + F.zc_chi(v));
    }
    uint64_t inf = type == InfinityType::Ramified ? 1 : (i % 2 == 0 ? 2 : 0);
    return affine + inf;
}

uint64_t class_number_max(const ImagQuadField& K) {
    const Fq& fq = K.D.field();
    int g = K.genus;
    if (g == 0) return 1;
    uint64_t q = fq.q();
    // power sums p_i = q^i + 1 - N_i of the inverse roots
    std::vector<int64_t> ps(g + 1, 0);
    for (int i = 1; i <= g; ++i) {
        uint64_t Ni = curve_point_count(K.D, K.type, (uint32_t)i);
        uint64_t qi = 1;
        for (int k = 0; k < i; ++k) qi *= q;
        ps[i] = (int64_t)(qi + 1) - (int64_t)Ni;
    }
    // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<int64_t> e(2 * g + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= g; ++k) {
        int64_t sum = 0;
        for (int i = 1; i <= k; ++i) {
            int64_t term = e[k - i] * ps[i];
            sum += (i % 2 == 1) ? term : -term;
        }
        if (sum % k != 0) throw std::logic_error("class number: Newton identity not integral");
        e[k] = sum / k;
    }
    // P(t) = sum c_k t^k with c_k = (-1)^k e_k; functional equation
    // c_{2g-k} = q^{g-k} c_k fills the upper half
    std::vector<int64_t> c(2 * g + 1, 0);
    for (int k = 0; k <= g; ++k) c[k] = (k % 2 == 0) ? e[k] : -e[k];
    for (int k = 0; k < g; ++k) {
        uint64_t qk = 1;
        for (int i = 0; i < g - k; ++i) qk *= q;
        c[2 * g - k] = (int64_t)qk * c[k];
    }
    int64_t h = 0;
    for (int k = 0; k <= 2 * g; ++k) h += c[k];
    if (h <= 0) throw std::logic_error("class number: nonpositive value");
    return (uint64_t)h;
}

uint64_t pic_order(const QuadOrder& O) {
    const Fq& fq = O.field.D.field();
    uint64_t h = class_number_max(O.field);
    uint64_t dinf = O.field.type == InfinityType::Ramified ? 1 : 2;
    uint64_t result = h * dinf;
    for (auto& [P, e] : factor(O.conductor)) {
        uint64_t np = 1;
        for (int i = 0; i < P.degree(); ++i) np *= fq.q();
        int chi = legendre(O.field.D, P);
        uint64_t local = (uint64_t)((int64_t)np - chi);
        for (int i = 1; i < e; ++i) local *= np;
        result *= local;
    }
    return result;
}

bool QuadForm::operator<(const QuadForm& o) const {
    if (!(a == o.a)) return a < o.a;
    if (!(b == o.b)) return b < o.b;
    return c < o.c;
}

std::string QuadForm::to_string() const {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

QuadForm principal_form(const Fq& fq, const Poly& d) {
    // (1, 0, -d/4)
    Fq::Elem inv4 = fq.inv(fq.from_int(4));
    return QuadForm{Poly::one(fq), Poly::zero(fq), -(d * inv4)};
}

bool is_primitive(const QuadForm& F) {
    return gcd(gcd(F.a, F.b), F.c).is_one();
}

bool is_reduced(const QuadForm& F) {
    if (!F.a.is_monic()) return false;
    if (!is_primitive(F)) return false;
    return F.b.abslog() < F.a.abslog() && (F.a.abslog() < F.c.abslog() || F.a.abslog() == F.c.abslog());
}

namespace {

// unit move: (a, b, c) -> (u a, b, c/u), same lattice, same discriminant
QuadForm monicize(const QuadForm& F) {
    if (F.a.is_zero()) throw std::domain_error("form: a must be nonzero");
    const Fq& fq = F.a.field();
    Fq::Elem u = fq.inv(F.a.lc());
    return QuadForm{F.a * u, F.b, F.c * fq.inv(u)};
}

// c from a, b and the discriminant; throws if not integral
Poly third_coeff(const Poly& a, const Poly& b, const Poly& d) {
    const Fq& fq = a.field();
    Poly num = b * b - d;
    Poly den = a * fq.from_int(4);
    auto [q, r] = num.divrem(den);
    if (!r.is_zero()) throw std::logic_error("form: discriminant mismatch");
    return q;
}

// exact polynomial square test by coefficient matching
bool is_poly_square(const Poly& d) {
    if (d.is_zero()) return true;
    if (d.degree() % 2) return false;
    const Fq& fq = d.field();
    if (!fq.is_square(d.lc())) return false;
    int m = d.degree() / 2;
    std::vector<Fq::Elem> s(m + 1, 0);
    s[m] = fq.sqrt(d.lc());
    Fq::Elem inv2lead = fq.inv(fq.mul(fq.from_int(2), s[m]));
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of T^(m+k) in s^2: 2 s_m s_k + sum_{i=k+1..m-1} s_i s_{m+k-i}
        Fq::Elem acc = 0;
        for (int i = k + 1; i <= m - 1; ++i) {
            int j = m + k - i;
            if (j > m || j < 0) continue;
            acc = fq.add(acc, fq.mul(s[i], s[j]));
        }
        s[k] = fq.mul(fq.sub(d.coeff(m + k), acc), inv2lead);
    }
    Poly sq(fq, s);
    return sq * sq == d;
}

}  // namespace

QuadForm reduce_form_raw(const QuadForm& F0) {
    if (F0.a.is_zero()) throw std::invalid_argument("reduce: a = 0");
    Poly d = F0.disc();
    if (is_poly_square(d)) throw std::invalid_argument("reduce: square discriminant");
    QuadForm F = monicize(F0);
    const Fq& fq = F.a.field();
    for (int guard = 0; guard < 4 * (d.degree() + 4); ++guard) {
        if (!(F.b.abslog() < F.a.abslog())) {
            // translate b into the window |b| < |a|: b mod 2a
            Poly twoa = F.a * fq.from_int(2);
            Poly r = F.b % twoa;
            F.b = r;
            F.c = third_coeff(F.a, F.b, d);
        } else if (F.c.abslog() < F.a.abslog()) {
            F = monicize(QuadForm{F.c, -F.b, F.a});
        } else {
            return F;
        }
    }
    throw std::logic_error("reduce: did not terminate");
}

std::vector<QuadForm> reduced_class_orbit(const QuadForm& F) {
    if (!is_reduced(F)) throw std::invalid_argument("orbit: form must be reduced");
    const Fq& fq = F.a.field();
    Poly d = F.disc();
    std::set<QuadForm> seen{F};
    std::vector<QuadForm> queue{F};
    while (!queue.empty()) {
        QuadForm G = queue.back();
        queue.pop_back();
        std::vector<QuadForm> moves;
        // swap move, valid on the boundary |a| = |c|
        if (G.a.abslog() == G.c.abslog()) moves.push_back(monicize(QuadForm{G.c, -G.b, G.a}));
        // translated swaps through constants
        for (Fq::Elem mu = 0; mu < fq.q(); ++mu) {
            Poly pmu = Poly::constant(fq, mu);
            Poly b2 = G.b + G.a * pmu * fq.from_int(2);
            Poly c2 = G.a * pmu * pmu + G.b * pmu + G.c;
            if (c2.is_zero()) continue;
            moves.push_back(QuadForm{c2, -b2, G.a});
        }
        for (auto& M : moves) {
            QuadForm R = reduce_form_raw(M);
            if (!seen.count(R)) {
                seen.insert(R);
                queue.push_back(R);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

QuadForm reduce_form(const QuadForm& F) {
    QuadForm R = reduce_form_raw(F);
    auto orbit = reduced_class_orbit(R);
    return *std::min_element(orbit.begin(), orbit.end());
}

std::vector<QuadForm> enumerate_reduced_forms_raw(const Fq& fq, const Poly& d) {
    std::vector<QuadForm> out;
    int half = d.degree() / 2;
    for (int da = 0; da <= half; ++da) {
        for (auto& a : enumerate_monic(fq, da)) {
            // b ranges over all polynomials of degree < deg a, plus 0
            uint64_t bcount = 1;
            for (int i = 0; i < da; ++i) bcount *= fq.q();
            for (uint64_t bc = 0; bc < bcount; ++bc) {
                Poly b = Poly::from_code(fq, bc);
                Poly num = b * b - d;
                Poly den = a * fq.from_int(4);
                auto [c, r] = num.divrem(den);
                if (!r.is_zero()) continue;
                QuadForm F{a, b, c};
                if (is_reduced(F)) out.push_back(F);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadForm> enumerate_reduced_forms(const Fq& fq, const Poly& d) {
    auto raw = enumerate_reduced_forms_raw(fq, d);
    std::set<QuadForm> claimed;
    std::vector<QuadForm> reps;
    for (auto& F : raw) {
        if (claimed.count(F)) continue;
        auto orbit = reduced_class_orbit(F);
        for (auto& G : orbit) claimed.insert(G);
        reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

namespace {

// ideal attached to a primitive form: I = a A + ((-b + w)/2) A, w^2 = d.
// Stored as the 2x2 Hermite basis [[a, beta],[0, gamma]] in coordinates
// (1, w): columns a and beta + gamma w.
struct IdealBasis {
    Poly a;      // norm part
    Poly beta;
    Poly gamma;
};

IdealBasis ideal_of_form(const QuadForm& F) {
    const Fq& fq = F.a.field();
    Fq::Elem half = fq.inv(fq.from_int(2));
    return IdealBasis{F.a, -(F.b * half), Poly::constant(fq, half)};
}

// Hermite normal form of the module spanned by (u_i + v_i w): returns
// [[alpha, beta],[0, gamma]] with beta reduced mod alpha.
IdealBasis hnf2(const Fq& fq, std::vector<std::pair<Poly, Poly>> gens) {
    // gamma = gcd of the w-components, with the matching combination of
    // u-components tracked alongside
    Poly gamma = Poly::zero(fq), beta = Poly::zero(fq);
    for (auto& [u, v] : gens) {
        if (v.is_zero()) continue;
        if (gamma.is_zero()) {
            gamma = v;
            beta = u;
            continue;
        }
        Poly x, y;
        Poly g = ext_gcd(gamma, v, x, y);
        beta = beta * x + u * y;
        gamma = g;
    }
    // alpha = gcd of the pure-A elements: original u with v = 0 plus the
    // reductions u - (v/gamma) beta
    Poly alpha = Poly::zero(fq);
    for (auto& [u, v] : gens) {
        Poly residue;
        if (v.is_zero()) {
            residue = u;
        } else {
            Poly mult = v / gamma;  // exact by construction
            residue = u - mult * beta;
        }
        if (residue.is_zero()) continue;
        alpha = alpha.is_zero() ? residue : gcd(alpha, residue);
    }
    if (alpha.is_zero() || gamma.is_zero()) throw std::logic_error("hnf2: degenerate module");
    alpha = alpha.monic();
    beta = beta % alpha;
    return IdealBasis{alpha, beta, gamma};
}

QuadForm form_of_ideal(const Fq& fq, const IdealBasis& I, const Poly& d) {
    // primitive part: divide the content out of (alpha, beta + gamma w)
    Poly g = gcd(gcd(I.a, I.beta), I.gamma);
    Poly alpha = (I.a / g).monic();
    Poly beta = I.beta / g;
    Poly gamma = I.gamma / g;
    // after removing the content the w-part must be a unit for an
    // invertible ideal of A[w]
    if (gamma.degree() != 0) throw std::logic_error("form_of_ideal: non-primitive ideal");
    // normalize the generator to beta' + w; the associated form is
    // (alpha, -beta', *) since the form generator is (-b + w)
    Fq::Elem ginv = fq.inv(gamma.coeff(0));
    beta = beta * ginv;
    beta = beta % alpha;
    Poly b = -beta;
    Poly c = third_coeff(alpha, b, d);
    return QuadForm{alpha, b, c};
}

}  // namespace

QuadForm compose_forms(const QuadForm& F1, const QuadForm& F2) {
    const Fq& fq = F1.a.field();
    Poly d = F1.disc();
    if (!(F2.disc() == d)) throw std::invalid_argument("compose: discriminants differ");
    if (!is_primitive(F1) || !is_primitive(F2))
        throw std::invalid_argument("compose: forms must be primitive");
    IdealBasis I1 = ideal_of_form(F1);
    IdealBasis I2 = ideal_of_form(F2);
    // products of the two generator pairs; (u1 + v1 w)(u2 + v2 w) =
    // (u1 u2 + v1 v2 d) + (u1 v2 + u2 v1) w
    std::vector<std::pair<Poly, Poly>> gens;
    std::vector<std::pair<Poly, Poly>> g1{{I1.a, Poly::zero(fq)}, {I1.beta, I1.gamma}};
    std::vector<std::pair<Poly, Poly>> g2{{I2.a, Poly::zero(fq)}, {I2.beta, I2.gamma}};
    for (auto& [u1, v1] : g1)
        for (auto& [u2, v2] : g2)
            gens.emplace_back(u1 * u2 + v1 * v2 * d, u1 * v2 + u2 * v1);
    IdealBasis prod = hnf2(fq, std::move(gens));
    QuadForm F = form_of_ideal(fq, prod, d);
    return reduce_form(F);
}

QuadForm inverse_form(const QuadForm& F) { return QuadForm{F.a, -F.b, F.c}; }

bool is_principal_class(const QuadForm& F) {
    QuadForm R = reduce_form_raw(F);
    return R.a.is_one();
}

ClassGroup ClassGroup::build(const QuadOrder& O) {
    const Fq& fq = O.field.D.field();
    ClassGroup G{O, enumerate_reduced_forms(fq, O.disc), 0};
    QuadForm principal = reduce_form(principal_form(fq, O.disc));
    for (size_t i = 0; i < G.reps.size(); ++i)
        if (G.reps[i] == principal) G.identity_index = i;
    return G;
}

size_t ClassGroup::index_of(const QuadForm& F) const {
    QuadForm R = reduce_form(F);
    for (size_t i = 0; i < reps.size(); ++i)
        if (reps[i] == R) return i;
    throw std::invalid_argument("ClassGroup: form has a different discriminant");
}

size_t ClassGroup::compose(size_t i, size_t j) const {
    return index_of(compose_forms(reps[i], reps[j]));
}

size_t ClassGroup::inverse(size_t i) const { return index_of(inverse_form(reps[i])); }

uint64_t ClassGroup::element_order(size_t i) const {
    size_t cur = i;
    uint64_t n = 1;
    while (cur != identity_index) {
        cur = compose(cur, i);
        ++n;
        if (n > reps.size()) throw std::logic_error("ClassGroup: order overflow");
    }
    return n;
}

bool splits(const QuadOrder& O, const Poly& p) {
    if ((O.conductor % p).is_zero()) return false;
    return legendre(O.field.D, p) == 1;
}

QuadForm frobenius_form(const QuadOrder& O, const Poly& p) {
    if (!splits(O, p)) throw std::invalid_argument("frobenius: prime does not split");
    const Fq& fq = O.field.D.field();
    // square root of d mod p inside the residue field A/p
    const ExtField& R = ext_field(fq, (uint32_t)p.degree());
    // the residue map T -> theta, theta a fixed root of p in R
    auto roots = ffp_roots_in_field(R, ffp_lift(R, p));
    if (roots.empty()) throw std::logic_error("frobenius: prime has no residue root");
    FFElem theta = roots.front().first;
    // evaluate d at theta
    FFElem dbar = R.zero();
    Poly d = O.disc;
    for (int i = d.degree(); i >= 0; --i) {
        dbar = R.mul(dbar, theta);
        dbar = R.add(dbar, R.from_base(d.coeff(i)));
    }
    FFElem s = R.sqrt(dbar);
    // express s as a polynomial in theta of degree < deg p: solve the
    // linear system over the power basis of theta
    FqMat powers(fq, R.n(), (size_t)p.degree());
    FFElem cur = R.one();
    for (size_t j = 0; j < (size_t)p.degree(); ++j) {
        for (size_t i = 0; i < R.n(); ++i) powers.at(i, j) = cur[i];
        cur = R.mul(cur, theta);
    }
    std::vector<Fq::Elem> coords;
    if (!FqSolver(fq, powers).coords(s, coords))
        throw std::logic_error("frobenius: sqrt outside residue field");
    Poly b(fq, coords);
    Poly balt = (p - b) % p;  // the other branch
    if (balt < b) b = balt;
    Poly c = third_coeff(p, b, d);
    QuadForm F{p, b, c};
    if (!is_primitive(F)) throw std::logic_error("frobenius: form not primitive");
    return reduce_form(F);
}

JEstimate j_valuation_estimate(const QuadForm& F) {
    if (!is_reduced(F)) throw std::invalid_argument("estimate: form must be reduced");
    const Fq& fq = F.a.field();
    Poly d = F.disc();
    double q = (double)fq.q();
    // |z| = q^(deg d / 2 - deg a)
    double exponent = d.degree() / 2.0 - F.a.degree();
    if (exponent < 0) throw std::logic_error("estimate: |z| < 1 for a reduced form");
    double logqB = (d.degree() % 2 == 0) ? q : std::sqrt(q) * (q + 1) / 2.0;
    if (exponent == 0) return JEstimate{true, -1.0};
    return JEstimate{false, std::pow(q, exponent) * logqB};
}

double height_bound(const QuadOrder& O) {
    const Fq& fq = O.field.D.field();
    double q = (double)fq.q();
    int degd = O.disc.degree();
    double cq = (degd % 2 == 0) ? q : std::sqrt(q) * (q + 1) / 2.0;
    return std::pow(q, degd / 2.0) + cq;
}

namespace {

// normalized representatives of D modulo square scalars: ramified D keeps
// lc in {1, nu}, inert D keeps lc = nu, nu the smallest non-square
std::vector<Poly> normalized_imaginary_d(const Fq& fq, int deg) {
    std::vector<Poly> out;
    Fq::Elem nu = 0;
    for (Fq::Elem c = 2; c < fq.q(); ++c)
        if (!fq.is_square(c)) {
            nu = c;
            break;
        }
    std::vector<Fq::Elem> lcs;
    if (deg % 2 == 1)
        lcs = {1, nu};
    else
        lcs = {nu};
    for (auto& m : enumerate_monic(fq, deg)) {
        if (!is_squarefree(m)) continue;
        for (auto lc : lcs) out.push_back(m * lc);
    }
    return out;
}

uint64_t count_cm_points_impl(const Fq& fq, uint64_t t, bool parallel) {
    // orders: (normalized D, monic conductor f) with |f^2 D| <= t
    int maxdeg = 0;
    {
        uint64_t v = fq.q();
        while (v <= t) {
            ++maxdeg;
            v *= fq.q();
        }
    }
    uint64_t total = 0;
    for (int degd = 1; degd <= maxdeg; ++degd) {
        // deg d = 2 deg f + deg D
        for (int degf = 0; 2 * degf <= degd; ++degf) {
            int degD = degd - 2 * degf;
            if (degD < 1) continue;
            auto ds = normalized_imaginary_d(fq, degD);
            auto fs = enumerate_monic(fq, degf);
            std::vector<uint64_t> partial(ds.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_workers()) if (parallel)
#endif
            for (int64_t i = 0; i < (int64_t)ds.size(); ++i) {
                auto ty = imaginary_type(ds[i]);
                if (!ty) continue;
                ImagQuadField K = ImagQuadField::make(ds[i]);
                uint64_t sub = 0;
                for (auto& f : fs) sub += pic_order(QuadOrder::make(K, f));
                partial[i] = sub;
            }
            for (auto v : partial) total += v;
        }
    }
    return total;
}

}  // namespace

uint64_t count_cm_points_serial(const Fq& fq, uint64_t t) {
    return count_cm_points_impl(fq, t, false);
}

uint64_t count_cm_points(const Fq& fq, uint64_t t) { return count_cm_points_impl(fq, t, true); }

const std::vector<Poly>& prime_table(const Fq& fq, uint32_t degree) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::vector<Poly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(fq.p(), fq.e(), degree);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_monic_primes(fq, (int)degree)).first;
    return it->second;
}

CebotarevCount cebotarev_count(const ImagQuadField& K, uint32_t t) {
    if (t < 1) throw std::invalid_argument("cebotarev: t must be >= 1");
    const Fq& fq = K.D.field();
    const auto& primes = prime_table(fq, t);
    uint64_t split_count = 0;
    std::vector<uint8_t> flags(primes.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_workers()) \
    if (primes.size() > 64)
#endif
    for (int64_t i = 0; i < (int64_t)primes.size(); ++i)
        flags[i] = legendre(K.D, primes[i]) == 1 ? 1 : 0;
    for (auto f : flags) split_count += f;
    uint64_t qt = 1;
    for (uint32_t i = 0; i < t; ++i) qt *= fq.q();
    double center = (double)qt / (2.0 * t);
    double radius = 4.0 * (K.genus + 2) * std::sqrt((double)qt);
    // exact: (2t pi - q^t)^2 < 64 t^2 (g+2)^2 q^t
    __int128 lhs = (__int128)2 * t * split_count - (__int128)qt;
    __int128 lhs2 = lhs * lhs;
    __int128 rhs = (__int128)64 * t * t * (K.genus + 2) * (K.genus + 2) * (__int128)qt;
    return CebotarevCount{split_count, center, radius, lhs2 < rhs};
}

}  // namespace drinmod
