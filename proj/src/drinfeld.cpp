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

#include "drinmod/drinfeld.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace drinmod {

AField AField::make(const ExtField& L, const FFElem& t) {
    // characteristic = minimal polynomial of t over F_q, from the Frobenius
    // orbit of t
    std::vector<FFElem> orbit;
    FFElem x = t;
    do {
        orbit.push_back(x);
        x = L.frob_q(x);
    } while (!(x == t));
    std::vector<FFElem> coeffs{L.one()};
    for (auto& c : orbit) {
        std::vector<FFElem> next(coeffs.size() + 1, L.zero());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = L.add(next[i + 1], coeffs[i]);
            next[i] = L.sub(next[i], L.mul(coeffs[i], c));
        }
        coeffs = next;
    }
    std::vector<Fq::Elem> mc;
    for (auto& c : coeffs) {
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i]) throw std::logic_error("AField: minimal polynomial not over F_q");
        mc.push_back(c[0]);
    }
    Poly ch(L.base(), mc);
    return AField{&L, t, ch};
}

FFElem AField::gamma(const Poly& a) const {
    FFElem acc = L->zero();
    for (int i = a.degree(); i >= 0; --i) {
        acc = L->mul(acc, t);
        acc = L->add(acc, L->from_base(a.coeff(i)));
    }
    return acc;
}

std::string AField::key() const {
    std::ostringstream os;
    os << L->key() << "|t=" << L->to_string(t);
    return os.str();
}

DrinfeldModule DrinfeldModule::make(const AField& base, const FFElem& g, const FFElem& delta) {
    if (base.L->is_zero(delta)) throw std::invalid_argument("DrinfeldModule: delta must be nonzero");
    return DrinfeldModule{base, g, delta};
}

OrePoly DrinfeldModule::phi_t() const {
    return ore_from_coeffs(*base.L, {base.t, g, delta});
}

OrePoly phi_a(const DrinfeldModule& phi, const Poly& a) {
    const ExtField& L = phi.field();
    OrePoly pt = phi.phi_t();
    OrePoly acc = ore_zero();
    OrePoly power = ore_one(L);  // phi_{T^i}
    for (int i = 0; i <= a.degree(); ++i) {
        Fq::Elem c = a.coeff(i);
        if (c) acc = ore_add(L, acc, ore_scale(L, power, L.from_base(c)));
        if (i < a.degree()) power = ore_mul(L, power, pt);
    }
    return acc;
}

FFElem j_invariant(const DrinfeldModule& phi) {
    const ExtField& L = phi.field();
    FFElem gq1 = L.pow(phi.g, L.base().q() + 1);
    return L.div(gq1, phi.delta);
}

DrinfeldModule from_j(const AField& base, const FFElem& j) {
    const ExtField& L = *base.L;
    if (L.is_zero(j)) return DrinfeldModule::make(base, L.zero(), L.one());
    return DrinfeldModule::make(base, j, L.pow(j, L.base().q()));
}

bool is_isogeny(const OrePoly& f, const DrinfeldModule& phi, const DrinfeldModule& phi2) {
    const ExtField& L = phi.field();
    OrePoly lhs = ore_mul(L, f, phi.phi_t());
    OrePoly rhs = ore_mul(L, phi2.phi_t(), f);
    return ore_eq(L, lhs, rhs);
}

namespace {

// Given f with separable kernel and phi over the same field, solve
// f phi_T = phi'_T f for phi'.  Verifies the full identity.
DrinfeldModule solve_quotient(const DrinfeldModule& phi, const OrePoly& f) {
    const ExtField& L = phi.field();
    const Fq& fq = L.base();
    OrePoly u = ore_mul(L, f, phi.phi_t());
    int k = f.tdeg();
    auto fc = [&](int j) { return (j >= 0 && j <= k) ? f.c[j] : L.zero(); };
    auto uc = [&](int j) { return (j >= 0 && j <= u.tdeg()) ? u.c[j] : L.zero(); };
    FFElem fk = fc(k);
    FFElem fkq = L.frob_q(fk);
    FFElem fkq2 = L.frob_q(fkq);
    FFElem c2 = L.div(uc(k + 2), fkq2);
    FFElem c1 = L.div(L.sub(uc(k + 1), L.mul(c2, L.frob_q(L.frob_q(fc(k - 1))))), fkq);
    FFElem c0 = L.div(
        L.sub(uc(k), L.add(L.mul(c1, L.frob_q(fc(k - 1))), L.mul(c2, L.frob_q(L.frob_q(fc(k - 2)))))),
        fk);
    (void)fq;
    if (!(c0 == phi.base.t))
        throw std::invalid_argument("quotient: kernel not defined over the A-field structure");
    if (L.is_zero(c2)) throw std::invalid_argument("quotient: rank collapses");
    DrinfeldModule target = DrinfeldModule::make(phi.base, c1, c2);
    if (!ore_eq(L, u, ore_mul(L, target.phi_t(), f)))
        throw std::invalid_argument("quotient: kernel is not phi-stable");
    return target;
}

// A-module invariant factors of a T-stable coordinate space given the
// T-action matrix; at most two factors (submodule of a rank-2 module).
std::vector<Poly> invariant_factors_of(const FqMat& action) {
    if (action.rows() == 0) return {};
    Poly mp = action.min_poly();
    Poly cp = action.char_poly();
    Poly v = (cp / mp).monic();
    if (!(mp * v == cp.monic())) throw std::logic_error("invariant factors: bad quotient");
    std::vector<Poly> out;
    out.push_back(mp);
    if (!v.is_one()) {
        if (!(v.divides(mp) || mp.divides(v)))
            throw std::logic_error("invariant factors: not a chain");
        out.push_back(v);
    }
    return out;
}

}  // namespace

FFElem TorsionModule::element(const std::vector<Fq::Elem>& coords) const {
    FFElem acc = M->zero();
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) acc = M->add(acc, M->mul_base(basis[i], coords[i]));
    return acc;
}

TorsionModule torsion(const DrinfeldModule& phi, const Poly& a, TorsionOptions opt) {
    if (a.is_zero()) throw std::invalid_argument("torsion: a must be nonzero");
    const ExtField& L = phi.field();
    const Fq& fq = L.base();
    OrePoly pa = phi_a(phi, a);
    // number of distinct roots is q^(tdeg - v) with v the inseparability index
    int v = 0;
    while (v <= pa.tdeg() && L.is_zero(pa.c[v])) ++v;
    int target_dim = pa.tdeg() - v;
    for (uint32_t r = 1; r <= opt.max_relative_degree; ++r) {
        const ExtField& M = ext_field(fq, L.n() * r);
        const Embedding& e = embedding(L, M);
        OrePoly paM = ore_map(e, pa);
        // matrix of x -> pa(x) on M as an F_q-space
        size_t nm = M.n();
        FqMat mat(fq, nm, nm);
        for (size_t i = 0; i < nm; ++i) {
            FFElem b = M.zero();
            b[i] = 1;
            FFElem img = ore_eval(M, paM, b);
            for (size_t rr = 0; rr < nm; ++rr) mat.at(rr, i) = img[rr];
        }
        auto ker = mat.kernel_basis();
        if ((int)ker.size() == target_dim) {
            TorsionModule tm;
            tm.M = &M;
            tm.embed = &e;
            tm.relative_degree = r;
            AField baseM = AField{&M, e.apply(phi.base.t), phi.base.characteristic};
            tm.phiM = DrinfeldModule::make(baseM, e.apply(phi.g), e.apply(phi.delta));
            tm.basis.assign(ker.begin(), ker.end());
            // T-action in kernel coordinates
            FqMat cols(fq, nm, tm.basis.size());
            for (size_t j = 0; j < tm.basis.size(); ++j)
                for (size_t i = 0; i < nm; ++i) cols.at(i, j) = tm.basis[j][i];
            FqSolver solver(fq, cols);
            OrePoly ptM = tm.phiM.phi_t();
            FqMat act(fq, tm.basis.size(), tm.basis.size());
            for (size_t j = 0; j < tm.basis.size(); ++j) {
                FFElem img = ore_eval(M, ptM, tm.basis[j]);
                std::vector<Fq::Elem> coords;
                if (!solver.coords(img, coords))
                    throw std::logic_error("torsion: image leaves the root space");
                for (size_t i = 0; i < coords.size(); ++i) act.at(i, j) = coords[i];
            }
            tm.t_action = act;
            tm.invariant_factors = invariant_factors_of(act);
            for (auto& f : tm.invariant_factors)
                if (!f.divides(a.monic()))
                    throw std::logic_error("torsion: invariant factor does not divide a");
            return tm;
        }
        if ((int)ker.size() > target_dim) throw std::logic_error("torsion: kernel too large");
    }
    throw ResourceError("torsion: splitting field exceeds the configured degree cap");
}

bool is_ordinary(const DrinfeldModule& phi) {
    OrePoly pc = phi_a(phi, phi.base.characteristic);
    int v = 0;
    while (v <= pc.tdeg() && phi.field().is_zero(pc.c[v])) ++v;
    return v < pc.tdeg();
}

Isogeny quotient_by_kernel(const DrinfeldModule& phi, const std::vector<FFElem>& kernel) {
    const ExtField& L = phi.field();
    // subspace checks live in ore_kernel_poly; stability checked here
    std::set<std::vector<Fq::Elem>> set(kernel.begin(), kernel.end());
    OrePoly pt = phi.phi_t();
    for (const auto& x : kernel)
        if (!set.count(ore_eval(L, pt, x)))
            throw std::invalid_argument("quotient: kernel not stable under phi_T");
    OrePoly f = ore_kernel_poly(L, kernel);
    DrinfeldModule target = solve_quotient(phi, f);
    Isogeny iso{phi, target, f, {}};
    if (f.tdeg() > 0) {
        // A-module structure of the kernel for the degree ideal
        const Fq& fq = L.base();
        // basis extraction mirrors ore_kernel_poly
        std::vector<FFElem> basis;
        std::set<std::vector<Fq::Elem>> span;
        span.insert(L.zero());
        for (const auto& a : kernel) {
            if (span.count(a)) continue;
            basis.push_back(a);
            std::vector<FFElem> old(span.begin(), span.end());
            for (const auto& s : old)
                for (Fq::Elem c = 1; c < fq.q(); ++c) span.insert(L.add(s, L.mul_base(a, c)));
        }
        FqMat cols(fq, L.n(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t i = 0; i < L.n(); ++i) cols.at(i, j) = basis[j][i];
        FqSolver solver(fq, cols);
        FqMat act(fq, basis.size(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            std::vector<Fq::Elem> coords;
            if (!solver.coords(ore_eval(L, pt, basis[j]), coords))
                throw std::logic_error("quotient: action leaves kernel");
            for (size_t i = 0; i < coords.size(); ++i) act.at(i, j) = coords[i];
        }
        iso.invariant_factors = invariant_factors_of(act);
    }
    return iso;
}

uint64_t psi_count(const Fq& fq, const Poly& m) {
    if (!m.is_monic()) throw std::invalid_argument("psi: m must be monic");
    uint64_t result = 1;
    for (auto& [p, e] : factor(m)) {
        uint64_t np = 1;
        for (int i = 0; i < p.degree(); ++i) np *= fq.q();
        uint64_t term = np + 1;
        for (int i = 1; i < e; ++i) term *= np;
        result *= term;
    }
    return result;
}

HeckeImage hecke_image(const AField& base, const FFElem& j, const Poly& m, TorsionOptions opt) {
    const Fq& fq = base.L->base();
    if (!m.is_monic() || m.degree() < 1)
        throw std::invalid_argument("hecke: m must be monic nonconstant");
    if (!is_squarefree(m)) throw std::invalid_argument("hecke: m must be squarefree");
    if (!gcd(m, base.characteristic).is_constant())
        throw std::invalid_argument("hecke: m must be coprime to the characteristic");
    DrinfeldModule phi = from_j(base, j);
    TorsionModule tm = torsion(phi, m, opt);
    const ExtField& M = *tm.M;
    size_t dim = tm.fq_dim();
    if (dim != (size_t)(2 * m.degree())) throw std::logic_error("hecke: unexpected torsion rank");
    const FqMat& R = tm.t_action;

    auto mat_of_poly = [&](const Poly& p) {
        FqMat acc(fq, dim, dim);
        FqMat pw = FqMat::identity(fq, dim);
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeff(i))
                for (size_t r = 0; r < dim; ++r)
                    for (size_t c = 0; c < dim; ++c)
                        acc.at(r, c) = fq.add(acc.at(r, c), fq.mul(p.coeff(i), pw.at(r, c)));
            if (i < p.degree()) pw = pw.mul(R);
        }
        return acc;
    };

    // per-prime line enumeration in coordinates
    auto factors = factor(m);
    std::vector<std::vector<std::vector<std::vector<Fq::Elem>>>> lines_per_prime;
    for (auto& [p, e] : factors) {
        (void)e;
        FqMat pR = mat_of_poly(p);
        auto kerp = pR.kernel_basis();  // dim 2 deg p inside coordinate space
        if (kerp.size() != (size_t)(2 * p.degree()))
            throw std::logic_error("hecke: bad p-torsion dimension");
        int dp = p.degree();
        // A/p-basis: v1 = kerp[0]; v2 = first kernel vector outside A v1
        std::vector<std::vector<Fq::Elem>> orbit1;
        std::vector<Fq::Elem> v1 = kerp[0];
        {
            std::vector<Fq::Elem> cur = v1;
            for (int k = 0; k < dp; ++k) {
                orbit1.push_back(cur);
                cur = R.apply(cur);
            }
        }
        FqMat colsm(fq, dim, orbit1.size());
        for (size_t jj = 0; jj < orbit1.size(); ++jj)
            for (size_t i = 0; i < dim; ++i) colsm.at(i, jj) = orbit1[jj][i];
        FqSolver s1(fq, colsm);
        std::vector<Fq::Elem> v2;
        for (auto& cand : kerp) {
            std::vector<Fq::Elem> coords;
            if (!s1.coords(cand, coords)) {
                v2 = cand;
                break;
            }
        }
        if (v2.empty()) throw std::logic_error("hecke: p-torsion not free of rank 2");
        // lines: A v2, and A (v1 + c(R) v2) for c over residues mod p
        std::vector<std::vector<std::vector<Fq::Elem>>> lines;
        auto line_basis = [&](const std::vector<Fq::Elem>& gen) {
            std::vector<std::vector<Fq::Elem>> b;
            std::vector<Fq::Elem> cur = gen;
            for (int k = 0; k < dp; ++k) {
                b.push_back(cur);
                cur = R.apply(cur);
            }
            return b;
        };
        lines.push_back(line_basis(v2));
        uint64_t np = 1;
        for (int i = 0; i < dp; ++i) np *= fq.q();
        for (uint64_t code = 0; code < np; ++code) {
            Poly c = Poly::from_code(fq, code);
            FqMat cR = mat_of_poly(c);
            std::vector<Fq::Elem> gen = cR.apply(v2);
            for (size_t i = 0; i < dim; ++i) gen[i] = fq.add(gen[i], v1[i]);
            lines.push_back(line_basis(gen));
        }
        lines_per_prime.push_back(std::move(lines));
    }

    // direct sums across primes, quotient per cyclic submodule
    HeckeImage out;
    out.M = &M;
    out.embed = tm.embed;
    std::vector<size_t> idx(lines_per_prime.size(), 0);
    while (true) {
        std::vector<FFElem> basis_elems;
        for (size_t i = 0; i < idx.size(); ++i)
            for (auto& coord : lines_per_prime[i][idx[i]])
                basis_elems.push_back(tm.element(coord));
        OrePoly f = ore_kernel_poly_from_basis(M, basis_elems);
        DrinfeldModule target = solve_quotient(tm.phiM, f);
        out.values.push_back(j_invariant(target));
        // advance the product counter
        size_t k = 0;
        while (k < idx.size()) {
            if (++idx[k] < lines_per_prime[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    std::sort(out.values.begin(), out.values.end(), ff_less);
    if (out.values.size() != psi_count(fq, m)) throw std::logic_error("hecke: wrong count");
    return out;
}

FFPoly hecke_char_poly(const AField& base, const FFElem& j, const Poly& m, TorsionOptions opt) {
    HeckeImage img = hecke_image(base, j, m, opt);
    const ExtField& M = *img.M;
    FFPoly prod = ffp_one(M);
    for (auto& jp : img.values) {
        FFPoly lin = ffp_from_coeffs(M, {M.neg(jp), M.one()});
        prod = ffp_mul(M, prod, lin);
    }
    // coefficients are Galois stable over L; pull them back
    FFPoly out;
    for (auto& c : prod.c) {
        auto back = img.embed->pull_back(c);
        if (!back) throw std::logic_error("hecke: char poly not defined over the base");
        out.c.push_back(*back);
    }
    ffp_trim(*base.L, out);
    return out;
}

}  // namespace drinmod
