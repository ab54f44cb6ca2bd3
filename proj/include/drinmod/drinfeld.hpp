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

#ifndef DRINMOD_DRINFELD_HPP
#define DRINMOD_DRINFELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drinmod/ffpoly.hpp"
#include "drinmod/ore.hpp"

namespace drinmod {

// Thrown when a torsion computation would need a splitting extension beyond
// the configured degree cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite A-field: an extension L of F_q together with the structure map
// gamma: A -> L, gamma(T) = t.  The characteristic is the monic prime
// generating ker(gamma), i.e. the minimal polynomial of t over F_q.
struct AField {
    const ExtField* L;
    FFElem t;
    Poly characteristic;

    static AField make(const ExtField& L, const FFElem& t);
    FFElem gamma(const Poly& a) const;  // a(t)
    std::string key() const;
};

// Rank-2 Drinfeld module phi_T = gamma(T) + g t + Delta t^2 over an A-field.
struct DrinfeldModule {
    AField base;
    FFElem g;
    FFElem delta;  // nonzero

    static DrinfeldModule make(const AField& base, const FFElem& g, const FFElem& delta);
    const ExtField& field() const { return *base.L; }
    OrePoly phi_t() const;
};

// phi_a by T-adic recursion; t-degree 2 deg(a), constant term gamma(a).
OrePoly phi_a(const DrinfeldModule& phi, const Poly& a);

FFElem j_invariant(const DrinfeldModule& phi);
// canonical representative: j != 0 -> (j, j^q); j = 0 -> (0, 1)
DrinfeldModule from_j(const AField& base, const FFElem& j);

// f phi_T = phi'_T f decides morphism-hood (A is generated by T).
bool is_isogeny(const OrePoly& f, const DrinfeldModule& phi, const DrinfeldModule& phi2);

struct Isogeny {
    DrinfeldModule source;
    DrinfeldModule target;
    OrePoly f;
    std::vector<Poly> invariant_factors;  // of ker(f) as an A-module, may be empty
    bool cyclic() const { return invariant_factors.size() <= 1; }
    std::optional<Poly> degree_ideal() const {
        if (!cyclic()) return std::nullopt;
        if (invariant_factors.empty()) return std::nullopt;
        return invariant_factors[0];
    }
};

// Quotient by a finite phi_T-stable F_q-subspace (given as the full set of
// its elements); the Velu-style coefficient solve.  Throws on non-subspaces
// and non-stable kernels.
Isogeny quotient_by_kernel(const DrinfeldModule& phi, const std::vector<FFElem>& kernel);

// Description of phi[a] inside its splitting extension.
struct TorsionModule {
    const ExtField* M;            // splitting field (canonical extension of base L)
    Embedding const* embed;       // L -> M
    DrinfeldModule phiM;          // phi with coefficients mapped into M
    std::vector<FFElem> basis;    // F_q-basis of the root space of phi_a
    FqMat t_action;               // matrix of x -> phi_T(x) in that basis
    std::vector<Poly> invariant_factors;  // elementary divisor chain, v | u
    uint32_t relative_degree;     // [M : L]

    size_t fq_dim() const { return basis.size(); }
    FFElem element(const std::vector<Fq::Elem>& coords) const;
};

struct TorsionOptions {
    uint32_t max_relative_degree = 12;
};

TorsionModule torsion(const DrinfeldModule& phi, const Poly& a, TorsionOptions opt = {});

// Ordinary iff the characteristic torsion is nontrivial; read off the
// inseparability index of phi_char, no splitting field needed.
bool is_ordinary(const DrinfeldModule& phi);

// The Hecke image of j under T_m: j-invariants of phi/C over all cyclic
// A/m-submodules C of phi[m], with multiplicity.  m squarefree, coprime to
// the characteristic.  All values live in the returned splitting field.
struct HeckeImage {
    const ExtField* M;
    Embedding const* embed;      // L -> M
    std::vector<FFElem> values;  // psi(m) j-invariants, canonically sorted
};

HeckeImage hecke_image(const AField& base, const FFElem& j, const Poly& m,
                       TorsionOptions opt = {});

// prod (Y - j') over the Hecke image, pulled back to the base field L.
// This is the Galois-stable fingerprint used for multiset comparisons.
FFPoly hecke_char_poly(const AField& base, const FFElem& j, const Poly& m,
                       TorsionOptions opt = {});

// |m| prod_{p | m} (1 + 1/|p|), the number of cyclic A/m-submodule lines.
uint64_t psi_count(const Fq& fq, const Poly& m);

}  // namespace drinmod

#endif
