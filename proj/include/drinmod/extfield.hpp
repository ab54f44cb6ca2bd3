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

#ifndef DRINMOD_EXTFIELD_HPP
#define DRINMOD_EXTFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drinmod/bigs.hpp"
#include "drinmod/fq.hpp"
#include "drinmod/linalg.hpp"
#include "drinmod/poly.hpp"

namespace drinmod {

// An element of F_{q^n}: the coefficient vector (length n, low to high) in
// the power basis of the generator.  Elements carry no field pointer; all
// arithmetic goes through the owning ExtField.
using FFElem = std::vector<Fq::Elem>;

// F_{q^n} = F_q[y]/(f_n) where f_n is the first monic irreducible of degree
// n in lexicographic order.  Residue fields A/p and torsion splitting fields
// are all realized this way, which makes every derived value reproducible.
//
// Fields with at most kZechLimit elements additionally carry discrete
// log/antilog and Zech tables; the code-based API (suffix _c) then runs in a
// handful of table lookups and is what the enumeration kernels use.
class ExtField {
   public:
    static constexpr uint64_t kZechLimit = 1u << 20;

    ExtField(const Fq& base, Poly modulus);

    const Fq& base() const { return *fq_; }
    uint32_t n() const { return n_; }
    const Poly& modulus() const { return mod_; }
    uint64_t order_u64() const;          // throws if > 2^63
    BigUInt order_big() const;
    bool order_fits_u64() const;

    FFElem zero() const { return FFElem(n_, 0); }
    FFElem one() const;
    FFElem gen() const;                  // the class of y
    FFElem from_base(Fq::Elem c) const;
    FFElem from_poly(const Poly& p) const;  // reduction of p(y)

    bool is_zero(const FFElem& a) const;
    bool is_one(const FFElem& a) const;
    bool eq(const FFElem& a, const FFElem& b) const { return a == b; }

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem mul_base(const FFElem& a, Fq::Elem s) const;
    FFElem inv(const FFElem& a) const;
    FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
    FFElem pow(const FFElem& a, uint64_t e) const;
    FFElem pow_big(const FFElem& a, const BigUInt& e) const;

    // x -> x^q (the relative Frobenius over F_q) and its iterates
    FFElem frob_q(const FFElem& a, uint32_t times = 1) const;
    const FqMat& frob_matrix() const { return frob_; }

    bool is_square(const FFElem& a) const;
    FFElem sqrt(const FFElem& a) const;  // throws if not a square

    // mixed-radix code (base q), usable whenever the order fits u64
    uint64_t to_code(const FFElem& a) const;
    FFElem from_code(uint64_t code) const;

    // ---- Zech-table fast path (available iff has_zech()) ----
    bool has_zech() const { return !exp_.empty(); }
    uint64_t zc_mul(uint64_t a, uint64_t b) const;
    uint64_t zc_add(uint64_t a, uint64_t b) const;
    uint64_t zc_sub(uint64_t a, uint64_t b) const;
    uint64_t zc_neg(uint64_t a) const;
    uint64_t zc_inv(uint64_t a) const;
    int zc_chi(uint64_t a) const;  // quadratic character on codes

    std::string to_string(const FFElem& a, const std::string& sym = "w") const;
    FFElem parse(const std::string& s, const std::string& sym = "w") const;
    std::string describe() const;

    // stable identity string: q and modulus
    std::string key() const;

   private:
    const Fq* fq_;
    uint32_t n_;
    Poly mod_;
    std::vector<std::vector<Fq::Elem>> red_;  // y^(n+k) mod f, rows k = 0..n-2
    FqMat frob_;
    // Zech tables (codes): exp_[k] = code of g^k, log_ by code, zech_[k] with
    // 1 + g^k = g^zech_[k] (q^n marks "no such power", i.e. value zero)
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> zech_;
    uint64_t zq_ = 0;  // field order when Zech present

    void build_reduction();
    void build_zech();
};

// Canonical tower: F_{q^n} with the lex-first defining polynomial, cached
// and shared (thread safe).
const ExtField& ext_field(const Fq& base, uint32_t n);

// F_q-linear embedding of L into M (requires deg L | deg M over the common
// base).  The embedding is the canonical one: the generator of L maps to the
// lexicographically smallest root of L's modulus in M.
class Embedding {
   public:
    Embedding(const ExtField& from, const ExtField& to);

    const ExtField& from() const { return *from_; }
    const ExtField& to() const { return *to_; }

    FFElem apply(const FFElem& a) const;
    // inverse image; returns nullopt if b is outside the subfield
    std::optional<FFElem> pull_back(const FFElem& b) const;

   private:
    const ExtField* from_;
    const ExtField* to_;
    FqMat mat_;          // (deg to) x (deg from), images of the power basis
    FqSolver solver_;
};

// Cached canonical embeddings between canonical fields.
const Embedding& embedding(const ExtField& from, const ExtField& to);

}  // namespace drinmod

#endif
