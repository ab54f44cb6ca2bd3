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

#ifndef DRINMOD_FQ_HPP
#define DRINMOD_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinmod {

// The coefficient field F_q, q = p^e with p an odd prime.  Elements are
// codes 0..q-1: the base-p digits of the code are the coordinates in the
// power basis 1, u, u^2, ... of F_p[u]/(m(u)), where m is the first monic
// irreducible of degree e in lexicographic order (leading coefficients
// compared first).  For e = 1 the code is just the residue mod p.
//
// All arithmetic is table-driven and exact.  Instances are immutable after
// construction; concurrent reads are safe.
class Fq {
   public:
    using Elem = uint32_t;

    Fq(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t n) const;

    // x -> x^p, the absolute Frobenius.
    Elem frob_p(Elem a) const { return frobp_[a]; }

    Elem generator() const { return gen_; }
    // Discrete log base generator(); a must be nonzero.
    uint32_t log(Elem a) const;
    Elem exp(uint32_t k) const { return exp_[k % (q_ - 1)]; }

    bool is_square(Elem a) const;       // true for 0
    Elem sqrt(Elem a) const;            // throws if not a square
    int chi(Elem a) const;              // quadratic character: 0, +1, -1

    Elem from_int(int64_t v) const;     // reduction of an integer (prime subfield)
    Elem parse(const std::string& s) const;
    std::string to_string(Elem a) const;

    // Coefficients (low to high) of the degree-e defining polynomial over F_p;
    // empty when e = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string describe() const;

    bool operator==(const Fq& o) const { return p_ == o.p_ && e_ == o.e_; }

   private:
    uint32_t p_, e_, q_;
    std::vector<Elem> add_, mul_, neg_, inv_, frobp_;
    std::vector<Elem> exp_;
    std::vector<uint32_t> log_;
    Elem gen_ = 0;
    std::vector<uint32_t> modulus_;

    void build_tables();
};

// Shared registry so that repeated requests for the same (p, e) reuse one
// table set.  Thread safe.
const Fq& fq_cache(uint32_t p, uint32_t e);
// Convenience: q = p^e from a prime power; throws if q is not an odd prime power.
const Fq& fq_cache_q(uint32_t q);

bool is_prime_u64(uint64_t n);
// Splits q into (p, e) with p prime; returns false if q is not a prime power.
bool split_prime_power(uint32_t q, uint32_t& p, uint32_t& e);

}  // namespace drinmod

#endif
