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

#ifndef DRINMOD_BIGS_HPP
#define DRINMOD_BIGS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace drinmod {

// Unsigned big integer, little-endian 64-bit limbs.  Only the handful of
// operations the library needs: q^n, subtract-small, halve, bit access.
class BigUInt {
   public:
    BigUInt() : limbs{0} {}
    explicit BigUInt(uint64_t v) : limbs{v} {}

    static BigUInt pow(uint64_t base, unsigned exp) {
        BigUInt r(1);
        for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    void mul_small(uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& l : limbs) {
            unsigned __int128 t = (unsigned __int128)l * m + carry;
            l = (uint64_t)t;
            carry = t >> 64;
        }
        while (carry) {
            limbs.push_back((uint64_t)carry);
            carry >>= 64;
        }
        trim();
    }

    void sub_small(uint64_t s) {
        size_t i = 0;
        while (s) {
            if (i >= limbs.size()) throw std::underflow_error("BigUInt underflow");
            uint64_t old = limbs[i];
            limbs[i] = old - s;
            s = (old < s) ? 1 : 0;
            ++i;
        }
        trim();
    }

    void halve() {
        uint64_t carry = 0;
        for (size_t i = limbs.size(); i-- > 0;) {
            uint64_t next = limbs[i] & 1;
            limbs[i] = (limbs[i] >> 1) | (carry << 63);
            carry = next;
        }
        trim();
    }

    bool is_zero() const { return limbs.size() == 1 && limbs[0] == 0; }

    size_t bit_length() const {
        uint64_t top = limbs.back();
        size_t n = (limbs.size() - 1) * 64;
        while (top) {
            ++n;
            top >>= 1;
        }
        return n;
    }

    bool bit(size_t i) const {
        size_t l = i / 64;
        if (l >= limbs.size()) return false;
        return (limbs[l] >> (i % 64)) & 1;
    }

    bool fits_u64() const { return limbs.size() == 1; }
    uint64_t as_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUInt does not fit u64");
        return limbs[0];
    }

   private:
    std::vector<uint64_t> limbs;

    void trim() {
        while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
    }
};

}  // namespace drinmod

#endif
