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

#ifndef DRINMOD_LINALG_HPP
#define DRINMOD_LINALG_HPP

#include <cstdint>
#include <vector>

#include "drinmod/fq.hpp"
#include "drinmod/poly.hpp"

namespace drinmod {

// Dense matrix over F_q, row major.
class FqMat {
   public:
    FqMat() : f_(nullptr), rows_(0), cols_(0) {}
    FqMat(const Fq& f, size_t rows, size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static FqMat identity(const Fq& f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Fq::Elem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    Fq::Elem at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    const Fq& field() const { return *f_; }

    FqMat mul(const FqMat& o) const;
    std::vector<Fq::Elem> apply(const std::vector<Fq::Elem>& v) const;  // M v
    FqMat pow(uint64_t n) const;
    FqMat transpose() const;

    size_t rank() const;
    // Basis of the right kernel (vectors v with Mv = 0), as columns stacked
    // into rows of the result.
    std::vector<std::vector<Fq::Elem>> kernel_basis() const;
    // Solves M x = b; returns false if inconsistent.
    bool solve(const std::vector<Fq::Elem>& b, std::vector<Fq::Elem>& x) const;
    FqMat inverse() const;  // throws if singular

    // Minimal polynomial of the vector v under M (monic generator of the
    // ideal of relations), via Krylov iteration.
    Poly min_poly_of_vector(const std::vector<Fq::Elem>& v) const;
    Poly min_poly() const;
    Poly char_poly() const;  // Hessenberg, O(n^3)

   private:
    const Fq* f_;
    size_t rows_, cols_;
    std::vector<Fq::Elem> a_;
};

// Reduced row echelon form solver reused across many right-hand sides.
class FqSolver {
   public:
    FqSolver() = default;
    // columns of basis span the subspace; basis is (dim x k)
    FqSolver(const Fq& f, const FqMat& basis_cols);
    // expresses v in the basis; returns false if v is outside the span
    bool coords(const std::vector<Fq::Elem>& v, std::vector<Fq::Elem>& out) const;

   private:
    const Fq* f_ = nullptr;
    FqMat rref_;
    std::vector<int> pivot_col_of_row_;
    size_t k_ = 0;
};

}  // namespace drinmod

#endif
