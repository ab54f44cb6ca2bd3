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

#include "drinmod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinmod {

FqMat FqMat::identity(const Fq& f, size_t n) {
    FqMat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMat FqMat::mul(const FqMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FqMat: shape mismatch");
    FqMat r(*f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            Fq::Elem aik = at(i, k);
            if (!aik) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = f_->add(r.at(i, j), f_->mul(aik, o.at(k, j)));
        }
    return r;
}

std::vector<Fq::Elem> FqMat::apply(const std::vector<Fq::Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("FqMat: vector size mismatch");
    std::vector<Fq::Elem> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        Fq::Elem s = 0;
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) && v[j]) s = f_->add(s, f_->mul(at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

FqMat FqMat::pow(uint64_t n) const {
    FqMat r = identity(*f_, rows_);
    FqMat b = *this;
    while (n) {
        if (n & 1) r = r.mul(b);
        b = b.mul(b);
        n >>= 1;
    }
    return r;
}

FqMat FqMat::transpose() const {
    FqMat r(*f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// in-place Gauss elimination to row echelon; returns pivot columns
std::vector<int> echelon(const Fq& f, FqMat& m) {
    std::vector<int> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Fq::Elem inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Fq::Elem s = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(r, j)));
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t FqMat::rank() const {
    FqMat m = *this;
    return echelon(*f_, m).size();
}

std::vector<std::vector<Fq::Elem>> FqMat::kernel_basis() const {
    FqMat m = *this;
    auto pivots = echelon(*f_, m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fq::Elem>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Fq::Elem> v(cols_, 0);
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f_->neg(m.at(r, freec));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool FqMat::solve(const std::vector<Fq::Elem>& b, std::vector<Fq::Elem>& x) const {
    FqMat aug(*f_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = echelon(*f_, aug);
    x.assign(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == (int)cols_) return false;  // 0 = 1 row
        x[pivots[r]] = aug.at(r, cols_);
    }
    return true;
}

FqMat FqMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FqMat: not square");
    FqMat aug(*f_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto pivots = echelon(*f_, aug);
    if (pivots.size() != rows_ || pivots.back() >= (int)cols_)
        throw std::domain_error("FqMat: singular");
    FqMat r(*f_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

Poly FqMat::min_poly_of_vector(const std::vector<Fq::Elem>& v) const {
    // Krylov: find the first linear dependence among v, Mv, M^2 v, ...
    size_t n = rows_;
    std::vector<std::vector<Fq::Elem>> krylov;
    std::vector<Fq::Elem> cur = v;
    for (size_t k = 0; k <= n; ++k) {
        if (!krylov.empty()) {
            FqMat msub(*f_, n, krylov.size());
            for (size_t j = 0; j < krylov.size(); ++j)
                for (size_t i = 0; i < n; ++i) msub.at(i, j) = krylov[j][i];
            std::vector<Fq::Elem> x;
            if (msub.solve(cur, x)) {
                // cur = sum x_j M^j v  =>  minpoly = T^k - sum x_j T^j
                std::vector<Fq::Elem> c(k + 1, 0);
                for (size_t j = 0; j < x.size(); ++j) c[j] = f_->neg(x[j]);
                c[k] = 1;
                return Poly(*f_, c);
            }
        } else if (std::all_of(cur.begin(), cur.end(), [](Fq::Elem e) { return e == 0; })) {
            return Poly::one(*f_);  // zero vector
        }
        krylov.push_back(cur);
        cur = apply(cur);
    }
    throw std::logic_error("FqMat: minpoly not found");
}

Poly FqMat::min_poly() const {
    // lcm of vector minpolys over the standard basis
    Poly m = Poly::one(*f_);
    for (size_t i = 0; i < rows_; ++i) {
        std::vector<Fq::Elem> e(rows_, 0);
        e[i] = 1;
        Poly mi = min_poly_of_vector(e);
        m = (m * mi) / gcd(m, mi);
        if (m.degree() == (int)rows_) break;
    }
    return m.monic();
}

Poly FqMat::char_poly() const {
    // Hessenberg reduction then recurrence; works over any field
    if (rows_ != cols_) throw std::invalid_argument("FqMat: not square");
    size_t n = rows_;
    FqMat h = *this;
    for (size_t c = 0; c + 2 < n + 1 && c + 1 < n; ++c) {
        size_t piv = c + 1;
        while (piv < n && h.at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
        }
        Fq::Elem inv = f_->inv(h.at(c + 1, c));
        for (size_t i = c + 2; i < n; ++i) {
            Fq::Elem s = f_->mul(h.at(i, c), inv);
            if (!s) continue;
            for (size_t j = 0; j < n; ++j) h.at(i, j) = f_->sub(h.at(i, j), f_->mul(s, h.at(c + 1, j)));
            for (size_t j = 0; j < n; ++j) h.at(j, c + 1) = f_->add(h.at(j, c + 1), f_->mul(s, h.at(j, i)));
        }
    }
    // p_0 = 1; p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] (prod subdiag) p_i
    std::vector<Poly> p(n + 1, Poly::one(*f_));
    for (size_t k = 1; k <= n; ++k) {
        Poly x_minus = Poly::t(*f_) - Poly::constant(*f_, h.at(k - 1, k - 1));
        p[k] = x_minus * p[k - 1];
        Fq::Elem prod = 1;
        for (size_t i = k - 1; i-- > 0;) {
            prod = f_->mul(prod, h.at(i + 1, i));
            if (!prod) break;
            Fq::Elem coeff = f_->mul(h.at(i, k - 1), prod);
            if (coeff) p[k] = p[k] - p[i] * coeff;
        }
    }
    return p[n];
}

FqSolver::FqSolver(const Fq& f, const FqMat& basis_cols) : f_(&f), k_(basis_cols.cols()) {
    rref_ = basis_cols;
    // store an echelonized copy with column tracking: augment with identity on
    // the right so coords can be recovered
    size_t n = basis_cols.rows();
    FqMat aug(f, n, k_ + n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k_; ++j) aug.at(i, j) = basis_cols.at(i, j);
        aug.at(i, k_ + i) = 1;
    }
    rref_ = aug;
    pivot_col_of_row_.clear();
    // eliminate on the first k_ columns only
    size_t r = 0;
    for (size_t c = 0; c < k_ && r < n; ++c) {
        size_t sel = r;
        while (sel < n && rref_.at(sel, c) == 0) ++sel;
        if (sel == n) continue;
        if (sel != r)
            for (size_t j = 0; j < rref_.cols(); ++j) std::swap(rref_.at(sel, j), rref_.at(r, j));
        Fq::Elem inv = f.inv(rref_.at(r, c));
        for (size_t j = 0; j < rref_.cols(); ++j) rref_.at(r, j) = f.mul(rref_.at(r, j), inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || rref_.at(i, c) == 0) continue;
            Fq::Elem s = rref_.at(i, c);
            for (size_t j = 0; j < rref_.cols(); ++j)
                rref_.at(i, j) = f.sub(rref_.at(i, j), f.mul(s, rref_.at(r, j)));
        }
        pivot_col_of_row_.push_back((int)c);
        ++r;
    }
}

bool FqSolver::coords(const std::vector<Fq::Elem>& v, std::vector<Fq::Elem>& out) const {
    size_t n = rref_.rows();
    if (v.size() != n) throw std::invalid_argument("FqSolver: size mismatch");
    // y = R v where R is the recorded row transform; consistency requires the
    // non-pivot rows of y to vanish
    out.assign(k_, 0);
    size_t npiv = pivot_col_of_row_.size();
    for (size_t r = 0; r < n; ++r) {
        Fq::Elem s = 0;
        for (size_t j = 0; j < n; ++j)
            if (rref_.at(r, k_ + j) && v[j]) s = f_->add(s, f_->mul(rref_.at(r, k_ + j), v[j]));
        if (r < npiv)
            out[pivot_col_of_row_[r]] = s;
        else if (s != 0)
            return false;
    }
    return true;
}

}  // namespace drinmod
