/*
   Copyright 2026 The ztilde authors

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
#ifndef ZTILDE_MATRIX_HPP
#define ZTILDE_MATRIX_HPP

#include <vector>

#include "ztilde/errors.hpp"
#include "ztilde/laurent.hpp"
#include "ztilde/ratfn.hpp"

namespace zt {

/* Dense matrix over an exact ring (LaurentPoly or RatFn here).  Throughout
 * this library matrices act on ROW vectors: the matrix of f∘g is M_g · M_f,
 * and entry (i, j) is the coefficient of target generator j in the image of
 * source generator i.
 */
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw ValidationError("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const T& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "+");
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "-");
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (T& x : r.e_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    template <class F>
    Matrix map(F f) const {
        Matrix r = *this;
        for (T& x : r.e_) x = f(x);
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> e_;
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError(std::string("Matrix: shape mismatch in ") + op);
    }
};

inline Matrix<RatFn> to_ratfn(const Matrix<LaurentPoly>& m) {
    Matrix<RatFn> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = RatFn(m.at(i, j));
    return r;
}

} // namespace zt

#endif
