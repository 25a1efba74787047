/*
   Copyright 2026 the octic-verify authors

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

#ifndef OCTIC_LINALG_HPP
#define OCTIC_LINALG_HPP

#include <cstddef>
#include <vector>

namespace octic {

// Exact dense linear algebra over any field value type with +,-,*,/ and ==.
// All sizes here are tiny (≤ 8×8); clarity over asymptotics.

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// In-place reduced row echelon form. Returns pivot column indices.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == T(0)) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        T inv = T(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == T(0)) continue;
            T f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

/// Basis of the right kernel {x : m·x = 0}.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<T> v(cols, T(0));
        v[freec] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = T(0) - m[i][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Matrix-vector product.
template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& x) {
    std::vector<T> y(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = y[i] + m[i][j] * x[j];
    return y;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.size(), std::vector<T>(b[0].size(), T(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

/// Determinant by fraction-free-ish elimination (fields only).
template <class T>
T det(Matrix<T> m) {
    const std::size_t n = m.size();
    T d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == T(0)) ++sel;
        if (sel == n) return T(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = T(0) - d;
        }
        d = d * m[c][c];
        T inv = T(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            T f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return d;
}

template <class T>
Matrix<T> mat_inverse(Matrix<T> m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, T(0));
        m[i][n + i] = T(1);
    }
    auto pivots = rref(m);
    if (pivots.size() != n) throw std::invalid_argument("mat_inverse: singular matrix");
    Matrix<T> inv(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace octic

#endif  // OCTIC_LINALG_HPP
