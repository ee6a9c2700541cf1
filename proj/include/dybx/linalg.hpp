#pragma once

#include "dybx/cyclotomic.hpp"
#include "dybx/rational.hpp"

#include <optional>
#include <vector>

namespace dybx {

inline Rational fieldInverse(const Rational& q) { return Rational(1) / q; }
inline Cyclotomic fieldInverse(const Cyclotomic& c) { return c.inverse(); }

template <class T>
using Dense = std::vector<std::vector<T>>;

/// Reduced row echelon form in place (Gauss-Jordan over a field).
/// Returns the pivot column of each pivot row.
template <class T>
std::vector<int> rowReduce(Dense<T>& m)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!isZero(m[i][c])) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[p], m[r]);
        T inv = fieldInverse(m[r][c]);
        for (int j = c; j < cols; ++j)
            if (!isZero(m[r][j]))
                m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || isZero(m[i][c]))
                continue;
            T f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (!isZero(m[r][j]))
                    m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Dense<T> m)
{
    return static_cast<int>(rowReduce(m).size());
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Dense<T> m, int cols, const T& zero, const T& one)
{
    std::vector<std::vector<T>> basis;
    if (m.empty()) {
        for (int c = 0; c < cols; ++c) {
            std::vector<T> v(cols, zero);
            v[c] = one;
            basis.push_back(v);
        }
        return basis;
    }
    auto pivots = rowReduce(m);
    std::vector<int> pivotRow(cols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        pivotRow[pivots[r]] = static_cast<int>(r);
    for (int free = 0; free < cols; ++free) {
        if (pivotRow[free] >= 0)
            continue;
        std::vector<T> v(cols, zero);
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(v);
    }
    return basis;
}

/// Solves m x = b; nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Dense<T>& m, const std::vector<T>& b, const T& zero)
{
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Dense<T> aug = m;
    for (int i = 0; i < rows; ++i)
        aug[i].push_back(b[i]);
    auto pivots = rowReduce(aug);
    std::vector<T> x(cols, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols)
            return std::nullopt;
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

/// Inverse of a square matrix, or nullopt with `kernelDim` set to the nullity.
template <class T>
std::optional<Dense<T>> inverse(const Dense<T>& m, const T& zero, const T& one, int* kernelDim = nullptr)
{
    int n = static_cast<int>(m.size());
    Dense<T> aug(n, std::vector<T>(2 * n, zero));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = m[i][j];
        aug[i][n + i] = one;
    }
    auto pivots = rowReduce(aug);
    int r = 0;
    for (int p : pivots)
        if (p < n)
            ++r;
    if (r < n) {
        if (kernelDim)
            *kernelDim = n - r;
        return std::nullopt;
    }
    Dense<T> inv(n, std::vector<T>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    if (kernelDim)
        *kernelDim = 0;
    return inv;
}

} // namespace dybx
