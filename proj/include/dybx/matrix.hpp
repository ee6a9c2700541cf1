#pragma once

#include "dybx/errors.hpp"
#include "dybx/rational.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dybx {

/// Row-major sparse matrix over an exact ring. Only nonzero entries are stored;
/// `zero()` is the prototype used for missing entries (jets carry their shape in it).
template <class T>
class SparseMatrix {
public:
    using Entry = std::pair<int, T>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows) {}

    static SparseMatrix identity(int n, const T& one, const T& zero)
    {
        SparseMatrix m(n, n, zero);
        for (int i = 0; i < n; ++i)
            m.data_[i].push_back({i, one});
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& zero() const { return zero_; }
    const std::vector<Entry>& row(int i) const { return data_[i]; }

    const T* find(int i, int j) const
    {
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
        if (it != r.end() && it->first == j)
            return &it->second;
        return nullptr;
    }

    T at(int i, int j) const
    {
        const T* p = find(i, j);
        return p ? *p : zero_;
    }

    void set(int i, int j, T v)
    {
        auto& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
        bool zeroValue = isZero(v);
        if (it != r.end() && it->first == j) {
            if (zeroValue)
                r.erase(it);
            else
                it->second = std::move(v);
        } else if (!zeroValue) {
            r.insert(it, {j, std::move(v)});
        }
    }

    void add(int i, int j, const T& v)
    {
        if (isZero(v))
            return;
        const T* p = find(i, j);
        if (p)
            set(i, j, *p + v);
        else
            set(i, j, v);
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (auto& r : data_)
            n += r.size();
        return n;
    }

    bool isZeroMatrix() const
    {
        for (auto& r : data_)
            for (auto& e : r)
                if (!isZero(e.second))
                    return false;
        return true;
    }

    SparseMatrix& operator+=(const SparseMatrix& o)
    {
        checkSame(o);
        for (int i = 0; i < rows_; ++i)
            for (auto& e : o.data_[i])
                add(i, e.first, e.second);
        return *this;
    }

    SparseMatrix& operator-=(const SparseMatrix& o)
    {
        checkSame(o);
        for (int i = 0; i < rows_; ++i)
            for (auto& e : o.data_[i])
                add(i, e.first, -e.second);
        return *this;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

    template <class S>
    SparseMatrix scaled(const S& s) const
    {
        SparseMatrix r(rows_, cols_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (auto& e : data_[i])
                r.set(i, e.first, e.second * s);
        return r;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DomainError("matrix dimension mismatch in product");
        SparseMatrix r(a.rows_, b.cols_, a.zero_);
        std::vector<T> acc(b.cols_, a.zero_);
        std::vector<char> touched(b.cols_, 0);
        std::vector<int> cols;
        for (int i = 0; i < a.rows_; ++i) {
            cols.clear();
            for (auto& ea : a.data_[i]) {
                for (auto& eb : b.data_[ea.first]) {
                    int j = eb.first;
                    if (!touched[j]) {
                        touched[j] = 1;
                        cols.push_back(j);
                        acc[j] = ea.second * eb.second;
                    } else {
                        acc[j] += ea.second * eb.second;
                    }
                }
            }
            std::sort(cols.begin(), cols.end());
            for (int j : cols) {
                if (!isZero(acc[j]))
                    r.data_[i].push_back({j, std::move(acc[j])});
                acc[j] = a.zero_;
                touched[j] = 0;
            }
        }
        return r;
    }

    SparseMatrix transpose() const
    {
        SparseMatrix r(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (auto& e : data_[i])
                r.data_[e.first].push_back({i, e.second});
        return r;
    }

    /// Entrywise map, e.g. to change the scalar type or take derivatives.
    template <class F>
    auto mapped(F&& f, decltype(f(std::declval<T>())) newZero) const
    {
        using U = decltype(f(std::declval<T>()));
        SparseMatrix<U> r(rows_, cols_, newZero);
        for (int i = 0; i < rows_; ++i)
            for (auto& e : data_[i])
                r.set(i, e.first, f(e.second));
        return r;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (int i = 0; i < a.rows_; ++i) {
            auto& ra = a.data_[i];
            auto& rb = b.data_[i];
            std::size_t p = 0, q = 0;
            while (p < ra.size() || q < rb.size()) {
                if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
                    if (!(ra[p].second == a.zero_))
                        return false;
                    ++p;
                } else if (p == ra.size() || rb[q].first < ra[p].first) {
                    if (!(rb[q].second == a.zero_))
                        return false;
                    ++q;
                } else {
                    if (!(ra[p].second == rb[q].second))
                        return false;
                    ++p;
                    ++q;
                }
            }
        }
        return true;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    void checkSame(const SparseMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DomainError("matrix dimension mismatch");
    }

    int rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<std::vector<Entry>> data_;
};

/// Kronecker product; index of (i, j) is i * b.rows() + j.
template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b)
{
    SparseMatrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (auto& ea : a.row(i))
            for (int k = 0; k < b.rows(); ++k)
                for (auto& eb : b.row(k))
                    r.set(i * b.rows() + k, ea.first * b.cols() + eb.first, ea.second * eb.second);
    return r;
}

/// Places an operator acting on the tensor factors `legs` (in that order) of a
/// space with factor dimensions `dims` (first factor most significant).
template <class T>
SparseMatrix<T> placeOnLegs(const SparseMatrix<T>& op, const std::vector<int>& dims, const std::vector<int>& legs)
{
    int total = 1;
    for (int d : dims)
        total *= d;
    int sub = 1;
    for (int l : legs)
        sub *= dims[l];
    if (op.rows() != sub || op.cols() != sub)
        throw DomainError("operator size does not match the selected legs");
    int n = static_cast<int>(dims.size());
    std::vector<int> stride(n, 1);
    for (int i = n - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * dims[i + 1];
    std::vector<char> isLeg(n, 0);
    for (int l : legs)
        isLeg[l] = 1;
    SparseMatrix<T> r(total, total, op.zero());
    std::vector<int> digits(n);
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        for (int i = 0; i < n; ++i) {
            digits[i] = rem / stride[i];
            rem %= stride[i];
        }
        // Sub-index from the leg digits; base index with leg digits zeroed.
        int subIdx = 0;
        int base = idx;
        for (int l : legs) {
            subIdx = subIdx * dims[l] + digits[l];
            base -= digits[l] * stride[l];
        }
        for (auto& e : op.row(subIdx)) {
            int col = base;
            int c = e.first;
            for (int p = static_cast<int>(legs.size()) - 1; p >= 0; --p) {
                int l = legs[p];
                col += (c % dims[l]) * stride[l];
                c /= dims[l];
            }
            r.set(idx, col, e.second);
        }
    }
    return r;
}

} // namespace dybx
