#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reflecta/cyclotomic.hpp"

namespace reflecta {

inline bool field_is_zero(const mpq_class& x) { return x == 0; }
inline bool field_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline mpq_class field_conj(const mpq_class& x) { return x; }
inline Cyclotomic field_conj(const Cyclotomic& x) { return x.conj(); }
inline std::size_t field_hash(const Cyclotomic& x) { return x.hash(); }

// Dense row-major matrix over an exact field K.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<K>& data() const { return a_; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
    }
    std::vector<K> col(std::size_t j) const {
        std::vector<K> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix: shape mismatch in product");
        Matrix m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const K& x = (*this)(i, k);
                if (field_is_zero(x)) continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (!field_is_zero(o(k, j))) m(i, j) += x * o(k, j);
            }
        return m;
    }
    std::vector<K> operator*(const std::vector<K>& v) const {
        if (c_ != v.size()) throw std::invalid_argument("matrix: shape mismatch in matrix-vector product");
        std::vector<K> out(r_, K(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k)
                if (!field_is_zero((*this)(i, k)) && !field_is_zero(v[k])) out[i] += (*this)(i, k) * v[k];
        return out;
    }
    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix m = *this;
        for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] += o.a_[t];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix m = *this;
        for (std::size_t t = 0; t < a_.size(); ++t) m.a_[t] -= o.a_[t];
        return m;
    }
    Matrix scaled(const K& s) const {
        Matrix m = *this;
        for (auto& e : m.a_) e *= s;
        return m;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    Matrix adjoint() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = field_conj((*this)(i, j));
        return m;
    }

    // Reduced row echelon form: leftmost nonzero pivot scaled to 1.
    // Returns pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t prow = 0;
        for (std::size_t j = 0; j < c_ && prow < r_; ++j) {
            std::size_t p = prow;
            while (p < r_ && field_is_zero((*this)(p, j))) ++p;
            if (p == r_) continue;
            swap_rows(p, prow);
            K inv = K(1) / (*this)(prow, j);
            for (std::size_t t = j; t < c_; ++t) (*this)(prow, t) *= inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == prow || field_is_zero((*this)(i, j))) continue;
                K f = (*this)(i, j);
                for (std::size_t t = j; t < c_; ++t)
                    if (!field_is_zero((*this)(prow, t))) (*this)(i, t) -= f * (*this)(prow, t);
            }
            pivots.push_back(j);
            ++prow;
        }
        return pivots;
    }
    Matrix rref() const {
        Matrix m = *this;
        m.rref_in_place();
        return m;
    }
    std::size_t rank() const {
        Matrix m = *this;
        return m.rref_in_place().size();
    }
    // Basis of {v : M v = 0}, one vector per free column (free entry 1).
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        std::vector<std::size_t> piv = m.rref_in_place();
        std::vector<bool> is_piv(c_, false);
        for (auto p : piv) is_piv[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<K> v(c_, K(0));
            v[f] = K(1);
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    K det() const {
        if (r_ != c_) throw std::invalid_argument("matrix: determinant of non-square matrix");
        Matrix m = *this;
        K d(1);
        for (std::size_t j = 0; j < r_; ++j) {
            std::size_t p = j;
            while (p < r_ && field_is_zero(m(p, j))) ++p;
            if (p == r_) return K(0);
            if (p != j) {
                m.swap_rows(p, j);
                d = -d;
            }
            d *= m(j, j);
            K inv = K(1) / m(j, j);
            for (std::size_t i = j + 1; i < r_; ++i) {
                if (field_is_zero(m(i, j))) continue;
                K f = m(i, j) * inv;
                for (std::size_t t = j; t < c_; ++t) m(i, t) -= f * m(j, t);
            }
        }
        return d;
    }
    Matrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("matrix: inverse of non-square matrix");
        Matrix aug(r_, 2 * r_);
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < r_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, r_ + i) = K(1);
        }
        std::vector<std::size_t> piv = aug.rref_in_place();
        if (piv.size() < r_ || piv[r_ - 1] != r_ - 1) throw std::domain_error("matrix: singular");
        Matrix inv(r_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) inv(i, j) = aug(i, r_ + j);
        return inv;
    }
    K trace() const {
        K t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }
    bool is_zero() const {
        for (const auto& e : a_)
            if (!field_is_zero(e)) return false;
        return true;
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t t = 0; t < c_; ++t) std::swap(a_[i * c_ + t], a_[j * c_ + t]);
    }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix: shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

using CycloMatrix = Matrix<Cyclotomic>;
using QMatrix = Matrix<mpq_class>;
using CycloVector = std::vector<Cyclotomic>;

struct CycloMatrixHash {
    std::size_t operator()(const CycloMatrix& m) const {
        std::size_t h = m.rows() * 131 + m.cols();
        for (const auto& e : m.data()) h = h * 1000003u ^ e.hash();
        return h;
    }
};

// Linear subspace of K^n stored as a canonical reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<CycloVector>& vectors);
    static Subspace whole(std::size_t ambient);
    // Solutions of the homogeneous system with the given rows.
    static Subspace kernel(const CycloMatrix& m);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const CycloMatrix& basis() const { return basis_; }
    std::vector<CycloVector> vectors() const;

    bool contains(const CycloVector& v) const;
    bool contains(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace join(const Subspace& o) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    std::size_t hash() const { return CycloMatrixHash{}(basis_) ^ n_; }

private:
    std::size_t n_ = 0;
    CycloMatrix basis_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

}  // namespace reflecta
