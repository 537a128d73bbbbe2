// Copyright 2026 The cohkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coh/matrix.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "coh/errors.h"
#include "coh/tolerances.h"

namespace coh {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(
            std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw ShapeError(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries for a " + std::to_string(rows) + "x" +
            std::to_string(cols) + " matrix");
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ShapeError("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw ShapeError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
    return ComplexMatrix(v.size(), 1, ComplexVector(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
    ComplexMatrix m(dim, dim);
    m(i, j) = 1.0;
    return m;
}

ComplexVector ComplexMatrix::col(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw ShapeError("trace of a non-square matrix");
    }
    Complex t = 0;
    for (std::size_t k = 0; k < rows_; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError(
            "matrix product: inner dimensions " + std::to_string(a.cols()) + " and " + std::to_string(b.rows()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex x = a(r, k);
            if (x == Complex{}) {
                continue;
            }
            const auto brow = b.row(k);
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += x * brow[c];
            }
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw ShapeError("matrix-vector product: dimension mismatch");
    }
    ComplexVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto arow = a.row(r);
        Complex s = 0;
        for (std::size_t c = 0; c < v.size(); ++c) {
            s += arow[c] * v[c];
        }
        out[r] = s;
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m) {
    const auto flags = out.flags();
    out << std::setprecision(6);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c == 0 ? "" : ", ") << m(r, c);
        }
        out << (r + 1 == m.rows() ? "]" : "\n");
    }
    out.flags(flags);
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDimension || cols > kMaxDimension) {
        throw DimensionLimit(
            "kron: result " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds " +
            std::to_string(kMaxDimension));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex x = a(ar, ac);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() * b.size() > kMaxDimension) {
        throw DimensionLimit("kron: vector length exceeds " + std::to_string(kMaxDimension));
    }
    ComplexVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        m = std::max(m, std::abs(ea[k] - eb[k]));
    }
    return m;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    const std::size_t d = m.rows();
    // (m†m)_{ij} = Σ_k conj(m_ki) m_kj
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Complex s = 0;
            for (std::size_t k = 0; k < d; ++k) {
                s += std::conj(m(k, i)) * m(k, j);
            }
            if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    require_same_shape(a, b, "equal_up_to_phase");
    if (!a.is_square() || a.rows() == 0) {
        return false;
    }
    Complex s = 0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        s += std::conj(ea[k]) * eb[k];
    }
    return std::abs(s) / static_cast<double>(a.rows()) >= 1.0 - tol;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ShapeError("inner product: length mismatch");
    }
    Complex s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double norm(std::span<const Complex> v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

}  // namespace coh
