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

#ifndef COH_MATRIX_H
#define COH_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace coh {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries. Throws ShapeError on a size mismatch or non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    /// Nested rows, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// Column vector |v⟩.
    static ComplexMatrix column(std::span<const Complex> v);
    /// |a⟩⟨b|.
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);
    /// |i⟩⟨j| in dimension dim.
    static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    bool empty() const {
        return entries_.empty();
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> entries() const {
        return entries_;
    }
    std::span<Complex> mutable_entries() {
        return entries_;
    }
    std::span<const Complex> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    ComplexVector col(std::size_t c) const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest entry magnitude.
    double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ComplexVector entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v);

std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m);

/// Kronecker product a ⊗ b. Throws DimensionLimit beyond kMaxDimension rows or columns.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// ‖a − b‖_max. Throws ShapeError on mismatched shapes.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// True iff ‖m†m − I‖_max ≤ tol. Non-square matrices are never unitary.
bool is_unitary(const ComplexMatrix &m, double tol);
bool is_hermitian(const ComplexMatrix &m, double tol);

/// |tr(a†b)| / d ≥ 1 − tol, i.e. a and b agree up to a global phase.
bool equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

}  // namespace coh

#endif
