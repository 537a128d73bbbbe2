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

#include "coh/eig.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "coh/errors.h"

namespace coh {

namespace {

constexpr int kMaxSweeps = 64;

void check_input(const ComplexMatrix &m, double hermitian_tol) {
    if (!m.is_square()) {
        throw ShapeError("hermitian_eig: non-square matrix");
    }
    if (!is_hermitian(m, hermitian_tol)) {
        throw NotHermitian("hermitian_eig: input is not Hermitian within " + std::to_string(hermitian_tol));
    }
}

ComplexMatrix symmetrized(const ComplexMatrix &m) {
    ComplexMatrix a = m;
    const std::size_t d = m.rows();
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

double off_diagonal_sq(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            s += std::norm(a(i, j));
        }
    }
    return s;
}

// Diagonalizes `a` in place. When `v` is non-null it accumulates the rotations (v ← v G).
void jacobi(ComplexMatrix &a, ComplexMatrix *v) {
    const std::size_t d = a.rows();
    const double scale_sq = a.frobenius_norm() * a.frobenius_norm();
    const double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = off_diagonal_sq(a);
        if (off == 0.0 || off <= eps * eps * scale_sq * 1e-2) {
            return;
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Negligible pivot after the first sweeps.
                const double g = 100.0 * r;
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * r);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex w = std::conj(apq) / r;  // e^{-iφ}
                const Complex sw = s * w;
                const Complex cw = c * w;
                // a ← a G
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - sw * akq;
                    a(k, q) = s * akp + cw * akq;
                }
                // a ← G† a
                const Complex sw_c = std::conj(sw);
                const Complex cw_c = std::conj(cw);
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - sw_c * aqk;
                    a(q, k) = s * apk + cw_c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
                if (v != nullptr) {
                    for (std::size_t k = 0; k < d; ++k) {
                        const Complex vkp = (*v)(k, p);
                        const Complex vkq = (*v)(k, q);
                        (*v)(k, p) = c * vkp - sw * vkq;
                        (*v)(k, q) = s * vkp + cw * vkq;
                    }
                }
            }
        }
    }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix &m, double hermitian_tol) {
    check_input(m, hermitian_tol);
    const std::size_t d = m.rows();
    ComplexMatrix a = symmetrized(m);
    ComplexMatrix v = ComplexMatrix::identity(d);
    jacobi(a, &v);

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(d);
    out.eigenvectors = ComplexMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < d; ++r) {
            out.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double hermitian_tol) {
    check_input(m, hermitian_tol);
    ComplexMatrix a = symmetrized(m);
    jacobi(a, nullptr);
    std::vector<double> out(m.rows());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a(k, k).real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

double trace_norm(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw ShapeError("trace_norm: non-square matrix");
    }
    if (m.rows() == 0) {
        return 0.0;
    }
    const double scale = std::max(m.max_abs(), 1e-300);
    double total = 0;
    if (is_hermitian(m, 1e-13 * scale)) {
        for (double lambda : hermitian_eigenvalues(m, 1e-13 * scale)) {
            total += std::abs(lambda);
        }
        return total;
    }
    const ComplexMatrix gram = m.adjoint() * m;
    for (double lambda : hermitian_eigenvalues(gram, 1e-10 * std::max(gram.max_abs(), 1e-300))) {
        total += std::sqrt(std::max(lambda, 0.0));
    }
    return total;
}

}  // namespace coh
