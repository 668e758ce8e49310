// Copyright 2026 The qqo Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qqo/errors.hpp"
#include "qqo/matrix.hpp"

namespace qqo {

/// Eigendecomposition of a hermitian matrix. Eigenvalues ascend; column k of
/// `vectors` is the unit eigenvector for `values[k]`.
template <std::size_t N>
struct HermitianEigen {
    std::array<double, N> values{};
    Matrix<N> vectors;
    int sweeps = 0;
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-14;

template <std::size_t N>
double off_diagonal_norm(const Matrix<N> &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

template <std::size_t N>
void require_hermitian(const Matrix<N> &m) {
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = i; j < N; j++) {
            double d = std::abs(m(i, j) - std::conj(m(j, i)));
            if (!(d <= kHermitianTol)) {
                std::stringstream ss;
                ss << "matrix is not hermitian: |m(" << i << "," << j << ") - conj(m(" << j << "," << i
                   << "))| = " << d;
                throw NonHermitianInput(ss.str());
            }
        }
    }
}

}  // namespace detail

/// Cyclic complex Jacobi diagonalization.
///
/// Each rotation first removes the phase of a(p,q) with a diagonal unitary and
/// then applies the real symmetric Jacobi rotation, so the pair is annihilated
/// exactly. Iteration stops once the off-diagonal Frobenius norm drops below
/// 1e-14 times the Frobenius norm of the input (an upper bound on the spectral
/// radius), or after 100 sweeps.
template <std::size_t N>
HermitianEigen<N> eigh(const Matrix<N> &m) {
    detail::require_hermitian(m);

    Matrix<N> a = m;
    // Symmetrize so that rounding in the input cannot leak into the result.
    for (std::size_t i = 0; i < N; i++) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < N; j++) {
            cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Matrix<N> v = Matrix<N>::identity();
    const double scale = frobenius_norm(a);

    int sweep = 0;
    if (scale > 0.0) {
        for (; sweep < detail::kMaxJacobiSweeps; sweep++) {
            if (detail::off_diagonal_norm(a) <= detail::kJacobiRelTol * scale) {
                break;
            }
            for (std::size_t p = 0; p + 1 < N; p++) {
                for (std::size_t q = p + 1; q < N; q++) {
                    const double r = std::abs(a(p, q));
                    if (r == 0.0) {
                        continue;
                    }
                    const cplx e = a(p, q) / r;
                    const cplx ec = std::conj(e);
                    const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) {
                        t = -t;
                    }
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;

                    // a <- a J, v <- v J with J = [[c, s], [-s conj(e), c conj(e)]] on (p, q).
                    for (std::size_t k = 0; k < N; k++) {
                        const cplx akp = a(k, p);
                        const cplx akq = a(k, q);
                        a(k, p) = c * akp - s * ec * akq;
                        a(k, q) = s * akp + c * ec * akq;
                        const cplx vkp = v(k, p);
                        const cplx vkq = v(k, q);
                        v(k, p) = c * vkp - s * ec * vkq;
                        v(k, q) = s * vkp + c * ec * vkq;
                    }
                    // a <- J^H a
                    for (std::size_t k = 0; k < N; k++) {
                        const cplx apk = a(p, k);
                        const cplx aqk = a(q, k);
                        a(p, k) = c * apk - s * e * aqk;
                        a(q, k) = s * apk + c * e * aqk;
                    }
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    a(p, p) = a(p, p).real();
                    a(q, q) = a(q, q).real();
                }
            }
        }
    }

    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen<N> out;
    out.sweeps = sweep;
    for (std::size_t k = 0; k < N; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < N; i++) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

template <std::size_t N>
std::array<double, N> eigenvalues_hermitian(const Matrix<N> &m) {
    return eigh(m).values;
}

/// Smallest eigenvalue of a hermitian matrix. Throws NonHermitianInput when
/// the entrywise symmetry check fails at 1e-13.
template <std::size_t N>
double min_eigenvalue_hermitian(const Matrix<N> &m) {
    return eigh(m).values[0];
}

template <std::size_t N>
double max_eigenvalue_hermitian(const Matrix<N> &m) {
    return eigh(m).values[N - 1];
}

}  // namespace qqo
