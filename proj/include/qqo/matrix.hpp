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
#include <complex>
#include <cstddef>
#include <ostream>

namespace qqo {

using cplx = std::complex<double>;
using RVec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

inline constexpr cplx kI{0.0, 1.0};

/// Tolerances shared by every module. Declared once here.
inline constexpr double kHermitianTol = 1e-13;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kPositivity2x2Tol = 1e-12;
inline constexpr double kBallTol = 1e-9;

/// Dense row-major N x N complex matrix.
template <std::size_t N>
struct Matrix {
    std::array<cplx, N * N> data{};

    static constexpr std::size_t size() {
        return N;
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; i++) {
            m(i, i) = 1.0;
        }
        return m;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data[r * N + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data[r * N + c];
    }

    Matrix &operator+=(const Matrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data[k] += o.data[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data[k] -= o.data[k];
        }
        return *this;
    }
    Matrix &operator*=(cplx s) {
        for (auto &x : data) {
            x *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) {
        return a += b;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        return a -= b;
    }
    friend Matrix operator*(cplx s, Matrix a) {
        return a *= s;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix out;
        for (std::size_t i = 0; i < N; i++) {
            for (std::size_t k = 0; k < N; k++) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < N; j++) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }
    bool operator==(const Matrix &) const = default;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Mat8 = Matrix<8>;

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N> &m) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

template <std::size_t N>
cplx trace(const Matrix<N> &m) {
    cplx t{};
    for (std::size_t i = 0; i < N; i++) {
        t += m(i, i);
    }
    return t;
}

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    double d = 0.0;
    for (std::size_t k = 0; k < N * N; k++) {
        d = std::max(d, std::abs(a.data[k] - b.data[k]));
    }
    return d;
}

template <std::size_t N>
double frobenius_norm(const Matrix<N> &m) {
    double s = 0.0;
    for (const auto &x : m.data) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

template <std::size_t N>
bool is_hermitian(const Matrix<N> &m, double tol = kHermitianTol) {
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = i; j < N; j++) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Kronecker product, block row-major: (a ⊗ b)(iA*M+iB, jA*M+jB) = a(iA,jA) b(iB,jB).
template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N> &a, const Matrix<M> &b) {
    Matrix<N * M> out;
    for (std::size_t ia = 0; ia < N; ia++) {
        for (std::size_t ja = 0; ja < N; ja++) {
            const cplx s = a(ia, ja);
            for (std::size_t ib = 0; ib < M; ib++) {
                for (std::size_t jb = 0; jb < M; jb++) {
                    out(ia * M + ib, ja * M + jb) = s * b(ib, jb);
                }
            }
        }
    }
    return out;
}

template <std::size_t N>
std::ostream &operator<<(std::ostream &out, const Matrix<N> &m) {
    for (std::size_t i = 0; i < N; i++) {
        out << (i == 0 ? "[[" : " [");
        for (std::size_t j = 0; j < N; j++) {
            out << m(i, j) << (j + 1 < N ? ", " : "");
        }
        out << (i + 1 < N ? "]\n" : "]]");
    }
    return out;
}

inline double norm(const RVec3 &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline double norm(const CVec3 &v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

inline CVec3 conj(const CVec3 &v) {
    return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])};
}

inline CVec3 to_complex(const RVec3 &v) {
    return {v[0], v[1], v[2]};
}

/// Scalar product in C^3, conjugate-linear in the second slot: <u,v> = sum u_i conj(v_i).
inline cplx inner(const CVec3 &u, const CVec3 &v) {
    return u[0] * std::conj(v[0]) + u[1] * std::conj(v[1]) + u[2] * std::conj(v[2]);
}

}  // namespace qqo
