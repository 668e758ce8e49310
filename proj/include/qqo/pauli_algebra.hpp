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

#include <array>
#include <cmath>
#include <sstream>

#include "qqo/errors.hpp"
#include "qqo/hermitian_eigen.hpp"
#include "qqo/matrix.hpp"

namespace qqo {

/// The Pauli matrices sigma_1, sigma_2, sigma_3. Storage index k holds sigma_{k+1}.
inline const std::array<Mat2, 3> &pauli_matrices() {
    static const std::array<Mat2, 3> sigma = [] {
        std::array<Mat2, 3> s;
        s[0](0, 1) = 1.0;
        s[0](1, 0) = 1.0;
        s[1](0, 1) = -kI;
        s[1](1, 0) = kI;
        s[2](0, 0) = 1.0;
        s[2](1, 1) = -1.0;
        return s;
    }();
    return sigma;
}

/// sigma_{m+1} ⊗ sigma_{l+1} for m, l in {0, 1, 2}.
inline const std::array<std::array<Mat4, 3>, 3> &pauli_products() {
    static const std::array<std::array<Mat4, 3>, 3> table = [] {
        std::array<std::array<Mat4, 3>, 3> t;
        const auto &s = pauli_matrices();
        for (std::size_t m = 0; m < 3; m++) {
            for (std::size_t l = 0; l < 3; l++) {
                t[m][l] = kron(s[m], s[l]);
            }
        }
        return t;
    }();
    return table;
}

/// A 2x2 complex matrix written as w0 * 1 + w1 sigma_1 + w2 sigma_2 + w3 sigma_3.
struct PauliCoeffs {
    cplx w0{};
    CVec3 w{};

    bool is_real() const {
        return w0.imag() == 0.0 && w[0].imag() == 0.0 && w[1].imag() == 0.0 && w[2].imag() == 0.0;
    }
    bool operator==(const PauliCoeffs &) const = default;
};

/// A state of M_2(C), identified with f in the closed unit ball S of R^3.
class BlochVector {
   public:
    BlochVector() = default;
    explicit BlochVector(RVec3 f) : f_(f) {
        for (double x : f_) {
            if (!std::isfinite(x)) {
                throw DomainError("Bloch vector has non-finite components");
            }
        }
        if (qqo::norm(f_) > 1.0 + kBallTol) {
            std::stringstream ss;
            ss << "Bloch vector lies outside the unit ball: |f| = " << qqo::norm(f_);
            throw DomainError(ss.str());
        }
    }
    BlochVector(double f1, double f2, double f3) : BlochVector(RVec3{f1, f2, f3}) {
    }

    const RVec3 &vec() const {
        return f_;
    }
    double operator[](std::size_t i) const {
        return f_[i];
    }
    double norm() const {
        return qqo::norm(f_);
    }

   private:
    RVec3 f_{};
};

inline Mat2 pauli_compose(const PauliCoeffs &c) {
    Mat2 m = c.w0 * Mat2::identity();
    const auto &s = pauli_matrices();
    for (std::size_t i = 0; i < 3; i++) {
        m += c.w[i] * s[i];
    }
    return m;
}

/// w0 = tr(m)/2, w_i = tr(sigma_i m)/2, written out entrywise.
inline PauliCoeffs pauli_decompose(const Mat2 &m) {
    PauliCoeffs c;
    c.w0 = 0.5 * (m(0, 0) + m(1, 1));
    c.w[0] = 0.5 * (m(0, 1) + m(1, 0));
    c.w[1] = 0.5 * kI * (m(0, 1) - m(1, 0));
    c.w[2] = 0.5 * (m(0, 0) - m(1, 1));
    return c;
}

inline Mat4 tensor_product(const Mat2 &a, const Mat2 &b) {
    return kron(a, b);
}

/// Bilinear cross product in C^3 (no conjugation).
inline CVec3 cross_product(const CVec3 &u, const CVec3 &v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// Lemma: a hermitian w0 + w sigma is positive iff |w| <= w0.
inline bool positivity_2x2(const PauliCoeffs &c) {
    if (!c.is_real()) {
        throw NonHermitianInput("positivity_2x2 requires real Pauli coefficients");
    }
    const double w0 = c.w0.real();
    return norm(c.w) <= w0 + kPositivity2x2Tol;
}

/// phi_f(w0 + w sigma) = w0 + <w, f>. f is real, so this is w0 + sum w_i f_i.
inline cplx state_eval(const BlochVector &f, const PauliCoeffs &c) {
    return c.w0 + c.w[0] * f[0] + c.w[1] * f[1] + c.w[2] * f[2];
}

/// Density matrix rho with phi_f(x) = tr(rho x).
inline Mat2 state_density(const BlochVector &f) {
    return pauli_compose(PauliCoeffs{0.5, {0.5 * f[0], 0.5 * f[1], 0.5 * f[2]}});
}

/// Normalized trace tau(x) = tr(x)/2.
inline cplx normalized_trace(const Mat2 &m) {
    return 0.5 * trace(m);
}

/// (tau ⊗ id)(X) for X in M_2 ⊗ M_2.
inline Mat2 trace_out_first(const Mat4 &x) {
    Mat2 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            out(i, j) = 0.5 * (x(i, j) + x(2 + i, 2 + j));
        }
    }
    return out;
}

/// (id ⊗ tau)(X) for X in M_2 ⊗ M_2.
inline Mat2 trace_out_second(const Mat4 &x) {
    Mat2 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            out(i, j) = 0.5 * (x(2 * i, 2 * j) + x(2 * i + 1, 2 * j + 1));
        }
    }
    return out;
}

/// (phi_f ⊗ id)(X): apply the state f to the first tensor factor.
inline Mat2 apply_state_first(const BlochVector &f, const Mat4 &x) {
    const Mat2 rho = state_density(f);
    Mat2 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            cplx s{};
            for (std::size_t a = 0; a < 2; a++) {
                for (std::size_t b = 0; b < 2; b++) {
                    s += rho(b, a) * x(2 * a + i, 2 * b + j);
                }
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace qqo
