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

// The one-parameter family Delta_eps:
//
//   b_{11} = (eps, 0, 0)   b_{12} = (0, 0, eps)   b_{13} = (0, eps, 0)
//   b_{22} = (0, eps, 0)   b_{23} = (eps, 0, 0)   b_{33} = (0, 0, eps)
//
// with b_{ij,k} = b_{ji,k}. Thresholds:
//   |eps| <= 1/(3 sqrt 3)  completely positive
//   |eps| <= 1/3           positive (a q.q.o.)
//   |eps| <= 1/sqrt 3      the quadratic map preserves the state space

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>

#include "qqo/errors.hpp"
#include "qqo/hermitian_eigen.hpp"
#include "qqo/pauli_algebra.hpp"
#include "qqo/qqo_core.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

inline const double kCpThreshold = 1.0 / (3.0 * std::numbers::sqrt3);
inline constexpr double kPositivityThreshold = 1.0 / 3.0;
inline constexpr double kStatePreservingThreshold = 1.0 / std::numbers::sqrt3;

/// Classification band of a parameter value.
enum class EpsilonBand { CompletelyPositive, Positive, StatePreserving, Invalid };

inline std::string to_string(EpsilonBand b) {
    switch (b) {
        case EpsilonBand::CompletelyPositive:
            return "completely_positive";
        case EpsilonBand::Positive:
            return "positive";
        case EpsilonBand::StatePreserving:
            return "state_preserving";
        case EpsilonBand::Invalid:
            return "invalid";
    }
    return "invalid";
}

class EpsilonParam {
   public:
    EpsilonParam() = default;
    explicit EpsilonParam(double eps) : eps_(eps) {
        if (!std::isfinite(eps)) {
            throw DomainError("epsilon must be finite");
        }
    }
    double value() const {
        return eps_;
    }
    EpsilonBand band() const {
        const double a = std::abs(eps_);
        if (a <= kCpThreshold) {
            return EpsilonBand::CompletelyPositive;
        }
        if (a <= kPositivityThreshold) {
            return EpsilonBand::Positive;
        }
        if (a <= kStatePreservingThreshold) {
            return EpsilonBand::StatePreserving;
        }
        return EpsilonBand::Invalid;
    }

   private:
    double eps_ = 0.0;
};

inline CoeffTensor build_coeff_tensor(EpsilonParam e) {
    const double eps = e.value();
    CoeffTensor t;
    auto set = [&](std::size_t m, std::size_t l, RVec3 v) {
        for (std::size_t k = 0; k < 3; k++) {
            t.at(m, l, k) = v[k];
            t.at(l, m, k) = v[k];
        }
    };
    set(0, 0, {eps, 0, 0});
    set(0, 1, {0, 0, eps});
    set(0, 2, {0, eps, 0});
    set(1, 1, {0, eps, 0});
    set(1, 2, {eps, 0, 0});
    set(2, 2, {0, 0, eps});
    return t;
}

/// Direct expansion of Delta_eps(x), term by term.
inline Mat4 delta_eps_apply(EpsilonParam e, const PauliCoeffs &x) {
    const double eps = e.value();
    const auto &pp = pauli_products();
    const cplx w1 = x.w[0], w2 = x.w[1], w3 = x.w[2];
    Mat4 out = x.w0 * Mat4::identity();
    out += (eps * w1) * pp[0][0];
    out += (eps * w3) * pp[0][1];
    out += (eps * w2) * pp[0][2];
    out += (eps * w3) * pp[1][0];
    out += (eps * w2) * pp[1][1];
    out += (eps * w1) * pp[1][2];
    out += (eps * w2) * pp[2][0];
    out += (eps * w1) * pp[2][1];
    out += (eps * w3) * pp[2][2];
    return out;
}

namespace detail {

inline RVec3 require_real(const CVec3 &w) {
    if (w[0].imag() != 0.0 || w[1].imag() != 0.0 || w[2].imag() != 0.0) {
        throw NonRealInput("expected a real 3-vector");
    }
    return {w[0].real(), w[1].real(), w[2].real()};
}

}  // namespace detail

/// The 4x4 matrix B(w) with Delta_eps(1 + w sigma) = 1 + eps B(w), written out
/// explicitly for real w.
inline Mat4 b_matrix(const RVec3 &w) {
    const double a = w[0], b = w[1], c = w[2];
    const cplx i = kI;
    Mat4 m;
    m.data = {c,         b - i * a,  b - i * a,  a - 2.0 * i * c - b,  //
              b + i * a, -c,         a + b,      -b + i * a,           //
              b + i * a, a + b,      -c,         -b + i * a,           //
              a + 2.0 * i * c - b, -b - i * a, -b - i * a, c};
    return m;
}

inline Mat4 b_matrix(const CVec3 &w) {
    return b_matrix(detail::require_real(w));
}

struct SpectrumB {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;

    std::array<double, 4> as_array() const {
        return {lambda1, lambda2, lambda3, lambda4};
    }
};

/// lambda_{1,2} = t ± 2 sqrt(w1^2 + w2^2 + w3^2 - w1 w2 - w1 w3 - w2 w3), lambda_3 = lambda_4 = -t,
/// with t = w1 + w2 + w3.
inline SpectrumB spectrum_closed_form(const RVec3 &w) {
    const double t = w[0] + w[1] + w[2];
    const double rad = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] - w[0] * w[1] - w[0] * w[2] - w[1] * w[2];
    const double root = 2.0 * std::sqrt(std::max(0.0, rad));
    return {t + root, t - root, -t, -t};
}

inline SpectrumB spectrum_closed_form(const CVec3 &w) {
    return spectrum_closed_form(detail::require_real(w));
}

/// Smallest of 1 + eps lambda_k(w).
inline double closed_form_min_eigenvalue(double eps, const RVec3 &w) {
    const auto l = spectrum_closed_form(w).as_array();
    double m = 1.0 + eps * l[0];
    for (double x : l) {
        m = std::min(m, 1.0 + eps * x);
    }
    return m;
}

/// Positivity of Delta_eps: minimizes 1 + eps lambda_k(w) over the unit ball
/// through the closed-form spectrum. The spectrum is homogeneous in w, so the
/// minimum is min(1, minimum over the sphere).
inline PositivityReport positivity_check(EpsilonParam e, std::size_t samples = kDefaultSamples,
                                         std::uint64_t seed = 0) {
    const double eps = e.value();
    auto objective = [eps](const RVec3 &w) { return -closed_form_min_eigenvalue(eps, w); };
    const SpherePoint worst = maximize_on_sphere(objective, samples, seed);
    PositivityReport r;
    r.margin = std::min(1.0, -worst.value);
    r.worst_w = worst.x;
    r.is_positive = r.margin >= -kPositivityTol;
    return r;
}

/// 2 Delta_eps^ = [2 Delta_eps(e_ij)] built from delta_eps_apply on matrix units.
inline Mat8 choi_matrix(EpsilonParam e) {
    Mat8 m = choi_blocks([&](const PauliCoeffs &x) { return delta_eps_apply(e, x); });
    m *= 2.0;
    return m;
}

inline CpReport cp_check(EpsilonParam e) {
    const double m = min_eigenvalue_hermitian(choi_matrix(e));
    return {m >= -kPositivityTol, m};
}

/// Closed-form A, B, C, D for Delta_eps at f = (1, 0, 0). The ks2 condition
/// there reads sqrt(A + B + C) <= D.
inline std::array<double, 4> ks_abcd_closed_form(EpsilonParam e, const CVec3 &w) {
    const double eps = e.value();
    const cplx w1 = w[0], w2 = w[1], w3 = w[2];
    const cplx v1 = std::conj(w1), v2 = std::conj(w2), v3 = std::conj(w3);
    const cplx i = kI;
    const double e2 = eps * eps;
    const double a = std::norm(eps * (v2 * w3 - v3 * w2) -
                               i * e2 * (2.0 * v2 * w3 - 2.0 * std::norm(w1) - v2 * w1 + v1 * w2 - v1 * w3 + v3 * w1));
    const double b = std::norm(eps * (v1 * w2 - v2 * w1) -
                               i * e2 * (2.0 * v1 * w2 - 2.0 * std::norm(w3) - v1 * w3 + v3 * w1 - v3 * w2 + v2 * w3));
    const double c = std::norm(eps * (v3 * w1 - v1 * w3) -
                               i * e2 * (2.0 * v3 * w1 - 2.0 * std::norm(w2) - v3 * w2 + v2 * w3 - v2 * w1 + v1 * w2));
    const cplx d = (1.0 - 3.0 * e2) * (std::norm(w1) + std::norm(w2) + std::norm(w3)) -
                   i * e2 * (v3 * w2 - v2 * w3 + v2 * w1 - v1 * w2 + v1 * w3 - v3 * w1);
    return {a, b, c, d.real()};
}

}  // namespace qqo
