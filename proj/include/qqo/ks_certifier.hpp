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

// Kadison-Schwarz certification for unital *-preserving maps of the form
// Delta(w0 + w sigma) = w0 1⊗1 + w Delta(sigma).
//
// For x = w sigma the defect Delta(x*x) - Delta(x)*Delta(x) equals
//
//   |w|^2 1⊗1 - i [w, conj(w)] Delta(sigma) - (conj(w) Delta(sigma)) (w Delta(sigma)),
//
// and Delta is KS iff this is positive for every unit w in C^3. Note the order
// of the last product: Delta(x)* = conj(w) Delta(sigma) stands on the left.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qqo/hermitian_eigen.hpp"
#include "qqo/pauli_algebra.hpp"
#include "qqo/qqo_core.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

inline constexpr std::size_t kDefaultKsSamples = 50000;
inline constexpr double kDefaultKsTol = 1e-8;

/// v Delta(sigma) = v_1 Delta(sigma_1) + v_2 Delta(sigma_2) + v_3 Delta(sigma_3).
inline Mat4 weighted_delta_sigma(const std::array<Mat4, 3> &ds, const CVec3 &v) {
    Mat4 out;
    for (std::size_t k = 0; k < 3; k++) {
        if (v[k] != cplx{}) {
            out += v[k] * ds[k];
        }
    }
    return out;
}

inline Mat4 ks_defect(const std::array<Mat4, 3> &ds, const CVec3 &w) {
    const CVec3 wb = conj(w);
    const CVec3 c = cross_product(w, wb);
    const double n2 = std::norm(w[0]) + std::norm(w[1]) + std::norm(w[2]);
    Mat4 out = n2 * Mat4::identity();
    out -= kI * weighted_delta_sigma(ds, c);
    out -= weighted_delta_sigma(ds, wb) * weighted_delta_sigma(ds, w);
    return out;
}

inline Mat4 ks_defect(const CoeffTensor &b, const CVec3 &w) {
    return ks_defect(delta_sigma(b), w);
}

struct KSWitness {
    CVec3 w{};
    double min_eig = 0.0;
    std::array<double, 4> params{};
};

/// Unit vector in C^3 modulo global phase: magnitudes on the positive octant of
/// the real sphere (theta, phi in [0, pi/2]), first component real, relative
/// phases alpha and beta on the second and third.
inline CVec3 unit_w_from_params(const std::array<double, 4> &t) {
    const double st = std::sin(t[0]);
    const RVec3 r{st * std::cos(t[1]), st * std::sin(t[1]), std::cos(t[0])};
    return {r[0], r[1] * std::polar(1.0, t[2]), r[2] * std::polar(1.0, t[3])};
}

/// Searches unit w for min_eig(ks_defect) < -tol. Returns the most negative
/// witness found, or nothing. Absence of a witness is not a proof of KS.
inline std::optional<KSWitness> ks_global_check(const CoeffTensor &b, std::size_t samples = kDefaultKsSamples,
                                                std::uint64_t seed = 0, double tol = kDefaultKsTol) {
    samples = std::max<std::size_t>(samples, 1);
    const auto ds = delta_sigma(b);
    auto objective = [&](const std::array<double, 4> &t) {
        return min_eigenvalue_hermitian(ks_defect(ds, unit_w_from_params(t)));
    };

    constexpr double half_pi = std::numbers::pi / 2;
    constexpr double two_pi = 2 * std::numbers::pi;
    HaltonSequence<4> halton(seed);
    std::vector<std::array<double, 4>> params(samples);
    std::vector<double> vals(samples);
    for (std::size_t s = 0; s < samples; s++) {
        const auto h = halton(s);
        params[s] = {half_pi * h[0], half_pi * h[1], two_pi * h[2], two_pi * h[3]};
        vals[s] = objective(params[s]);
    }

    KSWitness best{unit_w_from_params(params[0]), vals[0], params[0]};
    auto consider = [&](const std::array<double, 4> &t, double v) {
        if (v < best.min_eig || (v == best.min_eig && t < best.params)) {
            best = {unit_w_from_params(t), v, t};
        }
    };
    for (std::size_t i : best_indices(vals, kRefineStarts, false)) {
        consider(params[i], vals[i]);
        const auto r = nelder_mead<4>(objective, params[i], 0.1, 200);
        consider(r.x, r.value);
    }
    if (best.min_eig < -tol) {
        return best;
    }
    return std::nullopt;
}

/// Intermediate quantities of the necessary KS conditions, with the scalar
/// product <u, v> = sum u_i conj(v_i) used throughout:
///   x_m = (<b_m1, w>, <b_m2, w>, <b_m3, w>)
///   alpha_ml = <x_m, x_l> - <x_l, x_m>
///   gamma_ml = [x_m, conj(x_l)] + [conj(x_m), x_l]
///   q_m = <beta(f)_m, [w, conj(w)]>
struct KSAuxiliaries {
    std::array<CVec3, 3> x{};
    std::array<std::array<cplx, 3>, 3> alpha{};
    std::array<std::array<CVec3, 3>, 3> gamma{};
    CVec3 q{};
};

/// Cyclic index map pi(1)=2, pi(2)=3, pi(3)=1, pi(4)=2, in 0-based form.
inline constexpr std::array<std::size_t, 4> kCyclicPi{1, 2, 0, 1};

inline KSAuxiliaries ks_auxiliaries(const CoeffTensor &b, const RVec3 &f, const CVec3 &w) {
    KSAuxiliaries a;
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t l = 0; l < 3; l++) {
            const CVec3 bml{b.at(m, l, 0), b.at(m, l, 1), b.at(m, l, 2)};
            a.x[m][l] = inner(bml, w);
        }
    }
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t l = 0; l < 3; l++) {
            a.alpha[m][l] = inner(a.x[m], a.x[l]) - inner(a.x[l], a.x[m]);
            const CVec3 g1 = cross_product(a.x[m], conj(a.x[l]));
            const CVec3 g2 = cross_product(conj(a.x[m]), a.x[l]);
            a.gamma[m][l] = {g1[0] + g2[0], g1[1] + g2[1], g1[2] + g2[2]};
        }
    }
    const BetaMatrix beta = beta_matrix(b, f);
    const CVec3 c = cross_product(w, conj(w));
    for (std::size_t m = 0; m < 3; m++) {
        a.q[m] = inner(to_complex(beta[m]), c);
    }
    return a;
}

inline KSAuxiliaries ks_auxiliaries(const CoeffTensor &b, const BlochVector &f, const CVec3 &w) {
    return ks_auxiliaries(b, f.vec(), w);
}

struct KSNecessaryReport {
    double lhs11 = 0.0;
    double rhs11 = 0.0;
    double lhs2 = 0.0;
    double rhs2 = 0.0;
    bool holds11 = true;
    bool holds2 = true;
    /// Squared moduli of the three components of the ks2 vector (A, B, C) and
    /// its right side (D). Populated for f = (1, 0, 0).
    std::optional<std::array<double, 4>> abcd;
    /// Exact reduction: (phi_f ⊗ id)(defect) = s 1 + v sigma must satisfy |v| <= s.
    double reduced_scalar = 0.0;
    double reduced_vector_norm = 0.0;
    bool holds_reduced = true;
};

/// Evaluates both sides of the necessary KS conditions at (f, w):
///
///   ks11: |w|^2 >= i sum_m f_m alpha_{pi(m),pi(m+1)} + sum_m |x_m|^2
///   ks2:  |q - i sum_m f_m gamma_{pi(m),pi(m+1)} + i sum_m [x_m, conj(x_m)]|
///             <= |w|^2 - i sum_m f_m alpha_{pi(m),pi(m+1)} - sum_m |x_m|^2
///
/// The grouping of the bracket term in ks2 is the one whose f = (1,0,0)
/// specialization gives the closed-form A, B, C, D of the epsilon family.
inline KSNecessaryReport ks_necessary_check(const CoeffTensor &b, const BlochVector &f, const CVec3 &w) {
    const KSAuxiliaries a = ks_auxiliaries(b, f, w);
    const double wn2 = std::norm(w[0]) + std::norm(w[1]) + std::norm(w[2]);

    cplx alpha_term{};
    CVec3 gamma_term{};
    CVec3 bracket{};
    double xn2 = 0.0;
    for (std::size_t m = 0; m < 3; m++) {
        const std::size_t r = kCyclicPi[m];
        const std::size_t s = kCyclicPi[m + 1];
        alpha_term += f[m] * a.alpha[r][s];
        const CVec3 xx = cross_product(a.x[m], conj(a.x[m]));
        for (std::size_t k = 0; k < 3; k++) {
            gamma_term[k] += f[m] * a.gamma[r][s][k];
            bracket[k] += xx[k];
        }
        xn2 += std::norm(a.x[m][0]) + std::norm(a.x[m][1]) + std::norm(a.x[m][2]);
    }
    // alpha is purely imaginary, so i * alpha_term is real.
    const double i_alpha = (kI * alpha_term).real();

    CVec3 v{};
    for (std::size_t k = 0; k < 3; k++) {
        v[k] = a.q[k] - kI * gamma_term[k] + kI * bracket[k];
    }

    KSNecessaryReport r;
    r.lhs11 = wn2;
    r.rhs11 = i_alpha + xn2;
    r.holds11 = r.lhs11 >= r.rhs11 - 1e-12;
    r.lhs2 = norm(v);
    r.rhs2 = wn2 - i_alpha - xn2;
    r.holds2 = r.lhs2 <= r.rhs2 + 1e-12;
    if (f[0] == 1.0 && f[1] == 0.0 && f[2] == 0.0) {
        r.abcd = std::array<double, 4>{std::norm(v[0]), std::norm(v[1]), std::norm(v[2]), r.rhs2};
    }

    const PauliCoeffs red = pauli_decompose(apply_state_first(f, ks_defect(b, w)));
    r.reduced_scalar = red.w0.real();
    r.reduced_vector_norm = norm(red.w);
    r.holds_reduced = r.reduced_vector_norm <= r.reduced_scalar + 1e-12;
    return r;
}

}  // namespace qqo
