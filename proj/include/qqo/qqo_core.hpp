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

// Quantum quadratic operators M_2(C) -> M_2(C) ⊗ M_2(C) with the normalized
// trace as Haar state, represented by their real coefficient tensor:
//
//   Delta(w0 + w sigma) = w0 1⊗1 + sum_{m,l} (sum_i b_{ml,i} w_i) sigma_m ⊗ sigma_l.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

#include "qqo/errors.hpp"
#include "qqo/hermitian_eigen.hpp"
#include "qqo/pauli_algebra.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

/// Real 3x3x3 tensor; at(m, l, k) is b_{ml,k} with 0-based indices (the usual 1-based index minus one).
class CoeffTensor {
   public:
    using Storage = std::array<std::array<std::array<double, 3>, 3>, 3>;

    CoeffTensor() = default;
    explicit CoeffTensor(const Storage &b) : b_(b) {
        for (const auto &plane : b_) {
            for (const auto &row : plane) {
                for (double x : row) {
                    if (!std::isfinite(x)) {
                        throw InputError("coefficient tensor has non-finite entries");
                    }
                }
            }
        }
    }

    double at(std::size_t m, std::size_t l, std::size_t k) const {
        return b_[m][l][k];
    }
    double &at(std::size_t m, std::size_t l, std::size_t k) {
        return b_[m][l][k];
    }
    const Storage &data() const {
        return b_;
    }

    /// b_{ml,k} = b_{lm,k} for all m, l, k.
    bool is_symmetric() const {
        for (std::size_t m = 0; m < 3; m++) {
            for (std::size_t l = 0; l < 3; l++) {
                for (std::size_t k = 0; k < 3; k++) {
                    if (b_[m][l][k] != b_[l][m][k]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    friend CoeffTensor operator*(double s, CoeffTensor t) {
        for (auto &plane : t.b_) {
            for (auto &row : plane) {
                for (double &x : row) {
                    x *= s;
                }
            }
        }
        return t;
    }
    bool operator==(const CoeffTensor &) const = default;

   private:
    Storage b_{};
};

/// Coefficient of sigma_m ⊗ sigma_l in Delta(w sigma): <b_ml, conj(w)> = sum_i b_{ml,i} w_i.
inline cplx pair_coefficient(const CoeffTensor &b, std::size_t m, std::size_t l, const CVec3 &w) {
    return b.at(m, l, 0) * w[0] + b.at(m, l, 1) * w[1] + b.at(m, l, 2) * w[2];
}

inline Mat4 delta_apply(const CoeffTensor &b, const PauliCoeffs &x) {
    Mat4 out = x.w0 * Mat4::identity();
    const auto &pp = pauli_products();
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t l = 0; l < 3; l++) {
            const cplx c = pair_coefficient(b, m, l, x.w);
            if (c != cplx{}) {
                out += c * pp[m][l];
            }
        }
    }
    return out;
}

inline Mat4 delta_apply(const CoeffTensor &b, const Mat2 &x) {
    return delta_apply(b, pauli_decompose(x));
}

/// (Delta(sigma_1), Delta(sigma_2), Delta(sigma_3)).
inline std::array<Mat4, 3> delta_sigma(const CoeffTensor &b) {
    std::array<Mat4, 3> out;
    for (std::size_t k = 0; k < 3; k++) {
        PauliCoeffs e;
        e.w[k] = 1.0;
        out[k] = delta_apply(b, e);
    }
    return out;
}

/// beta(f)_{ij} = sum_k b_{ki,j} f_k.
using BetaMatrix = std::array<RVec3, 3>;

inline BetaMatrix beta_matrix(const CoeffTensor &b, const RVec3 &f) {
    BetaMatrix beta{};
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) {
            beta[i][j] = b.at(0, i, j) * f[0] + b.at(1, i, j) * f[1] + b.at(2, i, j) * f[2];
        }
    }
    return beta;
}

inline BetaMatrix beta_matrix(const CoeffTensor &b, const BlochVector &f) {
    return beta_matrix(b, f.vec());
}

/// Largest singular value of a real 3x3 matrix.
inline double spectral_norm(const BetaMatrix &a) {
    Matrix<3> ata;
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; k++) {
                s += a[k][i] * a[k][j];
            }
            ata(i, j) = s;
        }
    }
    return std::sqrt(std::max(0.0, max_eigenvalue_hermitian(ata)));
}

/// Sampled lower bound on sup_{f in S} ||beta(f)||. By homogeneity the sup is
/// attained on the unit sphere, which is what gets sampled and refined.
inline double b_norm_sup(const CoeffTensor &b, std::size_t samples = kDefaultSamples, std::uint64_t seed = 0) {
    auto objective = [&](const RVec3 &f) { return spectral_norm(beta_matrix(b, f)); };
    return maximize_on_sphere(objective, samples, seed).value;
}

/// Bloch vector of Delta*(phi_f ⊗ phi_p): component k is sum_{ij} b_{ij,k} f_i p_j.
///
/// Off-diagonal pairs are accumulated as b_{ij,k}(f_i p_j) + b_{ji,k}(f_j p_i), so a
/// symmetric tensor gives bit-identical results for (f, p) and (p, f).
inline RVec3 dual_pair_apply_raw(const CoeffTensor &b, const RVec3 &f, const RVec3 &p) {
    RVec3 out{};
    for (std::size_t k = 0; k < 3; k++) {
        double s = 0.0;
        for (std::size_t i = 0; i < 3; i++) {
            s += b.at(i, i, k) * (f[i] * p[i]);
            for (std::size_t j = i + 1; j < 3; j++) {
                s += b.at(i, j, k) * (f[i] * p[j]) + b.at(j, i, k) * (f[j] * p[i]);
            }
        }
        out[k] = s;
    }
    return out;
}

inline RVec3 dual_pair_apply(const CoeffTensor &b, const BlochVector &f, const BlochVector &p) {
    return dual_pair_apply_raw(b, f.vec(), p.vec());
}

struct StatePreservationReport {
    double max_norm = 0.0;
    BlochVector f;
    BlochVector p;
    bool passes = true;
    double margin = 1.0;  // 1 - max_norm
};

namespace detail {

inline RVec3 sphere_from_unit_square(double u, double v) {
    const double z = 2.0 * u - 1.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * v;
    return {r * std::cos(phi), r * std::sin(phi), z};
}

/// Alternating maximization of T(u, f, p) = sum b_{ij,k} u_k f_i p_j over unit
/// vectors; each half-step is an exact maximization, so ||dual(f,p)|| never drops.
inline std::pair<RVec3, RVec3> refine_pair(const CoeffTensor &b, RVec3 f, RVec3 p, int iterations = 300) {
    double prev = norm(dual_pair_apply_raw(b, f, p));
    for (int it = 0; it < iterations; it++) {
        const RVec3 v = dual_pair_apply_raw(b, f, p);
        const double nv = norm(v);
        if (nv == 0.0) {
            break;
        }
        const RVec3 u{v[0] / nv, v[1] / nv, v[2] / nv};
        RVec3 gf{}, gp{};
        for (std::size_t i = 0; i < 3; i++) {
            for (std::size_t j = 0; j < 3; j++) {
                for (std::size_t k = 0; k < 3; k++) {
                    gf[i] += b.at(i, j, k) * p[j] * u[k];
                }
            }
        }
        if (norm(gf) > 0.0) {
            f = normalized(gf);
        }
        for (std::size_t i = 0; i < 3; i++) {
            for (std::size_t j = 0; j < 3; j++) {
                for (std::size_t k = 0; k < 3; k++) {
                    gp[j] += b.at(i, j, k) * f[i] * u[k];
                }
            }
        }
        if (norm(gp) > 0.0) {
            p = normalized(gp);
        }
        const double cur = norm(dual_pair_apply_raw(b, f, p));
        if (cur - prev <= 1e-16 * std::max(1.0, cur)) {
            break;
        }
        prev = cur;
    }
    return {f, p};
}

}  // namespace detail

/// Checks sum_k |sum_{ij} b_{ij,k} f_i p_j|^2 <= 1 over S x S by sampling pairs
/// of sphere points (the map is bilinear, so the max sits on the spheres).
/// Passes iff the max is <= 1 + 1e-9.
inline StatePreservationReport state_preservation_check(const CoeffTensor &b,
                                                        std::size_t samples = kDefaultSamples,
                                                        std::uint64_t seed = 0) {
    samples = std::max<std::size_t>(samples, 1);
    HaltonSequence<4> halton(seed);
    std::vector<std::pair<RVec3, RVec3>> pairs(samples);
    std::vector<double> vals(samples);
    for (std::size_t s = 0; s < samples; s++) {
        const auto h = halton(s);
        pairs[s] = {detail::sphere_from_unit_square(h[0], h[1]), detail::sphere_from_unit_square(h[2], h[3])};
        vals[s] = norm(dual_pair_apply_raw(b, pairs[s].first, pairs[s].second));
    }
    RVec3 bf = pairs[0].first, bp = pairs[0].second;
    double best = vals[0];
    for (std::size_t i : best_indices(vals, kRefineStarts, true)) {
        auto [f, p] = detail::refine_pair(b, pairs[i].first, pairs[i].second);
        const double v = norm(dual_pair_apply_raw(b, f, p));
        if (vals[i] > best) {
            best = vals[i];
            bf = pairs[i].first;
            bp = pairs[i].second;
        }
        if (v > best) {
            best = v;
            bf = f;
            bp = p;
        }
    }
    StatePreservationReport r;
    r.max_norm = best;
    r.f = BlochVector(normalized(bf));
    r.p = BlochVector(normalized(bp));
    r.passes = best <= 1.0 + kBallTol;
    r.margin = 1.0 - best;
    return r;
}

/// Structural check of the Haar-state identity (tau ⊗ id)Delta(x) = (id ⊗ tau)Delta(x) = tau(x) 1
/// on the basis {1, sigma_1, sigma_2, sigma_3}, entrywise to 1e-13.
inline bool haar_unital_check(const CoeffTensor &b) {
    constexpr double tol = 1e-13;
    for (std::size_t k = 0; k < 4; k++) {
        PauliCoeffs x;
        if (k == 0) {
            x.w0 = 1.0;
        } else {
            x.w[k - 1] = 1.0;
        }
        const Mat4 d = delta_apply(b, x);
        const Mat2 expected = normalized_trace(pauli_compose(x)) * Mat2::identity();
        if (max_abs_diff(trace_out_first(d), expected) > tol || max_abs_diff(trace_out_second(d), expected) > tol) {
            return false;
        }
    }
    return true;
}

/// Choi-type block matrix [Delta(e_ij)]_{i,j=1,2} assembled from delta_apply.
inline Mat8 choi_blocks(const std::function<Mat4(const PauliCoeffs &)> &delta) {
    Mat8 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            Mat2 e;
            e(i, j) = 1.0;
            const Mat4 block = delta(pauli_decompose(e));
            for (std::size_t r = 0; r < 4; r++) {
                for (std::size_t c = 0; c < 4; c++) {
                    out(4 * i + r, 4 * j + c) = block(r, c);
                }
            }
        }
    }
    return out;
}

inline Mat8 choi_matrix(const CoeffTensor &b) {
    return choi_blocks([&](const PauliCoeffs &x) { return delta_apply(b, x); });
}

struct CpReport {
    bool is_cp = true;
    double min_choi_eig = 0.0;
};

/// Complete positivity through the Choi matrix: CP iff its smallest eigenvalue >= -1e-10.
inline CpReport cp_check(const CoeffTensor &b) {
    const double m = min_eigenvalue_hermitian(choi_matrix(b));
    return {m >= -kPositivityTol, m};
}

struct PositivityReport {
    bool is_positive = true;
    RVec3 worst_w{};
    double margin = 1.0;  // min over the unit ball of the smallest eigenvalue of Delta(1 + w sigma)
};

/// Sampled positivity of a general tensor: min over unit real w of
/// lambda_min(Delta(1 + w sigma)). Delta(1 + h w sigma) is affine in h, so the
/// minimum over the ball is min(1, minimum over the sphere).
inline PositivityReport sampled_positivity(const CoeffTensor &b, std::size_t samples = kDefaultSamples,
                                           std::uint64_t seed = 0) {
    auto objective = [&](const RVec3 &w) {
        return -min_eigenvalue_hermitian(delta_apply(b, PauliCoeffs{1.0, to_complex(w)}));
    };
    const SpherePoint worst = maximize_on_sphere(objective, samples, seed);
    PositivityReport r;
    r.margin = std::min(1.0, -worst.value);
    r.worst_w = worst.x;
    r.is_positive = r.margin >= -kPositivityTol;
    return r;
}

}  // namespace qqo
