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

// Quadratic dynamics V(f)_k = sum_{ij} b_{ij,k} f_i f_j on the Bloch ball and
// its epsilon-family specialization
//
//   V_eps(f) = eps (f1^2 + 2 f2 f3, f2^2 + 2 f1 f3, f3^2 + 2 f1 f2).
//
// rho(f) = |f|^2 is a Lyapunov function: rho(V_eps f) <= 3 eps^2 rho(f).

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "qqo/epsilon_family.hpp"
#include "qqo/errors.hpp"
#include "qqo/pauli_algebra.hpp"
#include "qqo/qqo_core.hpp"
#include "qqo/sampling.hpp"

namespace qqo {

inline constexpr double kDefaultDynamicsTol = 1e-10;
inline constexpr std::size_t kDefaultMaxSteps = 10000;

inline RVec3 v_apply(const CoeffTensor &b, const BlochVector &f) {
    return dual_pair_apply(b, f, f);
}

inline RVec3 v_eps_raw(double eps, const RVec3 &f) {
    return {eps * (f[0] * f[0] + 2.0 * f[1] * f[2]), eps * (f[1] * f[1] + 2.0 * f[0] * f[2]),
            eps * (f[2] * f[2] + 2.0 * f[0] * f[1])};
}

inline double rho(const RVec3 &f) {
    return f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
}

/// Throws DomainError unless |eps| <= 1/sqrt(3) (up to kBallTol).
inline void require_dynamics_domain(EpsilonParam e) {
    if (std::abs(e.value()) > kStatePreservingThreshold + kBallTol) {
        std::stringstream ss;
        ss.precision(17);
        ss << "|epsilon| = " << std::abs(e.value()) << " exceeds 1/sqrt(3); V_eps does not map the ball into itself";
        throw DomainError(ss.str());
    }
}

inline RVec3 v_eps_apply(EpsilonParam e, const BlochVector &f) {
    require_dynamics_domain(e);
    return v_eps_raw(e.value(), f.vec());
}

struct TrajectoryStep {
    std::size_t index = 0;
    RVec3 f{};
    double rho = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    bool converged = false;
    /// True when iteration stopped at a nonzero fixed point.
    bool stationary = false;
    RVec3 limit{};
};

/// Iterates V_eps from f0. Stops with converged = true once |f| < tol, or with
/// stationary = true (converged = false, limit = f) once |V(f) - f| <= tol at a
/// nonzero point, or after max_steps iterations.
inline Trajectory iterate(EpsilonParam e, const BlochVector &f0, std::size_t max_steps = kDefaultMaxSteps,
                          double tol = kDefaultDynamicsTol) {
    require_dynamics_domain(e);
    Trajectory t;
    RVec3 f = f0.vec();
    t.steps.push_back({0, f, rho(f)});
    for (std::size_t n = 0;; n++) {
        if (norm(f) < tol) {
            t.converged = true;
            break;
        }
        const RVec3 next = v_eps_raw(e.value(), f);
        const RVec3 diff{next[0] - f[0], next[1] - f[1], next[2] - f[2]};
        if (norm(diff) <= tol) {
            t.stationary = true;
            break;
        }
        if (n == max_steps) {
            break;
        }
        f = next;
        t.steps.push_back({n + 1, f, rho(f)});
    }
    t.limit = f;
    return t;
}

struct FixedPointReport {
    std::vector<RVec3> points;
    std::vector<double> residuals;
    /// Roots found by the independent grid + Newton sweep.
    std::vector<RVec3> sweep_points;
    bool sweep_agrees = true;
};

inline double fixed_point_residual(double eps, const RVec3 &p) {
    const RVec3 v = v_eps_raw(eps, p);
    return norm(RVec3{v[0] - p[0], v[1] - p[1], v[2] - p[2]});
}

/// All algebraic solutions of V_eps(f) = f (eight counted with Bezout), in no
/// particular filtering: the origin, e_k / eps, (1,1,1)/(3 eps) and the three
/// permutations of (-1,-1,2)/(3 eps).
inline std::vector<RVec3> fixed_point_candidates(double eps) {
    std::vector<RVec3> c{{0.0, 0.0, 0.0}};
    if (eps == 0.0) {
        return c;
    }
    const double a = 1.0 / eps;
    const double t = 1.0 / (3.0 * eps);
    c.push_back({t, t, t});
    c.push_back({-t, -t, 2 * t});
    c.push_back({-t, 2 * t, -t});
    c.push_back({2 * t, -t, -t});
    c.push_back({a, 0.0, 0.0});
    c.push_back({0.0, a, 0.0});
    c.push_back({0.0, 0.0, a});
    return c;
}

namespace detail {

/// Newton iteration on F(f) = V_eps(f) - f with a 3x3 Cramer solve.
inline bool newton_polish(double eps, RVec3 &f) {
    for (int it = 0; it < 60; it++) {
        const RVec3 v = v_eps_raw(eps, f);
        const RVec3 F{v[0] - f[0], v[1] - f[1], v[2] - f[2]};
        if (norm(F) < 1e-15) {
            return true;
        }
        const double e2 = 2.0 * eps;
        const double J[3][3] = {{e2 * f[0] - 1.0, e2 * f[2], e2 * f[1]},
                                {e2 * f[2], e2 * f[1] - 1.0, e2 * f[0]},
                                {e2 * f[1], e2 * f[0], e2 * f[2] - 1.0}};
        const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                           J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                           J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        if (std::abs(det) < 1e-14) {
            return false;
        }
        RVec3 dx{};
        for (std::size_t col = 0; col < 3; col++) {
            double M[3][3];
            for (std::size_t r = 0; r < 3; r++) {
                for (std::size_t c = 0; c < 3; c++) {
                    M[r][c] = (c == col) ? F[r] : J[r][c];
                }
            }
            dx[col] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                      det;
        }
        for (std::size_t k = 0; k < 3; k++) {
            f[k] -= dx[k];
        }
        if (!(norm(f) < 10.0)) {
            return false;
        }
    }
    return fixed_point_residual(eps, f) < 1e-12;
}

inline bool contains_point(const std::vector<RVec3> &pts, const RVec3 &p, double tol) {
    for (const auto &q : pts) {
        if (norm(RVec3{q[0] - p[0], q[1] - p[1], q[2] - p[2]}) <= tol) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Dense-grid (step 0.05) + Newton sweep for fixed points inside S.
inline std::vector<RVec3> fixed_point_sweep(double eps, double step = 0.05) {
    std::vector<RVec3> roots;
    const int n = static_cast<int>(std::lround(1.0 / step));
    for (int i = -n; i <= n; i++) {
        for (int j = -n; j <= n; j++) {
            for (int k = -n; k <= n; k++) {
                RVec3 f{i * step, j * step, k * step};
                if (norm(f) > 1.0) {
                    continue;
                }
                if (!detail::newton_polish(eps, f)) {
                    continue;
                }
                if (norm(f) > 1.0 + kBallTol || detail::contains_point(roots, f, 1e-8)) {
                    continue;
                }
                roots.push_back(f);
            }
        }
    }
    return roots;
}

/// Fixed points of V_eps inside S: the algebraic candidates that lie in the
/// ball, each with its residual |V(p) - p|, cross-checked against the sweep.
inline FixedPointReport fixed_points(EpsilonParam e, bool run_sweep = true) {
    require_dynamics_domain(e);
    const double eps = e.value();
    FixedPointReport r;
    for (const RVec3 &p : fixed_point_candidates(eps)) {
        if (norm(p) <= 1.0 + kBallTol) {
            r.points.push_back(p);
            r.residuals.push_back(fixed_point_residual(eps, p));
        }
    }
    if (run_sweep) {
        r.sweep_points = fixed_point_sweep(eps);
        r.sweep_agrees = r.sweep_points.size() == r.points.size();
        for (const auto &p : r.sweep_points) {
            r.sweep_agrees = r.sweep_agrees && detail::contains_point(r.points, p, 1e-6);
        }
    }
    return r;
}

struct BallInvarianceReport {
    bool invariant = true;
    double worst_norm = 0.0;
    RVec3 witness{};
};

/// max |V_eps(f)| over S (attained on the sphere since V is quadratic).
/// Accepts any eps; invariant iff the max is <= 1 + 1e-9. The witness is
/// reported with a non-negative component sum since V(-f) = V(f).
inline BallInvarianceReport ball_invariance_check(EpsilonParam e, std::size_t samples = kDefaultSamples,
                                                  std::uint64_t seed = 0) {
    const double eps = e.value();
    auto objective = [eps](const RVec3 &f) { return norm(v_eps_raw(eps, f)); };
    SpherePoint best = maximize_on_sphere(objective, samples, seed);
    if (best.x[0] + best.x[1] + best.x[2] < 0.0) {
        best.x = {-best.x[0], -best.x[1], -best.x[2]};
    }
    BallInvarianceReport r;
    r.worst_norm = best.value;
    r.witness = best.x;
    r.invariant = best.value <= 1.0 + kBallTol;
    return r;
}

}  // namespace qqo
