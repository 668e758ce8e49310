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

// Deterministic low-discrepancy sampling and small local optimizers used by the
// certification searches.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "qqo/matrix.hpp"

namespace qqo {

inline constexpr std::size_t kDefaultSamples = 20000;
inline constexpr std::size_t kRefineStarts = 8;

inline RVec3 normalized(const RVec3 &v) {
    const double n = norm(v);
    return {v[0] / n, v[1] / n, v[2] / n};
}

inline double dot(const RVec3 &a, const RVec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

using Rotation3 = std::array<RVec3, 3>;

/// Seed-derived rotation of R^3 (unit quaternion from a seeded mt19937_64).
inline Rotation3 seeded_rotation(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    double q[4];
    double n = 0.0;
    for (double &x : q) {
        x = g(gen);
        n += x * x;
    }
    n = std::sqrt(n);
    const double w = q[0] / n, x = q[1] / n, y = q[2] / n, z = q[3] / n;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

inline RVec3 rotate(const Rotation3 &r, const RVec3 &v) {
    return {dot(r[0], v), dot(r[1], v), dot(r[2], v)};
}

/// n points of the Fibonacci lattice on the unit sphere, rotated by a
/// seed-derived rotation.
inline std::vector<RVec3> fibonacci_sphere(std::size_t n, std::uint64_t seed) {
    const Rotation3 rot = seeded_rotation(seed);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<RVec3> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(i);
        pts.push_back(rotate(rot, {r * std::cos(phi), r * std::sin(phi), z}));
    }
    return pts;
}

/// Van der Corput radical inverse of i in the given base.
inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

/// Halton sequence in [0,1)^D with a seed-derived Cranley-Patterson shift.
template <std::size_t D>
class HaltonSequence {
   public:
    explicit HaltonSequence(std::uint64_t seed) {
        static_assert(D <= 6, "add primes for higher dimensions");
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto &s : shift_) {
            s = u(gen);
        }
    }

    std::array<double, D> operator()(std::uint64_t i) const {
        static constexpr std::array<std::uint64_t, 6> primes{2, 3, 5, 7, 11, 13};
        std::array<double, D> x;
        for (std::size_t d = 0; d < D; d++) {
            double v = radical_inverse(i + 1, primes[d]) + shift_[d];
            x[d] = v - std::floor(v);
        }
        return x;
    }

   private:
    std::array<double, D> shift_{};
};

/// Indices of the k largest (or smallest) scores. Ties resolve to the lower index.
inline std::vector<std::size_t> best_indices(const std::vector<double> &scores, std::size_t k, bool largest) {
    std::vector<std::size_t> idx(scores.size());
    for (std::size_t i = 0; i < idx.size(); i++) {
        idx[i] = i;
    }
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (scores[a] != scores[b]) {
                              return largest ? scores[a] > scores[b] : scores[a] < scores[b];
                          }
                          return a < b;
                      });
    idx.resize(k);
    return idx;
}

struct SpherePoint {
    RVec3 x{};
    double value = 0.0;
};

/// Projected gradient ascent on the unit sphere. The gradient is taken by
/// central differences and projected on the tangent plane; each step moves by
/// the angle `step` along the normalized direction, halving on failure.
inline SpherePoint sphere_ascent(const std::function<double(const RVec3 &)> &objective, RVec3 start,
                                 int steps = 50, double step = 0.1) {
    constexpr double h = 1e-7;
    SpherePoint cur{normalized(start), 0.0};
    cur.value = objective(cur.x);
    for (int it = 0; it < steps; it++) {
        RVec3 g{};
        for (std::size_t k = 0; k < 3; k++) {
            RVec3 xp = cur.x, xm = cur.x;
            xp[k] += h;
            xm[k] -= h;
            g[k] = (objective(xp) - objective(xm)) / (2 * h);
        }
        const double radial = dot(g, cur.x);
        for (std::size_t k = 0; k < 3; k++) {
            g[k] -= radial * cur.x[k];
        }
        const double gn = norm(g);
        if (!(gn > 0.0)) {
            break;
        }
        RVec3 cand{};
        for (std::size_t k = 0; k < 3; k++) {
            cand[k] = std::cos(step) * cur.x[k] + std::sin(step) * g[k] / gn;
        }
        cand = normalized(cand);
        const double v = objective(cand);
        if (v > cur.value) {
            cur = {cand, v};
        } else {
            step *= 0.5;
        }
    }
    return cur;
}

/// Global maximum over the unit sphere: Fibonacci sampling, then sphere_ascent
/// from the best kRefineStarts samples.
inline SpherePoint maximize_on_sphere(const std::function<double(const RVec3 &)> &objective, std::size_t samples,
                                      std::uint64_t seed) {
    const auto pts = fibonacci_sphere(std::max<std::size_t>(samples, 1), seed);
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); i++) {
        vals[i] = objective(pts[i]);
    }
    SpherePoint best{pts[0], vals[0]};
    for (std::size_t i : best_indices(vals, kRefineStarts, true)) {
        if (vals[i] > best.value) {
            best = {pts[i], vals[i]};
        }
        SpherePoint r = sphere_ascent(objective, pts[i]);
        if (r.value > best.value) {
            best = r;
        }
    }
    return best;
}

template <std::size_t D>
struct SimplexResult {
    std::array<double, D> x{};
    double value = 0.0;
};

/// Nelder-Mead minimization with the standard coefficients (1, 2, 0.5, 0.5).
template <std::size_t D>
SimplexResult<D> nelder_mead(const std::function<double(const std::array<double, D> &)> &f,
                             const std::array<double, D> &x0, double initial_step, int iterations) {
    using Point = std::array<double, D>;
    std::array<Point, D + 1> p;
    std::array<double, D + 1> v;
    p[0] = x0;
    for (std::size_t i = 0; i < D; i++) {
        p[i + 1] = x0;
        p[i + 1][i] += initial_step;
    }
    for (std::size_t i = 0; i <= D; i++) {
        v[i] = f(p[i]);
    }

    auto combine = [](const Point &a, const Point &b, double t) {
        Point r;
        for (std::size_t k = 0; k < D; k++) {
            r[k] = a[k] + t * (b[k] - a[k]);
        }
        return r;
    };

    for (int it = 0; it < iterations; it++) {
        std::array<std::size_t, D + 1> order;
        for (std::size_t i = 0; i <= D; i++) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return v[a] < v[b] || (v[a] == v[b] && a < b);
        });
        std::array<Point, D + 1> sp;
        std::array<double, D + 1> sv;
        for (std::size_t i = 0; i <= D; i++) {
            sp[i] = p[order[i]];
            sv[i] = v[order[i]];
        }
        p = sp;
        v = sv;

        Point centroid{};
        for (std::size_t i = 0; i < D; i++) {
            for (std::size_t k = 0; k < D; k++) {
                centroid[k] += p[i][k] / static_cast<double>(D);
            }
        }
        const Point xr = combine(centroid, p[D], -1.0);
        const double fr = f(xr);
        if (fr < v[0]) {
            const Point xe = combine(centroid, p[D], -2.0);
            const double fe = f(xe);
            if (fe < fr) {
                p[D] = xe;
                v[D] = fe;
            } else {
                p[D] = xr;
                v[D] = fr;
            }
        } else if (fr < v[D - 1]) {
            p[D] = xr;
            v[D] = fr;
        } else {
            const bool outside = fr < v[D];
            const Point xc = outside ? combine(centroid, xr, 0.5) : combine(centroid, p[D], 0.5);
            const double fc = f(xc);
            if (fc < (outside ? fr : v[D])) {
                p[D] = xc;
                v[D] = fc;
            } else {
                for (std::size_t i = 1; i <= D; i++) {
                    p[i] = combine(p[0], p[i], 0.5);
                    v[i] = f(p[i]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= D; i++) {
        if (v[i] < v[best]) {
            best = i;
        }
    }
    return {p[best], v[best]};
}

}  // namespace qqo
