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

#include "qqo/epsilon_family.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "qqo/ks_certifier.hpp"
#include "test_util.hpp"

using namespace qqo;
using namespace qqo::testing;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::array<double, 4> numeric_spectrum(const RVec3 &w) {
    return eigenvalues_hermitian(b_matrix(w));
}

}  // namespace

TEST(epsilon_family, parameter_bands) {
    EXPECT_EQ(EpsilonParam(0.0).band(), EpsilonBand::CompletelyPositive);
    EXPECT_EQ(EpsilonParam(kCpThreshold).band(), EpsilonBand::CompletelyPositive);
    EXPECT_EQ(EpsilonParam(-0.2).band(), EpsilonBand::Positive);
    EXPECT_EQ(EpsilonParam(1.0 / 3.0).band(), EpsilonBand::Positive);
    EXPECT_EQ(EpsilonParam(0.5).band(), EpsilonBand::StatePreserving);
    EXPECT_EQ(EpsilonParam(1.0 / kSqrt3).band(), EpsilonBand::StatePreserving);
    EXPECT_EQ(EpsilonParam(-0.6).band(), EpsilonBand::Invalid);
    EXPECT_EQ(to_string(EpsilonBand::Positive), "positive");
    EXPECT_THROW(EpsilonParam(std::numeric_limits<double>::infinity()), DomainError);
    EXPECT_NEAR(kCpThreshold, 0.19245008972987526, 1e-16);
}

TEST(epsilon_family, coefficient_tensor_entries) {
    const double eps = 0.21;
    const CoeffTensor b = build_coeff_tensor(EpsilonParam(eps));
    EXPECT_EQ(b.at(0, 0, 0), eps);
    EXPECT_EQ(b.at(2, 1, 0), eps);
    EXPECT_EQ(b.at(0, 0, 1), 0.0);
    EXPECT_TRUE(b.is_symmetric());
    int nonzero = 0;
    for (std::size_t m = 0; m < 3; m++) {
        for (std::size_t l = 0; l < 3; l++) {
            for (std::size_t k = 0; k < 3; k++) {
                nonzero += b.at(m, l, k) != 0.0;
            }
        }
    }
    EXPECT_EQ(nonzero, 9);
}

TEST(epsilon_family, delta_eps_examples) {
    const EpsilonParam e(0.3);
    EXPECT_EQ(delta_eps_apply(e, {1.0, {}}), Mat4::identity());
    const auto &pp = pauli_products();
    const Mat4 expected = 0.3 * (pp[0][1] + pp[1][0] + pp[2][2]);
    EXPECT_LE(max_abs_diff(delta_eps_apply(e, {0.0, {0.0, 0.0, 1.0}}), expected), 1e-16);
}

TEST(epsilon_family, delta_eps_two_path) {
    Rng rng(81);
    double worst = 0.0;
    for (int t = 0; t < 1000; t++) {
        const EpsilonParam e(uniform(rng));
        const PauliCoeffs x = random_coeffs(rng);
        worst = std::max(worst, max_abs_diff(delta_eps_apply(e, x), delta_apply(build_coeff_tensor(e), x)));
    }
    EXPECT_LE(worst, 1e-14);
}

TEST(epsilon_family, b_matrix_examples) {
    const Mat4 z = b_matrix(RVec3{0.0, 0.0, 1.0});
    EXPECT_EQ(z(0, 0), cplx(1.0));
    EXPECT_EQ(z(1, 1), cplx(-1.0));
    EXPECT_EQ(z(2, 2), cplx(-1.0));
    EXPECT_EQ(z(3, 3), cplx(1.0));
    EXPECT_EQ(z(0, 3), cplx(0.0, -2.0));
    EXPECT_EQ(z(3, 0), cplx(0.0, 2.0));
    EXPECT_EQ(b_matrix(RVec3{0.0, 0.0, 0.0}), Mat4{});
    const auto s = numeric_spectrum({1.0, 0.0, 0.0});
    EXPECT_NEAR(s[0], -1.0, 1e-13);
    EXPECT_NEAR(s[1], -1.0, 1e-13);
    EXPECT_NEAR(s[2], -1.0, 1e-13);
    EXPECT_NEAR(s[3], 3.0, 1e-13);
    EXPECT_THROW(b_matrix(CVec3{0.0, kI, 0.0}), NonRealInput);
}

TEST(epsilon_family, b_matrix_matches_map) {
    // Delta_eps(1 + w sigma) = 1 + eps B(w).
    Rng rng(82);
    for (int t = 0; t < 1000; t++) {
        const double eps = uniform(rng);
        const RVec3 w = random_ball(rng);
        Mat4 expected = b_matrix(w);
        expected *= eps;
        expected += Mat4::identity();
        EXPECT_LE(max_abs_diff(delta_eps_apply(EpsilonParam(eps), {1.0, to_complex(w)}), expected), 1e-14);
        EXPECT_TRUE(is_hermitian(b_matrix(w)));
    }
}

TEST(epsilon_family, spectrum_examples) {
    const double s = 1.0 / kSqrt3;
    const auto d = spectrum_closed_form(RVec3{s, s, s}).as_array();
    EXPECT_NEAR(d[0], kSqrt3, 1e-7);
    EXPECT_NEAR(d[1], kSqrt3, 1e-7);
    EXPECT_NEAR(d[2], -kSqrt3, 1e-15);
    EXPECT_NEAR(d[3], -kSqrt3, 1e-15);
    EXPECT_EQ(spectrum_closed_form(RVec3{-1.0, 0.0, 0.0}).as_array(), (std::array<double, 4>{1.0, -3.0, 1.0, 1.0}));
    EXPECT_EQ(spectrum_closed_form(RVec3{0.0, 0.0, 0.0}).as_array(), (std::array<double, 4>{}));
    EXPECT_THROW(spectrum_closed_form(CVec3{kI, 0.0, 0.0}), NonRealInput);
    const auto l = spectrum_closed_form(RVec3{0.3, -0.1, 0.2});
    EXPECT_EQ(l.lambda3, l.lambda4);
}

TEST(epsilon_family, spectrum_matches_numeric) {
    Rng rng(83);
    double worst = 0.0;
    for (int t = 0; t < 1000; t++) {
        const RVec3 w = random_ball(rng);
        const auto a = sorted(spectrum_closed_form(w).as_array());
        const auto b = numeric_spectrum(w);
        for (std::size_t k = 0; k < 4; k++) {
            worst = std::max(worst, std::abs(a[k] - b[k]));
        }
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(epsilon_family, spectrum_homogeneity) {
    Rng rng(84);
    for (int t = 0; t < 1000; t++) {
        const RVec3 w = random_ball(rng);
        const auto base = spectrum_closed_form(w);
        const double h = uniform(rng, 0.0, 1.0);
        const auto up = spectrum_closed_form(RVec3{h * w[0], h * w[1], h * w[2]});
        EXPECT_NEAR(up.lambda1, h * base.lambda1, 1e-12);
        EXPECT_NEAR(up.lambda2, h * base.lambda2, 1e-12);
        const auto down = spectrum_closed_form(RVec3{-h * w[0], -h * w[1], -h * w[2]});
        EXPECT_NEAR(down.lambda1, -h * base.lambda2, 1e-12);
    }
}

TEST(epsilon_family, spectrum_bounds_on_ball) {
    Rng rng(85);
    for (int t = 0; t < 100000; t++) {
        const auto l = spectrum_closed_form(random_ball(rng));
        ASSERT_LE(std::abs(l.lambda3), kSqrt3 + 1e-12);
        ASSERT_LE(std::abs(l.lambda1), 3.0 + 1e-12);
        ASSERT_LE(std::abs(l.lambda2), 3.0 + 1e-12);
    }
    // Extremal points.
    const double s = 1.0 / kSqrt3;
    EXPECT_NEAR(spectrum_closed_form(RVec3{1, 0, 0}).lambda1, 3.0, 1e-15);
    EXPECT_NEAR(spectrum_closed_form(RVec3{-1, 0, 0}).lambda2, -3.0, 1e-15);
    EXPECT_NEAR(spectrum_closed_form(RVec3{s, s, s}).lambda3, -kSqrt3, 1e-15);
    EXPECT_NEAR(spectrum_closed_form(RVec3{-s, -s, -s}).lambda3, kSqrt3, 1e-15);
}

TEST(epsilon_family, positivity_examples) {
    const auto a = positivity_check(EpsilonParam(0.33));
    EXPECT_TRUE(a.is_positive);
    EXPECT_NEAR(a.margin, 0.01, 1e-9);

    const auto b = positivity_check(EpsilonParam(1.0 / 3.0));
    EXPECT_TRUE(b.is_positive);
    EXPECT_NEAR(b.margin, 0.0, 1e-12);

    const auto c = positivity_check(EpsilonParam(0.34));
    EXPECT_FALSE(c.is_positive);
    EXPECT_NEAR(c.margin, -0.02, 1e-9);
    EXPECT_NEAR(closed_form_min_eigenvalue(0.34, c.worst_w), c.margin, 1e-15);
    // The witness is a minimizer of lambda_2, i.e. a unit vector along an axis direction -e_k.
    EXPECT_NEAR(norm(c.worst_w), 1.0, 1e-12);

    const auto neg = positivity_check(EpsilonParam(-0.34));
    EXPECT_FALSE(neg.is_positive);
    EXPECT_NEAR(neg.margin, -0.02, 1e-9);
    EXPECT_EQ(positivity_check(EpsilonParam(0.0)).margin, 1.0);
}

TEST(epsilon_family, positivity_witness_matches_dense_path) {
    for (double eps : {0.34, 0.4, -0.5}) {
        const auto r = positivity_check(EpsilonParam(eps));
        const double dense =
            min_eigenvalue_hermitian(delta_eps_apply(EpsilonParam(eps), {1.0, to_complex(r.worst_w)}));
        EXPECT_NEAR(dense, r.margin, 1e-12);
    }
}

TEST(epsilon_family, choi_examples) {
    EXPECT_EQ(choi_matrix(EpsilonParam(0.0)), Mat8::identity());
    const Mat8 b8 = qqo::testing::printed_b8();
    EXPECT_EQ(b8(0, 3), cplx(0.0, -2.0));
    EXPECT_EQ(b8(0, 7), cplx(1.0, -1.0));
    EXPECT_NEAR(max_eigenvalue_hermitian(b8), 3.0 * kSqrt3, 1e-9);
    EXPECT_NEAR(min_eigenvalue_hermitian(b8), -3.0 * kSqrt3, 1e-9);
}

TEST(epsilon_family, choi_reconstruction_against_printed) {
    Rng rng(86);
    const Mat8 b8 = qqo::testing::printed_b8();
    for (int t = 0; t < 10; t++) {
        const double eps = uniform(rng);
        Mat8 expected = b8;
        expected *= eps;
        expected += Mat8::identity();
        EXPECT_LE(max_abs_diff(choi_matrix(EpsilonParam(eps)), expected), 1e-13);
    }
    // The tensor path agrees up to the factor 2.
    Mat8 twice = choi_matrix(build_coeff_tensor(EpsilonParam(0.17)));
    twice *= 2.0;
    EXPECT_LE(max_abs_diff(twice, choi_matrix(EpsilonParam(0.17))), 1e-15);
}

TEST(epsilon_family, cp_examples) {
    EXPECT_TRUE(cp_check(EpsilonParam(0.19)).is_cp);
    EXPECT_FALSE(cp_check(EpsilonParam(0.20)).is_cp);
    const auto z = cp_check(EpsilonParam(0.0));
    EXPECT_TRUE(z.is_cp);
    EXPECT_NEAR(z.min_choi_eig, 1.0, 1e-15);
    EXPECT_TRUE(cp_check(EpsilonParam(-0.19)).is_cp);
    EXPECT_FALSE(cp_check(EpsilonParam(-0.20)).is_cp);
    EXPECT_TRUE(cp_check(EpsilonParam(kCpThreshold)).is_cp);
    EXPECT_NEAR(cp_check(EpsilonParam(0.3)).min_choi_eig, 1.0 - 0.3 * 3.0 * kSqrt3, 1e-12);
}

TEST(epsilon_family, cp_implies_positive_implies_state_preserving) {
    for (int k = -30; k <= 30; k++) {
        const EpsilonParam e(k * 0.02);
        const bool cp = cp_check(e).is_cp;
        const bool pos = positivity_check(e, 5000).is_positive;
        const bool sp = b_norm_sup(build_coeff_tensor(e), 5000) <= 1.0 + 1e-9;
        if (cp) {
            EXPECT_TRUE(pos) << e.value();
        }
        if (pos) {
            EXPECT_TRUE(sp) << e.value();
        }
        EXPECT_EQ(cp, std::abs(e.value()) <= kCpThreshold);
        EXPECT_EQ(pos, std::abs(e.value()) <= 1.0 / 3.0);
    }
}

TEST(epsilon_family, abcd_closed_form_fractions) {
    const auto q = ks_abcd_closed_form(EpsilonParam(1.0 / 3.0), kCounterexampleW);
    const auto &exact = kCounterexampleAbcd;
    for (std::size_t k = 0; k < 4; k++) {
        EXPECT_LE(std::abs(q[k] - exact[k]) / exact[k], 1e-12) << k;
    }
}

TEST(epsilon_family, abcd_closed_form_matches_generic_computation) {
    Rng rng(87);
    for (int t = 0; t < 500; t++) {
        const EpsilonParam e(uniform(rng, -0.6, 0.6));
        const CVec3 w = random_cvec(rng);
        const auto closed = ks_abcd_closed_form(e, w);
        const auto generic = ks_necessary_check(build_coeff_tensor(e), BlochVector(1, 0, 0), w).abcd;
        ASSERT_TRUE(generic.has_value());
        for (std::size_t k = 0; k < 4; k++) {
            EXPECT_NEAR(closed[k], (*generic)[k], 1e-12 * (1.0 + std::abs(closed[k]))) << k;
        }
    }
}
