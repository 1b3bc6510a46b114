// Copyright 2026 The qnet Authors
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

#include "qnet/network.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "qnet/errors.hpp"

using namespace qnet;

namespace {

constexpr double pi = std::numbers::pi;

MotifParams balanced(std::size_t n) {
    return MotifParams{n, pi / 4, pi / 4};
}

std::size_t nonzeros_in_row(const ComplexMatrix &m, std::size_t row) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.dim(); j++) {
        count += std::abs(m(row, j)) > 1e-14;
    }
    return count;
}

std::size_t nonzeros_in_col(const ComplexMatrix &m, std::size_t col) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.dim(); i++) {
        count += std::abs(m(i, col)) > 1e-14;
    }
    return count;
}

}  // namespace

TEST(build_motif, zero_angles_give_identity) {
    EXPECT_EQ(build_motif(MotifParams{5, 0.0, 0.0}), ComplexMatrix::identity(10));
}

TEST(build_motif, balanced_motif_structure) {
    ComplexMatrix u = build_motif(balanced(20));
    EXPECT_LT(unitarity_defect(u), 1e-12);
    EXPECT_LT(oracle::max_diff(oracle::from(u), oracle::motif(balanced(20))), 1e-15);
    for (std::size_t i = 0; i < u.dim(); i++) {
        EXPECT_EQ(nonzeros_in_row(u, i), 4u);
        for (std::size_t j = 0; j < u.dim(); j++) {
            double mag = std::abs(u(i, j));
            if (mag > 1e-14) {
                EXPECT_NEAR(mag, 0.5, 1e-15);
            }
        }
    }
}

TEST(build_motif, phi_zero_leaves_only_the_a_column) {
    ComplexMatrix u = build_motif(MotifParams{2, pi / 2, 0.0});
    ComplexMatrix a_layer(4);
    double c = std::cos(pi / 2);
    a_layer(0, 0) = c;
    a_layer(0, 1) = 1.0;
    a_layer(1, 0) = -1.0;
    a_layer(1, 1) = c;
    a_layer(2, 2) = c;
    a_layer(2, 3) = 1.0;
    a_layer(3, 2) = -1.0;
    a_layer(3, 3) = c;
    EXPECT_EQ(u, a_layer);
}

TEST(build_motif, wrap_corners_follow_the_b_coupler) {
    // With theta = 0 the motif is the B column alone.
    double phi = 0.3;
    ComplexMatrix b = build_motif(MotifParams{3, 0.0, phi});
    EXPECT_DOUBLE_EQ(b(0, 0).real(), std::cos(phi));
    EXPECT_DOUBLE_EQ(b(0, 5).real(), -std::sin(phi));
    EXPECT_DOUBLE_EQ(b(5, 0).real(), std::sin(phi));
    EXPECT_DOUBLE_EQ(b(5, 5).real(), std::cos(phi));
    EXPECT_DOUBLE_EQ(b(1, 2).real(), std::sin(phi));
    EXPECT_DOUBLE_EQ(b(2, 1).real(), -std::sin(phi));
}

TEST(build_motif, sparsity_for_generic_angles) {
    for (std::size_t n : {2u, 3u, 7u}) {
        ComplexMatrix u = build_motif(MotifParams{n, 0.3, 1.1});
        for (std::size_t k = 0; k < u.dim(); k++) {
            EXPECT_LE(nonzeros_in_row(u, k), 4u);
            EXPECT_LE(nonzeros_in_col(u, k), 4u);
        }
    }
}

TEST(build_motif, rejects_invalid_params) {
    EXPECT_THROW(build_motif(MotifParams{1, 0.1, 0.1}), InvalidArgument);
    EXPECT_THROW(build_motif(MotifParams{4, NAN, 0.1}), InvalidArgument);
    EXPECT_THROW(build_motif(MotifParams{4, 0.1, INFINITY}), InvalidArgument);
}

TEST(phase_layer, zero_range_is_identity) {
    RngStream rng(1, 0);
    PhaseLayer layer = build_phase_layer(6, 0.0, rng);
    for (double p : layer.phases) {
        EXPECT_EQ(p, 0.0);
    }
    EXPECT_EQ(phase_layer_matrix(layer), ComplexMatrix::identity(6));
}

TEST(phase_layer, full_range_draws) {
    RngStream rng(2, 0);
    PhaseLayer layer = build_phase_layer(40, 2 * pi, rng);
    ASSERT_EQ(layer.phases.size(), 40u);
    for (double p : layer.phases) {
        EXPECT_GE(p, 0.0);
        EXPECT_LT(p, 2 * pi);
    }
    EXPECT_LT(unitarity_defect(phase_layer_matrix(layer)), 1e-15);
}

TEST(phase_layer, sample_mean_of_half_range) {
    RngStream rng(3, 0);
    constexpr std::size_t draws = 100000;
    PhaseLayer layer = build_phase_layer(draws, pi, rng);
    double mean = 0;
    for (double p : layer.phases) {
        mean += p;
    }
    mean /= draws;
    double sigma = pi / std::sqrt(12.0 * draws);
    EXPECT_LT(std::abs(mean - pi / 2), 3 * sigma);
}

TEST(phase_layer, consumes_one_draw_per_mode) {
    RngStream a(4, 9);
    RngStream b(4, 9);
    build_phase_layer(10, 1.0, a);
    for (int k = 0; k < 10; k++) {
        b.uniform();
    }
    EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(phase_layer, matrix_uses_euler_formula) {
    PhaseLayer layer{{pi, pi / 2}, pi};
    ComplexMatrix d = phase_layer_matrix(layer);
    EXPECT_LT(std::abs(d(0, 0) - Complex(-1, 0)), 1e-15);
    EXPECT_LT(std::abs(d(1, 1) - Complex(0, 1)), 1e-15);
    EXPECT_EQ(d(0, 1), Complex(0));
}

TEST(phase_layer, rejects_bad_range) {
    RngStream rng(5, 0);
    EXPECT_THROW(build_phase_layer(4, -0.1, rng), InvalidArgument);
    EXPECT_THROW(build_phase_layer(4, 2 * pi + 1e-9, rng), InvalidArgument);
    EXPECT_THROW(build_phase_layer(3, 1.0, rng), InvalidArgument);
}

TEST(rng_stream, streams_are_reproducible_and_distinct) {
    RngStream a(42, 0);
    RngStream b(42, 0);
    RngStream c(42, 1);
    RngStream d(43, 0);
    double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_NE(x, c.uniform());
    EXPECT_NE(x, d.uniform());
    RngStream forked = a.fork(1);
    RngStream c2(42, 1);
    EXPECT_EQ(forked.uniform(), c2.uniform());
}

TEST(rng_stream, frozen_first_draws) {
    // Cross-platform contract: these values must never change.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
    RngStream rng(0, 0);
    EXPECT_EQ(rng.uniform(), 0x1.7512b684ea56p-6);
    EXPECT_EQ(rng.uniform(), 0x1.0215fa7101751p-1);
    EXPECT_EQ(RngStream(2024, 7).uniform(), 0x1.93e549dc82e0ap-1);
}

TEST(compose, pure_depth_one_is_the_motif) {
    Scenario s{ScenarioKind::Pure, balanced(4), 1};
    EXPECT_EQ(compose(s), build_motif(s.motif));
}

TEST(compose, zero_fixed_disorder_matches_pure) {
    Scenario fixed{ScenarioKind::FixedMotifDisorder, balanced(5), 7, 0.0, 0.0, 11};
    Scenario pure{ScenarioKind::Pure, balanced(5), 7};
    EXPECT_LT(max_abs_diff(compose(fixed), compose(pure)), 1e-12);
}

TEST(compose, fully_random_is_unitary) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Scenario s{ScenarioKind::FullyRandom, balanced(20), 10, 0.0, 2 * pi, seed};
        EXPECT_LT(unitarity_defect(compose(s)), 1e-10);
    }
}

TEST(compose, pure_power_law) {
    Scenario a{ScenarioKind::Pure, MotifParams{6, 0.4, 0.9}, 5};
    Scenario b = a;
    b.depth = 8;
    Scenario ab = a;
    ab.depth = 13;
    EXPECT_LT(max_abs_diff(compose(ab), matmul(compose(a), compose(b))), 1e-11);
}

TEST(compose, intermediate_without_layer_noise_matches_fixed) {
    for (std::uint64_t seed : {3u, 4u}) {
        Scenario inter{ScenarioKind::Intermediate, balanced(5), 12, 2 * pi, 0.0, seed};
        Scenario fixed{ScenarioKind::FixedMotifDisorder, balanced(5), 12, 2 * pi, 0.0, seed};
        EXPECT_LT(max_abs_diff(compose(inter), compose(fixed)), 1e-11);
    }
}

TEST(compose, is_bit_deterministic) {
    Scenario s{ScenarioKind::Intermediate, balanced(6), 9, 1.3, 0.4, 77};
    EXPECT_EQ(compose(s), compose(s));
    Scenario other = s;
    other.seed = 78;
    EXPECT_NE(compose(s), compose(other));
}

TEST(compose, matches_naive_products_for_every_kind) {
    for (ScenarioKind kind : {ScenarioKind::Pure, ScenarioKind::FullyRandom, ScenarioKind::FixedMotifDisorder,
                              ScenarioKind::Intermediate}) {
        Scenario s{kind, MotifParams{3, 0.7, 0.2}, 6, 0.0, 0.0, 5};
        s.alpha_fixed = s.uses_alpha_fixed() ? 2.0 : 0.0;
        s.alpha_layer = s.uses_alpha_layer() ? 1.5 : 0.0;
        EXPECT_LT(oracle::max_diff(oracle::from(compose(s)), oracle::compose(s)), 1e-13) << to_string(kind);
    }
}

TEST(compose, single_layer_fully_random_variant) {
    Scenario s{ScenarioKind::FullyRandom, balanced(4), 5, 0.0, 2 * pi, 8};
    s.internal_phases = false;
    EXPECT_LT(oracle::max_diff(oracle::from(compose(s)), oracle::compose(s)), 1e-13);
    EXPECT_LT(unitarity_defect(compose(s)), 1e-12);
}

TEST(compose, stepper_prefix_matches_shallower_compose) {
    Scenario deep{ScenarioKind::FullyRandom, balanced(4), 9, 0.0, 2 * pi, 21};
    ScenarioStepper stepper(deep, RngStream(deep.seed, 0));
    for (std::size_t m = 1; m <= deep.depth; m++) {
        stepper.advance();
        Scenario shallow = deep;
        shallow.depth = m;
        EXPECT_EQ(stepper.current(), compose(shallow)) << m;
    }
}

TEST(scenario, validation) {
    Scenario s{ScenarioKind::Pure, balanced(4), 3};
    s.alpha_layer = 1.0;
    EXPECT_THROW(s.validate(), InvalidArgument);
    s = Scenario{ScenarioKind::FullyRandom, balanced(4), 3, 0.5, 1.0};
    EXPECT_THROW(s.validate(), InvalidArgument);
    s = Scenario{ScenarioKind::FixedMotifDisorder, balanced(4), 0, 1.0};
    EXPECT_THROW(s.validate(), InvalidArgument);
    s = Scenario{ScenarioKind::Intermediate, balanced(4), 2, 7.0, 1.0};
    EXPECT_THROW(s.validate(), InvalidArgument);
    s = Scenario{ScenarioKind::Intermediate, balanced(4), 2, 6.0, 1.0};
    EXPECT_NO_THROW(s.validate());
}

TEST(scenario, kind_names_round_trip) {
    for (ScenarioKind kind : {ScenarioKind::Pure, ScenarioKind::FullyRandom, ScenarioKind::FixedMotifDisorder,
                              ScenarioKind::Intermediate}) {
        EXPECT_EQ(parse_scenario_kind(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_scenario_kind("random").has_value());
}
