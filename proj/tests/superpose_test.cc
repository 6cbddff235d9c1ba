// Copyright 2026 The spinmean Authors
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

#include "spinmean/superpose.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "spinmean/represent.h"
#include "test_oracle.h"

using namespace spinmean;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

MeanSpinVector to_means(const oracle::Triple &t) {
    return MeanSpinVector(t[0], t[1], t[2]);
}

SigmaTriple to_sigma(const oracle::Triple &t) {
    return SigmaTriple(t[0], t[1], t[2]);
}

oracle::Triple triple(const MeanSpinVector &m) {
    return {m.sx(), m.sy(), m.sz()};
}

oracle::Triple triple(const SigmaTriple &s) {
    return {s.sig1(), s.sig2(), s.sig3()};
}

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected spinmean::Error";
    return ErrorCode::ValidationError;
}

/// The z mean as written with a bare (1/2 + sz) first term, kept only to pin
/// down that it is wrong.
double uncorrected_z(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    double t = normalization_t(a, b, sig);
    double root = std::sqrt((0.5 + a.sz()) * (0.5 + b.sz()));
    return -0.5 + (0.5 + a.sz() + (0.5 - sig.sig3()) * (0.5 + b.sz()) + 2 * root * sig.sig1()) / t;
}

/// The corrected z mean in its unsimplified form.
double corrected_z(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig) {
    double t = normalization_t(a, b, sig);
    double root = std::sqrt((0.5 + a.sz()) * (0.5 + b.sz()));
    return -0.5 +
           ((0.5 + sig.sig3()) * (0.5 + a.sz()) + (0.5 - sig.sig3()) * (0.5 + b.sz()) + 2 * root * sig.sig1()) / t;
}

struct RandomCase {
    MeanSpinVector a;
    MeanSpinVector b;
    SigmaTriple sig;
};

RandomCase random_case(std::mt19937_64 &rng) {
    while (true) {
        auto a = oracle::random_on_sphere(rng, 1e-3);
        auto b = oracle::random_on_sphere(rng, 1e-3);
        auto s = oracle::random_on_sphere(rng, 1e-3);
        if (oracle::brute_force_superpose(a, b, s).t >= 1e-6) {
            return {to_means(a), to_means(b), to_sigma(s)};
        }
    }
}

}  // namespace

TEST(sigma_from_coefficients, examples) {
    EXPECT_EQ(sigma_from_coefficients(1, 0), SigmaTriple(0, 0, 0.5));
    SigmaTriple s = sigma_from_coefficients(kInvSqrt2, kInvSqrt2);
    EXPECT_NEAR(s.sig1(), 0.5, 1e-15);
    EXPECT_NEAR(s.sig2(), 0, 1e-15);
    EXPECT_NEAR(s.sig3(), 0, 1e-15);
    SigmaTriple t = sigma_from_coefficients(kInvSqrt2, Complex(0, kInvSqrt2));
    EXPECT_NEAR(t.sig1(), 0, 1e-15);
    EXPECT_NEAR(t.sig2(), 0.5, 1e-15);
    EXPECT_NEAR(t.sig3(), 0, 1e-15);
}

TEST(sigma_from_coefficients, errors) {
    EXPECT_EQ(code_of([] { sigma_from_coefficients(1, 1); }), ErrorCode::NotNormalized);
    EXPECT_EQ(code_of([] { sigma_from_coefficients(Complex(0, 1), 0); }), ErrorCode::NonzeroC1Phase);
    EXPECT_EQ(code_of([] { sigma_from_coefficients(-1, 0); }), ErrorCode::NonzeroC1Phase);
}

TEST(sigma_from_coefficients, gauge_fix_makes_c1_real) {
    Coefficients c = fix_coefficient_gauge(std::polar(0.6, 1.1), std::polar(0.8, -0.4));
    EXPECT_NEAR(c.c1.imag(), 0, 1e-16);
    EXPECT_NEAR(c.c1.real(), 0.6, 1e-15);
    EXPECT_NEAR(std::arg(c.c2), -1.5, 1e-15);
    EXPECT_NO_THROW(sigma_from_coefficients(c.c1, c.c2));
}

TEST(coefficients_from_sigma, examples) {
    Coefficients id = coefficients_from_sigma(SigmaTriple(0, 0, 0.5));
    EXPECT_EQ(id.c1, Complex(1, 0));
    EXPECT_EQ(id.c2, Complex(0, 0));
    Coefficients half = coefficients_from_sigma(SigmaTriple(0.5, 0, 0));
    EXPECT_NEAR(std::abs(half.c1 - kInvSqrt2), 0, 1e-15);
    EXPECT_NEAR(std::abs(half.c2 - kInvSqrt2), 0, 1e-15);
    Coefficients pole = coefficients_from_sigma(SigmaTriple(0, 0, -0.5));
    EXPECT_EQ(pole.c1, Complex(0, 0));
    EXPECT_EQ(pole.c2, Complex(1, 0));
}

TEST(coefficients_from_sigma, round_trip) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 5000; ++i) {
        double theta = std::acos(1 - 2 * u(rng));
        double phi = 2 * std::numbers::pi * u(rng);
        Complex c1 = std::cos(theta / 2);
        Complex c2 = std::polar(std::sin(theta / 2), phi);
        if (c1.real() < 1e-6) {
            continue;
        }
        Coefficients back = coefficients_from_sigma(sigma_from_coefficients(c1, c2));
        EXPECT_NEAR(std::abs(back.c1 - c1), 0, 1e-12);
        EXPECT_NEAR(std::abs(back.c2 - c2), 0, 1e-12);
        EXPECT_NEAR(std::norm(back.c1) + std::norm(back.c2), 1, 1e-12);
    }
}

TEST(normalization_t, examples) {
    MeanSpinVector up(0, 0, 0.5);
    MeanSpinVector plus_x(0.5, 0, 0);
    EXPECT_DOUBLE_EQ(normalization_t(up, plus_x, SigmaTriple(0, 0, 0.5)), 1);
    EXPECT_DOUBLE_EQ(normalization_t(up, up, SigmaTriple(0.5, 0, 0)), 2);

    auto ref = oracle::brute_force_superpose({0, 0, 0.5}, {0.5, 0, 0}, {0.5, 0, 0});
    EXPECT_NEAR(ref.t, 1 + kInvSqrt2, 1e-15);
    EXPECT_NEAR(normalization_t(up, plus_x, SigmaTriple(0.5, 0, 0)), ref.t, 1e-12);
}

TEST(normalization_t, preconditions) {
    MeanSpinVector up(0, 0, 0.5);
    EXPECT_EQ(code_of([&] { normalization_t(MeanSpinVector(0, 0, -0.5), up, SigmaTriple(0.5, 0, 0)); }),
              ErrorCode::PoleError);
    EXPECT_EQ(code_of([&] { normalization_t(up, MeanSpinVector(0, 0, -0.5), SigmaTriple(0.5, 0, 0)); }),
              ErrorCode::PoleError);
    EXPECT_EQ(code_of([&] { normalization_t(up, MeanSpinVector(0.1, 0, 0), SigmaTriple(0.5, 0, 0)); }),
              ErrorCode::NotPure);
}

TEST(superpose_oracle, examples) {
    SuperpositionResult r = superpose_oracle(MeanSpinVector(0.5, 0, 0), MeanSpinVector(0, 0.5, 0), SigmaTriple(0, 0, 0.5));
    EXPECT_LE(r.means_out.vec().sup_distance({0.5, 0, 0}), 1e-15);
    EXPECT_DOUBLE_EQ(r.normalization_t, 1);
    EXPECT_EQ(r.method, SuperposeMethod::oracle);

    EXPECT_EQ(code_of([] {
                  superpose_oracle(MeanSpinVector(0, 0, 0.5), MeanSpinVector(0, 0, 0.5), SigmaTriple(-0.5, 0, 0));
              }),
              ErrorCode::DegenerateSuperposition);

    SuperpositionResult f = superpose_oracle(MeanSpinVector(0, 0, 0.5), MeanSpinVector(0.5, 0, 0), SigmaTriple(0.5, 0, 0));
    double q = 1 / (2 * std::numbers::sqrt2);
    EXPECT_LE(f.means_out.vec().sup_distance({q, 0, q}), 1e-12);
    EXPECT_NEAR(f.normalization_t, 1 + kInvSqrt2, 1e-12);
}

TEST(superpose_closed, identity_coefficient_returns_first_state_exactly) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        MeanSpinVector a = to_means(oracle::random_on_sphere(rng, 1e-3));
        MeanSpinVector b = to_means(oracle::random_on_sphere(rng, 1e-3));
        SuperpositionResult r = superpose_closed(a, b, SigmaTriple(0, 0, 0.5));
        EXPECT_EQ(r.means_out, a);
        EXPECT_EQ(r.normalization_t, 1);
        EXPECT_EQ(r.method, SuperposeMethod::closed_form);
    }
}

TEST(superpose_closed, sigma_pole_selects_second_state) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        MeanSpinVector a = to_means(oracle::random_on_sphere(rng, 1e-3));
        MeanSpinVector b = to_means(oracle::random_on_sphere(rng, 1e-3));
        SigmaTriple pole(0, 0, -0.5);
        EXPECT_LE(superpose_closed(a, b, pole).means_out.vec().sup_distance(b.vec()), 1e-12);
        EXPECT_LE(superpose_oracle(a, b, pole).means_out.vec().sup_distance(b.vec()), 1e-12);
    }
}

TEST(superpose_closed, self_superposition_is_idempotent) {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 1000) {
        MeanSpinVector a = to_means(oracle::random_on_sphere(rng, 1e-3));
        SigmaTriple sig = to_sigma(oracle::random_on_sphere(rng, 1e-3));
        if (oracle::brute_force_superpose(triple(a), triple(a), triple(sig)).t < 1e-6) {
            continue;
        }
        EXPECT_LE(superpose_closed(a, a, sig).means_out.vec().sup_distance(a.vec()), 1e-10);
        ++checked;
    }
}

TEST(superpose_closed, fixture_matches_brute_force) {
    MeanSpinVector a(0, 0, 0.5);
    MeanSpinVector b(0.5, 0, 0);
    SigmaTriple sig(0.5, 0, 0);
    auto ref = oracle::brute_force_superpose(triple(a), triple(b), triple(sig));
    double q = 1 / (2 * std::numbers::sqrt2);
    EXPECT_LE(oracle::sup_distance(ref.means, {q, 0, q}), 1e-15);

    SuperpositionResult r = superpose_closed(a, b, sig);
    EXPECT_LE(oracle::sup_distance(ref.means, triple(r.means_out)), 1e-12);
    EXPECT_NEAR(r.normalization_t, ref.t, 1e-12);
}

// The z mean with a bare (1/2 + sz) first term gives 0.75 here, outside
// [-1/2, 1/2]; the (1/2 + Sigma3)(1/2 + sz) form gives the correct 0.5.
TEST(superpose_closed, corrected_z_formula_regression) {
    MeanSpinVector up(0, 0, 0.5);
    SigmaTriple sig(0.5, 0, 0);
    EXPECT_DOUBLE_EQ(normalization_t(up, up, sig), 2);
    EXPECT_DOUBLE_EQ(uncorrected_z(up, up, sig), 0.75);
    EXPECT_DOUBLE_EQ(corrected_z(up, up, sig), 0.5);
    EXPECT_DOUBLE_EQ(superpose_closed(up, up, sig).means_out.sz(), 0.5);
}

TEST(superpose_closed, simplified_z_matches_unsimplified_form) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 2000; ++i) {
        RandomCase c = random_case(rng);
        double t = normalization_t(c.a, c.b, c.sig);
        EXPECT_NEAR(superpose_closed(c.a, c.b, c.sig).means_out.sz(), corrected_z(c.a, c.b, c.sig), 1e-12 / t);
    }
}

TEST(superpose_closed, agrees_with_oracle_and_brute_force) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 2000; ++i) {
        RandomCase c = random_case(rng);
        SuperpositionResult closed = superpose_closed(c.a, c.b, c.sig);
        SuperpositionResult oracle = superpose_oracle(c.a, c.b, c.sig);
        auto brute = oracle::brute_force_superpose(triple(c.a), triple(c.b), triple(c.sig));
        EXPECT_LE(closed.means_out.vec().sup_distance(oracle.means_out.vec()), 1e-10);
        EXPECT_NEAR(closed.normalization_t, oracle.normalization_t, 1e-12);
        EXPECT_LE(oracle::sup_distance(brute.means, triple(oracle.means_out)), 1e-9);
        EXPECT_NEAR(closed.normalization_t, brute.t, 1e-10);
        EXPECT_NEAR(closed.means_out.norm2(), 0.25, 1e-10);
        EXPECT_GT(closed.normalization_t, 0);
        EXPECT_LE(closed.normalization_t, 4);
    }
}

TEST(superpose_closed, preconditions) {
    MeanSpinVector up(0, 0, 0.5);
    MeanSpinVector down(0, 0, -0.5);
    SigmaTriple sig(0.5, 0, 0);
    EXPECT_EQ(code_of([&] { superpose_closed(up, down, sig); }), ErrorCode::PoleError);
    EXPECT_EQ(code_of([&] { superpose_oracle(up, down, sig); }), ErrorCode::PoleError);
    EXPECT_EQ(code_of([&] { superpose_closed(MeanSpinVector(0, 0, 0), up, sig); }), ErrorCode::NotPure);
    EXPECT_EQ(code_of([&] { superpose_closed(up, up, SigmaTriple(-0.5, 0, 0)); }),
              ErrorCode::DegenerateSuperposition);
    // Just inside the pole margin is accepted.
    double z = -0.5 + 2e-8;
    MeanSpinVector near_pole(std::sqrt(0.25 - z * z), 0, z);
    EXPECT_NO_THROW(superpose_checked(near_pole, up, sig));
}

TEST(superpose_checked, examples) {
    MeanSpinVector up(0, 0, 0.5);
    CheckedSuperposition f = superpose_checked(up, MeanSpinVector(0.5, 0, 0), SigmaTriple(0.5, 0, 0));
    double q = 1 / (2 * std::numbers::sqrt2);
    EXPECT_EQ(f.result.method, SuperposeMethod::closed_form);
    EXPECT_LE(f.result.means_out.vec().sup_distance({q, 0, q}), 1e-12);
    EXPECT_LE(f.means_deviation, 1e-8);
    EXPECT_LE(f.t_deviation, 1e-10);

    // |up> + i|+y>: brute force gives the frozen reference.
    auto ref = oracle::brute_force_superpose({0, 0, 0.5}, {0, 0.5, 0}, {0, 0.5, 0});
    CheckedSuperposition g = superpose_checked(up, MeanSpinVector(0, 0.5, 0), SigmaTriple(0, 0.5, 0));
    EXPECT_LE(oracle::sup_distance(ref.means, triple(g.result.means_out)), 1e-12);
    EXPECT_NEAR(g.result.normalization_t, ref.t, 1e-12);

    MeanSpinVector a(0.3, -0.4, 0);
    CheckedSuperposition id = superpose_checked(a, MeanSpinVector(0, 0.5, 0), SigmaTriple(0, 0, 0.5));
    EXPECT_EQ(id.result.means_out, a);
}

TEST(superpose_checked, reports_mismatch_from_slightly_impure_input_near_pole) {
    // |m|^2 - 1/4 = -9e-11 passes the purity gate, but with 1/2 + sz = 1e-6 the
    // closed form (unnormalized spinor) and the oracle (renormalized) diverge.
    double z = -0.5 + 1e-6;
    double r = std::sqrt(0.25 - z * z - 9e-11);
    MeanSpinVector a(r, 0, z);
    MeanSpinVector b(0, 0.5, 0);
    EXPECT_EQ(code_of([&] { superpose_checked(a, b, SigmaTriple(0.5, 0, 0)); }), ErrorCode::CrossCheckMismatch);
}
