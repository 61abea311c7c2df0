// Copyright 2026 The qtruth Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtruth/hilbert.hpp"
#include "qtruth/random.hpp"
#include "qtruth/spin.hpp"

namespace qtruth {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Oracle amplitudes written out from the half-azimuth convention.
Vector oracle_state(double theta, double phi) {
    Vector v(2);
    v << std::polar(std::cos(theta / 2), phi / 2), Complex{std::sin(theta / 2), 0.0};
    return v;
}

SpinAxis random_axis(Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return SpinAxis(std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng) * (1.0 - 1e-12));
}

TEST(SpinAxis, RangeChecks) {
    EXPECT_THROW(SpinAxis(-0.1, 0.0), RangeError);
    EXPECT_THROW(SpinAxis(kPi + 0.1, 0.0), RangeError);
    EXPECT_THROW(SpinAxis(1.0, 2.0 * kPi), RangeError);
    EXPECT_THROW(SpinAxis(std::nan(""), 0.0), RangeError);
    EXPECT_NO_THROW(SpinAxis::from_degrees(180.0, 359.0));
}

TEST(SpinState, Examples) {
    EXPECT_LE((spin_state(SpinAxis(0, 0)).amplitudes() - oracle_state(0, 0)).norm(), kTol);
    EXPECT_LE((spin_state(SpinAxis(kPi, 0)).amplitudes() - Vector::Unit(2, 1)).norm(), kTol);
    EXPECT_LE((spin_state(SpinAxis(kPi / 2, 0)).amplitudes() - Vector::Constant(2, kInvSqrt2)).norm(), kTol);
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        const SpinAxis a = random_axis(rng);
        EXPECT_LE((spin_state(a).amplitudes() - oracle_state(a.theta(), a.phi())).norm(), kTol);
    }
}

TEST(SpinTruth, Examples) {
    EXPECT_LE(distance(spin_truth(SpinAxis::z()), Operator::diagonal({1, 0})), kTol);
    EXPECT_LE(distance(spin_truth(SpinAxis(kPi / 2, 0)), Operator{{0.5, 0.5}, {0.5, 0.5}}), kTol);
}

TEST(SpinTruth, IsPlusOneEigenprojectorOfPauliAlongDirection) {
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const SpinAxis a = random_axis(rng);
        const Operator expected = 0.5 * (Operator::identity(2) + pauli_along(a.direction()));
        EXPECT_LE(distance(spin_truth(a), expected), 1e-12);
    }
}

TEST(AngleBetween, MatchesDirectionDotProduct) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const auto u = a.direction(), v = b.direction();
        const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        EXPECT_NEAR(std::cos(angle_between(a, b)), dot, 1e-12);
    }
}

TEST(RotationBetween, Examples) {
    const Operator same = rotation_between(SpinAxis(1.0, 2.0), SpinAxis(1.0, 2.0));
    EXPECT_NEAR(std::abs(same(0, 0)), 1.0, kTol);
    EXPECT_NEAR(std::abs(same(0, 1)), 0.0, kTol);
    const SpinAxis x(kPi / 2, 0);
    const Operator g = rotation_between(SpinAxis::z(), x);
    EXPECT_NEAR(std::abs(spin_state(x).inner(StateVector(spin_state(SpinAxis::z()).apply(g)))), 1.0, kTol);
}

TEST(RotationBetween, UnitaryAndMapsStatesIncludingAntipodes) {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const Operator g = rotation_between(a, b);
        EXPECT_TRUE(is_unitary(g));
        EXPECT_LE(distance(conjugate(spin_truth(a).op(), g), spin_truth(b).op()), 1e-10);
        EXPECT_LE(distance(conjugate(Operator::diagonal({1, 0}), rotation_between(SpinAxis::z(), b)),
                           spin_truth(b).op()),
                  1e-10);
    }
    const Operator flip = rotation_between(SpinAxis::z(), SpinAxis(kPi, 0));
    EXPECT_LE(distance(conjugate(Operator::diagonal({1, 0}), flip), Operator::diagonal({0, 1})), 1e-12);
}

// Rotations about conjugated axes are conjugated rotations.
TEST(SpinRotation, ConjugationRelation) {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const SpinAxis z1 = random_axis(rng), z2 = random_axis(rng);
        const double alpha = 0.37 * (i + 1);
        const Operator g = rotation_between(z1, z2);
        const Operator r1 = spin_rotation(z1.direction(), alpha);
        const Operator r2 = spin_rotation(z2.direction(), alpha);
        EXPECT_LE(distance(r2, g * r1 * g.adjoint()), 1e-10);
    }
}

TEST(Overlap, Examples) {
    const SpinAxis a(0.7, 1.1);
    EXPECT_NEAR(overlap_probability(a, a).total, 1.0, kTol);
    EXPECT_NEAR(overlap_probability(SpinAxis(kPi / 2, 0), SpinAxis(kPi / 2, 0)).interference, 0.5, kTol);
    EXPECT_NEAR(overlap_probability(SpinAxis::z(), SpinAxis(kPi, 0)).total, 0.0, kTol);
}

TEST(Overlap, DecompositionMatchesOracle) {
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const OverlapDecomposition d = overlap_probability(a, b);
        const Complex amp = oracle_state(a.theta(), a.phi()).dot(oracle_state(b.theta(), b.phi()));
        const double c1 = std::cos(a.theta() / 2), s1 = std::sin(a.theta() / 2);
        const double c2 = std::cos(b.theta() / 2), s2 = std::sin(b.theta() / 2);
        EXPECT_NEAR(d.total, std::norm(amp), 1e-12);
        EXPECT_NEAR(d.diagonal, c1 * c1 * c2 * c2 + s1 * s1 * s2 * s2, 1e-12);
        EXPECT_NEAR(d.interference,
                    0.5 * std::sin(a.theta()) * std::sin(b.theta()) * std::cos((b.phi() - a.phi()) / 2), 1e-12);
        EXPECT_NEAR(d.diagonal + d.interference, d.total, 1e-12);
        EXPECT_NEAR(d.total, std::pow(std::cos(angle_between(a, b) / 2), 2), 1e-10);
        EXPECT_NEAR(interference_closed_form(a, b), d.interference, 1e-12);
    }
}

TEST(InterferenceFromThree, Examples) {
    EXPECT_NEAR(interference_from_three(0.5, 0.5, 1.0), 0.5, kTol);
    EXPECT_NEAR(interference_from_three(1.0, 1.0, 1.0), 0.0, kTol);
    EXPECT_THROW(interference_from_three(1.5, 0.5, 0.5), RangeError);
}

TEST(InterferenceFromThree, RecoversInterferenceOnCoplanarGrid) {
    for (double phi : {0.0, 60.0, 250.0}) {
        for (int i = 0; i <= 12; ++i) {
            for (int j = 0; j <= 12; ++j) {
                const SpinAxis a = SpinAxis::from_degrees(15.0 * i, phi);
                const SpinAxis b = SpinAxis::from_degrees(15.0 * j, phi);
                const double w1 = up_probability(a, SpinAxis::z());
                const double w2 = up_probability(b, SpinAxis::z());
                EXPECT_NEAR(interference_from_three(w1, w2, up_probability(a, b)),
                            overlap_probability(a, b).interference, 1e-10);
            }
        }
    }
}

TEST(Cascade, Examples) {
    const SgCascade straight{SpinAxis::z(), {SpinAxis::z(), SpinAxis::z()}};
    EXPECT_NEAR(std::norm(cascade_amplitude(straight, {Branch::up, Branch::up})), 1.0, kTol);
    EXPECT_NEAR(std::norm(cascade_amplitude(straight, {Branch::down, Branch::up})), 0.0, kTol);

    const SpinAxis x(kPi / 2, 0.4);
    const OverlapDecomposition same = cascade_overlap({x, {SpinAxis::z(), x}});
    EXPECT_NEAR(same.total, 1.0, kTol);
    EXPECT_NEAR(same.diagonal, 0.5, kTol);
    EXPECT_NEAR(same.interference, 0.5, kTol);

    const OverlapDecomposition opposite = cascade_overlap({SpinAxis(kPi / 2, 0.0), {SpinAxis::z(), SpinAxis(kPi / 2, kPi)}});
    EXPECT_NEAR(opposite.interference, 0.0, kTol);
}

TEST(Cascade, MatchesDirectOverlapForZFirstMagnet) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const OverlapDecomposition c = cascade_overlap({a, {SpinAxis::z(), b}});
        const OverlapDecomposition d = overlap_probability(a, b);
        EXPECT_NEAR(c.total, d.total, 1e-12);
        EXPECT_NEAR(c.interference, d.interference, 1e-12);
    }
}

TEST(Cascade, DepthLimits) {
    EXPECT_THROW(cascade_overlap({SpinAxis::z(), {}}), RangeError);
    EXPECT_THROW(cascade_overlap({SpinAxis::z(), {SpinAxis::z(), SpinAxis::z(), SpinAxis::z()}}), UnsupportedError);
    const SpinAxis a(1.0, 0.0);
    EXPECT_NEAR(std::norm(cascade_amplitude({a, {SpinAxis::z()}}, {})), std::pow(std::cos(0.5), 2), kTol);
}

TEST(Quasiclassical, Example) {
    const QuasiclassicalRatio r = quasiclassical_ratio({1e-22, 1e-4, 1.8e-25, 1.0546e-34});
    EXPECT_NEAR(r.action_ratio, 1e-44 * 1e-12 / (1.0546e-34 * 1.8e-25), 1e-9);
    EXPECT_GT(r.action_ratio, 500.0);
    EXPECT_LT(r.action_ratio, 560.0);
    EXPECT_NEAR(r.dlambda_dz * r.action_ratio, 1.0, 1e-12);
    EXPECT_THROW(quasiclassical_ratio({0.0, 1.0, 1.0}), RangeError);
}

TEST(Detector, Validation) {
    EXPECT_THROW(DetectorModel({1.0}, {1.0, 0.0}), RangeError);
    EXPECT_THROW(DetectorModel({0.5}, {1.0}), NormalizationError);
    EXPECT_THROW(DetectorModel::uniform(0), RangeError);
    const DetectorModel d = DetectorModel::uniform(3);
    EXPECT_EQ(d.dim(), 12);
    EXPECT_THROW(d.index(Branch::up, 3), RangeError);
}

TEST(Collapse, Examples) {
    Rng rng(8);
    const DetectorModel d = DetectorModel::random(8, rng);
    const auto [u, v] = collapse_truths(1.0, 0.0, d);
    EXPECT_NEAR(u, 1.0, kTol);
    EXPECT_NEAR(v, 0.0, kTol);
    for (int i = 0; i < 5; ++i) {
        const DetectorModel di = DetectorModel::random(1 + i * 3, rng);
        const auto [a, b] = collapse_truths(kInvSqrt2, kInvSqrt2, di);
        EXPECT_NEAR(a, 0.5, kTol);
        EXPECT_NEAR(b, 0.5, kTol);
    }
    EXPECT_THROW(collapse_truths(1.0, 1.0, d), NormalizationError);
}

TEST(Collapse, CoarseStatementsAreExclusiveProjectors) {
    Rng rng(9);
    const CoarseSpin s = coarse_spin_statements(DetectorModel::random(5, rng));
    EXPECT_TRUE(is_projector(s.up));
    EXPECT_TRUE(is_projector(s.down));
    EXPECT_LE((s.up.op() * s.down.op()).frobenius_norm(), kTol);
}

TEST(Collapse, BornWeightsSumToOneAndIgnoreDetectorPhases) {
    Rng rng(10);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 30; ++i) {
        const long n = 1 + i % 10;
        const DetectorModel d = DetectorModel::random(n, rng);
        std::vector<double> pu(n), pd(n);
        for (long k = 0; k < n; ++k) {
            pu[k] = angle(rng);
            pd[k] = angle(rng);
        }
        const DetectorModel r = d.rephased(pu, pd);
        const StateVector c = random_state(2, rng);
        const auto [u, v] = collapse_truths(c[0], c[1], d);
        const auto [ru, rv] = collapse_truths(c[0], c[1], r);
        EXPECT_NEAR(u, std::norm(c[0]), 1e-10);
        EXPECT_NEAR(v, std::norm(c[1]), 1e-10);
        EXPECT_NEAR(u + v, 1.0, 1e-10);
        EXPECT_NEAR(ru, u, 1e-10);
        EXPECT_NEAR(rv, v, 1e-10);
    }
}

TEST(Collapse, EigenvectorsOfCoarseStatements) {
    Rng rng(11);
    const DetectorModel d = DetectorModel::random(4, rng);
    const CoarseSpin s = coarse_spin_statements(d);
    const StateVector c = random_state(4, rng);
    std::vector<Complex> coeffs(c.amplitudes().data(), c.amplitudes().data() + 4);
    const StateVector up = coarse_eigenvector(d, Branch::up, coeffs);
    EXPECT_LE((up.apply(s.up) - up.amplitudes()).norm(), 1e-10);
    EXPECT_LE(up.apply(s.down).norm(), 1e-10);
}

} // namespace
} // namespace qtruth
