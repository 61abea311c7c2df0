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

#include "qtruth/epr.hpp"
#include "qtruth/hilbert.hpp"
#include "qtruth/logic.hpp"
#include "qtruth/random.hpp"

namespace qtruth {
namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

SpinAxis random_axis(Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return SpinAxis(std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng) * (1.0 - 1e-12));
}

TruthOperator singlet_condition() { return outer(singlet().state); }

TEST(Singlet, StateAndSigma) {
    const StateVector s = singlet().state;
    EXPECT_NEAR(s.amplitudes().norm(), 1.0, kTol);
    EXPECT_NEAR(std::abs(s[0]), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[1] + s[2]), 0.0, kTol);
    const Operator sigma = sigma_observable();
    EXPECT_LE((s.apply(sigma) + s.amplitudes()).norm(), kTol);
    const StateVector upup = StateVector::basis(4, 0);
    EXPECT_LE((upup.apply(sigma) - upup.amplitudes()).norm(), kTol);
}

TEST(Singlet, InvariantUnderCommonRotation) {
    Rng rng(1);
    const StateVector s = singlet().state;
    for (int i = 0; i < 20; ++i) {
        const Operator u = random_su2(rng);
        const StateVector r(s.apply(tensor(u, u)));
        EXPECT_NEAR(std::abs(s.inner(r)), 1.0, 1e-12);
    }
}

TEST(ChannelProjector, Examples) {
    EXPECT_LE(distance(channel_projector({Channel::a, SpinAxis::z(), SpinSign::up}), Operator::diagonal({1, 1, 0, 0})),
              kTol);
    EXPECT_LE(distance(channel_projector({Channel::b, SpinAxis::z(), SpinSign::down}), Operator::diagonal({0, 1, 0, 1})),
              kTol);
    EXPECT_EQ(statement_a(SpinAxis::z()).sign, SpinSign::up);
    EXPECT_EQ(statement_b(SpinAxis::z()).sign, SpinSign::down);
    EXPECT_EQ(statement_b(SpinAxis::z()).channel, Channel::b);
}

TEST(Truths, Examples) {
    const SpinAxis z = SpinAxis::z();
    EXPECT_NEAR(equivalence_truth(z, z), 1.0, kTol);
    EXPECT_NEAR(equivalence_truth(z, SpinAxis(kPi, 0)), 0.0, kTol);
    EXPECT_NEAR(equivalence_truth(z, SpinAxis(kPi / 2, 0)), 0.5, kTol);
    EXPECT_NEAR(conjunction_truth(z, z), 0.5, kTol);
    EXPECT_NEAR(conjunction_truth(z, SpinAxis(kPi, 0)), 0.0, kTol);
}

TEST(Truths, EquivalenceViaLogicModuleOnEqualAxes) {
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        const SpinAxis a = random_axis(rng);
        const TruthOperator ma = channel_projector(statement_a(a));
        const TruthOperator mb = channel_projector(statement_b(a));
        const Compiled iff = equivalent(ma, mb);
        EXPECT_TRUE(iff.statement);
        EXPECT_NEAR(conditional_truth(singlet_condition(), iff.op), 1.0, 1e-12);
    }
}

TEST(Truths, ClosedFormsOnSweep) {
    for (int i = 0; i < 15; ++i) {
        for (int j = 0; j < 15; ++j) {
            const SpinAxis a = SpinAxis::from_degrees(12.0 * i, 23.0 * j);
            const SpinAxis b = SpinAxis::from_degrees(12.0 * j, 17.0 * i);
            const double c = std::cos(angle_between(a, b) / 2);
            const double eq = equivalence_truth(a, b);
            EXPECT_NEAR(eq, c * c, 1e-10);
            EXPECT_NEAR(eq, 2.0 * conjunction_truth(a, b), 1e-10);
            EXPECT_NEAR(correlation(a, b), -std::cos(angle_between(a, b)), 1e-10);
        }
    }
}

TEST(Truths, ConjunctionOrderIrrelevant) {
    Rng rng(3);
    for (int i = 0; i < 25; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        EXPECT_NEAR(conjunction_truth(a, b, true), conjunction_truth(a, b, false), 1e-12);
    }
}

TEST(Truths, MarginalsAreHalfAndChannelsMeaningful) {
    Rng rng(4);
    const TruthOperator cond = singlet_condition();
    for (int i = 0; i < 25; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const TruthOperator ma = channel_projector(statement_a(a));
        const TruthOperator mb = channel_projector(statement_b(b));
        EXPECT_NEAR(conditional_truth(cond, ma), 0.5, 1e-12);
        EXPECT_NEAR(conditional_truth(cond, mb), 0.5, 1e-12);
        EXPECT_TRUE(meaningful(cond, ma, mb));
        EXPECT_NEAR(equivalence_truth(ma, mb), equivalence_truth(a, b), 1e-12);
        EXPECT_NEAR(conjunction_truth(ma, mb), conjunction_truth(a, b), 1e-12);
    }
}

// Conjugating both channel projectors by U (x) U leaves all singlet truths unchanged.
TEST(Truths, InvariantUnderCommonAnalyzerRotation) {
    Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        const SpinAxis a = random_axis(rng), b = random_axis(rng);
        const Operator uu = [&] {
            const Operator u = random_su2(rng);
            return tensor(u, u);
        }();
        const TruthOperator ma = channel_projector(statement_a(a)), mb = channel_projector(statement_b(b));
        const TruthOperator ra = conjugate(ma, uu), rb = conjugate(mb, uu);
        EXPECT_NEAR(equivalence_truth(ra, rb), equivalence_truth(ma, mb), 1e-10);
        EXPECT_NEAR(conjunction_truth(ra, rb), conjunction_truth(ma, mb), 1e-10);
        const Operator obs_a = 2.0 * ma.op() - Operator::identity(4);
        const Operator obs_b = Operator::identity(4) - 2.0 * mb.op();
        const Operator robs_a = 2.0 * ra.op() - Operator::identity(4);
        const Operator robs_b = Operator::identity(4) - 2.0 * rb.op();
        EXPECT_NEAR(correlation(robs_a * robs_b), correlation(obs_a * obs_b), 1e-10);
        EXPECT_NEAR(correlation(obs_a * obs_b), correlation(a, b), 1e-10);
    }
}

TEST(Chsh, Examples) {
    const SpinAxis z = SpinAxis::z();
    EXPECT_NEAR(correlation(z, z), -1.0, kTol);
    EXPECT_NEAR(chsh(SpinAxis::from_degrees(0), SpinAxis::from_degrees(90), SpinAxis::from_degrees(45),
                     SpinAxis::from_degrees(135)),
                2.0 * std::numbers::sqrt2, 1e-10);
    EXPECT_NEAR(chsh(z, z, z, z), 2.0, 1e-10);
}

TEST(Chsh, SearchReachesBoundWithoutExceedingIt) {
    for (std::uint64_t seed : {1u, 7u, 2026u}) {
        const ChshReport r = chsh_search(seed);
        EXPECT_EQ(r.evaluated, 10000);
        EXPECT_GE(r.best, 2.8284 - 1e-3);
        EXPECT_LE(r.best, 2.0 * std::numbers::sqrt2 + 1e-9);
        EXPECT_NEAR(chsh(r.axes[0], r.axes[1], r.axes[2], r.axes[3]), r.best, 1e-12);
        for (const auto &a : r.axes) {
            EXPECT_EQ(a.phi(), 0.0);
        }
    }
}

TEST(Chsh, SerialAndParallelSearchesAgree) {
    ChshSearchOptions serial{20, 50, false, Execution::serial};
    ChshSearchOptions parallel = serial;
    parallel.execution = Execution::parallel;
    const ChshReport a = chsh_search(5, serial), b = chsh_search(5, parallel);
    EXPECT_EQ(a.best, b.best);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(a.axes[i].theta(), b.axes[i].theta());
        EXPECT_EQ(a.axes[i].phi(), b.axes[i].phi());
    }
    EXPECT_LE(a.best, 2.0 * std::numbers::sqrt2 + 1e-9);
    EXPECT_THROW(chsh_search(1, {0, 10}), RangeError);
}

} // namespace
} // namespace qtruth
