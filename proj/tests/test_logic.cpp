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

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "qtruth/hilbert.hpp"
#include "qtruth/logic.hpp"
#include "qtruth/random.hpp"

namespace qtruth {
namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TruthOperator diag(std::initializer_list<double> d) { return TruthOperator(Operator::diagonal(d)); }
TruthOperator up_z() { return diag({1, 0}); }
TruthOperator up_x() { return outer(StateVector{kInvSqrt2, kInvSqrt2}); }
TruthOperator up_xz(double theta) { return outer(StateVector{std::cos(theta / 2), std::sin(theta / 2)}); }

// ---- connectives --------------------------------------------------------------

TEST(Connectives, NamedCoefficientsSatisfyConstraints) {
    EXPECT_TRUE(verify_coefficients({0, 0, 0, 1}));
    EXPECT_TRUE(verify_coefficients({1, -1, 0, 1}));
    EXPECT_FALSE(verify_coefficients({0, 2, 0, 0}));
    for (const auto &n : named_connectives()) {
        EXPECT_TRUE(verify_coefficients(n.coefficients)) << n.name;
        EXPECT_EQ(connective_name(n.coefficients), n.name);
    }
    EXPECT_EQ(coefficients(Connective::exclusive_or), (ConnectiveCoefficients{0, 1, 1, -2}));
    EXPECT_EQ(coefficients(Connective::equivalence), (ConnectiveCoefficients{1, -1, -1, 2}));
}

// Oracle: each Boolean function f of two bits gives a = f00, b = f10 - f00,
// c = f01 - f00, d = f11 - f10 - f01 + f00.
TEST(Connectives, EnumerationMatchesBooleanFunctions) {
    std::set<std::tuple<int, int, int, int>> oracle;
    for (int f = 0; f < 16; ++f) {
        const int f00 = f & 1, f10 = (f >> 1) & 1, f01 = (f >> 2) & 1, f11 = (f >> 3) & 1;
        oracle.emplace(f00, f10 - f00, f01 - f00, f11 - f10 - f01 + f00);
    }
    std::set<std::tuple<int, int, int, int>> found;
    for (const auto &c : enumerate_connectives(2)) {
        found.emplace(c.a, c.b, c.c, c.d);
    }
    EXPECT_EQ(found.size(), 16u);
    EXPECT_EQ(found, oracle);
    EXPECT_EQ(enumerate_connectives(5).size(), 16u);
    EXPECT_LT(enumerate_connectives(1).size(), 16u);
    EXPECT_THROW(enumerate_connectives(-1), RangeError);
}

TEST(Connectives, EveryEnumeratedConnectiveIsProjectorOnCommutingInputs) {
    Rng rng(4);
    const Operator u = random_unitary(4, rng);
    const TruthOperator m1 = conjugate(diag({1, 1, 0, 0}), u), m2 = conjugate(diag({1, 0, 1, 0}), u);
    for (const auto &c : enumerate_connectives(2)) {
        EXPECT_TRUE(is_projector(combine(c, m1, m2)));
    }
}

TEST(Negate, Examples) {
    EXPECT_LE(distance(negate(diag({1, 0})), Operator::diagonal({0, 1})), kTol);
    EXPECT_LE(distance(negate(TruthOperator(Operator::identity(3))), Operator::zero(3)), kTol);
    EXPECT_LE(distance(negate(diag({1, 0, 0})), Operator::diagonal({0, 1, 1})), kTol);
}

TEST(Conjoin, Examples) {
    const Compiled a = conjoin(diag({1, 1, 0}), diag({0, 1, 1}));
    EXPECT_TRUE(a.statement);
    EXPECT_LE(distance(a.op, Operator::diagonal({0, 1, 0})), kTol);
    EXPECT_LE(distance(conjoin(diag({1, 0}), diag({0, 1})).op, Operator::zero(2)), kTol);
    const Compiled b = conjoin(up_z(), up_x());
    EXPECT_FALSE(b.statement);
    EXPECT_GT(distance(b.op * b.op, b.op), 0.1);
}

TEST(Disjoin, Examples) {
    EXPECT_LE(distance(disjoin(diag({1, 0, 0}), diag({0, 1, 0})).op, Operator::diagonal({1, 1, 0})), kTol);
    EXPECT_LE(distance(disjoin(up_x(), up_x()).op, up_x().op()), kTol);
    EXPECT_LE(distance(disjoin(diag({1, 0}), diag({0, 1})).op, Operator::identity(2)), kTol);
}

TEST(OtherConnectives, Examples) {
    EXPECT_LE(distance(exclusive_or(diag({1, 0}), diag({1, 0})).op, Operator::zero(2)), kTol);
    EXPECT_LE(distance(implies(diag({1, 0}), diag({1, 0})).op, Operator::identity(2)), kTol);
    EXPECT_LE(distance(equivalent(diag({1, 0}), diag({0, 1})).op, Operator::zero(2)), kTol);
    EXPECT_THROW(conjoin(diag({1, 0}), diag({1, 0, 0})), DimensionError);
}

TEST(OperatorLaws, DeMorganHoldsEvenForNoncommutingInputs) {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        const long dim = 2 + i % 5;
        const TruthOperator m1 = random_projector(dim, 1, rng), m2 = random_projector(dim, 1, rng);
        const Operator lhs = Operator::identity(dim) - conjoin(m1, m2).op;
        EXPECT_LE(distance(lhs, disjoin(negate(m1), negate(m2)).op), 1e-10);
        EXPECT_LE(distance(lhs, Operator::identity(dim) - m1.op() * m2.op()), 1e-10);
    }
}

TEST(OperatorLaws, XorIsDisjunctionMinusConjunctionForCommutingInputs) {
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
        const long dim = 3 + i % 4;
        const Operator u = random_unitary(dim, rng);
        std::bernoulli_distribution coin;
        std::vector<double> d1(dim), d2(dim);
        for (long k = 0; k < dim; ++k) {
            d1[k] = coin(rng);
            d2[k] = coin(rng);
        }
        const TruthOperator m1 = conjugate(TruthOperator(Operator::diagonal(d1)), u);
        const TruthOperator m2 = conjugate(TruthOperator(Operator::diagonal(d2)), u);
        EXPECT_LE(distance(exclusive_or(m1, m2).op, disjoin(m1, m2).op - conjoin(m1, m2).op), 1e-10);
    }
}

// ---- conditional truth ----------------------------------------------------------

TEST(ConditionalTruth, Examples) {
    EXPECT_NEAR(conditional_truth(up_z(), up_z()), 1.0, kTol);
    EXPECT_NEAR(conditional_truth(up_z(), up_x()), 0.5, kTol);
    EXPECT_THROW(conditional_truth(diag({1, 1}), up_z()), NormalizationError);
}

TEST(ConditionalTruth, ComplementLawAndBounds) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const long dim = 2 + i % 15;
        const TruthOperator cond = outer(random_state(dim, rng));
        const TruthOperator m = random_projector(dim, 1 + i % (dim - 1), rng);
        const double t = conditional_truth(cond, m);
        EXPECT_NEAR(conditional_truth(cond, negate(m)), 1.0 - t, 1e-12);
        EXPECT_GE(t, 0.0);
        EXPECT_LE(t, 1.0);
    }
}

TEST(ConditionalTruth, SymmetricForRankOnePairs) {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const TruthOperator a = outer(random_state(5, rng)), b = outer(random_state(5, rng));
        EXPECT_NEAR(conditional_truth(a, b), conditional_truth(b, a), 1e-12);
    }
}

TEST(ConditionalTruth, ModusPonens) {
    Rng rng(14);
    for (int i = 0; i < 30; ++i) {
        const long dim = 4;
        const Operator u = random_unitary(dim, rng);
        const TruthOperator m1 = conjugate(diag({1, 1, 0, 0}), u);
        const TruthOperator m2 = conjugate(diag({1, 1, 1, 0}), u);
        // phi in the range of m1, so m1|phi> = |phi> and m1 -> m2 holds.
        const Vector phi = u.matrix() * (Vector(4) << Complex{0.6, 0.0}, Complex{0.0, 0.8}, 0.0, 0.0).finished();
        const TruthOperator cond = outer(StateVector(phi));
        ASSERT_NEAR(conditional_truth(cond, implies(m1, m2).op), 1.0, 1e-10);
        EXPECT_NEAR(conditional_truth(cond, m2), 1.0, 1e-10);
    }
}

// ---- meaningfulness -------------------------------------------------------------

TEST(Meaningful, CommutingPairsAlwaysMeaningful) {
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        EXPECT_TRUE(meaningful(outer(random_state(3, rng)), diag({1, 0, 0}), diag({1, 1, 0})));
    }
}

TEST(Meaningful, ConditionInsideM1Range) {
    EXPECT_TRUE(meaningful(up_x(), up_x(), up_z()));
    EXPECT_TRUE(meaningful(up_z(), up_z(), up_x()));
}

// For real (xz-plane) projectors every trace is real, so the ordered products
// always agree; an out-of-plane condition is needed to break the condition.
TEST(Meaningful, RealCoplanarTriplesAlwaysMeaningful) {
    EXPECT_TRUE(meaningful(up_z(), up_x(), up_xz(std::acos(-1.0) / 4)));
    for (int i = 1; i < 12; ++i) {
        EXPECT_TRUE(meaningful(up_xz(0.3 * i), up_xz(0.5 * i + 0.1), up_xz(0.2 * i + 1.0)));
    }
}

TEST(Meaningful, OutOfPlaneConditionFails) {
    const TruthOperator minus_y = outer(StateVector{kInvSqrt2, Complex{0.0, -kInvSqrt2}});
    const auto traces = meaningfulness_traces(minus_y, up_x(), up_z());
    const double worst = std::abs(*std::max_element(traces.begin(), traces.end(), [](Complex a, Complex b) {
        return std::abs(a) < std::abs(b);
    }));
    EXPECT_NEAR(worst, 0.5, 1e-12);
    EXPECT_FALSE(meaningful(minus_y, up_x(), up_z()));
}

TEST(Meaningful, ImplicationIdentityHoldsWhenMeaningful) {
    Rng rng(16);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 30; ++i) {
        const long dim = 3;
        const TruthOperator cond = outer(random_state(dim, rng));
        const TruthOperator m1 = random_projector(dim, 1 + i % 2, rng);
        // m2 commuting with m1 guarantees meaningfulness.
        const TruthOperator m2 = i % 2 == 0 ? negate(m1) : m1;
        if (!meaningful(cond, m1, m2)) {
            continue;
        }
        ++checked;
        const double lhs = conditional_truth(cond, implies(m1, m2).op);
        const double rhs = 1.0 - conditional_truth(cond, m1) + conditional_truth(cond, conjoin(m1, m2).op);
        EXPECT_NEAR(lhs, rhs, 1e-10);
    }
    EXPECT_GE(checked, 30);
}

// ---- mixtures, observables ----------------------------------------------------------

TEST(Mixture, Examples) {
    const MixedState half({0.5, 0.5}, {up_z(), diag({0, 1})});
    EXPECT_NEAR(mixture_truth(half, up_z()), 0.5, kTol);
    EXPECT_NEAR(mixture_truth(half, up_x()), 0.5, kTol);
    EXPECT_LE(distance(half.density(), 0.5 * Operator::identity(2)), kTol);
    const MixedState pure({1.0}, {up_x()});
    EXPECT_NEAR(mixture_truth(pure, up_z()), conditional_truth(up_x(), up_z()), kTol);
    EXPECT_NEAR(conditional_truth(half, up_x()), 0.5, kTol);
}

TEST(Mixture, Validation) {
    EXPECT_THROW(MixedState({0.5, 0.4}, {up_z(), up_x()}), NormalizationError);
    EXPECT_THROW(MixedState({-0.5, 1.5}, {up_z(), up_x()}), NormalizationError);
    EXPECT_THROW(MixedState({1.0}, {up_z(), up_x()}), DimensionError);
    EXPECT_THROW(MixedState({1.0}, {diag({1, 1, 0})}), ProjectorError);
}

TEST(Observable, FromSpectrum) {
    const std::vector<double> pm{1.0, -1.0};
    const std::vector<TruthOperator> zf{diag({1, 0}), diag({0, 1})};
    EXPECT_LE(distance(observable_from_spectrum(pm, zf), Operator::diagonal({1, -1})), kTol);
    const std::vector<double> five{5.0};
    const std::vector<TruthOperator> id1{TruthOperator(Operator::identity(1))};
    EXPECT_LE(distance(observable_from_spectrum(five, id1), Operator::diagonal({5})), kTol);
    const std::vector<double> v123{1, 2, 3};
    EXPECT_LE(distance(observable_from_spectrum(v123, basis_projectors(3)), Operator::diagonal({1, 2, 3})), kTol);
    const std::vector<TruthOperator> overlapping{up_z(), up_x()};
    EXPECT_THROW(observable_from_spectrum(pm, overlapping), OrthogonalityError);
}

TEST(Observable, Expectation) {
    const Operator sz = Operator::diagonal({1, -1});
    EXPECT_NEAR(expectation(StateVector{1.0, 0.0}, sz), 1.0, kTol);
    EXPECT_NEAR(expectation(StateVector{kInvSqrt2, kInvSqrt2}, sz), 0.0, kTol);
    EXPECT_THROW(expectation(StateVector{1.0, 0.0}, Operator{{0.0, 1.0}, {0.0, 0.0}}), HermiticityError);
}

} // namespace
} // namespace qtruth
