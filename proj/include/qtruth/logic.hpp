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

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtruth/hilbert.hpp"

namespace qtruth {

/// Integer coefficients of a two-place truth operator
/// a + b*M1 + c*M2 + d*M1*M2.
struct ConnectiveCoefficients {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    friend bool operator==(const ConnectiveCoefficients &, const ConnectiveCoefficients &) = default;
};

enum class Connective { negation, conjunction, disjunction, exclusive_or, implication, equivalence };

struct NamedConnective {
    Connective connective;
    std::string_view name;
    ConnectiveCoefficients coefficients;
};

/// The six connectives identified from truth tables, in declaration order
/// of `Connective`.
std::span<const NamedConnective> named_connectives();
ConnectiveCoefficients coefficients(Connective c);
std::optional<std::string_view> connective_name(const ConnectiveCoefficients &c);

/// Checks the idempotency constraints a^2 = a, b^2 + 2ab = b,
/// c^2 + 2ac = c, d^2 + 2(ad + bc + bd + cd) = d.
bool verify_coefficients(const ConnectiveCoefficients &c);

/// All coefficient tuples in [-range, range]^4 passing verify_coefficients,
/// in lexicographic (a, b, c, d) order.
std::vector<ConnectiveCoefficients> enumerate_connectives(int range);

/// Result of combining truth operators.
///
/// `statement` is true when the inputs commute, i.e. when `op` is again a
/// truth operator. A false flag means `op` is an ordered product that does
/// not represent a statement; it is still returned because its averages are
/// meaningful under the trace conditions checked by `meaningful`.
struct Compiled {
    Operator op;
    bool statement = true;
};

/// a + b*m1 + c*m2 + d*m1*m2 on arbitrary operators; no flag bookkeeping.
Operator combine(const ConnectiveCoefficients &coeffs, const Operator &m1, const Operator &m2);

/// 1 - m
TruthOperator negate(const TruthOperator &m);

Compiled conjoin(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});
Compiled disjoin(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});
Compiled exclusive_or(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});
Compiled implies(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});
Compiled equivalent(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});
Compiled apply(Connective c, const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol = {});

/// Convex combination of rank-1 truth operators, kept unreduced.
class MixedState {
  public:
    /// Throws NormalizationError for negative weights or a weight sum away
    /// from 1, ProjectorError for non-rank-1 components, DimensionError for
    /// mixed dimensions or length mismatch.
    MixedState(std::vector<double> weights, std::vector<TruthOperator> projs, const Tolerances &tol = {});

    const std::vector<double> &weights() const noexcept { return weights_; }
    const std::vector<TruthOperator> &projectors() const noexcept { return projs_; }
    long dim() const { return projs_.front().dim(); }
    /// sum_j w_j P_j
    Operator density() const;

  private:
    std::vector<double> weights_;
    std::vector<TruthOperator> projs_;
};

/// tr(condition * m) for a unit-trace condition. Values within tol.eq
/// outside [0, 1] are clamped; anything further out, or with an imaginary
/// part above tol.eq, raises NumericalIntegrityError.
double conditional_truth(const TruthOperator &condition, const Operator &m, const Tolerances &tol = {});
double conditional_truth(const MixedState &condition, const Operator &m, const Tolerances &tol = {});

/// sum_j w_j tr(P_j m)
double mixture_truth(const MixedState &mix, const Operator &m, const Tolerances &tol = {});

/// The three trace conditions under which "m1 and m2" has an
/// order-independent conditional truth in `condition`, for both orderings
/// (k, l) = (1, 2) and (2, 1):
///   tr(L [mk, ml]), tr([L, mk] ml), tr(mk [ml, L]).
std::array<Complex, 6> meaningfulness_traces(const Operator &condition, const Operator &m1, const Operator &m2);
bool meaningful(const TruthOperator &condition, const TruthOperator &m1, const TruthOperator &m2,
                double tol = 1e-10);

/// sum_i values[i] * projs[i]. Throws OrthogonalityError when the family is
/// not mutually orthogonal, DimensionError on length mismatch.
Operator observable_from_spectrum(std::span<const double> values, std::span<const TruthOperator> projs,
                                  const Tolerances &tol = {});

/// <psi|obs|psi>. Throws HermiticityError for non-Hermitian obs.
double expectation(const StateVector &state, const Operator &obs, const Tolerances &tol = {});

} // namespace qtruth
