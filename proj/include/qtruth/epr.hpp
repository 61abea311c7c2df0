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
#include <cstdint>

#include "qtruth/logic.hpp"
#include "qtruth/spin.hpp"

namespace qtruth {

/// Two spin-1/2 particles, channel a in the left tensor factor.
struct EprPair {
    StateVector state;
};

/// (|up,down> - |down,up>) / sqrt(2) in the Z (x) Z basis.
EprPair singlet();

/// (1/2)(1 + sigma_a . sigma_b): +1 on the triplet, -1 on the singlet.
Operator sigma_observable();

enum class Channel { a, b };
enum class SpinSign { up, down };

/// "S_axis(channel) = sign/2".
struct ChannelStatement {
    Channel channel = Channel::a;
    SpinAxis axis = SpinAxis::z();
    SpinSign sign = SpinSign::up;
};

/// M_a: spin up along `axis` in channel a.
ChannelStatement statement_a(const SpinAxis &axis);
/// M_b: spin down along `axis` in channel b.
ChannelStatement statement_b(const SpinAxis &axis);

/// Single-spin projector embedded in its channel (P (x) 1 or 1 (x) P); the
/// down sign uses 1 - P_up.
TruthOperator channel_projector(const ChannelStatement &cs);

/// Conditional truth of M_a <-> M_b in the singlet.
double equivalence_truth(const SpinAxis &za, const SpinAxis &zb);
/// Conditional truth of M_a and M_b in the singlet; `a_first` selects the
/// cofactor order of the product.
double conjunction_truth(const SpinAxis &za, const SpinAxis &zb, bool a_first = true);

/// Same quantities for arbitrary channel projectors, e.g. ones rotated by a
/// common transformation.
double equivalence_truth(const TruthOperator &ma, const TruthOperator &mb);
double conjunction_truth(const TruthOperator &ma, const TruthOperator &mb);

/// <psi| sigma_za (x) sigma_zb |psi> for the singlet.
double correlation(const SpinAxis &za, const SpinAxis &zb);
/// Correlation of two-spin observable `obs` in the singlet.
double correlation(const Operator &obs);

/// |E(a,b) - E(a,b') + E(a',b) + E(a',b')|
double chsh(const SpinAxis &a, const SpinAxis &a_prime, const SpinAxis &b, const SpinAxis &b_prime);

enum class Execution { serial, parallel };

struct ChshSearchOptions {
    long batches = 100;
    long batch_size = 100;
    /// Restrict axes to the xz half-plane (phi = 0, theta in [0, pi]).
    bool coplanar = true;
    Execution execution = Execution::parallel;
};

struct ChshReport {
    double best = 0.0;
    std::array<SpinAxis, 4> axes{SpinAxis::z(), SpinAxis::z(), SpinAxis::z(), SpinAxis::z()};
    long evaluated = 0;
};

/// Seeded adaptive random search over analyzer quadruples (a, a', b, b').
///
/// The first batch is uniform; each later batch perturbs the incumbent with
/// Gaussian steps whose width shrinks geometrically. Candidates are drawn
/// serially, evaluated in parallel, and ties go to the lowest index, so the
/// result depends only on the seed and the options.
ChshReport chsh_search(std::uint64_t seed, const ChshSearchOptions &opts = {});

} // namespace qtruth
