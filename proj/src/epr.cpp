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

#include "qtruth/epr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qtruth/hilbert.hpp"

namespace qtruth {

namespace {

constexpr double kPi = std::numbers::pi;

const TruthOperator &singlet_projector() {
    static const TruthOperator p = outer(singlet().state);
    return p;
}

Operator embed(Channel channel, const Operator &single) {
    return channel == Channel::a ? tensor(single, Operator::identity(2)) : tensor(Operator::identity(2), single);
}

// 2 P_up - 1: the spin observable along `axis`, built from the same
// projector the logical statements use.
Operator spin_observable(const SpinAxis &axis) {
    return 2.0 * spin_truth(axis).op() - Operator::identity(2);
}

} // namespace

EprPair singlet() {
    const double h = 1.0 / std::sqrt(2.0);
    return {StateVector{0.0, h, -h, 0.0}};
}

Operator sigma_observable() {
    Operator s = Operator::identity(4);
    s += tensor(pauli_x(), pauli_x());
    s += tensor(pauli_y(), pauli_y());
    s += tensor(pauli_z(), pauli_z());
    return 0.5 * s;
}

ChannelStatement statement_a(const SpinAxis &axis) { return {Channel::a, axis, SpinSign::up}; }

ChannelStatement statement_b(const SpinAxis &axis) { return {Channel::b, axis, SpinSign::down}; }

TruthOperator channel_projector(const ChannelStatement &cs) {
    const TruthOperator up = spin_truth(cs.axis);
    const TruthOperator single = cs.sign == SpinSign::up ? up : negate(up);
    return TruthOperator::trusted(embed(cs.channel, single));
}

double equivalence_truth(const TruthOperator &ma, const TruthOperator &mb) {
    return conditional_truth(singlet_projector(), equivalent(ma, mb).op);
}

double conjunction_truth(const TruthOperator &ma, const TruthOperator &mb) {
    return conditional_truth(singlet_projector(), conjoin(ma, mb).op);
}

double equivalence_truth(const SpinAxis &za, const SpinAxis &zb) {
    return equivalence_truth(channel_projector(statement_a(za)), channel_projector(statement_b(zb)));
}

double conjunction_truth(const SpinAxis &za, const SpinAxis &zb, bool a_first) {
    const TruthOperator ma = channel_projector(statement_a(za));
    const TruthOperator mb = channel_projector(statement_b(zb));
    return a_first ? conjunction_truth(ma, mb) : conjunction_truth(mb, ma);
}

double correlation(const Operator &obs) {
    return expectation(singlet().state, obs);
}

double correlation(const SpinAxis &za, const SpinAxis &zb) {
    return correlation(tensor(spin_observable(za), spin_observable(zb)));
}

double chsh(const SpinAxis &a, const SpinAxis &a_prime, const SpinAxis &b, const SpinAxis &b_prime) {
    return std::abs(correlation(a, b) - correlation(a, b_prime) + correlation(a_prime, b) +
                    correlation(a_prime, b_prime));
}

ChshReport chsh_search(std::uint64_t seed, const ChshSearchOptions &opts) {
    if (opts.batches < 1 || opts.batch_size < 1) {
        throw RangeError("chsh_search: batches and batch_size must be >= 1");
    }
    // Candidate layout: theta[4] then phi[4].
    using Candidate = std::array<double, 8>;
    const auto to_axes = [](const Candidate &c) {
        return std::array<SpinAxis, 4>{SpinAxis(c[0], c[4]), SpinAxis(c[1], c[5]), SpinAxis(c[2], c[6]),
                                       SpinAxis(c[3], c[7])};
    };
    const auto legalize = [&](Candidate &c) {
        for (int i = 0; i < 4; ++i) {
            c[i] = std::clamp(c[i], 0.0, kPi);
            c[4 + i] = opts.coplanar ? 0.0 : std::fmod(std::fmod(c[4 + i], 2.0 * kPi) + 2.0 * kPi, 2.0 * kPi);
            if (c[4 + i] >= 2.0 * kPi) {
                c[4 + i] = 0.0;
            }
        }
    };

    Rng rng(seed);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
    std::normal_distribution<double> step(0.0, 1.0);

    const double sigma0 = 0.5;
    const double sigma_end = 1e-3;
    const double decay =
        opts.batches > 1 ? std::pow(sigma_end / sigma0, 1.0 / static_cast<double>(opts.batches - 1)) : 1.0;

    Candidate best{};
    double best_value = -1.0;
    long evaluated = 0;
    const auto n = static_cast<std::size_t>(opts.batch_size);
    std::vector<Candidate> batch(n);
    std::vector<double> values(n);
    double sigma = sigma0;

    for (long round = 0; round < opts.batches; ++round) {
        for (auto &c : batch) {
            for (int i = 0; i < 4; ++i) {
                if (round == 0) {
                    c[i] = theta_dist(rng);
                    c[4 + i] = opts.coplanar ? 0.0 : phi_dist(rng);
                } else {
                    c[i] = best[i] + sigma * step(rng);
                    c[4 + i] = opts.coplanar ? 0.0 : best[4 + i] + sigma * step(rng);
                }
            }
            legalize(c);
        }
        const long count = opts.batch_size;
        if (opts.execution == Execution::parallel) {
#pragma omp parallel for schedule(static)
            for (long i = 0; i < count; ++i) {
                const auto ax = to_axes(batch[static_cast<std::size_t>(i)]);
                values[static_cast<std::size_t>(i)] = chsh(ax[0], ax[1], ax[2], ax[3]);
            }
        } else {
            for (long i = 0; i < count; ++i) {
                const auto ax = to_axes(batch[static_cast<std::size_t>(i)]);
                values[static_cast<std::size_t>(i)] = chsh(ax[0], ax[1], ax[2], ax[3]);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (values[i] > best_value) {
                best_value = values[i];
                best = batch[i];
            }
        }
        evaluated += count;
        if (round > 0) {
            sigma *= decay;
        }
    }
    return {best_value, to_axes(best), evaluated};
}

} // namespace qtruth
