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

#include "qtruth/logic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qtruth {

namespace {

constexpr NamedConnective kNamed[] = {
    {Connective::negation, "negation", {1, -1, 0, 0}},
    {Connective::conjunction, "conjunction", {0, 0, 0, 1}},
    {Connective::disjunction, "disjunction", {0, 1, 1, -1}},
    {Connective::exclusive_or, "exclusive_or", {0, 1, 1, -2}},
    {Connective::implication, "implication", {1, -1, 0, 1}},
    {Connective::equivalence, "equivalence", {1, -1, -1, 2}},
};

void require_same_dim(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("connective operands have different dimensions");
    }
}

double checked_truth(Complex z, const Tolerances &tol) {
    if (std::abs(z.imag()) > tol.eq || z.real() < -tol.eq || z.real() > 1.0 + tol.eq) {
        std::ostringstream os;
        os.precision(17);
        os << "conditional truth out of bounds: " << z.real() << (z.imag() < 0 ? " - " : " + ")
           << std::abs(z.imag()) << "i";
        throw NumericalIntegrityError(os.str());
    }
    return std::clamp(z.real(), 0.0, 1.0);
}

} // namespace

std::span<const NamedConnective> named_connectives() { return kNamed; }

ConnectiveCoefficients coefficients(Connective c) {
    for (const auto &n : kNamed) {
        if (n.connective == c) {
            return n.coefficients;
        }
    }
    throw RangeError("unknown connective");
}

std::optional<std::string_view> connective_name(const ConnectiveCoefficients &c) {
    for (const auto &n : kNamed) {
        if (n.coefficients == c) {
            return n.name;
        }
    }
    return std::nullopt;
}

bool verify_coefficients(const ConnectiveCoefficients &k) {
    const long a = k.a, b = k.b, c = k.c, d = k.d;
    return a * a == a && b * b + 2 * a * b == b && c * c + 2 * a * c == c &&
           d * d + 2 * (a * d + b * c + b * d + c * d) == d;
}

std::vector<ConnectiveCoefficients> enumerate_connectives(int range) {
    if (range < 0) {
        throw RangeError("enumerate_connectives: range must be >= 0");
    }
    std::vector<ConnectiveCoefficients> out;
    for (int a = -range; a <= range; ++a) {
        for (int b = -range; b <= range; ++b) {
            for (int c = -range; c <= range; ++c) {
                for (int d = -range; d <= range; ++d) {
                    const ConnectiveCoefficients k{a, b, c, d};
                    if (verify_coefficients(k)) {
                        out.push_back(k);
                    }
                }
            }
        }
    }
    return out;
}

Operator combine(const ConnectiveCoefficients &k, const Operator &m1, const Operator &m2) {
    require_same_dim(m1, m2);
    const long n = m1.dim();
    Operator out = static_cast<double>(k.a) * Operator::identity(n);
    if (k.b != 0) {
        out += static_cast<double>(k.b) * m1;
    }
    if (k.c != 0) {
        out += static_cast<double>(k.c) * m2;
    }
    if (k.d != 0) {
        out += static_cast<double>(k.d) * (m1 * m2);
    }
    return out;
}

TruthOperator negate(const TruthOperator &m) {
    return TruthOperator::trusted(Operator::identity(m.dim()) - m.op());
}

Compiled apply(Connective c, const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    require_same_dim(m1, m2);
    if (c == Connective::negation) {
        return {negate(m1).op(), true};
    }
    return {combine(coefficients(c), m1, m2), commute(m1, m2, tol)};
}

Compiled conjoin(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    return apply(Connective::conjunction, m1, m2, tol);
}

Compiled disjoin(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    return apply(Connective::disjunction, m1, m2, tol);
}

Compiled exclusive_or(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    return apply(Connective::exclusive_or, m1, m2, tol);
}

Compiled implies(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    return apply(Connective::implication, m1, m2, tol);
}

Compiled equivalent(const TruthOperator &m1, const TruthOperator &m2, const Tolerances &tol) {
    return apply(Connective::equivalence, m1, m2, tol);
}

MixedState::MixedState(std::vector<double> weights, std::vector<TruthOperator> projs, const Tolerances &tol)
    : weights_(std::move(weights)), projs_(std::move(projs)) {
    if (weights_.empty() || weights_.size() != projs_.size()) {
        throw DimensionError("mixed state needs one weight per projector");
    }
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw NormalizationError("mixed state weights must be finite and nonnegative");
        }
    }
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(total - 1.0) > tol.norm) {
        throw NormalizationError("mixed state weights must sum to 1");
    }
    const long n = projs_.front().dim();
    for (const auto &p : projs_) {
        if (p.dim() != n) {
            throw DimensionError("mixed state projectors have different dimensions");
        }
        if (std::abs(p.rank() - 1.0) > tol.norm * static_cast<double>(n)) {
            throw ProjectorError("mixed state components must be rank-1 projectors");
        }
    }
}

Operator MixedState::density() const {
    Operator rho = Operator::zero(dim());
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        rho += weights_[j] * projs_[j].op();
    }
    return rho;
}

double conditional_truth(const TruthOperator &condition, const Operator &m, const Tolerances &tol) {
    const Complex tr = condition.op().trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol.norm * static_cast<double>(condition.dim())) {
        throw NormalizationError("condition must have unit trace (an elementary statement)");
    }
    return checked_truth(trace_product(condition.op(), m), tol);
}

double mixture_truth(const MixedState &mix, const Operator &m, const Tolerances &tol) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < mix.weights().size(); ++j) {
        acc += mix.weights()[j] * trace_product(mix.projectors()[j].op(), m);
    }
    return checked_truth(acc, tol);
}

double conditional_truth(const MixedState &condition, const Operator &m, const Tolerances &tol) {
    return mixture_truth(condition, m, tol);
}

std::array<Complex, 6> meaningfulness_traces(const Operator &l, const Operator &m1, const Operator &m2) {
    require_same_dim(l, m1);
    require_same_dim(m1, m2);
    std::array<Complex, 6> out;
    std::size_t i = 0;
    const std::array<const Operator *, 2> m{&m1, &m2};
    for (int k = 0; k < 2; ++k) {
        const Operator &mk = *m[static_cast<std::size_t>(k)];
        const Operator &ml = *m[static_cast<std::size_t>(1 - k)];
        out[i++] = trace_product(l, commutator(mk, ml));
        out[i++] = trace_product(commutator(l, mk), ml);
        out[i++] = trace_product(mk, commutator(ml, l));
    }
    return out;
}

bool meaningful(const TruthOperator &condition, const TruthOperator &m1, const TruthOperator &m2, double tol) {
    const auto traces = meaningfulness_traces(condition, m1, m2);
    return std::all_of(traces.begin(), traces.end(), [&](Complex z) { return std::abs(z) <= tol; });
}

Operator observable_from_spectrum(std::span<const double> values, std::span<const TruthOperator> projs,
                                  const Tolerances &tol) {
    if (values.empty() || values.size() != projs.size()) {
        throw DimensionError("observable_from_spectrum: one value per projector required");
    }
    if (!is_orthogonal_family(projs, tol)) {
        throw OrthogonalityError("observable_from_spectrum: projectors are not mutually orthogonal");
    }
    Operator k = Operator::zero(projs.front().dim());
    for (std::size_t i = 0; i < values.size(); ++i) {
        k += values[i] * projs[i].op();
    }
    return k;
}

double expectation(const StateVector &state, const Operator &obs, const Tolerances &tol) {
    if (state.dim() != obs.dim()) {
        throw DimensionError("expectation: dimension mismatch");
    }
    if (!is_hermitian(obs, tol)) {
        throw HermiticityError("expectation: observable is not Hermitian");
    }
    return state.amplitudes().dot(obs.matrix() * state.amplitudes()).real();
}

} // namespace qtruth
