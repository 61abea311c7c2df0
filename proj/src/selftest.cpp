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

#include "qtruth/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "qtruth/epr.hpp"
#include "qtruth/hilbert.hpp"
#include "qtruth/logic.hpp"
#include "qtruth/quantize.hpp"
#include "qtruth/random.hpp"
#include "qtruth/spin.hpp"
#include "qtruth/statement.hpp"

namespace qtruth {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string fixed(double x, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

struct Context {
    const SelftestOptions &opts;

    double cap(double pinned) const { return std::min(pinned, opts.tol.eq); }
};

CriterionResult epr_equivalence(const Context &ctx) {
    const SpinAxis za = SpinAxis::z();
    double worst_eq = 0.0, worst_conj = 0.0, at_zero = 0.0;
    for (int i = 0; i <= 24; ++i) {
        const double deg = 7.5 * i;
        const SpinAxis zb = SpinAxis::from_degrees(deg);
        const double c = std::cos(deg * kPi / 360.0);
        const double eq = equivalence_truth(za, zb);
        worst_eq = std::max(worst_eq, std::abs(eq - c * c));
        worst_conj = std::max(worst_conj, std::abs(conjunction_truth(za, zb) - 0.5 * c * c));
        if (i == 0) {
            at_zero = std::abs(eq - 1.0);
        }
    }
    const bool ok = worst_eq <= ctx.cap(1e-10) && worst_conj <= ctx.cap(1e-10) && at_zero <= ctx.cap(1e-12);
    return {1, "EPR equivalence law", ok,
            "25 angles; equivalence err " + sci(worst_eq) + ", conjunction err " + sci(worst_conj) +
                ", theta=0 err " + sci(at_zero)};
}

CriterionResult sigma_observable_check(const Context &ctx) {
    const Operator sigma = sigma_observable();
    const StateVector s = singlet().state;
    const double eig_err = (s.apply(sigma) + s.amplitudes()).norm();
    auto spectrum = hermitian_eigenvalues(sigma);
    std::sort(spectrum.begin(), spectrum.end());
    const double expected[] = {-1.0, 1.0, 1.0, 1.0};
    double spectrum_err = spectrum.size() == 4 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(4, spectrum.size()); ++i) {
        spectrum_err = std::max(spectrum_err, std::abs(spectrum[i] - expected[i]));
    }
    const bool ok = eig_err <= ctx.cap(1e-12) && spectrum_err <= ctx.cap(1e-10);
    return {2, "Sigma observable", ok, "eigen-relation err " + sci(eig_err) + ", spectrum err " + sci(spectrum_err)};
}

CriterionResult chsh_check(const Context &ctx) {
    const ChshReport r = chsh_search(ctx.opts.seed, ChshSearchOptions{100, 100, true, Execution::parallel});
    const double canonical = chsh(SpinAxis::from_degrees(0), SpinAxis::from_degrees(90),
                                  SpinAxis::from_degrees(45), SpinAxis::from_degrees(135));
    const SpinAxis z = SpinAxis::z();
    const double equal = chsh(z, z, z, z);
    const double canon_err = std::abs(canonical - 2.0 * std::numbers::sqrt2);
    const double equal_err = std::abs(equal - 2.0);
    const bool ok = r.evaluated == 10000 && r.best >= 2.8274 && r.best <= 2.8285 && canon_err <= ctx.cap(1e-10) &&
                    equal_err <= ctx.cap(1e-10);
    return {3, "CHSH", ok,
            "search best " + fixed(r.best, 6) + " over " + std::to_string(r.evaluated) +
                " quadruples; canonical err " + sci(canon_err) + ", equal-axes err " + sci(equal_err)};
}

CriterionResult sg_interference(const Context &ctx) {
    double recovery = 0.0, closed = 0.0, total = 0.0;
    long points = 0;
    for (double phi : {0.0, 100.0}) {
        for (int i = 0; i <= 12; ++i) {
            for (int j = 0; j <= 12; ++j) {
                const SpinAxis a1 = SpinAxis::from_degrees(15.0 * i, phi);
                const SpinAxis a2 = SpinAxis::from_degrees(15.0 * j, phi);
                const OverlapDecomposition d = overlap_probability(a1, a2);
                const double w1 = up_probability(a1, SpinAxis::z());
                const double w2 = up_probability(a2, SpinAxis::z());
                const double w12 = up_probability(a1, a2);
                recovery = std::max(recovery, std::abs(interference_from_three(w1, w2, w12) - d.interference));
                closed = std::max(closed, std::abs(interference_closed_form(a1, a2) - d.interference));
                const double c = std::cos(angle_between(a1, a2) / 2.0);
                total = std::max(total, std::abs(d.total - c * c));
                ++points;
            }
        }
    }
    const double tol = ctx.cap(1e-10);
    const bool ok = recovery <= tol && closed <= tol && total <= tol;
    return {4, "SG interference identities", ok,
            std::to_string(points) + " coplanar points; recovery err " + sci(recovery) + ", closed-form err " +
                sci(closed) + ", total err " + sci(total)};
}

CriterionResult connective_enumeration(const Context &) {
    const auto sols = enumerate_connectives(2);
    const ConnectiveCoefficients named[] = {
        {1, -1, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, -1}, {0, 1, 1, -2}, {1, -1, 0, 1}, {1, -1, -1, 2},
    };
    int found = 0;
    for (const auto &n : named) {
        found += std::find(sols.begin(), sols.end(), n) != sols.end() ? 1 : 0;
    }
    const bool ok = sols.size() == 16 && found == 6;
    return {5, "Connective enumeration", ok,
            std::to_string(sols.size()) + " solutions in [-2,2]^4; " + std::to_string(found) + "/6 named present"};
}

struct Tautology {
    const char *name;
    int leaves;
    std::function<Statement(const std::vector<Statement> &)> build;
};

std::vector<Tautology> tautologies() {
    using S = Statement;
    using V = std::vector<Statement>;
    return {
        {"excluded middle", 1, [](const V &v) { return S::disjunction(v[0], S::negation(v[0])); }},
        {"non-contradiction", 1,
         [](const V &v) { return S::negation(S::conjunction(v[0], S::negation(v[0]))); }},
        {"double negation", 1, [](const V &v) { return S::equivalence(S::negation(S::negation(v[0])), v[0]); }},
        {"De Morgan (and)", 2,
         [](const V &v) {
             return S::equivalence(S::negation(S::conjunction(v[0], v[1])),
                                   S::disjunction(S::negation(v[0]), S::negation(v[1])));
         }},
        {"De Morgan (or)", 2,
         [](const V &v) {
             return S::equivalence(S::negation(S::disjunction(v[0], v[1])),
                                   S::conjunction(S::negation(v[0]), S::negation(v[1])));
         }},
        {"contraposition", 2,
         [](const V &v) {
             return S::equivalence(S::implication(v[0], v[1]), S::implication(S::negation(v[1]), S::negation(v[0])));
         }},
        {"modus ponens", 2,
         [](const V &v) { return S::implication(S::conjunction(v[0], S::implication(v[0], v[1])), v[1]); }},
        {"material implication", 2,
         [](const V &v) { return S::equivalence(S::implication(v[0], v[1]), S::disjunction(S::negation(v[0]), v[1])); }},
        {"weakening", 2, [](const V &v) { return S::implication(v[0], S::implication(v[1], v[0])); }},
        {"xor as negated equivalence", 2,
         [](const V &v) { return S::equivalence(S::exclusive_or(v[0], v[1]), S::negation(S::equivalence(v[0], v[1]))); }},
        {"distribution (and over or)", 3,
         [](const V &v) {
             return S::equivalence(S::conjunction(v[0], S::disjunction(v[1], v[2])),
                                   S::disjunction(S::conjunction(v[0], v[1]), S::conjunction(v[0], v[2])));
         }},
        {"distribution (or over and)", 3,
         [](const V &v) {
             return S::equivalence(S::disjunction(v[0], S::conjunction(v[1], v[2])),
                                   S::conjunction(S::disjunction(v[0], v[1]), S::disjunction(v[0], v[2])));
         }},
        {"hypothetical syllogism", 3,
         [](const V &v) {
             return S::implication(S::conjunction(S::implication(v[0], v[1]), S::implication(v[1], v[2])),
                                   S::implication(v[0], v[2]));
         }},
    };
}

/// Commuting leaves: random 0/1 diagonals in a shared random basis.
std::vector<Statement> commuting_leaves(int count, long dim, Rng &rng) {
    const Operator u = random_unitary(dim, rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<Statement> out;
    for (int i = 0; i < count; ++i) {
        std::vector<double> d(static_cast<std::size_t>(dim));
        for (auto &x : d) {
            x = coin(rng) ? 1.0 : 0.0;
        }
        out.push_back(Statement::elementary(std::string(1, static_cast<char>('A' + i)),
                                            conjugate(TruthOperator(Operator::diagonal(d)), u)));
    }
    return out;
}

CriterionResult tautology_suite(const Context &ctx) {
    Rng rng(ctx.opts.seed ^ 0x7a07u);
    const auto suite = tautologies();
    double worst = 0.0;
    std::vector<std::string> failed;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const long dim = 2 + static_cast<long>(i % 7);
        const Statement s = suite[i].build(commuting_leaves(suite[i].leaves, dim, rng));
        const TautologyReport r = check_tautology(s, 20, ctx.opts.seed + i);
        worst = std::max(worst, r.max_residual);
        if (!r.tautology || r.max_residual > ctx.cap(1e-10) || r.representations != 21) {
            failed.push_back(suite[i].name);
        }
    }
    std::string detail = std::to_string(suite.size()) + " tautologies, dims 2-8, 20 re-representations each; max residual " +
                         sci(worst);
    for (const auto &f : failed) {
        detail += "; failed: " + f;
    }
    return {6, "Tautology suite", failed.empty(), detail};
}

CriterionResult quantization(const Context &ctx) {
    const Lattice lat{64, 1.0, 1.0};
    const long n = lat.n;
    const double tol = ctx.cap(1e-10);
    const auto kernels = momentum_kernels(lat);
    const Operator t = translation_operator(lat);
    const Operator s = dft_matrix(lat);
    const auto spectrum = default_momentum_spectrum(lat);
    const Operator p = momentum_operator(lat, spectrum);

    double proj = 0.0, trace = 0.0, inv = 0.0, realize = 0.0, eig = 0.0;
    Operator sum = Operator::zero(n);
    for (const auto &k : kernels) {
        const Operator &m = k.op.op();
        proj = std::max({proj, distance(m * m, m), distance(m, m.adjoint())});
        trace = std::max(trace, std::abs(m.trace() - Complex{1.0, 0.0}));
        inv = std::max(inv, distance(t * m * t.adjoint(), m));
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(k.k)] = 1.0;
        realize = std::max(realize, distance(s * Operator::diagonal(e) * s.adjoint(), m));
        const StateVector w = plane_wave(lat, k.k);
        eig = std::max(eig, (w.apply(p) - spectrum[static_cast<std::size_t>(k.k)] * w.amplitudes()).norm());
        sum += m;
    }
    const double complete = distance(sum, Operator::identity(n));
    const double unitary = distance(s * s.adjoint(), Operator::identity(n));
    const double pt = commutator(p, t).frobenius_norm();
    const bool ok = proj <= tol && trace <= tol && inv <= tol && complete <= tol && unitary <= tol && realize <= tol &&
                    eig <= tol && pt <= tol;
    return {7, "Quantization", ok,
            "n=64; projector " + sci(proj) + ", trace " + sci(trace) + ", translation " + sci(inv) + ", completeness " +
                sci(complete) + ", S unitary " + sci(unitary) + ", S diag S^dag " + sci(realize) +
                ", p eigen " + sci(eig) + ", [p,T] " + sci(pt)};
}

CriterionResult commutator_decay(const Context &) {
    const long widths[] = {2, 4, 8, 16, 32};
    const auto samples = interval_commutators(Lattice{64, 1.0, 1.0}, widths);
    bool monotone = true;
    std::string norms, normalized;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0 && samples[i].frobenius > samples[i - 1].frobenius) {
            monotone = false;
        }
        norms += (i ? ", " : "") + fixed(samples[i].frobenius, 4);
        normalized += (i ? ", " : "") + fixed(samples[i].relative, 4);
    }
    return {8, "Coarse-interval commutator decay", monotone,
            "n=64 widths 2,4,8,16,32; ||[dIp,dIq]||_F = " + norms + " (non-increasing required); per-width " +
                "normalized = " + normalized};
}

CriterionResult collapse(const Context &ctx) {
    Rng rng(ctx.opts.seed ^ 0xc011u);
    const DetectorModel model = DetectorModel::random(8, rng);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<double> up_phases(8), down_phases(8);
    for (auto &x : up_phases) {
        x = angle(rng);
    }
    for (auto &x : down_phases) {
        x = angle(rng);
    }
    const DetectorModel rephased = model.rephased(up_phases, down_phases);
    double born = 0.0, sum = 0.0, phase = 0.0;
    for (int trial = 0; trial < 16; ++trial) {
        const StateVector c = random_state(2, rng);
        const auto [up, down] = collapse_truths(c[0], c[1], model);
        const auto [rup, rdown] = collapse_truths(c[0], c[1], rephased);
        born = std::max({born, std::abs(up - std::norm(c[0])), std::abs(down - std::norm(c[1]))});
        sum = std::max(sum, std::abs(up + down - 1.0));
        phase = std::max({phase, std::abs(up - rup), std::abs(down - rdown)});
    }
    const double tol = ctx.cap(1e-10);
    const bool ok = born <= tol && sum <= tol && phase <= tol;
    return {9, "Collapse model", ok,
            "N=8, 16 spin states; Born err " + sci(born) + ", sum err " + sci(sum) + ", re-phasing err " + sci(phase)};
}

CriterionResult complement_bounds(const Context &ctx) {
    Rng rng(ctx.opts.seed ^ 0xb0u);
    std::uniform_int_distribution<long> dims(2, 16);
    double complement = 0.0, bounds = 0.0;
    for (int i = 0; i < 500; ++i) {
        const long dim = dims(rng);
        const long rank = std::uniform_int_distribution<long>(1, dim - 1)(rng);
        const TruthOperator cond = outer(random_state(dim, rng));
        const TruthOperator m = random_projector(dim, rank, rng);
        const double t = trace_product(cond, m).real();
        const double tn = trace_product(cond, negate(m)).real();
        complement = std::max(complement, std::abs(tn - (1.0 - t)));
        bounds = std::max({bounds, -t, t - 1.0, -tn, tn - 1.0});
    }
    const double tol = ctx.cap(1e-12);
    const bool ok = complement <= tol && bounds <= tol;
    return {10, "Negation complement and bounds", ok,
            "500 pairs, dims 2-16; complement err " + sci(complement) + ", worst bound excess " +
                sci(std::max(bounds, 0.0))};
}

using CriterionFn = CriterionResult (*)(const Context &);

constexpr CriterionFn kCriteria[kCriterionCount] = {
    epr_equivalence, sigma_observable_check, chsh_check,  sg_interference, connective_enumeration,
    tautology_suite, quantization,           commutator_decay, collapse,    complement_bounds,
};

} // namespace

CriterionResult run_criterion(int id, const SelftestOptions &opts) {
    if (id < 1 || id > kCriterionCount) {
        throw RangeError("criterion id must lie in [1, " + std::to_string(kCriterionCount) + "]");
    }
    opts.tol.validate();
    const Context ctx{opts};
    try {
        return kCriteria[id - 1](ctx);
    } catch (const std::exception &e) {
        return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
    }
}

SelftestReport run_selftest(const SelftestOptions &opts) {
    SelftestReport r;
    r.seed = opts.seed;
    for (int id = 1; id <= kCriterionCount; ++id) {
        r.criteria.push_back(run_criterion(id, opts));
    }
    return r;
}

bool SelftestReport::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult &c) { return c.passed; });
}

std::string SelftestReport::text() const {
    std::string out;
    for (const auto &c : criteria) {
        out += std::string(c.passed ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.name + ": " +
               c.detail + "\n";
    }
    int passed = 0;
    for (const auto &c : criteria) {
        passed += c.passed ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(criteria.size()) + " criteria passed (seed " +
           std::to_string(seed) + ")\n";
    return out;
}

nlohmann::json SelftestReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto &c : criteria) {
        cs.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"seed", seed}, {"passed", all_passed()}, {"criteria", std::move(cs)}};
}

} // namespace qtruth
