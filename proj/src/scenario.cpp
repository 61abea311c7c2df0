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

#include "qtruth/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qtruth/epr.hpp"
#include "qtruth/logic.hpp"
#include "qtruth/spin.hpp"
#include "qtruth/statement.hpp"

namespace qtruth {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kCheckTol = 1e-10;

struct KindName {
    ScenarioKind kind;
    std::string_view name;
};

constexpr KindName kKinds[] = {
    {ScenarioKind::sg_overlap, "sg-overlap"},
    {ScenarioKind::sg_three_angle, "sg-three-angle"},
    {ScenarioKind::sg_cascade, "sg-cascade"},
    {ScenarioKind::sg_collapse, "sg-collapse"},
    {ScenarioKind::epr_sweep, "epr-sweep"},
    {ScenarioKind::epr_chsh, "epr-chsh"},
    {ScenarioKind::quantize_kernels, "quantize-kernels"},
    {ScenarioKind::logic_tautology, "logic-tautology"},
    {ScenarioKind::logic_connectives, "logic-connectives"},
};

double radians(double deg) { return deg * kPi / 180.0; }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// ---- parameter parsing ------------------------------------------------------

double number_param(const json &params, const char *key, double fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    const json &v = params.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string("parameter '") + key + "' must be a number");
    }
    return v.get<double>();
}

long integer_param(const json &params, const char *key, long fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    const json &v = params.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(std::string("parameter '") + key + "' must be an integer");
    }
    return v.get<long>();
}

bool bool_param(const json &params, const char *key, bool fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    if (!params.at(key).is_boolean()) {
        throw ConfigError(std::string("parameter '") + key + "' must be a boolean");
    }
    return params.at(key).get<bool>();
}

/// A number, an array of numbers, or {"start", "stop", "step"}.
std::vector<double> grid_param(const json &params, const char *key, std::vector<double> fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    const json &v = params.at(key);
    const std::string where = std::string("parameter '") + key + "'";
    if (v.is_number()) {
        return {v.get<double>()};
    }
    if (v.is_array()) {
        std::vector<double> out;
        for (const auto &x : v) {
            if (!x.is_number()) {
                throw ConfigError(where + " must contain only numbers");
            }
            out.push_back(x.get<double>());
        }
        if (out.empty()) {
            throw ConfigError(where + " must not be empty");
        }
        return out;
    }
    if (v.is_object()) {
        const double start = number_param(v, "start", 0.0);
        const double stop = number_param(v, "stop", start);
        const double step = number_param(v, "step", 1.0);
        if (!(step > 0.0) || stop < start) {
            throw ConfigError(where + " needs step > 0 and stop >= start");
        }
        std::vector<double> out;
        for (long i = 0;; ++i) {
            const double x = start + static_cast<double>(i) * step;
            if (x > stop + 1e-9 * step) {
                break;
            }
            out.push_back(x);
            if (out.size() > 1000000) {
                throw ConfigError(where + " produces too many points");
            }
        }
        return out;
    }
    throw ConfigError(where + " must be a number, array or {start, stop, step}");
}

std::vector<double> default_angle_grid(double step) {
    std::vector<double> out;
    for (long i = 0; static_cast<double>(i) * step <= 180.0 + 1e-9; ++i) {
        out.push_back(static_cast<double>(i) * step);
    }
    return out;
}

SpinAxis axis_deg(double theta_deg, double phi_deg) {
    try {
        return SpinAxis::from_degrees(theta_deg, phi_deg);
    } catch (const RangeError &e) {
        throw ConfigError(std::string("invalid axis: ") + e.what() + " (theta " + format_number(theta_deg) +
                          " deg, phi " + format_number(phi_deg) + " deg)");
    }
}

SpinAxis axis_param(const json &params, const char *key, SpinAxis fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    const json &v = params.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(std::string("parameter '") + key + "' must be [theta_deg, phi_deg]");
    }
    return axis_deg(v[0].get<double>(), v[1].get<double>());
}

// ---- tabular output -----------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table &t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + t.columns[i];
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

json table_json(const Table &t, ScenarioKind kind) {
    return {{"kind", to_string(kind)}, {"columns", t.columns}, {"rows", t.rows}};
}

std::string render_table(const Table &t, const ScenarioConfig &c) {
    return c.format == OutputFormat::csv ? to_csv(t) : table_json(t, c.kind).dump(2) + "\n";
}

/// Tracks the worst deviation for a named check.
struct Check {
    std::string name;
    double tol = kCheckTol;
    double worst = 0.0;
    long violations = 0;

    void observe(double err) {
        if (!(err <= tol)) {
            ++violations;
        }
        if (!(err <= worst)) {
            worst = err;
        }
    }
    CheckResult result() const {
        return {name, violations == 0, "max deviation " + sci(worst) + " (tol " + sci(tol) + ")"};
    }
};

// Row producer: each grid point is independent, so rows are evaluated in
// parallel into pre-sized slots and emitted in grid order.
template <class Point, class Fn>
std::vector<std::vector<double>> evaluate_rows(const std::vector<Point> &points, Fn fn) {
    std::vector<std::vector<double>> rows(points.size());
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = fn(points[static_cast<std::size_t>(i)]);
    }
    return rows;
}

// ---- scenarios ----------------------------------------------------------------

struct AxisPair {
    double t1, t2, p1, p2;
    SpinAxis a1, a2;
};

std::vector<double> overlap_row(const AxisPair &p) {
    const OverlapDecomposition d = overlap_probability(p.a1, p.a2);
    const double w1 = up_probability(p.a1, SpinAxis::z());
    const double w2 = up_probability(p.a2, SpinAxis::z());
    const double w12 = up_probability(p.a1, p.a2);
    return {p.t1, p.t2, p.p1, p.p2, d.total, d.diagonal, d.interference, interference_from_three(w1, w2, w12)};
}

const std::vector<std::string> kOverlapColumns = {"theta1", "theta2",       "phi1",        "phi2",
                                                  "total",  "diagonal",     "interference", "eq47_value"};

RunResult run_sg_overlap(const ScenarioConfig &c, bool three_angle) {
    const json &p = c.params;
    const auto t1s = grid_param(p, "theta1_deg", default_angle_grid(15.0));
    const auto t2s = grid_param(p, "theta2_deg", default_angle_grid(15.0));
    std::vector<double> p1s, p2s;
    if (three_angle) {
        p1s = p2s = grid_param(p, "phi_deg", {0.0});
    } else {
        p1s = grid_param(p, "phi1_deg", {0.0});
        p2s = grid_param(p, "phi2_deg", {0.0});
    }

    std::vector<AxisPair> points;
    for (double t1 : t1s) {
        for (double t2 : t2s) {
            for (std::size_t i = 0; i < p1s.size(); ++i) {
                for (std::size_t j = 0; j < p2s.size(); ++j) {
                    if (three_angle && i != j) {
                        continue;
                    }
                    points.push_back({t1, t2, p1s[i], p2s[j], axis_deg(t1, p1s[i]), axis_deg(t2, p2s[j])});
                }
            }
        }
    }
    Table t{kOverlapColumns, evaluate_rows(points, overlap_row)};

    Check split{"diagonal + interference = total"};
    Check law{"total = cos^2(angle/2)"};
    Check recovery{"three-measurement recovery = interference (coplanar rows)"};
    Check closed{"interference = (1/2) sin(t1) sin(t2) cos((phi2-phi1)/2)"};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &r = t.rows[i];
        const auto &pt = points[i];
        split.observe(std::abs(r[5] + r[6] - r[4]));
        const double half = angle_between(pt.a1, pt.a2) / 2.0;
        law.observe(std::abs(r[4] - std::cos(half) * std::cos(half)));
        if (pt.p1 == pt.p2) {
            recovery.observe(std::abs(r[7] - r[6]));
        }
        closed.observe(std::abs(r[6] - interference_closed_form(pt.a1, pt.a2)));
    }
    RunResult out;
    out.report.rows = static_cast<long>(t.rows.size());
    out.report.checks = {split.result(), law.result(), recovery.result(), closed.result()};
    out.artifact = render_table(t, c);
    return out;
}

RunResult run_sg_cascade(const ScenarioConfig &c) {
    const json &p = c.params;
    const auto t1s = grid_param(p, "theta1_deg", default_angle_grid(30.0));
    const auto t2s = grid_param(p, "theta2_deg", default_angle_grid(30.0));
    const double psi1 = number_param(p, "psi1_deg", 0.0);
    const double psi2 = number_param(p, "psi2_deg", 0.0);
    const SpinAxis first = axis_param(p, "first_magnet_deg", SpinAxis::z());

    struct Point {
        double t1, t2;
        SgCascade cascade;
        SpinAxis a1, a2;
    };
    std::vector<Point> points;
    for (double t1 : t1s) {
        for (double t2 : t2s) {
            const SpinAxis a1 = axis_deg(t1, psi1);
            const SpinAxis a2 = axis_deg(t2, psi2);
            points.push_back({t1, t2, SgCascade{a1, {first, a2}}, a1, a2});
        }
    }
    Table t{{"theta1", "theta2", "psi1", "psi2", "intensity", "diagonal", "interference", "eq53_value"},
            evaluate_rows(points, [&](const Point &pt) {
                const OverlapDecomposition d = cascade_overlap(pt.cascade);
                return std::vector<double>{pt.t1,       pt.t2,      psi1,           psi2,
                                           d.total,     d.diagonal, d.interference, interference_closed_form(pt.a1, pt.a2)};
            })};

    Check trace{"intensity = tr(rho1 rho2)"};
    Check closed{"interference = (1/2) sin(t1) sin(t2) cos((psi2-psi1)/2)"};
    const bool z_first = first.theta() == 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &r = t.rows[i];
        trace.observe(std::abs(r[4] - overlap_probability(points[i].a1, points[i].a2).total));
        if (z_first) {
            closed.observe(std::abs(r[6] - r[7]));
        }
    }
    RunResult out;
    out.report.rows = static_cast<long>(t.rows.size());
    out.report.checks = {trace.result()};
    if (z_first) {
        out.report.checks.push_back(closed.result());
    }
    out.artifact = render_table(t, c);
    return out;
}

RunResult run_sg_collapse(const ScenarioConfig &c) {
    const json &p = c.params;
    const long n = integer_param(p, "detector_n", 8);
    if (n < 1) {
        throw ConfigError("detector_n must be >= 1");
    }
    const auto thetas = grid_param(p, "theta_deg", default_angle_grid(30.0));
    const double relative_phase = radians(number_param(p, "relative_phase_deg", 0.0));
    Rng rng(c.seed);
    const DetectorModel model = DetectorModel::random(n, rng);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<double> up_phases(static_cast<std::size_t>(n)), down_phases(static_cast<std::size_t>(n));
    for (auto &x : up_phases) {
        x = angle(rng);
    }
    for (auto &x : down_phases) {
        x = angle(rng);
    }
    const DetectorModel rephased = model.rephased(up_phases, down_phases);

    for (double th : thetas) {
        if (th < 0.0 || th > 180.0) {
            throw ConfigError("theta_deg values must lie in [0, 180]");
        }
    }
    Table t{{"theta", "up_truth", "down_truth", "expected_up", "expected_down", "rephased_up", "rephased_down"},
            evaluate_rows(thetas, [&](double th) {
                const Complex cu{std::cos(radians(th) / 2.0), 0.0};
                const Complex cd = std::polar(std::sin(radians(th) / 2.0), relative_phase);
                const auto [up, down] = collapse_truths(cu, cd, model);
                const auto [rup, rdown] = collapse_truths(cu, cd, rephased);
                return std::vector<double>{th, up, down, std::norm(cu), std::norm(cd), rup, rdown};
            })};

    Check born{"coarse truths = |c_m|^2"};
    Check sum{"up + down = 1"};
    Check phase{"invariant under detector re-phasing"};
    for (const auto &r : t.rows) {
        born.observe(std::max(std::abs(r[1] - r[3]), std::abs(r[2] - r[4])));
        sum.observe(std::abs(r[1] + r[2] - 1.0));
        phase.observe(std::max(std::abs(r[1] - r[5]), std::abs(r[2] - r[6])));
    }
    RunResult out;
    out.report.rows = static_cast<long>(t.rows.size());
    out.report.checks = {born.result(), sum.result(), phase.result()};
    out.artifact = render_table(t, c);
    return out;
}

RunResult run_epr_sweep(const ScenarioConfig &c) {
    const auto thetas = grid_param(c.params, "theta_deg", default_angle_grid(15.0));
    const double phi = number_param(c.params, "phi_deg", 0.0);
    const SpinAxis za = axis_param(c.params, "za_deg", SpinAxis::z());
    std::vector<std::pair<double, SpinAxis>> points;
    for (double th : thetas) {
        points.emplace_back(th, axis_deg(th, phi));
    }
    Table t{{"theta_deg", "equivalence_truth", "conjunction_truth", "correlation"},
            evaluate_rows(points, [&](const std::pair<double, SpinAxis> &pt) {
                return std::vector<double>{pt.first, equivalence_truth(za, pt.second),
                                           conjunction_truth(za, pt.second), correlation(za, pt.second)};
            })};

    Check eq{"equivalence = cos^2(angle/2)"};
    Check conj{"conjunction = cos^2(angle/2)/2"};
    Check corr{"correlation = -cos(angle)"};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double ang = angle_between(za, points[i].second);
        const double c2 = std::cos(ang / 2.0) * std::cos(ang / 2.0);
        eq.observe(std::abs(t.rows[i][1] - c2));
        conj.observe(std::abs(t.rows[i][2] - 0.5 * c2));
        corr.observe(std::abs(t.rows[i][3] + std::cos(ang)));
    }
    RunResult out;
    out.report.rows = static_cast<long>(t.rows.size());
    out.report.checks = {eq.result(), conj.result(), corr.result()};
    out.artifact = render_table(t, c);
    return out;
}

json axis_json(const SpinAxis &a) { return {a.theta() * 180.0 / kPi, a.phi() * 180.0 / kPi}; }

RunResult run_epr_chsh(const ScenarioConfig &c) {
    if (c.format != OutputFormat::json) {
        throw ConfigError("epr-chsh writes a JSON report; set output.format to \"json\"");
    }
    ChshSearchOptions opts;
    opts.batches = integer_param(c.params, "batches", opts.batches);
    opts.batch_size = integer_param(c.params, "batch_size", opts.batch_size);
    opts.coplanar = bool_param(c.params, "coplanar", true);
    if (opts.batches < 1 || opts.batch_size < 1) {
        throw ConfigError("batches and batch_size must be >= 1");
    }
    const ChshReport r = chsh_search(c.seed, opts);
    const double canonical = chsh(SpinAxis::from_degrees(0), SpinAxis::from_degrees(90), SpinAxis::from_degrees(45),
                                  SpinAxis::from_degrees(135));
    const SpinAxis z = SpinAxis::z();
    const double classical = chsh(z, z, z, z);
    json doc = {{"kind", "epr-chsh"},
                {"best", r.best},
                {"argmax_axes_deg",
                 {{"a", axis_json(r.axes[0])},
                  {"a_prime", axis_json(r.axes[1])},
                  {"b", axis_json(r.axes[2])},
                  {"b_prime", axis_json(r.axes[3])}}},
                {"evaluated", r.evaluated},
                {"coplanar", opts.coplanar},
                {"canonical", canonical},
                {"equal_axes", classical},
                {"tsirelson_bound", 2.0 * std::numbers::sqrt2}};
    RunResult out;
    out.report.rows = 1;
    const double bound = 2.0 * std::numbers::sqrt2;
    out.report.checks = {
        {"best <= 2 sqrt(2)", r.best <= bound + 1e-9, "best " + format_number(r.best)},
        {"best violates the classical bound 2", r.best > 2.0, "best " + format_number(r.best)},
        {"canonical angles give 2 sqrt(2)", std::abs(canonical - bound) <= kCheckTol,
         "deviation " + sci(std::abs(canonical - bound))},
    };
    out.artifact = doc.dump(2) + "\n";
    return out;
}

RunResult run_quantize(const ScenarioConfig &c) {
    const Lattice lat{integer_param(c.params, "n", 8), number_param(c.params, "spacing", 1.0),
                      number_param(c.params, "hbar", 1.0)};
    try {
        lat.validate();
    } catch (const RangeError &e) {
        throw ConfigError(std::string("quantize-kernels: ") + e.what());
    }
    const auto kernels = momentum_kernels(lat);
    const Operator t = translation_operator(lat);
    const double scale = static_cast<double>(lat.n);
    Check idem{"kernels idempotent", kCheckTol * scale};
    Check trace{"kernel trace = 1"};
    Check invariant{"kernels translation invariant", kCheckTol * scale};
    Check complete{"sum of kernels = identity", kCheckTol * scale};
    Operator sum = Operator::zero(lat.n);
    for (const auto &k : kernels) {
        idem.observe(distance(k.op.op() * k.op.op(), k.op.op()));
        trace.observe(std::abs(k.op.op().trace() - Complex{1.0, 0.0}));
        invariant.observe(distance(t * k.op.op() * t.adjoint(), k.op.op()));
        sum += k.op.op();
    }
    complete.observe(distance(sum, Operator::identity(lat.n)));

    RunResult out;
    out.report.rows = lat.n * lat.n;
    out.report.checks = {idem.result(), trace.result(), invariant.result(), complete.result()};
    if (c.format == OutputFormat::csv) {
        out.artifact = kernels_csv(lat);
    } else {
        json ks = json::array();
        for (const auto &k : kernels) {
            json rows = json::array();
            for (long q = 0; q < lat.n; ++q) {
                json row = json::array();
                for (long qp = 0; qp < lat.n; ++qp) {
                    row.push_back(k.op.op()(q, qp).real());
                    row.push_back(k.op.op()(q, qp).imag());
                }
                rows.push_back(std::move(row));
            }
            ks.push_back({{"k", k.k}, {"rows", std::move(rows)}});
        }
        out.artifact = json{{"kind", "quantize-kernels"}, {"n", lat.n}, {"kernels", std::move(ks)}}.dump(2) + "\n";
    }
    return out;
}

TruthOperator registry_entry(const std::string &name, const json &entry, long dim_hint) {
    const std::string where = "registry entry '" + name + "'";
    if (!entry.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    try {
        if (entry.contains("diagonal")) {
            std::vector<double> d;
            for (const auto &x : entry.at("diagonal")) {
                const double v = x.get<double>();
                if (v != 0.0 && v != 1.0) {
                    throw ConfigError(where + ": diagonal entries must be 0 or 1");
                }
                d.push_back(v);
            }
            return TruthOperator(Operator::diagonal(d));
        }
        if (entry.contains("state")) {
            const json &s = entry.at("state");
            Vector v(static_cast<long>(s.size()));
            for (std::size_t i = 0; i < s.size(); ++i) {
                const json &a = s[i];
                v(static_cast<long>(i)) = a.is_array() ? Complex{a.at(0).get<double>(), a.at(1).get<double>()}
                                                       : Complex{a.get<double>(), 0.0};
            }
            return outer(StateVector::normalized(std::move(v)));
        }
        if (entry.contains("spin")) {
            const json &s = entry.at("spin");
            return spin_truth(axis_deg(s.at(0).get<double>(), s.at(1).get<double>()));
        }
        if (entry.contains("basis")) {
            return outer(StateVector::basis(integer_param(entry, "dim", dim_hint), entry.at("basis").get<long>()));
        }
    } catch (const json::exception &e) {
        throw ConfigError(where + ": " + e.what());
    } catch (const ConfigError &) {
        throw;
    } catch (const Error &e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + " needs one of 'diagonal', 'state', 'spin', 'basis'");
}

RunResult run_logic_tautology(const ScenarioConfig &c) {
    const json &p = c.params;
    if (!p.contains("registry") || !p.at("registry").is_object()) {
        throw ConfigError("logic-tautology needs a 'registry' object");
    }
    const long dim_hint = integer_param(p, "dim", 2);
    ProjectorRegistry registry;
    for (const auto &[name, entry] : p.at("registry").items()) {
        registry.emplace(name, registry_entry(name, entry, dim_hint));
    }
    const long trials = integer_param(p, "trials", 20);
    if (trials < 0) {
        throw ConfigError("trials must be >= 0");
    }

    json items = json::array();
    if (p.contains("statements")) {
        items = p.at("statements");
    } else if (p.contains("statement")) {
        items.push_back({{"name", "statement"}, {"statement", p.at("statement")}});
    } else {
        throw ConfigError("logic-tautology needs 'statement' or 'statements'");
    }

    Table t{{"index", "tautology", "max_residual", "representations", "assignments"}, {}};
    json results = json::array();
    RunResult out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json &item = items[i];
        const json &tree = item.contains("statement") ? item.at("statement") : item;
        Statement s = [&] {
            try {
                return statement_from_json(tree, registry);
            } catch (const json::exception &e) {
                throw ConfigError(std::string("malformed statement: ") + e.what());
            } catch (const RangeError &e) {
                throw ConfigError(std::string("malformed statement: ") + e.what());
            }
        }();
        const TautologyReport r = check_tautology(s, static_cast<int>(trials), c.seed + i);
        const std::string name = item.value("name", "statement_" + std::to_string(i));
        t.rows.push_back({static_cast<double>(i), r.tautology ? 1.0 : 0.0, r.max_residual,
                          static_cast<double>(r.representations), static_cast<double>(r.assignments)});
        results.push_back({{"name", name},
                           {"statement", statement_to_json(s)},
                           {"tautology", r.tautology},
                           {"max_residual", r.max_residual},
                           {"representations", r.representations},
                           {"assignments", r.assignments},
                           {"exhaustive", r.exhaustive}});
        if (item.contains("expect")) {
            const bool expect = item.at("expect").get<bool>();
            out.report.checks.push_back({name + ": tautology == " + (expect ? "true" : "false"),
                                         r.tautology == expect, "max residual " + sci(r.max_residual)});
        }
    }
    out.report.rows = static_cast<long>(t.rows.size());
    out.artifact = c.format == OutputFormat::csv
                       ? to_csv(t)
                       : json{{"kind", "logic-tautology"}, {"results", std::move(results)}}.dump(2) + "\n";
    return out;
}

RunResult run_logic_connectives(const ScenarioConfig &c) {
    const long range = integer_param(c.params, "range", 2);
    if (range < 0 || range > 50) {
        throw ConfigError("range must lie in [0, 50]");
    }
    const auto sols = enumerate_connectives(static_cast<int>(range));
    Table t{{"a", "b", "c", "d"}, {}};
    json list = json::array();
    for (const auto &s : sols) {
        t.rows.push_back({double(s.a), double(s.b), double(s.c), double(s.d)});
        json e = {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d}};
        if (const auto name = connective_name(s)) {
            e["name"] = std::string(*name);
        }
        list.push_back(std::move(e));
    }
    RunResult out;
    out.report.rows = static_cast<long>(sols.size());
    bool all_valid = true;
    for (const auto &s : sols) {
        all_valid = all_valid && verify_coefficients(s);
    }
    out.report.checks.push_back({"every listed tuple satisfies the idempotency constraints", all_valid, ""});
    if (range >= 2) {
        long found = 0;
        for (const auto &n : named_connectives()) {
            found += std::count(sols.begin(), sols.end(), n.coefficients) > 0 ? 1 : 0;
        }
        out.report.checks.push_back({"six named connectives present", found == 6,
                                     std::to_string(found) + " of 6 found"});
        out.report.checks.push_back({"solution count = 16", sols.size() == 16,
                                     std::to_string(sols.size()) + " solutions"});
    }
    if (c.format == OutputFormat::csv) {
        out.artifact = to_csv(t);
    } else {
        out.artifact = json{{"kind", "logic-connectives"},
                            {"range", range},
                            {"count", sols.size()},
                            {"solutions", std::move(list)}}
                           .dump(2) +
                       "\n";
    }
    return out;
}

} // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string_view to_string(ScenarioKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    return "unknown";
}

ScenarioKind scenario_kind_from_string(std::string_view name) {
    for (const auto &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    throw ConfigError("unknown scenario kind '" + std::string(name) + "'");
}

ScenarioConfig ScenarioConfig::from_json(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("scenario config must be a JSON object");
    }
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw ConfigError("scenario config needs a string 'kind'");
    }
    ScenarioConfig c;
    c.kind = scenario_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("params")) {
        if (!j.at("params").is_object()) {
            throw ConfigError("'params' must be an object");
        }
        c.params = j.at("params");
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
            throw ConfigError("'seed' must be a nonnegative integer");
        }
        if (j.at("seed").is_number_integer() && j.at("seed").get<long long>() < 0) {
            throw ConfigError("'seed' must be a nonnegative integer");
        }
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    c.format = c.kind == ScenarioKind::epr_chsh || c.kind == ScenarioKind::logic_tautology ||
                       c.kind == ScenarioKind::logic_connectives
                   ? OutputFormat::json
                   : OutputFormat::csv;
    if (j.contains("output")) {
        const json &o = j.at("output");
        if (o.is_string()) {
            c.output = o.get<std::string>();
        } else if (o.is_object()) {
            if (o.contains("path")) {
                c.output = o.at("path").get<std::string>();
            }
            if (o.contains("format")) {
                const auto f = o.at("format").get<std::string>();
                if (f == "csv") {
                    c.format = OutputFormat::csv;
                } else if (f == "json") {
                    c.format = OutputFormat::json;
                } else {
                    throw ConfigError("output.format must be \"csv\" or \"json\"");
                }
            }
        } else {
            throw ConfigError("'output' must be a path string or {path, format}");
        }
    }
    return c;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw ConfigError("malformed config JSON: " + std::string(e.what()));
    }
    return from_json(j);
}

bool RunReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

json RunReport::to_json(bool include_timing) const {
    json cs = json::array();
    for (const auto &c : checks) {
        cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json j = {{"kind", kind}, {"params", params}, {"seed", seed}, {"rows", rows},
              {"checks", std::move(cs)}, {"passed", all_passed()}};
    if (include_timing) {
        j["wall_seconds"] = wall_seconds;
    }
    return j;
}

RunResult execute(const ScenarioConfig &config) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    try {
        switch (config.kind) {
        case ScenarioKind::sg_overlap:
            r = run_sg_overlap(config, false);
            break;
        case ScenarioKind::sg_three_angle:
            r = run_sg_overlap(config, true);
            break;
        case ScenarioKind::sg_cascade:
            r = run_sg_cascade(config);
            break;
        case ScenarioKind::sg_collapse:
            r = run_sg_collapse(config);
            break;
        case ScenarioKind::epr_sweep:
            r = run_epr_sweep(config);
            break;
        case ScenarioKind::epr_chsh:
            r = run_epr_chsh(config);
            break;
        case ScenarioKind::quantize_kernels:
            r = run_quantize(config);
            break;
        case ScenarioKind::logic_tautology:
            r = run_logic_tautology(config);
            break;
        case ScenarioKind::logic_connectives:
            r = run_logic_connectives(config);
            break;
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("invalid parameter: ") + e.what());
    }
    r.report.kind = std::string(to_string(config.kind));
    r.report.params = config.params;
    r.report.seed = config.seed;
    r.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

RunReport run(const ScenarioConfig &config) {
    RunResult r = execute(config);
    if (!config.output.empty()) {
        std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw OutputError("cannot open output file '" + config.output.string() + "' for writing");
        }
        out << r.artifact;
        out.flush();
        if (!out) {
            throw OutputError("failed writing output file '" + config.output.string() + "'");
        }
    }
    return r.report;
}

std::string kernels_csv(const Lattice &lat) {
    lat.validate();
    std::string out = "k,q";
    for (long qp = 0; qp < lat.n; ++qp) {
        out += ",re_" + std::to_string(qp) + ",im_" + std::to_string(qp);
    }
    out += '\n';
    for (const auto &k : momentum_kernels(lat)) {
        for (long q = 0; q < lat.n; ++q) {
            out += std::to_string(k.k) + "," + std::to_string(q);
            for (long qp = 0; qp < lat.n; ++qp) {
                const Complex z = k.op.op()(q, qp);
                out += "," + format_number(z.real()) + "," + format_number(z.imag());
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace qtruth
