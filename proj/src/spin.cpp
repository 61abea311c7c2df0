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

#include "qtruth/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qtruth/hilbert.hpp"
#include "qtruth/logic.hpp"

namespace qtruth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1e-12;

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

Vec3 scaled(const Vec3 &a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

// Spin-down partner of spin_state(axis): the rotated |down_Z>.
Vector down_state(const SpinAxis &axis) {
    const Operator g = rotation_between(SpinAxis::z(), axis);
    return g.matrix().col(1);
}

} // namespace

SpinAxis::SpinAxis(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw RangeError("spin axis angles must be finite");
    }
    if (theta < -kAngleSlack || theta > kPi + kAngleSlack) {
        throw RangeError("spin axis theta must lie in [0, pi]");
    }
    if (phi < -kAngleSlack || phi >= 2.0 * kPi) {
        throw RangeError("spin axis phi must lie in [0, 2 pi)");
    }
    theta_ = std::clamp(theta, 0.0, kPi);
    phi_ = std::max(phi, 0.0);
}

SpinAxis SpinAxis::from_degrees(double theta_deg, double phi_deg) {
    return SpinAxis(theta_deg * kPi / 180.0, phi_deg * kPi / 180.0);
}

Vec3 SpinAxis::direction() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_ / 2.0), -s * std::sin(phi_ / 2.0), std::cos(theta_)};
}

double angle_between(const SpinAxis &a, const SpinAxis &b) {
    const Vec3 u = a.direction();
    const Vec3 v = b.direction();
    // atan2 keeps full precision near 0 and pi where acos does not.
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

Operator pauli_x() { return Operator{{0.0, 1.0}, {1.0, 0.0}}; }

Operator pauli_y() { return Operator{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}; }

Operator pauli_z() { return Operator{{1.0, 0.0}, {0.0, -1.0}}; }

Operator pauli_along(const Vec3 &n) { return n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z(); }

Operator spin_rotation(const Vec3 &n, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return c * Operator::identity(2) + Complex{0.0, -s} * pauli_along(n);
}

StateVector spin_state(const SpinAxis &axis) {
    Vector v(2);
    v(0) = std::polar(std::cos(axis.theta() / 2.0), axis.phi() / 2.0);
    v(1) = std::sin(axis.theta() / 2.0);
    return StateVector(std::move(v));
}

TruthOperator spin_truth(const SpinAxis &axis) { return outer(spin_state(axis)); }

Operator rotation_between(const SpinAxis &from, const SpinAxis &to) {
    const Vec3 a = from.direction();
    const Vec3 b = to.direction();
    Vec3 axis = cross(a, b);
    const double sine = norm(axis);
    const double cosine = dot(a, b);
    const double angle = std::atan2(sine, cosine);
    if (sine < 1e-14) {
        if (cosine > 0.0) {
            return Operator::identity(2);
        }
        axis = cross(a, {1.0, 0.0, 0.0});
        if (norm(axis) < 1e-7) {
            axis = cross(a, {0.0, 1.0, 0.0});
        }
        return spin_rotation(scaled(axis, 1.0 / norm(axis)), kPi);
    }
    return spin_rotation(scaled(axis, 1.0 / sine), angle);
}

OverlapDecomposition overlap_probability(const SpinAxis &a1, const SpinAxis &a2) {
    const StateVector s1 = spin_state(a1);
    const StateVector s2 = spin_state(a2);
    OverlapDecomposition d;
    d.total = trace_product(outer(s1), outer(s2)).real();
    d.diagonal = std::norm(s1[0]) * std::norm(s2[0]) + std::norm(s1[1]) * std::norm(s2[1]);
    d.interference = 2.0 * (s1[0] * std::conj(s1[1]) * std::conj(s2[0]) * s2[1]).real();
    return d;
}

double interference_closed_form(const SpinAxis &a1, const SpinAxis &a2) {
    return 0.5 * std::sin(a1.theta()) * std::sin(a2.theta()) * std::cos((a2.phi() - a1.phi()) / 2.0);
}

double interference_from_three(double w1, double w2, double w12) {
    for (double w : {w1, w2, w12}) {
        if (!(w >= -kAngleSlack && w <= 1.0 + kAngleSlack)) {
            throw RangeError("interference_from_three: probabilities must lie in [0, 1]");
        }
    }
    return w12 - w1 * w2 - (1.0 - w1) * (1.0 - w2);
}

double up_probability(const SpinAxis &polarization, const SpinAxis &magnet) {
    return trace_product(spin_truth(polarization), spin_truth(magnet)).real();
}

Complex cascade_amplitude(const SgCascade &c, BranchPattern select) {
    if (c.magnets.empty()) {
        throw RangeError("cascade needs at least one magnet");
    }
    if (c.magnets.size() > 2) {
        throw UnsupportedError("cascades deeper than two magnets are not supported");
    }
    const Vector psi = spin_state(c.initial).amplitudes();
    const auto basis = [](const SpinAxis &m, Branch b) {
        return b == Branch::up ? spin_state(m).amplitudes() : down_state(m);
    };
    const Vector first = basis(c.magnets[0], select.first);
    const Complex a = first.dot(psi);
    if (c.magnets.size() == 1) {
        return a;
    }
    const Vector second = basis(c.magnets[1], select.second);
    return second.dot(first) * a;
}

OverlapDecomposition cascade_overlap(const SgCascade &c) {
    OverlapDecomposition d;
    if (c.magnets.size() == 1) {
        d.total = d.diagonal = std::norm(cascade_amplitude(c, {Branch::up, Branch::up}));
        return d;
    }
    const Complex via_up = cascade_amplitude(c, {Branch::up, Branch::up});
    const Complex via_down = cascade_amplitude(c, {Branch::down, Branch::up});
    d.total = std::norm(via_up + via_down);
    d.diagonal = std::norm(via_up) + std::norm(via_down);
    d.interference = 2.0 * (via_up * std::conj(via_down)).real();
    return d;
}

QuasiclassicalRatio quasiclassical_ratio(const QuasiclassicalParams &p) {
    if (!(p.force > 0.0) || !(p.flight_time > 0.0) || !(p.mass > 0.0) || !(p.hbar > 0.0)) {
        throw RangeError("quasiclassical parameters must all be positive");
    }
    const double t3 = p.flight_time * p.flight_time * p.flight_time;
    const double action = p.force * p.force * t3;
    const double quantum = p.hbar * p.mass;
    return {quantum / action, action / quantum};
}

DetectorModel::DetectorModel(std::vector<Complex> up, std::vector<Complex> down, const Tolerances &tol)
    : up_(std::move(up)), down_(std::move(down)) {
    if (up_.empty() || up_.size() != down_.size()) {
        throw RangeError("detector model needs equal, nonempty branches");
    }
    for (const auto *branch : {&up_, &down_}) {
        double total = 0.0;
        for (const Complex &a : *branch) {
            total += std::norm(a);
        }
        if (std::abs(total - 1.0) > tol.norm) {
            throw NormalizationError("detector amplitudes must satisfy sum_k |alpha_mk|^2 = 1");
        }
    }
}

DetectorModel DetectorModel::random(long n_states, Rng &rng) {
    if (n_states < 1) {
        throw RangeError("detector model needs n_states >= 1");
    }
    const auto draw = [&] {
        const Vector v = random_state(n_states, rng).amplitudes();
        return std::vector<Complex>(v.data(), v.data() + v.size());
    };
    auto up = draw();
    auto down = draw();
    return DetectorModel(std::move(up), std::move(down));
}

DetectorModel DetectorModel::uniform(long n_states) {
    if (n_states < 1) {
        throw RangeError("detector model needs n_states >= 1");
    }
    const std::vector<Complex> flat(static_cast<std::size_t>(n_states),
                                    Complex{1.0 / std::sqrt(static_cast<double>(n_states)), 0.0});
    return DetectorModel(flat, flat);
}

long DetectorModel::index(Branch b, long k) const {
    if (k < 0 || k >= n_states()) {
        throw RangeError("detector outcome index out of range");
    }
    const long n = n_states();
    return b == Branch::up ? k : 2 * n + n + k;
}

DetectorModel DetectorModel::rephased(std::span<const double> up_phases, std::span<const double> down_phases) const {
    if (static_cast<long>(up_phases.size()) != n_states() || static_cast<long>(down_phases.size()) != n_states()) {
        throw RangeError("one phase per detector outcome required");
    }
    auto up = up_;
    auto down = down_;
    for (std::size_t k = 0; k < up.size(); ++k) {
        up[k] *= std::polar(1.0, up_phases[k]);
        down[k] *= std::polar(1.0, down_phases[k]);
    }
    return DetectorModel(std::move(up), std::move(down));
}

CoarseSpin coarse_spin_statements(const DetectorModel &d) {
    const long n = d.n_states();
    std::vector<double> up(static_cast<std::size_t>(d.dim()), 0.0);
    std::vector<double> down(up.size(), 0.0);
    for (long k = 0; k < n; ++k) {
        up[static_cast<std::size_t>(d.index(Branch::up, k))] = 1.0;
        down[static_cast<std::size_t>(d.index(Branch::down, k))] = 1.0;
    }
    return {TruthOperator::trusted(Operator::diagonal(up)), TruthOperator::trusted(Operator::diagonal(down))};
}

StateVector collapse_state(Complex c_up, Complex c_down, const DetectorModel &d, const Tolerances &tol) {
    if (std::abs(std::norm(c_up) + std::norm(c_down) - 1.0) > tol.norm) {
        throw NormalizationError("spin amplitudes must satisfy |c_up|^2 + |c_down|^2 = 1");
    }
    Vector v = Vector::Zero(d.dim());
    for (long k = 0; k < d.n_states(); ++k) {
        v(d.index(Branch::up, k)) = c_up * d.amplitudes(Branch::up)[static_cast<std::size_t>(k)];
        v(d.index(Branch::down, k)) = c_down * d.amplitudes(Branch::down)[static_cast<std::size_t>(k)];
    }
    return StateVector(std::move(v), tol);
}

std::pair<double, double> collapse_truths(Complex c_up, Complex c_down, const DetectorModel &d,
                                          const Tolerances &tol) {
    const TruthOperator lambda = outer(collapse_state(c_up, c_down, d, tol));
    const CoarseSpin spin = coarse_spin_statements(d);
    return {conditional_truth(lambda, spin.up, tol), conditional_truth(lambda, spin.down, tol)};
}

StateVector coarse_eigenvector(const DetectorModel &d, Branch b, std::span<const Complex> coeffs) {
    if (static_cast<long>(coeffs.size()) != d.n_states()) {
        throw RangeError("one coefficient per detector outcome required");
    }
    Vector v = Vector::Zero(d.dim());
    for (long k = 0; k < d.n_states(); ++k) {
        v(d.index(b, k)) = coeffs[static_cast<std::size_t>(k)];
    }
    return StateVector::normalized(std::move(v));
}

} // namespace qtruth
