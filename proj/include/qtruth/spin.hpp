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
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qtruth/random.hpp"

namespace qtruth {

/// Measurement direction given by polar angle theta in [0, pi] and azimuth
/// phi in [0, 2 pi).
///
/// The spin-up state along the axis uses the amplitude convention
/// (e^{i phi/2} cos(theta/2), sin(theta/2)) in the Z basis. Its Bloch vector
/// therefore points at polar angle theta and azimuth -phi/2; `direction()`
/// returns that vector and `angle_between` measures angles with it.
class SpinAxis {
  public:
    /// Throws RangeError outside the documented ranges.
    SpinAxis(double theta, double phi = 0.0);
    static SpinAxis from_degrees(double theta_deg, double phi_deg = 0.0);
    static SpinAxis z() { return SpinAxis(0.0, 0.0); }

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    std::array<double, 3> direction() const;

  private:
    double theta_;
    double phi_;
};

/// Angle between the Bloch directions of two axes, in [0, pi].
double angle_between(const SpinAxis &a, const SpinAxis &b);

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
/// n . sigma for a unit vector n.
Operator pauli_along(const std::array<double, 3> &n);
/// exp(-i angle/2 n.sigma)
Operator spin_rotation(const std::array<double, 3> &n, double angle);

/// (e^{i phi/2} cos(theta/2), sin(theta/2))
StateVector spin_state(const SpinAxis &axis);
/// |spin_state><spin_state|
TruthOperator spin_truth(const SpinAxis &axis);

/// SU(2) rotation about the axis perpendicular to both directions taking
/// spin_state(from) to spin_state(to) up to a global phase. For antipodal
/// directions the rotation axis is direction(from) x e_x, or x e_y when
/// that vanishes; equal directions give the identity.
Operator rotation_between(const SpinAxis &from, const SpinAxis &to);

/// tr(rho1 rho2) split into the classical diagonal part and the
/// interference part.
struct OverlapDecomposition {
    double total = 0.0;
    double diagonal = 0.0;
    double interference = 0.0;
};

OverlapDecomposition overlap_probability(const SpinAxis &a1, const SpinAxis &a2);

/// (1/2) sin(theta1) sin(theta2) cos((phi2 - phi1)/2)
double interference_closed_form(const SpinAxis &a1, const SpinAxis &a2);

/// Interference recovered from three single-axis measurements:
/// w12 - w1 w2 - (1 - w1)(1 - w2). Throws RangeError for inputs outside
/// [0, 1].
double interference_from_three(double w1, double w2, double w12);

/// Probability of spin-up along `magnet` for a beam polarized along
/// `polarization`.
double up_probability(const SpinAxis &polarization, const SpinAxis &magnet);

enum class Branch { up, down };

struct BranchPattern {
    Branch first = Branch::up;
    Branch second = Branch::up;
};

/// Beam polarized along `initial` passing magnets in order.
struct SgCascade {
    SpinAxis initial = SpinAxis::z();
    std::vector<SpinAxis> magnets;
};

/// Path amplitude <second(magnet 2) | first(magnet 1)> <first(magnet 1) | psi>.
/// For a single magnet only `select.first` is used. Throws UnsupportedError
/// for more than two magnets and RangeError for none.
Complex cascade_amplitude(const SgCascade &c, BranchPattern select);

/// Intensity at the detector that recombines both first-magnet branches in
/// the second magnet's up spot, with its diagonal/interference split.
/// Equals tr(rho1 rho2) with rho1 the beam and rho2 the second magnet's
/// up state.
OverlapDecomposition cascade_overlap(const SgCascade &c);

struct QuasiclassicalParams {
    double force = 0.0;       ///< |mu_e dB_z/dZ|, newtons
    double flight_time = 0.0; ///< seconds
    double mass = 0.0;        ///< kilograms
    double hbar = 1.054571817e-34;
};

struct QuasiclassicalRatio {
    double dlambda_dz = 0.0;   ///< hbar m / (F^2 T^3)
    double action_ratio = 0.0; ///< F^2 T^3 / (hbar m), S/hbar
};

/// Throws RangeError unless every parameter is positive.
QuasiclassicalRatio quasiclassical_ratio(const QuasiclassicalParams &p);

/// Atom + detector amplitudes alpha_{mk}: row 0 is the up branch, row 1 the
/// down branch, each normalized over k.
class DetectorModel {
  public:
    /// Throws NormalizationError if a branch is not normalized and
    /// RangeError if the branches differ in length or are empty.
    DetectorModel(std::vector<Complex> up, std::vector<Complex> down, const Tolerances &tol = {});
    static DetectorModel random(long n_states, Rng &rng);
    static DetectorModel uniform(long n_states);

    long n_states() const noexcept { return static_cast<long>(up_.size()); }
    const std::vector<Complex> &amplitudes(Branch b) const { return b == Branch::up ? up_ : down_; }
    /// Product-space dimension: spin (2) x register (2 n_states).
    long dim() const noexcept { return 4 * n_states(); }
    /// Index of |m> (x) |register slot for branch m, outcome k>.
    long index(Branch b, long k) const;

    DetectorModel rephased(std::span<const double> up_phases, std::span<const double> down_phases) const;

  private:
    std::vector<Complex> up_;
    std::vector<Complex> down_;
};

struct CoarseSpin {
    TruthOperator up;
    TruthOperator down;
};

/// "Spin up" / "Spin down" as disjunctions of the mutually exclusive
/// atom-detector outcomes of each branch; each has rank n_states.
CoarseSpin coarse_spin_statements(const DetectorModel &d);

/// sum_m c_m sum_k alpha_{mk} |m, k>. Throws NormalizationError unless
/// |c_up|^2 + |c_down|^2 = 1.
StateVector collapse_state(Complex c_up, Complex c_down, const DetectorModel &d, const Tolerances &tol = {});

/// Conditional truths of "Spin up" and "Spin down" in collapse_state.
std::pair<double, double> collapse_truths(Complex c_up, Complex c_down, const DetectorModel &d,
                                          const Tolerances &tol = {});

/// sum_k coeffs[k] |b, k>, normalized: an eigenvector of the coarse
/// statement for branch b for any choice of coefficients.
StateVector coarse_eigenvector(const DetectorModel &d, Branch b, std::span<const Complex> coeffs);

} // namespace qtruth
