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

#include <span>
#include <vector>

#include "qtruth/hilbert.hpp"

namespace qtruth {

/// Periodic lattice of `n` sites. Translation is the cyclic shift q -> q+1.
struct Lattice {
    long n = 2;
    double spacing = 1.0;
    double hbar = 1.0;

    /// Throws RangeError unless n >= 2 and spacing, hbar are positive.
    void validate() const;
};

/// Truth operator of "momentum = p_k" in the position representation.
struct MomentumKernel {
    Lattice lattice;
    long k = 0;
    TruthOperator op;
};

/// T with T|q> = |q+1 mod n>; T^n = 1.
Operator translation_operator(const Lattice &lat);

/// Entries (1/n) exp(2 pi i k (q' - q) / n). Rank-1, trace 1, commutes
/// with translation. Throws RangeError unless 0 <= k < n.
MomentumKernel momentum_truth_kernel(const Lattice &lat, long k);
std::vector<MomentumKernel> momentum_kernels(const Lattice &lat);

/// Change of representation from momentum to position:
/// S(q, p) = n^{-1/2} exp(-2 pi i q p / n).
///
/// Chosen so that S diag(e_k) S^dagger reproduces momentum_truth_kernel(k)
/// entry for entry; column k is the plane wave with momentum index k.
Operator dft_matrix(const Lattice &lat);

/// Plane wave exp(-2 pi i k q / n) / sqrt(n): the eigenvector of kernel k.
StateVector plane_wave(const Lattice &lat, long k);

/// p_k = 2 pi hbar k' / (n * spacing) with k' the signed index in
/// (-n/2, n/2].
std::vector<double> default_momentum_spectrum(const Lattice &lat);

/// sum_k spectrum[k] * kernel_k. Throws DimensionError unless
/// spectrum.size() == n.
Operator momentum_operator(const Lattice &lat, std::span<const double> spectrum);

/// Discretized (1/2pi) exp(i m (phi' - phi)) on `grid` equally spaced angles
/// with weight 1/grid. Throws RangeError when grid < 2|m| + 1.
TruthOperator angular_kernel(long m, long grid);

/// Position projectors |q><q|, q = 0..n-1.
std::vector<TruthOperator> position_projectors(const Lattice &lat);

/// Coarse projector projs[i1] + ... + projs[i1 + width], indices taken
/// modulo the family size. Rank width + 1. Throws RangeError for a negative
/// width or one that would wrap onto itself.
TruthOperator interval_statement(std::span<const TruthOperator> family, long i1, long width);

struct CommutatorSample {
    long width = 0;
    /// ||[dI_p, dI_q]||_F
    double frobenius = 0.0;
    /// frobenius / (width + 1): the commutator relative to the interval rank.
    double relative = 0.0;
};

/// Commutator of a momentum interval (centred on k = 0) and a position
/// interval (starting at q = 0), both of the given width, for each width.
std::vector<CommutatorSample> interval_commutators(const Lattice &lat, std::span<const long> widths);

} // namespace qtruth
