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

#include "qtruth/quantize.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qtruth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

} // namespace

void Lattice::validate() const {
    if (n < 2) {
        std::ostringstream os;
        os << "lattice needs at least 2 sites (got " << n << ")";
        throw RangeError(os.str());
    }
    if (!(spacing > 0.0) || !(hbar > 0.0)) {
        throw RangeError("lattice spacing and hbar must be positive");
    }
}

Operator translation_operator(const Lattice &lat) {
    lat.validate();
    Matrix t = Matrix::Zero(lat.n, lat.n);
    for (long q = 0; q < lat.n; ++q) {
        t((q + 1) % lat.n, q) = 1.0;
    }
    return Operator(std::move(t));
}

MomentumKernel momentum_truth_kernel(const Lattice &lat, long k) {
    lat.validate();
    if (k < 0 || k >= lat.n) {
        throw RangeError("momentum index out of range");
    }
    const long n = lat.n;
    const double inv = 1.0 / static_cast<double>(n);
    Matrix m(n, n);
    for (long qp = 0; qp < n; ++qp) {
        for (long q = 0; q < n; ++q) {
            // Reduce k (q' - q) mod n first so the phase argument stays small.
            const long r = ((k * (qp - q)) % n + n) % n;
            m(q, qp) = inv * phase(static_cast<double>(r) * inv);
        }
    }
    return {lat, k, TruthOperator::trusted(Operator(std::move(m)))};
}

std::vector<MomentumKernel> momentum_kernels(const Lattice &lat) {
    lat.validate();
    std::vector<MomentumKernel> out;
    out.reserve(static_cast<std::size_t>(lat.n));
    for (long k = 0; k < lat.n; ++k) {
        out.push_back(momentum_truth_kernel(lat, k));
    }
    return out;
}

Operator dft_matrix(const Lattice &lat) {
    lat.validate();
    const long n = lat.n;
    const double inv = 1.0 / static_cast<double>(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Matrix s(n, n);
    for (long p = 0; p < n; ++p) {
        for (long q = 0; q < n; ++q) {
            const long r = (q * p) % n;
            s(q, p) = scale * phase(-static_cast<double>(r) * inv);
        }
    }
    return Operator(std::move(s));
}

StateVector plane_wave(const Lattice &lat, long k) {
    lat.validate();
    if (k < 0 || k >= lat.n) {
        throw RangeError("momentum index out of range");
    }
    const long n = lat.n;
    const double inv = 1.0 / static_cast<double>(n);
    Vector v(n);
    for (long q = 0; q < n; ++q) {
        v(q) = std::sqrt(inv) * phase(-static_cast<double>((k * q) % n) * inv);
    }
    return StateVector(std::move(v));
}

std::vector<double> default_momentum_spectrum(const Lattice &lat) {
    lat.validate();
    std::vector<double> p(static_cast<std::size_t>(lat.n));
    for (long k = 0; k < lat.n; ++k) {
        const long signed_k = 2 * k <= lat.n ? k : k - lat.n;
        p[static_cast<std::size_t>(k)] =
            kTwoPi * lat.hbar * static_cast<double>(signed_k) / (static_cast<double>(lat.n) * lat.spacing);
    }
    return p;
}

Operator momentum_operator(const Lattice &lat, std::span<const double> spectrum) {
    lat.validate();
    if (static_cast<long>(spectrum.size()) != lat.n) {
        throw DimensionError("momentum spectrum length must equal the lattice size");
    }
    Operator p = Operator::zero(lat.n);
    for (long k = 0; k < lat.n; ++k) {
        const double pk = spectrum[static_cast<std::size_t>(k)];
        if (pk != 0.0) {
            p += pk * momentum_truth_kernel(lat, k).op.op();
        }
    }
    return p;
}

TruthOperator angular_kernel(long m, long grid) {
    if (grid < 2 * std::abs(m) + 1) {
        throw RangeError("angular grid too small for mode m (aliasing)");
    }
    const double inv = 1.0 / static_cast<double>(grid);
    Matrix a(grid, grid);
    for (long jp = 0; jp < grid; ++jp) {
        for (long j = 0; j < grid; ++j) {
            const long r = ((m * (jp - j)) % grid + grid) % grid;
            a(j, jp) = inv * phase(static_cast<double>(r) * inv);
        }
    }
    return TruthOperator::trusted(Operator(std::move(a)));
}

std::vector<TruthOperator> position_projectors(const Lattice &lat) {
    lat.validate();
    return basis_projectors(lat.n);
}

TruthOperator interval_statement(std::span<const TruthOperator> family, long i1, long width) {
    const auto size = static_cast<long>(family.size());
    if (width < 0 || size == 0) {
        throw RangeError("interval statement: empty slice");
    }
    if (width + 1 > size) {
        throw RangeError("interval statement: width exceeds the family");
    }
    Operator sum = Operator::zero(family.front().dim());
    for (long j = 0; j <= width; ++j) {
        const long idx = ((i1 + j) % size + size) % size;
        sum += family[static_cast<std::size_t>(idx)].op();
    }
    return TruthOperator::trusted(std::move(sum));
}

std::vector<CommutatorSample> interval_commutators(const Lattice &lat, std::span<const long> widths) {
    std::vector<TruthOperator> momenta;
    for (auto &k : momentum_kernels(lat)) {
        momenta.push_back(std::move(k.op));
    }
    const auto positions = position_projectors(lat);
    std::vector<CommutatorSample> out;
    for (long w : widths) {
        const TruthOperator dp = interval_statement(momenta, -(w / 2), w);
        const TruthOperator dq = interval_statement(positions, 0, w);
        const double f = commutator(dp, dq).frobenius_norm();
        out.push_back({w, f, f / static_cast<double>(w + 1)});
    }
    return out;
}

} // namespace qtruth
