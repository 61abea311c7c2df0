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

#include "qtruth/random.hpp"

#include <cmath>

#include <Eigen/QR>

#include "qtruth/hilbert.hpp"

namespace qtruth {

namespace {

Matrix gaussian_matrix(long rows, long cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (long j = 0; j < cols; ++j) {
        for (long i = 0; i < rows; ++i) {
            // Two separate statements keep the draw order fixed.
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex{re, im};
        }
    }
    return m;
}

} // namespace

Operator random_unitary(long dim, Rng &rng) {
    if (dim < 1) {
        throw RangeError("random_unitary: dim must be >= 1");
    }
    const Matrix z = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        const Complex phase = mag > 0.0 ? d / mag : Complex{1.0, 0.0};
        q.col(j) *= phase;
    }
    return Operator(std::move(q));
}

Operator random_unitary(long dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(dim, rng);
}

StateVector random_state(long dim, Rng &rng) {
    const Matrix z = gaussian_matrix(dim, 1, rng);
    return StateVector::normalized(z.col(0));
}

TruthOperator random_projector(long dim, long rank, Rng &rng) {
    if (rank < 0 || rank > dim) {
        throw RangeError("random_projector: rank out of range");
    }
    std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
    for (long i = 0; i < rank; ++i) {
        diag[static_cast<std::size_t>(i)] = 1.0;
    }
    const Operator u = random_unitary(dim, rng);
    return conjugate(TruthOperator::trusted(Operator::diagonal(diag)), u);
}

Operator random_su2(Rng &rng) {
    // Uniform point on S^3 gives a Haar-random SU(2) element.
    std::normal_distribution<double> normal(0.0, 1.0);
    double q[4];
    double norm = 0.0;
    for (double &x : q) {
        x = normal(rng);
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double &x : q) {
        x /= norm;
    }
    const Complex a{q[0], q[1]};
    const Complex b{q[2], q[3]};
    return Operator{{a, -std::conj(b)}, {b, std::conj(a)}};
}

} // namespace qtruth
