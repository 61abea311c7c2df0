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

#include "qtruth/operator.hpp"

#include <cmath>
#include <sstream>

#include "qtruth/hilbert.hpp"
#include "qtruth/kernels.hpp"

namespace qtruth {

namespace {

void require_same_dim(const Operator &a, const Operator &b, const char *what) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw DimensionError(os.str());
    }
}

} // namespace

Operator::Operator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw DimensionError("operator must be square with dim >= 1");
    }
    if (!m_.allFinite()) {
        throw NumericalIntegrityError("operator has non-finite entries");
    }
}

Operator::Operator(std::initializer_list<std::initializer_list<Complex>> rows)
    : Operator([&] {
          const auto n = static_cast<long>(rows.size());
          Matrix m(n, n);
          long i = 0;
          for (const auto &row : rows) {
              if (static_cast<long>(row.size()) != n) {
                  throw DimensionError("operator literal must be square");
              }
              long j = 0;
              for (const auto &x : row) {
                  m(i, j++) = x;
              }
              ++i;
          }
          return m;
      }()) {}

Operator Operator::identity(long dim) { return Operator(Matrix::Identity(dim, dim)); }

Operator Operator::zero(long dim) { return Operator(Matrix::Zero(dim, dim)); }

Operator Operator::diagonal(std::span<const double> diag) {
    const auto n = static_cast<long>(diag.size());
    Matrix m = Matrix::Zero(n, n);
    for (long i = 0; i < n; ++i) {
        m(i, i) = diag[static_cast<std::size_t>(i)];
    }
    return Operator(std::move(m));
}

Operator Operator::diagonal(std::initializer_list<double> diag) {
    return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

Operator Operator::adjoint() const { return Operator(m_.adjoint()); }

Complex Operator::trace() const { return m_.trace(); }

double Operator::frobenius_norm() const { return m_.norm(); }

Operator &Operator::operator+=(const Operator &rhs) {
    require_same_dim(*this, rhs, "operator +");
    m_ += rhs.m_;
    return *this;
}

Operator &Operator::operator-=(const Operator &rhs) {
    require_same_dim(*this, rhs, "operator -");
    m_ -= rhs.m_;
    return *this;
}

Operator &Operator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

Operator operator*(const Operator &lhs, const Operator &rhs) {
    require_same_dim(lhs, rhs, "operator *");
    return Operator(kernels::matmul(lhs.m_, rhs.m_));
}

double distance(const Operator &a, const Operator &b) {
    require_same_dim(a, b, "distance");
    return (a.matrix() - b.matrix()).norm();
}

StateVector::StateVector(Vector amplitudes, const Tolerances &tol) : v_(std::move(amplitudes)) {
    if (v_.size() == 0) {
        throw DimensionError("state vector must have dim >= 1");
    }
    if (!v_.allFinite()) {
        throw NumericalIntegrityError("state vector has non-finite entries");
    }
    const double norm = v_.norm();
    if (std::abs(norm - 1.0) > tol.norm) {
        std::ostringstream os;
        os << "state vector is not normalized (norm = " << norm << ")";
        throw NormalizationError(os.str());
    }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector([&] {
          Vector v(static_cast<long>(amplitudes.size()));
          long i = 0;
          for (const auto &a : amplitudes) {
              v(i++) = a;
          }
          return v;
      }()) {}

StateVector StateVector::normalized(Vector v) {
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NormalizationError("cannot normalize a zero or non-finite vector");
    }
    v /= norm;
    return StateVector(std::move(v));
}

StateVector StateVector::basis(long dim, long index) {
    if (index < 0 || index >= dim) {
        throw RangeError("basis index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector &other) const {
    if (dim() != other.dim()) {
        throw DimensionError("inner product: dimension mismatch");
    }
    return v_.dot(other.v_);
}

Vector StateVector::apply(const Operator &op) const {
    if (dim() != op.dim()) {
        throw DimensionError("apply: dimension mismatch");
    }
    return op.matrix() * v_;
}

TruthOperator::TruthOperator(Operator op, const Tolerances &tol) : op_(std::move(op)) {
    if (!is_projector(op_, tol)) {
        throw ProjectorError("operator is not a projector (Hermitian idempotent)");
    }
}

TruthOperator TruthOperator::trusted(Operator op) { return TruthOperator(std::move(op), TrustedTag{}); }

double TruthOperator::rank() const { return op_.trace().real(); }

} // namespace qtruth
