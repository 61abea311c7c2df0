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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qtruth/tolerances.hpp"
#include "qtruth/types.hpp"

namespace qtruth {

/// Dense square complex matrix with finite entries.
///
/// Every operator-valued quantity in the library (truth operators,
/// observables, unitaries, density matrices) is carried by this type.
class Operator {
  public:
    /// Throws DimensionError for non-square or empty input and
    /// NumericalIntegrityError for NaN/Inf entries.
    explicit Operator(Matrix m);
    Operator(std::initializer_list<std::initializer_list<Complex>> rows);

    static Operator identity(long dim);
    static Operator zero(long dim);
    static Operator diagonal(std::span<const double> diag);
    static Operator diagonal(std::initializer_list<double> diag);

    long dim() const noexcept { return m_.rows(); }
    const Matrix &matrix() const noexcept { return m_; }
    Complex operator()(long row, long col) const { return m_(row, col); }

    Operator adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    Operator &operator+=(const Operator &rhs);
    Operator &operator-=(const Operator &rhs);
    Operator &operator*=(Complex s);

    friend Operator operator+(Operator lhs, const Operator &rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator &rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator lhs, Complex s) { return lhs *= s; }
    friend Operator operator*(Complex s, Operator rhs) { return rhs *= s; }
    friend Operator operator*(double s, Operator rhs) { return rhs *= Complex{s, 0.0}; }
    /// Matrix product through the dense kernels.
    friend Operator operator*(const Operator &lhs, const Operator &rhs);

  private:
    Matrix m_;
};

/// ||a - b||_F. Dimensions must agree.
double distance(const Operator &a, const Operator &b);

/// Unit-norm complex vector.
class StateVector {
  public:
    /// Throws NormalizationError when | ||v|| - 1 | > tol.norm.
    explicit StateVector(Vector amplitudes, const Tolerances &tol = {});
    StateVector(std::initializer_list<Complex> amplitudes);

    /// Scales `v` to unit norm. Throws NormalizationError for a zero vector.
    static StateVector normalized(Vector v);
    static StateVector basis(long dim, long index);

    long dim() const noexcept { return v_.size(); }
    const Vector &amplitudes() const noexcept { return v_; }
    Complex operator[](long i) const { return v_(i); }

    /// <this|other>
    Complex inner(const StateVector &other) const;
    /// op |this>, not renormalized.
    Vector apply(const Operator &op) const;

  private:
    Vector v_;
};

/// Hermitian idempotent operator: the truth of a statement.
class TruthOperator {
  public:
    /// Validates Hermiticity, idempotency and {0,1} spectrum; throws
    /// ProjectorError on failure.
    explicit TruthOperator(Operator op, const Tolerances &tol = {});

    /// Wraps an operator the caller has already proven to be a projector
    /// (e.g. a sum of mutually orthogonal rank-1 projectors).
    static TruthOperator trusted(Operator op);

    const Operator &op() const noexcept { return op_; }
    operator const Operator &() const noexcept { return op_; }
    long dim() const noexcept { return op_.dim(); }
    /// Rank, read off as the real part of the trace.
    double rank() const;

  private:
    struct TrustedTag {};
    TruthOperator(Operator op, TrustedTag) : op_(std::move(op)) {}
    Operator op_;
};

} // namespace qtruth
