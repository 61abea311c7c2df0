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

#include "qtruth/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qtruth/kernels.hpp"

namespace qtruth {

TruthOperator outer(const StateVector &state) {
    const Vector &v = state.amplitudes();
    // Rank-1 by construction; the StateVector invariant guarantees trace 1.
    return TruthOperator::trusted(Operator(v * v.adjoint()));
}

bool is_hermitian(const Operator &op, const Tolerances &tol) {
    const double r = (op.matrix() - op.matrix().adjoint()).norm();
    return Tolerances::within(r, tol.herm, op.dim());
}

bool is_unitary(const Operator &op, const Tolerances &tol) {
    const Matrix uu = kernels::matmul(op.matrix(), op.matrix().adjoint());
    const double r = (uu - Matrix::Identity(op.dim(), op.dim())).norm();
    return Tolerances::within(r, tol.herm, op.dim());
}

std::vector<double> hermitian_eigenvalues(const Operator &op, const Tolerances &tol) {
    if (!is_hermitian(op, tol)) {
        throw HermiticityError("eigenvalues requested for a non-Hermitian operator");
    }
    // Symmetrize so rounding noise in the lower triangle is not silently dropped.
    const Matrix h = 0.5 * (op.matrix() + op.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

bool is_projector(const Operator &op, const Tolerances &tol) {
    if (!is_hermitian(op, tol)) {
        return false;
    }
    const Matrix sq = kernels::matmul(op.matrix(), op.matrix());
    if (!Tolerances::within((sq - op.matrix()).norm(), tol.idem, op.dim())) {
        return false;
    }
    const auto ev = hermitian_eigenvalues(op, tol);
    return std::all_of(ev.begin(), ev.end(), [&](double x) {
        return std::abs(x) <= tol.eig || std::abs(x - 1.0) <= tol.eig;
    });
}

Operator conjugate(const Operator &op, const Operator &u, const Tolerances &tol) {
    if (op.dim() != u.dim()) {
        throw DimensionError("conjugate: dimension mismatch");
    }
    if (!is_unitary(u, tol)) {
        throw UnitarityError("conjugate: transformation is not unitary");
    }
    return u * op * u.adjoint();
}

TruthOperator conjugate(const TruthOperator &p, const Operator &u, const Tolerances &tol) {
    return TruthOperator::trusted(conjugate(p.op(), u, tol));
}

Operator tensor(const Operator &a, const Operator &b) {
    return Operator(kernels::kron(a.matrix(), b.matrix()));
}

Complex trace_product(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("trace_product: dimension mismatch");
    }
    return kernels::trace_product(a.matrix(), b.matrix());
}

Operator commutator(const Operator &a, const Operator &b) { return a * b - b * a; }

bool commute(const Operator &a, const Operator &b, const Tolerances &tol) {
    return Tolerances::within(commutator(a, b).frobenius_norm(), tol.eq, a.dim());
}

bool is_orthogonal_family(std::span<const TruthOperator> family, const Tolerances &tol) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Operator &a = family[i];
            const Operator &b = family[j];
            if (a.dim() != b.dim()) {
                throw DimensionError("projector family has mixed dimensions");
            }
            if (!Tolerances::within((a * b).frobenius_norm(), tol.eq, a.dim())) {
                return false;
            }
        }
    }
    return true;
}

std::vector<TruthOperator> basis_projectors(long dim) {
    std::vector<TruthOperator> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        out.push_back(outer(StateVector::basis(dim, i)));
    }
    return out;
}

} // namespace qtruth
