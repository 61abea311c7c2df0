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

#include "qtruth/operator.hpp"

namespace qtruth {

/// |psi><psi|: the truth operator of "the system is in state psi".
TruthOperator outer(const StateVector &state);

bool is_hermitian(const Operator &op, const Tolerances &tol = {});
bool is_unitary(const Operator &op, const Tolerances &tol = {});

/// Hermitian, idempotent, and every eigenvalue within tol.eig of 0 or 1.
bool is_projector(const Operator &op, const Tolerances &tol = {});

/// Ascending eigenvalues of a Hermitian operator. Non-Hermitian input is
/// rejected with HermiticityError before any decomposition is attempted.
std::vector<double> hermitian_eigenvalues(const Operator &op, const Tolerances &tol = {});

/// u * op * u^dagger. Throws UnitarityError if u is not unitary.
Operator conjugate(const Operator &op, const Operator &u, const Tolerances &tol = {});
TruthOperator conjugate(const TruthOperator &p, const Operator &u, const Tolerances &tol = {});

/// Kronecker product; the left factor owns the most significant index.
Operator tensor(const Operator &a, const Operator &b);

/// tr(a b). Throws DimensionError on mismatch.
Complex trace_product(const Operator &a, const Operator &b);

/// a b - b a
Operator commutator(const Operator &a, const Operator &b);
bool commute(const Operator &a, const Operator &b, const Tolerances &tol = {});

/// Pairwise P_i P_j = 0 for i != j, within tol.eq.
bool is_orthogonal_family(std::span<const TruthOperator> family, const Tolerances &tol = {});

/// Rank-1 projectors onto the computational basis of dimension `dim`.
std::vector<TruthOperator> basis_projectors(long dim);

} // namespace qtruth
