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

#include <cstdint>
#include <random>

#include "qtruth/operator.hpp"

namespace qtruth {

/// Deterministic 64-bit generator used for every seeded draw.
using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal of R phase-normalized.
Operator random_unitary(long dim, Rng &rng);
Operator random_unitary(long dim, std::uint64_t seed);

/// Uniformly random pure state (normalized complex Gaussian vector).
StateVector random_state(long dim, Rng &rng);

/// Random projector of the given rank: U diag(1..1,0..0) U^dagger.
TruthOperator random_projector(long dim, long rank, Rng &rng);

/// 2x2 special unitary drawn from the Haar measure on SU(2).
Operator random_su2(Rng &rng);

} // namespace qtruth
