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

#include "qtruth/errors.hpp"

namespace qtruth {

/// Numerical tolerances for structural checks.
///
/// Residuals are Frobenius norms compared against `tau * dim`, so the same
/// defaults work across the 1..256 dimension range the library targets.
struct Tolerances {
    double norm = 1e-10;
    double herm = 1e-10;
    double idem = 1e-10;
    double eig = 1e-8;
    double eq = 1e-10;

    void validate() const {
        if (norm < 0 || herm < 0 || idem < 0 || eig < 0 || eq < 0) {
            throw RangeError("tolerances must be nonnegative");
        }
    }

    /// True iff `residual <= tau * dim`.
    static bool within(double residual, double tau, long dim) {
        return residual <= tau * static_cast<double>(dim);
    }
};

} // namespace qtruth
