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

// Dense complex kernels. Each kernel exists twice: a plain serial loop kept
// as the reference, and an OpenMP version that splits the outer loop across
// threads. Both accumulate every output entry in the same order, so their
// results are bit-identical.

#include "qtruth/types.hpp"

namespace qtruth::kernels {

namespace serial {
Matrix matmul(const Matrix &a, const Matrix &b);
Matrix kron(const Matrix &a, const Matrix &b);
Complex trace_product(const Matrix &a, const Matrix &b);
} // namespace serial

namespace parallel {
Matrix matmul(const Matrix &a, const Matrix &b);
Matrix kron(const Matrix &a, const Matrix &b);
Complex trace_product(const Matrix &a, const Matrix &b);
} // namespace parallel

/// Below this dimension the thread fork costs more than the work.
inline constexpr long kParallelThreshold = 48;

inline Matrix matmul(const Matrix &a, const Matrix &b) {
    return a.rows() >= kParallelThreshold ? parallel::matmul(a, b)
                                          : serial::matmul(a, b);
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    return a.rows() * b.rows() >= kParallelThreshold ? parallel::kron(a, b)
                                                     : serial::kron(a, b);
}

inline Complex trace_product(const Matrix &a, const Matrix &b) {
    return a.rows() >= kParallelThreshold ? parallel::trace_product(a, b)
                                          : serial::trace_product(a, b);
}

/// Number of threads OpenMP would use for a parallel region (1 without
/// OpenMP support).
int max_threads();

} // namespace qtruth::kernels
