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

#include "qtruth/kernels.hpp"

#include <cassert>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtruth::kernels {

namespace {

// c(i, j) = sum_k a(i, k) b(k, j), k ascending.
inline Complex dot_row_col(const Matrix &a, const Matrix &b, long i, long j) {
    Complex acc{0.0, 0.0};
    const long inner = a.cols();
    for (long k = 0; k < inner; ++k) {
        acc += a(i, k) * b(k, j);
    }
    return acc;
}

// sum_k a(i, k) b(k, i)
inline Complex diag_entry(const Matrix &a, const Matrix &b, long i) {
    return dot_row_col(a, b, i, i);
}

} // namespace

namespace serial {

Matrix matmul(const Matrix &a, const Matrix &b) {
    assert(a.cols() == b.rows());
    Matrix c(a.rows(), b.cols());
    for (long j = 0; j < b.cols(); ++j) {
        for (long i = 0; i < a.rows(); ++i) {
            c(i, j) = dot_row_col(a, b, i, j);
        }
    }
    return c;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const long br = b.rows(), bc = b.cols();
    Matrix c(a.rows() * br, a.cols() * bc);
    for (long ja = 0; ja < a.cols(); ++ja) {
        for (long ia = 0; ia < a.rows(); ++ia) {
            const Complex s = a(ia, ja);
            for (long jb = 0; jb < bc; ++jb) {
                for (long ib = 0; ib < br; ++ib) {
                    c(ia * br + ib, ja * bc + jb) = s * b(ib, jb);
                }
            }
        }
    }
    return c;
}

Complex trace_product(const Matrix &a, const Matrix &b) {
    assert(a.cols() == b.rows() && a.rows() == b.cols());
    Complex acc{0.0, 0.0};
    for (long i = 0; i < a.rows(); ++i) {
        acc += diag_entry(a, b, i);
    }
    return acc;
}

} // namespace serial

namespace parallel {

Matrix matmul(const Matrix &a, const Matrix &b) {
    assert(a.cols() == b.rows());
    Matrix c(a.rows(), b.cols());
    const long cols = b.cols();
    const long rows = a.rows();
#pragma omp parallel for schedule(static)
    for (long j = 0; j < cols; ++j) {
        for (long i = 0; i < rows; ++i) {
            c(i, j) = dot_row_col(a, b, i, j);
        }
    }
    return c;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const long br = b.rows(), bc = b.cols();
    const long acols = a.cols(), arows = a.rows();
    Matrix c(arows * br, acols * bc);
#pragma omp parallel for schedule(static)
    for (long ja = 0; ja < acols; ++ja) {
        for (long ia = 0; ia < arows; ++ia) {
            const Complex s = a(ia, ja);
            for (long jb = 0; jb < bc; ++jb) {
                for (long ib = 0; ib < br; ++ib) {
                    c(ia * br + ib, ja * bc + jb) = s * b(ib, jb);
                }
            }
        }
    }
    return c;
}

Complex trace_product(const Matrix &a, const Matrix &b) {
    assert(a.cols() == b.rows() && a.rows() == b.cols());
    // Per-row terms are computed in parallel and summed in index order so the
    // result matches the serial reference exactly.
    const long n = a.rows();
    std::vector<Complex> terms(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        terms[static_cast<std::size_t>(i)] = diag_entry(a, b, i);
    }
    Complex acc{0.0, 0.0};
    for (const auto &t : terms) {
        acc += t;
    }
    return acc;
}

} // namespace parallel

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qtruth::kernels
