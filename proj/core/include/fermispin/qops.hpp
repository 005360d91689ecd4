// Copyright 2026 The fermispin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "fermispin/spin_operator.hpp"

namespace fermispin {

struct Eigendecomposition {
    Eigen::VectorXd values; ///< ascending
    Matrix vectors;         ///< columns are the matching eigenvectors
};

/// Symmetric eigendecomposition (self-adjoint QR iteration from Eigen).
[[nodiscard]] Eigendecomposition eigendecomposition(const SpinOperator &op);

/// All 2^n eigenvalues in ascending order.
[[nodiscard]] Eigen::VectorXd spectrum(const SpinOperator &op);

/// Transpose of the spin factors in `part`'s subset. Involutive and
/// trace-preserving.
[[nodiscard]] SpinOperator partial_transpose(const SpinOperator &op, const Bipartition &part);

/// Reduced state on `keep` (any order; the result lists the kept spins in
/// ascending label order). Throws InvalidArgument for an empty or
/// out-of-range keep set.
[[nodiscard]] SpinDensityMatrix partial_trace(const SpinDensityMatrix &rho,
                                              std::span<const std::size_t> keep);

/// Sum of absolute eigenvalues.
[[nodiscard]] double trace_norm(const SpinOperator &op);

enum class LogBase { nats, bits };

/// Eigenvalues in [-kEntropyClamp, 0) are treated as zero.
inline constexpr double kEntropyClamp = 1e-10;

/// -Tr rho log rho with 0 log 0 = 0. Throws InvalidArgument if an eigenvalue
/// is below -kEntropyClamp.
[[nodiscard]] double von_neumann_entropy(const SpinDensityMatrix &rho, LogBase base = LogBase::bits);

} // namespace fermispin
