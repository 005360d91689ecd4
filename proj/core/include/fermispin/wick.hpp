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

/// Exact n-fermion reduced spin density matrix of the ideal Fermi gas at
/// zero temperature.
///
/// Wick contraction of the 2n-point field correlator gives
///
///     rho~ = sum_{P in S_n} sgn(P) prod_i F[i][P(i)] Perm(P),
///
/// with Perm(P) the spin-factor permutation of permutation_operator(). The
/// sum is accumulated in a fixed permutation order (lexicographic), so the
/// result is bit-stable from run to run.

#include "fermispin/configuration.hpp"
#include "fermispin/spin_operator.hpp"

namespace fermispin {

/// Normalization traces below this are Pauli-forbidden configurations.
inline constexpr double kDegeneracyThreshold = 1e-10;

/// Tr rho~ = sum_P sgn(P) 2^cycles(P) prod_i F[i][P(i)], evaluated without
/// building the operator.
[[nodiscard]] double normalization_trace(const ExchangeMatrix &exchange);

/// The unnormalized permutation sum rho~.
[[nodiscard]] SpinOperator unnormalized_spin_density(const ExchangeMatrix &exchange);

/// rho~ / Tr rho~. Throws DegenerateConfiguration when the trace is below
/// kDegeneracyThreshold.
[[nodiscard]] SpinDensityMatrix spin_density_matrix(const ExchangeMatrix &exchange);

/// Convenience: spin_density_matrix(exchange_matrix(config)).
[[nodiscard]] SpinDensityMatrix spin_density_matrix(const Configuration &config);

} // namespace fermispin
