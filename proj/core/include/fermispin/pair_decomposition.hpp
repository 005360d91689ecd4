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

/// Identity-plus-pair-singlet form of the n-spin Fermi gas state:
///
///     rho = w0 I / 2^n + sum_{i<j} w_ij S_ij,   w0 = 1 - sum w_ij,
///
/// with S_ij = |Psi-_ij><Psi-_ij| (x) I / 2^(n-2) the unit-trace singlet on
/// pair (i, j). Only the singlet weights w_ij are stored. The published
/// two-particle parameter p weights the identity instead, so p = 1 - w_01.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fermispin/configuration.hpp"
#include "fermispin/spin_operator.hpp"

namespace fermispin {

struct SpinPair {
    std::size_t first;
    std::size_t second;

    friend bool operator==(const SpinPair &, const SpinPair &) = default;
};

/// All pairs i < j of n labels in lexicographic order.
[[nodiscard]] std::vector<SpinPair> spin_pairs(std::size_t num_spins);

class PairWeights {
  public:
    /// `singlet` is ordered as spin_pairs(num_spins).
    PairWeights(std::size_t num_spins, std::vector<double> singlet,
                std::optional<double> residual = std::nullopt);

    [[nodiscard]] std::size_t num_spins() const noexcept { return num_spins_; }
    [[nodiscard]] std::span<const double> singlet() const noexcept { return singlet_; }
    /// Weight of the singlet on pair {i, j}; order of i, j is irrelevant.
    [[nodiscard]] double weight(std::size_t i, std::size_t j) const;
    /// Weight of I / 2^n.
    [[nodiscard]] double background() const noexcept;
    /// Frobenius distance between the fitted state and the reconstruction;
    /// absent for closed-form weights.
    [[nodiscard]] std::optional<double> residual() const noexcept { return residual_; }
    /// Every weight (background included) lies in [-tol, 1 + tol].
    [[nodiscard]] bool is_physical(double tol = 1e-10) const noexcept;

  private:
    std::size_t num_spins_;
    std::vector<double> singlet_;
    std::optional<double> residual_;
};

/// S_ij embedded in n spins. Throws InvalidArgument for i == j or labels
/// out of range.
[[nodiscard]] SpinDensityMatrix singlet_component(std::size_t num_spins, std::size_t i,
                                                  std::size_t j);

/// Closed-form weights for two and three fermions:
///   n = 2:  w_01 = f^2 / (2 - f^2)
///   n = 3:  w_ij = (f_ij f_ik f_jk - f_ij^2) / (f_ij^2 + f_ik^2 + f_jk^2 - f_ij f_ik f_jk - 2)
/// Throws InvalidArgument for other n and DegenerateConfiguration when the
/// three-fermion denominator is below 1e-12 in magnitude.
[[nodiscard]] PairWeights closed_form_weights(const ExchangeMatrix &exchange);

/// Least-squares projection of rho onto the affine span of I/2^n and the
/// S_ij (trace one by construction), via the Hilbert-Schmidt normal
/// equations. Throws SingularGram if the basis is numerically dependent.
[[nodiscard]] PairWeights fit_weights(const SpinDensityMatrix &rho);

/// w0 I / 2^n + sum w_ij S_ij. Negative weights are allowed; the result is
/// then not necessarily positive (see PairWeights::is_physical).
[[nodiscard]] SpinDensityMatrix reconstruct(const PairWeights &weights);

} // namespace fermispin
