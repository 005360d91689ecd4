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
#include <optional>
#include <vector>

#include "fermispin/exchange.hpp"
#include "fermispin/qops.hpp"
#include "fermispin/spin_operator.hpp"

namespace fermispin {

/// Negativities below this are reported as exactly zero.
inline constexpr double kNegativityClamp = 1e-12;

/// (||rho^T_A||_1 - 1) / 2, clamped to 0 below kNegativityClamp.
[[nodiscard]] double negativity(const SpinDensityMatrix &rho, const Bipartition &part);

/// Eigenvalues of rho^T_A below -kNegativityClamp, ascending.
[[nodiscard]] std::vector<double> negative_partial_transpose_eigenvalues(
    const SpinDensityMatrix &rho, const Bipartition &part);

/// Closed-form negativity of a fermion pair at separation x:
/// max(0, (2 f^2 - 1) / (2 (2 - f^2))).
[[nodiscard]] double two_fermion_negativity(ScaledDistance x);

enum class Witness {
    ghz, ///< 1/2 - |GHZ><GHZ|
    w3,  ///< 2/3 - |W3><W3|
};

/// Witness observable on three spins. |GHZ> = (|uuu> + |ddd>)/sqrt(2),
/// |W3> = (|udu> + |duu> + |uud>)/sqrt(3), with up = basis bit 0.
[[nodiscard]] SpinOperator witness_operator(Witness kind);

/// Tr(rho Pi). Negative values certify genuine tripartite entanglement of
/// the witnessed class. Throws InvalidArgument unless rho has three spins.
[[nodiscard]] double witness_expectation(const SpinDensityMatrix &rho, Witness kind);

/// log(2^n - (n + 1)): the entropy of a uniform mixture over the states
/// left after removing the n + 1 fully symmetric ones.
[[nodiscard]] double coincident_entropy_bound(std::size_t n, LogBase base = LogBase::nats);

/// One representative per unordered cut {A, complement}: |A| < n/2, or
/// |A| = n/2 with label 0 in A. Sorted by |A|, then lexicographically.
[[nodiscard]] std::vector<Bipartition> canonical_bipartitions(std::size_t num_spins);

struct BipartitionReport {
    Bipartition part;
    double negativity;
    bool ppt;
    std::vector<double> negative_eigenvalues;
};

struct EntanglementReport {
    std::size_t num_spins;
    std::vector<BipartitionReport> bipartitions;
    std::optional<double> witness_ghz; ///< three spins only
    std::optional<double> witness_w3;  ///< three spins only
    double entropy_bits;
    double entropy_nats;
};

[[nodiscard]] EntanglementReport analyze(const SpinDensityMatrix &rho);

} // namespace fermispin
