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

/// Real symmetric operators on n spin-1/2 factors.
///
/// Index convention: fermion label i (0-based) is tensor factor i, and factor
/// 0 is the most significant bit of the 2^n basis index. Spin up is bit 0,
/// spin down is bit 1, so |up down> of two spins is basis index 1.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fermispin {

using Matrix = Eigen::MatrixXd;

inline constexpr std::size_t kMaxSpins = 8;

/// Bit mask of spin `label` inside a basis index of an n-spin operator.
[[nodiscard]] constexpr std::size_t spin_mask(std::size_t num_spins, std::size_t label) noexcept {
    return std::size_t{1} << (num_spins - 1 - label);
}

/// Real symmetric 2^n x 2^n matrix.
class SpinOperator {
  public:
    /// Symmetry is checked to 1e-12 relative to the largest entry.
    SpinOperator(std::size_t num_spins, Matrix matrix);

    [[nodiscard]] static SpinOperator identity(std::size_t num_spins);

    [[nodiscard]] std::size_t num_spins() const noexcept { return num_spins_; }
    [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << num_spins_; }
    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    [[nodiscard]] double trace() const { return matrix_.trace(); }

  private:
    std::size_t num_spins_;
    Matrix matrix_;
};

/// Unit-trace symmetric operator. Positivity is not checked on construction;
/// von_neumann_entropy and the Wick builder enforce it where it matters.
class SpinDensityMatrix {
  public:
    /// Throws InvalidArgument when |trace - 1| > 1e-10.
    explicit SpinDensityMatrix(SpinOperator op);

    [[nodiscard]] static SpinDensityMatrix maximally_mixed(std::size_t num_spins);

    [[nodiscard]] const SpinOperator &op() const noexcept { return op_; }
    [[nodiscard]] const Matrix &matrix() const noexcept { return op_.matrix(); }
    [[nodiscard]] std::size_t num_spins() const noexcept { return op_.num_spins(); }
    [[nodiscard]] std::size_t dim() const noexcept { return op_.dim(); }

  private:
    SpinOperator op_;
};

/// Non-empty proper subset A of the labels {0, ..., n-1}; the complement is
/// implied.
class Bipartition {
  public:
    Bipartition(std::size_t num_spins, std::span<const std::size_t> subset);
    Bipartition(std::size_t num_spins, std::initializer_list<std::size_t> subset);

    [[nodiscard]] std::size_t num_spins() const noexcept { return num_spins_; }
    [[nodiscard]] bool contains(std::size_t label) const noexcept {
        return label < num_spins_ && ((members_ >> label) & 1U) != 0U;
    }
    [[nodiscard]] std::vector<std::size_t> subset() const;
    [[nodiscard]] std::vector<std::size_t> complement() const;
    /// Mask over basis-index bits (see spin_mask) selecting the spins of A.
    [[nodiscard]] std::size_t index_mask() const noexcept;
    /// 1-based label lists joined by '_', e.g. "2_13" for A = {1}.
    [[nodiscard]] std::string name() const;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;

  private:
    std::size_t num_spins_;
    std::uint32_t members_ = 0; // bit k <=> label k in A
};

/// Orthogonal operator permuting the spin factors by `perm`:
/// <s|Perm|s'> = 1 iff s'_i = s_{perm[i]} for every factor i.
/// Not symmetric unless `perm` is an involution, hence a plain matrix.
[[nodiscard]] Matrix permutation_operator(std::span<const std::size_t> perm);

/// u * op * u^T for an orthogonal u of matching dimension.
[[nodiscard]] SpinOperator conjugate(const SpinOperator &op, const Matrix &u);

/// Kronecker product a (x) b, with a on the leading factors.
[[nodiscard]] SpinOperator tensor_product(const SpinOperator &a, const SpinOperator &b);

/// Singlet projector |Psi-><Psi-| on two spins.
[[nodiscard]] SpinOperator singlet_projector();

} // namespace fermispin
