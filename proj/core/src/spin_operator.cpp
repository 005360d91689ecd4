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
#include "fermispin/spin_operator.hpp"

#include <algorithm>
#include <cmath>

#include "fermispin/errors.hpp"

namespace fermispin {

namespace {

void check_spins(std::size_t num_spins) {
    if (num_spins < 1 || num_spins > kMaxSpins) {
        throw InvalidArgument("operators act on 1 to 8 spins, got " + std::to_string(num_spins));
    }
}

} // namespace

SpinOperator::SpinOperator(std::size_t num_spins, Matrix matrix)
    : num_spins_(num_spins), matrix_(std::move(matrix)) {
    check_spins(num_spins_);
    const auto d = static_cast<Eigen::Index>(dim());
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw InvalidArgument("operator on " + std::to_string(num_spins_) + " spins must be " +
                              std::to_string(d) + "x" + std::to_string(d));
    }
    if (!matrix_.allFinite()) {
        throw InvalidArgument("operator entries must be finite");
    }
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    if ((matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw InvalidArgument("operator is not symmetric");
    }
}

SpinOperator SpinOperator::identity(std::size_t num_spins) {
    check_spins(num_spins);
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_spins);
    return SpinOperator(num_spins, Matrix::Identity(d, d));
}

SpinDensityMatrix::SpinDensityMatrix(SpinOperator op) : op_(std::move(op)) {
    if (std::abs(op_.trace() - 1.0) > 1e-10) {
        throw InvalidArgument("density matrix must have unit trace, got " +
                              std::to_string(op_.trace()));
    }
}

SpinDensityMatrix SpinDensityMatrix::maximally_mixed(std::size_t num_spins) {
    auto id = SpinOperator::identity(num_spins);
    return SpinDensityMatrix(SpinOperator(num_spins, id.matrix() / static_cast<double>(id.dim())));
}

Bipartition::Bipartition(std::size_t num_spins, std::span<const std::size_t> subset)
    : num_spins_(num_spins) {
    check_spins(num_spins);
    for (auto label : subset) {
        if (label >= num_spins) {
            throw InvalidArgument("bipartition label " + std::to_string(label) +
                                  " out of range for " + std::to_string(num_spins) + " spins");
        }
        members_ |= std::uint32_t{1} << label;
    }
    const std::uint32_t all = (std::uint32_t{1} << num_spins) - 1U;
    if (members_ == 0U || members_ == all) {
        throw InvalidArgument("bipartition subset must be non-empty and proper");
    }
}

Bipartition::Bipartition(std::size_t num_spins, std::initializer_list<std::size_t> subset)
    : Bipartition(num_spins, std::span<const std::size_t>(subset.begin(), subset.size())) {}

std::vector<std::size_t> Bipartition::subset() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < num_spins_; ++k) {
        if (contains(k)) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::size_t> Bipartition::complement() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < num_spins_; ++k) {
        if (!contains(k)) {
            out.push_back(k);
        }
    }
    return out;
}

std::size_t Bipartition::index_mask() const noexcept {
    std::size_t mask = 0;
    for (std::size_t k = 0; k < num_spins_; ++k) {
        if (contains(k)) {
            mask |= spin_mask(num_spins_, k);
        }
    }
    return mask;
}

std::string Bipartition::name() const {
    std::string out;
    for (auto k : subset()) {
        out += std::to_string(k + 1);
    }
    out += '_';
    for (auto k : complement()) {
        out += std::to_string(k + 1);
    }
    return out;
}

Matrix permutation_operator(std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    check_spins(n);
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) {
            throw InvalidArgument("not a permutation");
        }
        seen[p] = true;
    }
    const std::size_t d = std::size_t{1} << n;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t s = 0; s < d; ++s) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (s & spin_mask(n, perm[i])) {
                t |= spin_mask(n, i);
            }
        }
        m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = 1.0;
    }
    return m;
}

SpinOperator conjugate(const SpinOperator &op, const Matrix &u) {
    const auto d = static_cast<Eigen::Index>(op.dim());
    if (u.rows() != d || u.cols() != d) {
        throw InvalidArgument("conjugating matrix has the wrong dimension");
    }
    Matrix m = u * op.matrix() * u.transpose();
    // Restore exact symmetry lost to rounding in the product.
    m = 0.5 * (m + m.transpose()).eval();
    return SpinOperator(op.num_spins(), std::move(m));
}

SpinOperator tensor_product(const SpinOperator &a, const SpinOperator &b) {
    const std::size_t n = a.num_spins() + b.num_spins();
    check_spins(n);
    const auto da = static_cast<Eigen::Index>(a.dim());
    const auto db = static_cast<Eigen::Index>(b.dim());
    Matrix m(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return SpinOperator(n, std::move(m));
}

SpinOperator singlet_projector() {
    // |Psi-> = (|01> - |10>) / sqrt(2) in basis indices.
    Matrix m = Matrix::Zero(4, 4);
    m(1, 1) = m(2, 2) = 0.5;
    m(1, 2) = m(2, 1) = -0.5;
    return SpinOperator(2, std::move(m));
}

} // namespace fermispin
