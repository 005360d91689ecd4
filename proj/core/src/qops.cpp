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
#include "fermispin/qops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fermispin/errors.hpp"

namespace fermispin {

Eigendecomposition eigendecomposition(const SpinOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd spectrum(const SpinOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolver did not converge");
    }
    return solver.eigenvalues();
}

SpinOperator partial_transpose(const SpinOperator &op, const Bipartition &part) {
    if (part.num_spins() != op.num_spins()) {
        throw InvalidArgument("bipartition and operator disagree on the number of spins");
    }
    const std::size_t mask = part.index_mask();
    const std::size_t d = op.dim();
    Matrix out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            // swap the A-bits between row and column index
            const std::size_t row = (a & ~mask) | (b & mask);
            const std::size_t col = (b & ~mask) | (a & mask);
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = op(a, b);
        }
    }
    return SpinOperator(op.num_spins(), std::move(out));
}

SpinDensityMatrix partial_trace(const SpinDensityMatrix &rho, std::span<const std::size_t> keep) {
    const std::size_t n = rho.num_spins();
    if (keep.empty()) {
        throw InvalidArgument("partial trace needs at least one spin to keep");
    }
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.back() >= n) {
        throw InvalidArgument("partial trace keep set has repeated or out-of-range labels");
    }
    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::binary_search(kept.begin(), kept.end(), k)) {
            traced.push_back(k);
        }
    }
    const std::size_t m = kept.size();
    // Scatter a reduced index (over kept or traced spins) into a full index.
    auto scatter = [n](std::size_t compact, const std::vector<std::size_t> &labels) {
        std::size_t full = 0;
        const std::size_t width = labels.size();
        for (std::size_t k = 0; k < width; ++k) {
            if (compact & (std::size_t{1} << (width - 1 - k))) {
                full |= spin_mask(n, labels[k]);
            }
        }
        return full;
    };
    const std::size_t dk = std::size_t{1} << m;
    const std::size_t dt = std::size_t{1} << traced.size();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t a = 0; a < dk; ++a) {
        const std::size_t fa = scatter(a, kept);
        for (std::size_t b = 0; b < dk; ++b) {
            const std::size_t fb = scatter(b, kept);
            double sum = 0.0;
            for (std::size_t e = 0; e < dt; ++e) {
                const std::size_t fe = scatter(e, traced);
                sum += rho.op()(fa | fe, fb | fe);
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
        }
    }
    return SpinDensityMatrix(SpinOperator(m, std::move(out)));
}

double trace_norm(const SpinOperator &op) { return spectrum(op).cwiseAbs().sum(); }

double von_neumann_entropy(const SpinDensityMatrix &rho, LogBase base) {
    const Eigen::VectorXd values = spectrum(rho.op());
    double nats = 0.0;
    for (double lambda : values) {
        if (lambda < -kEntropyClamp) {
            throw InvalidArgument("density matrix has eigenvalue " + std::to_string(lambda) +
                                  " below the entropy clamp window");
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) {
            nats -= lambda * std::log(lambda);
        }
    }
    return base == LogBase::bits ? nats / std::numbers::ln2 : nats;
}

} // namespace fermispin
