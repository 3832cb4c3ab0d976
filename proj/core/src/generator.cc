// Copyright 2026 The pulsec Authors
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

#include "pulsec/generator.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace pulsec {

namespace {

constexpr double kPhaseClusterWidth = 1e-8;

std::string format_term(const std::string &label, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return label + " " + buf + "\n";
}

}  // namespace

double eigenphase(Complex lambda, BranchConvention branch) {
    constexpr double pi = std::numbers::pi;
    double theta = -std::arg(lambda);
    if (branch == BranchConvention::kPrincipalLower) {
        if (theta >= pi - kPhaseClusterWidth) {
            theta -= 2 * pi;
        }
    } else {
        if (theta <= -pi + kPhaseClusterWidth) {
            theta += 2 * pi;
        }
    }
    return theta;
}

std::string GeneratorExpansion::str() const {
    std::string out;
    if (identity_coeff != 0) {
        out += format_term(PauliString(num_spins).str(), identity_coeff);
    }
    for (const auto &[s, b] : coeffs) {
        out += format_term(s.str(), b);
    }
    return out;
}

ComplexMatrix extract_generator(const ComplexMatrix &u, BranchConvention branch, double tol) {
    EigenDecomposition eig = eig_unitary(u, tol);
    size_t n = u.dim();

    // Eigenvalues that agree within the cluster width share one phase, so G is
    // a function of u on degenerate subspaces.
    std::vector<int> cluster(n, -1);
    std::vector<Complex> cluster_sum;
    std::vector<int> cluster_size;
    for (size_t k = 0; k < n; k++) {
        if (cluster[k] >= 0) {
            continue;
        }
        int id = static_cast<int>(cluster_sum.size());
        cluster_sum.push_back(0);
        cluster_size.push_back(0);
        std::vector<size_t> pending{k};
        cluster[k] = id;
        while (!pending.empty()) {
            size_t j = pending.back();
            pending.pop_back();
            cluster_sum[id] += eig.eigenvalues[j];
            cluster_size[id]++;
            for (size_t m = 0; m < n; m++) {
                if (cluster[m] < 0 &&
                    std::abs(eig.eigenvalues[m] - eig.eigenvalues[j]) < kPhaseClusterWidth) {
                    cluster[m] = id;
                    pending.push_back(m);
                }
            }
        }
    }

    std::vector<Complex> phases(n);
    for (size_t k = 0; k < n; k++) {
        Complex mean = cluster_sum[cluster[k]] / static_cast<double>(cluster_size[cluster[k]]);
        phases[k] = eigenphase(mean, branch);
    }

    ComplexMatrix g = adjoint(eig.transform) * ComplexMatrix::diagonal(phases) * eig.transform;
    g = (g + adjoint(g)) * Complex{0.5, 0};

    double residual = max_abs_diff(matrix_exp_hermitian(g, 1e-6), u);
    if (residual > 10 * tol) {
        throw std::runtime_error("extract_generator: exp(-iG) misses the input by " +
                                 std::to_string(residual));
    }
    return g;
}

GeneratorExpansion expand(const ComplexMatrix &g, size_t num_spins, double tol) {
    if (num_spins < 1 || num_spins > 20 || g.dim() != (size_t{1} << num_spins)) {
        throw std::invalid_argument("expand: matrix dimension is not 2^" +
                                    std::to_string(num_spins));
    }
    if (!is_hermitian(g, tol)) {
        throw std::invalid_argument("expand: generator is not Hermitian");
    }
    static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    size_t dim = g.dim();
    // tr(G B_s) / 2^(N-2) = 2 tr(G sigma_s) / 2^N.
    double norm = 2.0 / static_cast<double>(dim);

    GeneratorExpansion out;
    out.num_spins = num_spins;
    for (PauliString &s : enumerate_basis(num_spins)) {
        uint64_t xm = s.x_mask();
        uint64_t zm = s.z_mask();
        Complex acc = 0;
        for (uint64_t c = 0; c < dim; c++) {
            Complex e = g(c, c ^ xm);
            acc += (std::popcount(c & zm) & 1) ? -e : e;
        }
        acc *= kIPow[s.y_count() % 4];
        Complex b = acc * norm;
        if (std::abs(b.imag()) >= tol) {
            throw std::invalid_argument("expand: coefficient of " + s.str() + " is not real");
        }
        if (s.is_identity()) {
            // Report the coefficient of E rather than of B_0 = E/2.
            double e_coeff = b.real() / 2;
            out.identity_coeff = std::abs(e_coeff) < tol ? 0.0 : e_coeff;
            continue;
        }
        if (std::abs(b.real()) >= tol) {
            out.coeffs.emplace(std::move(s), b.real());
        }
    }
    return out;
}

ComplexMatrix reconstruct(const GeneratorExpansion &expansion) {
    size_t dim = size_t{1} << expansion.num_spins;
    ComplexMatrix g = ComplexMatrix::identity(dim) * Complex{expansion.identity_coeff, 0};
    for (const auto &[s, b] : expansion.coeffs) {
        g += materialize(s) * Complex{b, 0};
    }
    return g;
}

}  // namespace pulsec
