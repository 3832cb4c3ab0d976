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

// Test-only reference computations. Nothing here calls the eigen-solver or the
// bit-mask Pauli materialization, so they can check those paths.

#ifndef PULSEC_TESTS_ORACLES_H
#define PULSEC_TESTS_ORACLES_H

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pulsec/linalg.h"
#include "pulsec/pauli.h"
#include "pulsec/reduce.h"

namespace pulsec::oracle {

inline ComplexMatrix naive_multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            Complex acc = 0;
            for (size_t k = 0; k < n; k++) {
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

inline double frobenius(const ComplexMatrix &m) {
    double acc = 0;
    for (auto z : m.entries()) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

/// exp(x) by scaling and squaring with a 40-term Taylor series.
inline ComplexMatrix expm(const ComplexMatrix &x) {
    size_t n = x.dim();
    int squarings = 0;
    double norm = frobenius(x);
    while (norm > 0.25) {
        norm /= 2;
        squarings++;
    }
    ComplexMatrix scaled = x * Complex{std::ldexp(1.0, -squarings), 0};
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 40; k++) {
        term = naive_multiply(term, scaled) * Complex{1.0 / k, 0};
        sum += term;
    }
    for (int k = 0; k < squarings; k++) {
        sum = naive_multiply(sum, sum);
    }
    return sum;
}

/// exp(-i h).
inline ComplexMatrix exp_minus_i(const ComplexMatrix &h) {
    return expm(h * Complex{0, -1});
}

inline ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return naive_multiply(a, b) - naive_multiply(b, a);
}

/// Spin-1/2 operators I_0 = E, I_x, I_y, I_z.
inline ComplexMatrix spin_op(char axis) {
    switch (axis) {
        case 'x':
            return ComplexMatrix{{0, 0.5}, {0.5, 0}};
        case 'y':
            return ComplexMatrix{{0, Complex{0, -0.5}}, {Complex{0, 0.5}, 0}};
        case 'z':
            return ComplexMatrix{{0.5, 0}, {0, -0.5}};
        default:
            return ComplexMatrix::identity(2);
    }
}

/// B_s = 2^(q-1) (I_a1 x ... x I_aN), built factor by factor.
inline ComplexMatrix product_operator(const std::string &axes) {
    ComplexMatrix m = ComplexMatrix::identity(1);
    int q = 0;
    for (char c : axes) {
        m = tensor(m, spin_op(c));
        q += c != '0';
    }
    return m * Complex{std::ldexp(1.0, q - 1), 0};
}

/// Spin operator on one spin of an N-spin register.
inline ComplexMatrix embed(char axis, size_t spin, size_t num_spins) {
    std::string axes(num_spins, '0');
    axes[spin - 1] = axis;
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (char c : axes) {
        m = tensor(m, spin_op(c));
    }
    return m;
}

inline ComplexMatrix random_matrix(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            m(r, c) = Complex{g(rng), g(rng)};
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    ComplexMatrix m = random_matrix(dim, rng);
    return (m + adjoint(m)) * Complex{0.5, 0};
}

inline ComplexMatrix random_unitary(size_t dim, std::mt19937_64 &rng) {
    return exp_minus_i(random_hermitian(dim, rng));
}

/// Global-phase-insensitive distance: min over lambda on the unit circle fixed by
/// the overlap tr(b^dagger a).
inline double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    Complex overlap = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        overlap += std::conj(b.entries()[k]) * a.entries()[k];
    }
    Complex lambda = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1, 0};
    return max_abs_diff(a, b * lambda);
}

/// Pulse matrix from the Taylor exponential of its generator.
inline ComplexMatrix pulse(const PulseOp &op, size_t num_spins) {
    ComplexMatrix g;
    if (op.is_rotation()) {
        g = embed(axis_char(op.axis), op.spin, num_spins);
    } else {
        g = naive_multiply(embed('z', op.spin, num_spins), embed('z', op.partner, num_spins)) *
            Complex{2, 0};
    }
    return exp_minus_i(g * Complex{op.angle, 0});
}

/// Time-ordered product of pulses, last pulse leftmost.
inline ComplexMatrix sequence(const std::vector<PulseOp> &ops, size_t num_spins) {
    ComplexMatrix m = ComplexMatrix::identity(size_t{1} << num_spins);
    for (const auto &op : ops) {
        m = naive_multiply(pulse(op, num_spins), m);
    }
    return m;
}

}  // namespace pulsec::oracle

#endif
