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

#include "pulsec/sim.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pulsec {

namespace {

void check_op(const PulseOp &op, size_t num_spins) {
    bool ok = op.spin >= 1 && op.spin <= num_spins;
    if (!op.is_rotation()) {
        ok = ok && op.partner > op.spin && op.partner <= num_spins;
    } else {
        ok = ok && op.axis != Axis::I;
    }
    if (!ok) {
        throw std::invalid_argument("pulse acts on spins outside 1.." + std::to_string(num_spins));
    }
}

/// m <- U(op) * m, touching only the rows the pulse mixes.
void apply_left(const PulseOp &op, size_t num_spins, ComplexMatrix &m) {
    size_t dim = m.dim();
    uint64_t bit = uint64_t{1} << (num_spins - op.spin);
    double c = std::cos(op.angle / 2);
    double s = std::sin(op.angle / 2);
    if (!op.is_rotation()) {
        uint64_t other = uint64_t{1} << (num_spins - op.partner);
        Complex same = std::polar(1.0, -op.angle / 2);
        Complex differ = std::conj(same);
        for (uint64_t r = 0; r < dim; r++) {
            bool parity = static_cast<bool>(r & bit) != static_cast<bool>(r & other);
            Complex f = parity ? differ : same;
            for (size_t col = 0; col < dim; col++) {
                m(r, col) *= f;
            }
        }
        return;
    }
    const Complex mis{0, -s};
    for (uint64_t r0 = 0; r0 < dim; r0++) {
        if (r0 & bit) {
            continue;
        }
        uint64_t r1 = r0 | bit;
        for (size_t col = 0; col < dim; col++) {
            Complex a = m(r0, col);
            Complex b = m(r1, col);
            switch (op.axis) {
                case Axis::X:
                    m(r0, col) = c * a + mis * b;
                    m(r1, col) = c * b + mis * a;
                    break;
                case Axis::Y:
                    m(r0, col) = c * a - s * b;
                    m(r1, col) = c * b + s * a;
                    break;
                case Axis::Z:
                    m(r0, col) = Complex{c, -s} * a;
                    m(r1, col) = Complex{c, s} * b;
                    break;
                case Axis::I:
                    break;
            }
        }
    }
}

}  // namespace

ComplexMatrix op_matrix(const PulseOp &op, size_t num_spins) {
    check_op(op, num_spins);
    ComplexMatrix m = ComplexMatrix::identity(size_t{1} << num_spins);
    apply_left(op, num_spins, m);
    return m;
}

ComplexMatrix simulate(const PulseSequence &seq) {
    ComplexMatrix m = ComplexMatrix::identity(size_t{1} << seq.num_spins);
    for (const PulseOp &op : seq.ops) {
        check_op(op, seq.num_spins);
        apply_left(op, seq.num_spins, m);
    }
    return m;
}

ComplexMatrix simulate(const DecompositionPlan &plan) {
    size_t dim = size_t{1} << plan.num_spins;
    ComplexMatrix m = ComplexMatrix::identity(dim) * std::polar(1.0, -plan.identity_phase);
    for (const SingleOp &op : plan.ops) {
        m = matrix_exp_hermitian(materialize(op.string) * Complex{op.angle, 0}) * m;
    }
    return m;
}

PhaseComparison equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("equal_up_to_phase: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
    auto eb = b.entries();
    size_t best = 0;
    for (size_t k = 1; k < eb.size(); k++) {
        if (std::abs(eb[k]) > std::abs(eb[best])) {
            best = k;
        }
    }
    if (eb.empty() || std::abs(eb[best]) == 0) {
        throw std::invalid_argument("equal_up_to_phase: reference matrix is zero");
    }
    Complex lambda = a.entries()[best] / eb[best];
    PhaseComparison out;
    out.phase = std::arg(lambda);
    out.residual = max_abs_diff(a, b * lambda);
    out.equal = out.residual < tol && std::abs(std::abs(lambda) - 1) < tol;
    return out;
}

}  // namespace pulsec
