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

#ifndef PULSEC_SIM_H
#define PULSEC_SIM_H

#include "pulsec/decompose.h"
#include "pulsec/linalg.h"
#include "pulsec/reduce.h"

namespace pulsec {

/// Closed-form matrix of one pulse on num_spins spins. Throws
/// std::invalid_argument for out-of-range spins.
ComplexMatrix op_matrix(const PulseOp &op, size_t num_spins);

/// Product of the pulse matrices, last pulse leftmost. The global phase field is
/// not applied. An empty sequence gives the identity.
ComplexMatrix simulate(const PulseSequence &seq);

/// Product of exp(-i angle B_s) over the plan, last op leftmost, times the
/// dropped identity phase. Each factor comes from matrix_exp_hermitian.
ComplexMatrix simulate(const DecompositionPlan &plan);

/// Outcome of comparing a against e^{i phase} b.
struct PhaseComparison {
    bool equal = false;
    double phase = 0;
    double residual = 0;
};

/// Picks the largest-magnitude entry of b to fix lambda = a_rc / b_rc, then
/// reports max|a - lambda b|. Equal when that residual and ||lambda| - 1| are
/// both below tol. Throws std::invalid_argument for mismatched dimensions or
/// an all-zero b.
PhaseComparison equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

}  // namespace pulsec

#endif
