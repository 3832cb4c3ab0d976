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

#ifndef PULSEC_PIPELINE_H
#define PULSEC_PIPELINE_H

#include <optional>

#include "pulsec/decompose.h"
#include "pulsec/generator.h"
#include "pulsec/reduce.h"

namespace pulsec {

struct CompileOptions {
    BranchConvention branch = BranchConvention::kPrincipalLower;
    bool allow_z = false;
    bool use_pseudo_cnot = true;
    int trotter_steps = 64;
    /// Unitarity, generator reconstruction and verification tolerance.
    double tol = 1e-9;
    /// Expansion coefficients below this magnitude are dropped.
    double drop_tol = 1e-10;
    bool verify = true;
    /// Verification is skipped above this many spins.
    size_t max_verify_spins = 6;

    /// Throws std::invalid_argument unless tol > 0 and trotter_steps >= 1.
    void validate() const;
};

struct CompileReport {
    PulseSequence sequence;
    bool exact = true;
    Strategy strategy = Strategy::kCommuting;
    /// Best-effort global phase; the sequence represents e^{-i global_phase} * simulate(sequence).
    double global_phase = 0;
    /// max|U - lambda * simulate(sequence)|, when verification ran.
    std::optional<double> verification_residual;
    /// False only when verification ran and an exact plan missed by >= 10 * tol.
    bool verified = true;
    size_t op_count = 0;
};

/// Generator extraction, expansion, decomposition, reduction and (optionally)
/// verification. Throws std::invalid_argument for a non-unitary or
/// non-power-of-two input; a failed verification is reported, not thrown.
CompileReport compile_unitary(const ComplexMatrix &u, const CompileOptions &opts = {});

/// Same, starting from a factorized generator.
CompileReport compile_factorized(const FactorizedGenerator &fg, const CompileOptions &opts = {});

/// exp(-i G) for a factorized generator, built directly as a matrix.
ComplexMatrix factorized_unitary(const FactorizedGenerator &fg);

}  // namespace pulsec

#endif
