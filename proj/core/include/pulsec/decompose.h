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

#ifndef PULSEC_DECOMPOSE_H
#define PULSEC_DECOMPOSE_H

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pulsec/generator.h"
#include "pulsec/pauli.h"

namespace pulsec {

/// exp(-i angle B_s) for one non-identity basis string.
struct SingleOp {
    PauliString string;
    double angle = 0;

    friend bool operator==(const SingleOp &, const SingleOp &) = default;
};

enum class Strategy { kCommuting, kEuler, kFactorized, kTrotter };

std::string_view strategy_name(Strategy s);

/// Time-ordered single operators: ops.front() acts first. The unitary is
/// e^{-i identity_phase} * ops.back() ... ops.front().
struct DecompositionPlan {
    size_t num_spins = 0;
    std::vector<SingleOp> ops;
    bool exact = true;
    int trotter_steps = 0;
    Strategy strategy = Strategy::kCommuting;
    /// Coefficient of E dropped from the generator.
    double identity_phase = 0;
};

/// Per-spin linear forms of a factorized generator prod_i (phi0 E + phix Ix + phiy Iy + phiz Iz).
struct FactorizedGenerator {
    std::vector<std::array<double, 4>> per_spin;
};

struct NotAllCommuting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One op per term in basis order. Throws NotAllCommuting if any pair of terms
/// anticommutes.
DecompositionPlan decompose_commuting(const GeneratorExpansion &expansion);

/// exp(-i(a.angle B1 + b.angle B2)) for anticommuting B1, B2, as the sandwich
/// [B3 by -theta, B1 by r, B3 by +theta] in time order, where [B1, B2] = +-i B3.
/// Throws std::invalid_argument if the strings commute.
std::vector<SingleOp> euler_decompose(const SingleOp &a, const SingleOp &b);

/// Rotates each spin's linear form onto z, then expands the product of the
/// rotated forms into commuting z-strings. Always exact.
DecompositionPlan decompose_factorized(const FactorizedGenerator &fg);

/// First-order product formula with `steps` repetitions. Throws
/// std::invalid_argument if steps < 1.
DecompositionPlan trotterize(const GeneratorExpansion &expansion, int steps);

struct PlanOptions {
    int trotter_steps = 64;
};

/// Commuting if possible, Euler for exactly two anticommuting terms, Trotter otherwise.
DecompositionPlan plan(const GeneratorExpansion &expansion, const PlanOptions &options = {});

}  // namespace pulsec

#endif
