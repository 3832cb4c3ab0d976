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

#ifndef PULSEC_GATES_H
#define PULSEC_GATES_H

#include <cstdint>
#include <string>
#include <vector>

#include "pulsec/linalg.h"

namespace pulsec {

/// Named target gate. `spins` holds the 1-indexed spins the gate acts on, in
/// the gate's role order:
///   cnot:    control, target                 (default 1, 2)
///   toffoli: control, control, target        (default 1, 2, 3)
///   swap:    a, b                            (default 1, 2)
///   cphase:  a, b; applies e^{i phase} to |11> (default 1, 2)
///   fphase:  none; flips the sign of every basis index in `marked`
struct GateSpec {
    std::string name;
    size_t num_spins = 0;
    std::vector<size_t> spins;
    double phase = 0;
    std::vector<uint64_t> marked;
};

/// Computational-basis matrix with spin 1 as the most significant bit.
/// Throws std::invalid_argument for unknown names or invalid indices.
ComplexMatrix build(const GateSpec &spec);

/// Names accepted by build().
const std::vector<std::string> &gate_names();

ComplexMatrix cnot_gate(size_t num_spins, size_t control, size_t target);
ComplexMatrix toffoli_gate(size_t num_spins, size_t control1, size_t control2, size_t target);
ComplexMatrix swap_gate(size_t num_spins, size_t a, size_t b);
ComplexMatrix cphase_gate(size_t num_spins, size_t a, size_t b, double phase);
ComplexMatrix fphase_gate(size_t num_spins, const std::vector<uint64_t> &marked);

}  // namespace pulsec

#endif
