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

#ifndef PULSEC_REDUCE_H
#define PULSEC_REDUCE_H

#include <vector>

#include "pulsec/decompose.h"
#include "pulsec/pauli.h"

namespace pulsec {

/// One allowed pulse.
///
/// A rotation is R(spin, axis, angle) = exp(-i angle I_axis) on `spin`. A coupling
/// is J(spin, partner, angle) = exp(-i angle 2 Iz_spin Iz_partner) with spin < partner.
/// Spins are 1-indexed.
struct PulseOp {
    enum class Kind { kRotation, kCoupling };

    Kind kind = Kind::kRotation;
    size_t spin = 1;
    size_t partner = 0;
    Axis axis = Axis::X;
    double angle = 0;

    static PulseOp rotation(size_t spin, Axis axis, double angle);
    /// Orders the pair so spin < partner. Throws std::invalid_argument if i == j.
    static PulseOp coupling(size_t i, size_t j, double angle);

    bool is_rotation() const {
        return kind == Kind::kRotation;
    }
    /// True when `other` acts on the same spin and axis, or the same pair.
    bool same_generator(const PulseOp &other) const;

    friend bool operator==(const PulseOp &, const PulseOp &) = default;
};

/// Time-ordered pulses. The represented unitary is
/// e^{-i global_phase} * U(ops.back()) ... U(ops.front()).
struct PulseSequence {
    size_t num_spins = 0;
    std::vector<PulseOp> ops;
    double global_phase = 0;

    friend bool operator==(const PulseSequence &, const PulseSequence &) = default;
};

struct ReduceOptions {
    /// Keep z rotations instead of expanding them into x/y composites.
    bool allow_z = false;
    /// Conjugate with pseudo c-NOTs rather than full c-NOT sequences.
    bool use_pseudo_cnot = true;
};

/// Rz(spin, angle) as [Ry(pi/2), Rx(angle), Ry(-pi/2)] in time order. Phase-exact.
std::vector<PulseOp> composite_z(size_t spin, double angle);

/// Splits a single operator into wrapper pulses around its all-z counterpart:
/// pre, core, post in time order reproduce `op` phase-exactly.
struct AxisTransform {
    std::vector<PulseOp> pre;
    SingleOp core;
    std::vector<PulseOp> post;
};

/// Throws std::invalid_argument for an identity string.
AxisTransform axis_transform(const SingleOp &op);

/// c-NOT with control i and target j, equal to the textbook gate times e^{-i pi/4}.
/// The trailing z rotation is left unexpanded. Throws std::invalid_argument if i == j.
std::vector<PulseOp> cnot_sequence(size_t control, size_t target);

/// U_ij = Rx_j(pi/2) J_ij(pi/2) Ry_j(pi/2), or its exact adjoint when `inverse`.
/// Conjugation U_ij Iz_j U_ij^dagger = 2 Iz_i Iz_j.
std::vector<PulseOp> pseudo_cnot(size_t control, size_t target, bool inverse);

/// Realizes exp(-i angle B_s) for an all-z string s with rotations and pairwise
/// couplings. Orders above two are folded left to right: the lowest spin is
/// absorbed into the next one by a conditional-flip sandwich, recursively.
/// Exact up to a global phase. Throws std::invalid_argument for a non-z string.
std::vector<PulseOp> reduce_coupling_order(const SingleOp &core, const ReduceOptions &options = {});

/// Axis transformation and order reduction for every op, then peephole.
PulseSequence reduce_plan(const DecompositionPlan &plan, const ReduceOptions &options = {});

/// Merges directly adjacent pulses with the same generator (angles add, reduced
/// modulo 4pi) and drops pulses with |angle| < 1e-12.
PulseSequence peephole(const PulseSequence &seq);

}  // namespace pulsec

#endif
