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

#include "pulsec/reduce.h"

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

namespace pulsec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDropAngle = 1e-12;

double wrap_4pi(double angle) {
    double a = std::fmod(angle, 4 * kPi);
    if (a > 2 * kPi) {
        a -= 4 * kPi;
    } else if (a <= -2 * kPi) {
        a += 4 * kPi;
    }
    return a;
}

void append(std::vector<PulseOp> &out, const std::vector<PulseOp> &more) {
    out.insert(out.end(), more.begin(), more.end());
}

void append_z_rotation(std::vector<PulseOp> &out, size_t spin, double angle, bool allow_z) {
    if (allow_z) {
        out.push_back(PulseOp::rotation(spin, Axis::Z, angle));
    } else {
        append(out, composite_z(spin, angle));
    }
}

/// Copies `ops`, expanding z rotations unless they are allowed.
void append_expanding_z(std::vector<PulseOp> &out, const std::vector<PulseOp> &ops, bool allow_z) {
    for (const PulseOp &op : ops) {
        if (op.is_rotation() && op.axis == Axis::Z) {
            append_z_rotation(out, op.spin, op.angle, allow_z);
        } else {
            out.push_back(op);
        }
    }
}

void reduce_z_string(std::span<const size_t> spins, double angle, const ReduceOptions &options,
                     std::vector<PulseOp> &out) {
    if (spins.size() == 1) {
        append_z_rotation(out, spins[0], angle, options.allow_z);
        return;
    }
    if (spins.size() == 2) {
        out.push_back(PulseOp::coupling(spins[0], spins[1], angle));
        return;
    }
    // Conjugating Iz_b by a flip of b conditioned on a yields 2 Iz_a Iz_b, so the
    // order drops by one with spin a folded into spin b.
    size_t a = spins[0];
    size_t b = spins[1];
    if (options.use_pseudo_cnot) {
        append(out, pseudo_cnot(a, b, true));
        reduce_z_string(spins.subspan(1), angle, options, out);
        append(out, pseudo_cnot(a, b, false));
    } else {
        std::vector<PulseOp> flip = cnot_sequence(a, b);
        append_expanding_z(out, flip, options.allow_z);
        reduce_z_string(spins.subspan(1), angle, options, out);
        append_expanding_z(out, flip, options.allow_z);
    }
}

}  // namespace

PulseOp PulseOp::rotation(size_t spin, Axis axis, double angle) {
    if (axis == Axis::I) {
        throw std::invalid_argument("rotation axis must be x, y or z");
    }
    return {Kind::kRotation, spin, 0, axis, angle};
}

PulseOp PulseOp::coupling(size_t i, size_t j, double angle) {
    if (i == j) {
        throw std::invalid_argument("coupling needs two distinct spins");
    }
    if (i > j) {
        std::swap(i, j);
    }
    return {Kind::kCoupling, i, j, Axis::Z, angle};
}

bool PulseOp::same_generator(const PulseOp &other) const {
    if (kind != other.kind || spin != other.spin) {
        return false;
    }
    return is_rotation() ? axis == other.axis : partner == other.partner;
}

std::vector<PulseOp> composite_z(size_t spin, double angle) {
    return {
        PulseOp::rotation(spin, Axis::Y, kPi / 2),
        PulseOp::rotation(spin, Axis::X, angle),
        PulseOp::rotation(spin, Axis::Y, -kPi / 2),
    };
}

AxisTransform axis_transform(const SingleOp &op) {
    if (op.string.is_identity()) {
        throw std::invalid_argument("axis_transform: identity string has no axes");
    }
    AxisTransform out{{}, op, {}};
    for (size_t spin = 1; spin <= op.string.num_spins(); spin++) {
        switch (op.string.at(spin)) {
            case Axis::X:
                // Ry(pi/2) Iz Ry(-pi/2) = Ix
                out.pre.push_back(PulseOp::rotation(spin, Axis::Y, -kPi / 2));
                out.post.push_back(PulseOp::rotation(spin, Axis::Y, kPi / 2));
                out.core.string.set(spin, Axis::Z);
                break;
            case Axis::Y:
                // Rx(-pi/2) Iz Rx(pi/2) = Iy
                out.pre.push_back(PulseOp::rotation(spin, Axis::X, kPi / 2));
                out.post.push_back(PulseOp::rotation(spin, Axis::X, -kPi / 2));
                out.core.string.set(spin, Axis::Z);
                break;
            default:
                break;
        }
    }
    return out;
}

std::vector<PulseOp> cnot_sequence(size_t control, size_t target) {
    if (control == target) {
        throw std::invalid_argument("cnot_sequence: control and target coincide");
    }
    return {
        PulseOp::rotation(target, Axis::Y, -kPi / 2),
        PulseOp::coupling(control, target, -kPi / 2),
        PulseOp::rotation(target, Axis::Y, kPi / 2),
        PulseOp::rotation(target, Axis::X, kPi / 2),
        PulseOp::rotation(control, Axis::Z, kPi / 2),
    };
}

std::vector<PulseOp> pseudo_cnot(size_t control, size_t target, bool inverse) {
    if (control == target) {
        throw std::invalid_argument("pseudo_cnot: control and target coincide");
    }
    if (inverse) {
        return {
            PulseOp::rotation(target, Axis::X, -kPi / 2),
            PulseOp::coupling(control, target, -kPi / 2),
            PulseOp::rotation(target, Axis::Y, -kPi / 2),
        };
    }
    return {
        PulseOp::rotation(target, Axis::Y, kPi / 2),
        PulseOp::coupling(control, target, kPi / 2),
        PulseOp::rotation(target, Axis::X, kPi / 2),
    };
}

std::vector<PulseOp> reduce_coupling_order(const SingleOp &core, const ReduceOptions &options) {
    if (!core.string.is_z_only() || core.string.is_identity()) {
        throw std::invalid_argument("reduce_coupling_order: expected a non-empty z string, got " +
                                    core.string.str());
    }
    std::vector<size_t> spins;
    for (size_t spin = 1; spin <= core.string.num_spins(); spin++) {
        if (core.string.at(spin) == Axis::Z) {
            spins.push_back(spin);
        }
    }
    std::vector<PulseOp> out;
    reduce_z_string(spins, core.angle, options, out);
    return out;
}

PulseSequence reduce_plan(const DecompositionPlan &plan, const ReduceOptions &options) {
    PulseSequence seq;
    seq.num_spins = plan.num_spins;
    seq.global_phase = plan.identity_phase;
    for (const SingleOp &op : plan.ops) {
        size_t q = op.string.weight();
        if (q == 0) {
            seq.global_phase += op.angle / 2;
            continue;
        }
        if (q == 1) {
            for (size_t spin = 1; spin <= op.string.num_spins(); spin++) {
                Axis a = op.string.at(spin);
                if (a == Axis::Z) {
                    append_z_rotation(seq.ops, spin, op.angle, options.allow_z);
                } else if (a != Axis::I) {
                    seq.ops.push_back(PulseOp::rotation(spin, a, op.angle));
                }
            }
            continue;
        }
        AxisTransform t = axis_transform(op);
        append(seq.ops, t.pre);
        append(seq.ops, reduce_coupling_order(t.core, options));
        append(seq.ops, t.post);
        if (!options.use_pseudo_cnot && q > 2) {
            // Each c-NOT sequence carries e^{-i pi/4}.
            seq.global_phase -= (kPi / 2) * static_cast<double>(q - 2);
        }
    }
    return peephole(seq);
}

PulseSequence peephole(const PulseSequence &seq) {
    PulseSequence out;
    out.num_spins = seq.num_spins;
    out.global_phase = seq.global_phase;
    for (const PulseOp &op : seq.ops) {
        if (!out.ops.empty() && out.ops.back().same_generator(op)) {
            double merged = wrap_4pi(out.ops.back().angle + op.angle);
            if (std::abs(merged) < kDropAngle) {
                out.ops.pop_back();
            } else {
                out.ops.back().angle = merged;
            }
            continue;
        }
        if (std::abs(op.angle) >= kDropAngle) {
            out.ops.push_back(op);
        }
    }
    return out;
}

}  // namespace pulsec
