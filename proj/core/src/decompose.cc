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

#include "pulsec/decompose.h"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace pulsec {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::kCommuting:
            return "commuting";
        case Strategy::kEuler:
            return "euler";
        case Strategy::kFactorized:
            return "factorized";
        case Strategy::kTrotter:
            return "trotter";
    }
    return "unknown";
}

DecompositionPlan decompose_commuting(const GeneratorExpansion &expansion) {
    for (auto a = expansion.coeffs.begin(); a != expansion.coeffs.end(); ++a) {
        for (auto b = std::next(a); b != expansion.coeffs.end(); ++b) {
            if (!commutes(a->first, b->first)) {
                throw NotAllCommuting("terms " + a->first.str() + " and " + b->first.str() +
                                      " do not commute");
            }
        }
    }
    DecompositionPlan out;
    out.num_spins = expansion.num_spins;
    out.identity_phase = expansion.identity_coeff;
    out.strategy = Strategy::kCommuting;
    for (const auto &[s, b] : expansion.coeffs) {
        out.ops.push_back({s, b});
    }
    return out;
}

std::vector<SingleOp> euler_decompose(const SingleOp &a, const SingleOp &b) {
    Commutator comm = commutator(a.string, b.string);
    if (comm.vanishes) {
        throw std::invalid_argument("euler_decompose: " + a.string.str() + " and " +
                                    b.string.str() + " commute");
    }
    // [B1, B2] = i c B3; (B1, B2, c B3) behaves like (Ix, Iy, Iz).
    double orientation = comm.coefficient.imag() > 0 ? 1.0 : -1.0;
    double r = std::hypot(a.angle, b.angle);
    double theta = std::atan2(orientation * b.angle, a.angle);
    return {
        {comm.result, -theta},
        {a.string, r},
        {comm.result, theta},
    };
}

DecompositionPlan decompose_factorized(const FactorizedGenerator &fg) {
    size_t n = fg.per_spin.size();
    if (n < 1 || n > 30) {
        throw std::invalid_argument("decompose_factorized: unsupported spin count");
    }

    std::vector<double> core_scale(n);
    std::vector<SingleOp> before;
    std::vector<SingleOp> after;
    for (size_t i = 0; i < n; i++) {
        const auto &[p0, px, py, pz] = fg.per_spin[i];
        size_t spin = i + 1;
        if (px == 0 && py == 0) {
            core_scale[i] = pz;
            continue;
        }
        double norm = std::sqrt(px * px + py * py + pz * pz);
        core_scale[i] = norm;
        // Rz(azimuth) Ry(polar) carries Iz onto the unit axis of (px, py, pz).
        double polar = std::acos(std::clamp(pz / norm, -1.0, 1.0));
        double azimuth = std::atan2(py, px);
        PauliString y = PauliString::single(n, spin, Axis::Y);
        PauliString z = PauliString::single(n, spin, Axis::Z);
        if (azimuth != 0) {
            before.push_back({z, -azimuth});
        }
        before.push_back({y, -polar});
        after.push_back({y, polar});
        if (azimuth != 0) {
            after.push_back({z, azimuth});
        }
    }

    // prod_i (p0_i E + scale_i Iz_i) distributed over subsets of spins; a subset
    // S contributes prod Iz = 2^(1-|S|) B_S.
    GeneratorExpansion core;
    core.num_spins = n;
    for (uint64_t subset = 0; subset < (uint64_t{1} << n); subset++) {
        double coeff = 1;
        PauliString s(n);
        size_t weight = 0;
        for (size_t i = 0; i < n && coeff != 0; i++) {
            if ((subset >> i) & 1) {
                coeff *= core_scale[i];
                s.set(i + 1, Axis::Z);
                weight++;
            } else {
                coeff *= fg.per_spin[i][0];
            }
        }
        if (coeff == 0) {
            continue;
        }
        if (weight == 0) {
            core.identity_coeff = coeff;
        } else {
            core.coeffs[s] += std::ldexp(coeff, 1 - static_cast<int>(weight));
        }
    }

    DecompositionPlan out = decompose_commuting(core);
    out.strategy = Strategy::kFactorized;
    std::vector<SingleOp> ops = std::move(before);
    ops.insert(ops.end(), out.ops.begin(), out.ops.end());
    ops.insert(ops.end(), after.begin(), after.end());
    out.ops = std::move(ops);
    return out;
}

DecompositionPlan trotterize(const GeneratorExpansion &expansion, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("trotterize: steps must be at least 1");
    }
    DecompositionPlan out;
    out.num_spins = expansion.num_spins;
    out.identity_phase = expansion.identity_coeff;
    out.strategy = Strategy::kTrotter;
    out.exact = false;
    out.trotter_steps = steps;
    out.ops.reserve(expansion.coeffs.size() * static_cast<size_t>(steps));
    for (int k = 0; k < steps; k++) {
        for (const auto &[s, b] : expansion.coeffs) {
            out.ops.push_back({s, b / steps});
        }
    }
    return out;
}

DecompositionPlan plan(const GeneratorExpansion &expansion, const PlanOptions &options) {
    try {
        return decompose_commuting(expansion);
    } catch (const NotAllCommuting &) {
    }
    if (expansion.coeffs.size() == 2) {
        auto first = expansion.coeffs.begin();
        auto second = std::next(first);
        DecompositionPlan out;
        out.num_spins = expansion.num_spins;
        out.identity_phase = expansion.identity_coeff;
        out.strategy = Strategy::kEuler;
        out.ops = euler_decompose({first->first, first->second}, {second->first, second->second});
        return out;
    }
    return trotterize(expansion, options.trotter_steps);
}

}  // namespace pulsec
