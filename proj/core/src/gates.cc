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

#include "pulsec/gates.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace pulsec {

namespace {

constexpr size_t kMaxGateSpins = 16;

void check_spins(size_t num_spins, std::initializer_list<size_t> spins) {
    if (num_spins < 1 || num_spins > kMaxGateSpins) {
        throw std::invalid_argument("gate spin count out of range: " + std::to_string(num_spins));
    }
    std::set<size_t> seen;
    for (size_t s : spins) {
        if (s < 1 || s > num_spins) {
            throw std::invalid_argument("spin index " + std::to_string(s) + " outside 1.." +
                                        std::to_string(num_spins));
        }
        if (!seen.insert(s).second) {
            throw std::invalid_argument("spin index " + std::to_string(s) + " repeated");
        }
    }
}

uint64_t bit_of(size_t num_spins, size_t spin) {
    return uint64_t{1} << (num_spins - spin);
}

/// Permutation matrix sending |c> to |f(c)>.
ComplexMatrix permutation(size_t num_spins, const std::function<uint64_t(uint64_t)> &f) {
    size_t dim = size_t{1} << num_spins;
    ComplexMatrix m(dim);
    for (uint64_t c = 0; c < dim; c++) {
        m(f(c), c) = 1;
    }
    return m;
}

}  // namespace

ComplexMatrix cnot_gate(size_t num_spins, size_t control, size_t target) {
    check_spins(num_spins, {control, target});
    uint64_t cb = bit_of(num_spins, control);
    uint64_t tb = bit_of(num_spins, target);
    return permutation(num_spins, [=](uint64_t c) { return (c & cb) ? c ^ tb : c; });
}

ComplexMatrix toffoli_gate(size_t num_spins, size_t control1, size_t control2, size_t target) {
    check_spins(num_spins, {control1, control2, target});
    uint64_t cb = bit_of(num_spins, control1) | bit_of(num_spins, control2);
    uint64_t tb = bit_of(num_spins, target);
    return permutation(num_spins, [=](uint64_t c) { return (c & cb) == cb ? c ^ tb : c; });
}

ComplexMatrix swap_gate(size_t num_spins, size_t a, size_t b) {
    check_spins(num_spins, {a, b});
    uint64_t ab = bit_of(num_spins, a);
    uint64_t bb = bit_of(num_spins, b);
    return permutation(num_spins, [=](uint64_t c) {
        bool differ = static_cast<bool>(c & ab) != static_cast<bool>(c & bb);
        return differ ? c ^ ab ^ bb : c;
    });
}

ComplexMatrix cphase_gate(size_t num_spins, size_t a, size_t b, double phase) {
    check_spins(num_spins, {a, b});
    uint64_t mask = bit_of(num_spins, a) | bit_of(num_spins, b);
    ComplexMatrix m = ComplexMatrix::identity(size_t{1} << num_spins);
    for (uint64_t c = 0; c < m.dim(); c++) {
        if ((c & mask) == mask) {
            m(c, c) = std::polar(1.0, phase);
        }
    }
    return m;
}

ComplexMatrix fphase_gate(size_t num_spins, const std::vector<uint64_t> &marked) {
    check_spins(num_spins, {});
    ComplexMatrix m = ComplexMatrix::identity(size_t{1} << num_spins);
    std::set<uint64_t> flipped;
    for (uint64_t k : marked) {
        if (k >= m.dim()) {
            throw std::invalid_argument("marked state " + std::to_string(k) + " out of range");
        }
        if (!flipped.insert(k).second) {
            throw std::invalid_argument("marked state " + std::to_string(k) + " repeated");
        }
        m(k, k) = -1;
    }
    return m;
}

const std::vector<std::string> &gate_names() {
    static const std::vector<std::string> names{"cnot", "toffoli", "swap", "cphase", "fphase"};
    return names;
}

ComplexMatrix build(const GateSpec &spec) {
    auto spin = [&](size_t k, size_t fallback) {
        return k < spec.spins.size() ? spec.spins[k] : fallback;
    };
    auto expect_at_most = [&](size_t count) {
        if (spec.spins.size() > count) {
            throw std::invalid_argument(spec.name + " takes at most " + std::to_string(count) +
                                        " spin indices");
        }
    };
    if (spec.name == "cnot") {
        expect_at_most(2);
        return cnot_gate(spec.num_spins, spin(0, 1), spin(1, 2));
    }
    if (spec.name == "toffoli") {
        expect_at_most(3);
        return toffoli_gate(spec.num_spins, spin(0, 1), spin(1, 2), spin(2, 3));
    }
    if (spec.name == "swap") {
        expect_at_most(2);
        return swap_gate(spec.num_spins, spin(0, 1), spin(1, 2));
    }
    if (spec.name == "cphase") {
        expect_at_most(2);
        return cphase_gate(spec.num_spins, spin(0, 1), spin(1, 2), spec.phase);
    }
    if (spec.name == "fphase") {
        expect_at_most(0);
        return fphase_gate(spec.num_spins, spec.marked);
    }
    throw std::invalid_argument("unknown gate '" + spec.name + "'");
}

}  // namespace pulsec
