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

#ifndef PULSEC_PAULI_H
#define PULSEC_PAULI_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pulsec/linalg.h"

namespace pulsec {

/// Per-spin factor of a product operator. Declaration order is the basis order.
enum class Axis : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// Product-operator basis element B_s = 2^(q-1) (I_a1 x I_a2 x ... x I_aN), where
/// I_0 = E and I_x,y,z are spin-1/2 operators. Equivalently B_s is one half of
/// the Pauli string sigma_a1 x ... x sigma_aN, for every s including all-zero.
///
/// Slot 0 of `axes` is spin 1, which is the most significant basis bit.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_spins) : axes_(num_spins, Axis::I) {
    }
    explicit PauliString(std::vector<Axis> axes) : axes_(std::move(axes)) {
    }

    /// Parses the canonical rendering, e.g. "z0x". Throws std::invalid_argument.
    static PauliString from_string(std::string_view text);

    /// Single-spin string with `axis` at 1-indexed `spin`.
    static PauliString single(size_t num_spins, size_t spin, Axis axis);

    size_t num_spins() const {
        return axes_.size();
    }
    /// 1-indexed spin access.
    Axis at(size_t spin) const {
        return axes_[spin - 1];
    }
    void set(size_t spin, Axis a) {
        axes_[spin - 1] = a;
    }
    const std::vector<Axis> &axes() const {
        return axes_;
    }

    /// Number of non-identity slots (q).
    size_t weight() const;
    bool is_identity() const {
        return weight() == 0;
    }
    /// True when every non-identity slot is z.
    bool is_z_only() const;

    /// Bit masks over basis indices: flip mask for x/y, sign mask for y/z.
    uint64_t x_mask() const;
    uint64_t z_mask() const;
    size_t y_count() const;

    std::string str() const;

    friend auto operator<=>(const PauliString &, const PauliString &) = default;
    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::vector<Axis> axes_;
};

/// Result of [B_a, B_b]. When not vanishing, [B_a, B_b] = coefficient * B_result
/// with coefficient = +i or -i.
struct Commutator {
    bool vanishes = true;
    PauliString result;
    Complex coefficient{0, 0};
};

ComplexMatrix materialize(const PauliString &s);

/// Throws std::invalid_argument if the strings have different lengths.
bool commutes(const PauliString &a, const PauliString &b);
Commutator commutator(const PauliString &a, const PauliString &b);

/// All 4^N strings, lexicographic with 0 < x < y < z and spin 1 most significant.
std::vector<PauliString> enumerate_basis(size_t num_spins);

}  // namespace pulsec

#endif
