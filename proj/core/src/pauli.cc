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

#include "pulsec/pauli.h"

#include <bit>
#include <stdexcept>

namespace pulsec {

namespace {

void require_same_length(const PauliString &a, const PauliString &b) {
    if (a.num_spins() != b.num_spins()) {
        throw std::invalid_argument("Pauli strings have different lengths: " + a.str() + " vs " +
                                    b.str());
    }
}

/// sigma_a * sigma_b = phase * sigma_out, with phase a power of i.
struct SlotProduct {
    Axis out;
    Complex phase;
};

SlotProduct slot_product(Axis a, Axis b) {
    if (a == Axis::I) {
        return {b, 1};
    }
    if (b == Axis::I) {
        return {a, 1};
    }
    if (a == b) {
        return {Axis::I, 1};
    }
    // Cyclic x -> y -> z gives +i, anti-cyclic gives -i.
    int ia = static_cast<int>(a) - 1;
    int ib = static_cast<int>(b) - 1;
    int ic = 3 - ia - ib;
    Complex phase = (ib == (ia + 1) % 3) ? Complex{0, 1} : Complex{0, -1};
    return {static_cast<Axis>(ic + 1), phase};
}

}  // namespace

char axis_char(Axis a) {
    switch (a) {
        case Axis::I:
            return '0';
        case Axis::X:
            return 'x';
        case Axis::Y:
            return 'y';
        case Axis::Z:
            return 'z';
    }
    return '?';
}

Axis axis_from_char(char c) {
    switch (c) {
        case '0':
            return Axis::I;
        case 'x':
        case 'X':
            return Axis::X;
        case 'y':
        case 'Y':
            return Axis::Y;
        case 'z':
        case 'Z':
            return Axis::Z;
        default:
            throw std::invalid_argument(std::string("not an axis symbol: '") + c + "'");
    }
}

PauliString PauliString::from_string(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    std::vector<Axis> axes;
    axes.reserve(text.size());
    for (char c : text) {
        axes.push_back(axis_from_char(c));
    }
    return PauliString(std::move(axes));
}

PauliString PauliString::single(size_t num_spins, size_t spin, Axis axis) {
    if (spin < 1 || spin > num_spins) {
        throw std::invalid_argument("spin index out of range");
    }
    PauliString s(num_spins);
    s.set(spin, axis);
    return s;
}

size_t PauliString::weight() const {
    size_t q = 0;
    for (Axis a : axes_) {
        q += a != Axis::I;
    }
    return q;
}

bool PauliString::is_z_only() const {
    for (Axis a : axes_) {
        if (a != Axis::I && a != Axis::Z) {
            return false;
        }
    }
    return true;
}

uint64_t PauliString::x_mask() const {
    uint64_t m = 0;
    size_t n = axes_.size();
    for (size_t k = 0; k < n; k++) {
        if (axes_[k] == Axis::X || axes_[k] == Axis::Y) {
            m |= uint64_t{1} << (n - 1 - k);
        }
    }
    return m;
}

uint64_t PauliString::z_mask() const {
    uint64_t m = 0;
    size_t n = axes_.size();
    for (size_t k = 0; k < n; k++) {
        if (axes_[k] == Axis::Z || axes_[k] == Axis::Y) {
            m |= uint64_t{1} << (n - 1 - k);
        }
    }
    return m;
}

size_t PauliString::y_count() const {
    size_t k = 0;
    for (Axis a : axes_) {
        k += a == Axis::Y;
    }
    return k;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(axes_.size());
    for (Axis a : axes_) {
        out.push_back(axis_char(a));
    }
    return out;
}

ComplexMatrix materialize(const PauliString &s) {
    // The sigma string sends |c> to i^ny (-1)^popcount(c & zmask) |c ^ xmask>.
    size_t dim = size_t{1} << s.num_spins();
    uint64_t xm = s.x_mask();
    uint64_t zm = s.z_mask();
    static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex base = kIPow[s.y_count() % 4] * 0.5;
    ComplexMatrix m(dim);
    for (uint64_t c = 0; c < dim; c++) {
        double sign = (std::popcount(c & zm) & 1) ? -1.0 : 1.0;
        m(c ^ xm, c) = base * sign;
    }
    return m;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_length(a, b);
    size_t clashes = 0;
    for (size_t k = 0; k < a.num_spins(); k++) {
        Axis x = a.axes()[k];
        Axis y = b.axes()[k];
        clashes += x != Axis::I && y != Axis::I && x != y;
    }
    return clashes % 2 == 0;
}

Commutator commutator(const PauliString &a, const PauliString &b) {
    if (commutes(a, b)) {
        return {};
    }
    // With an odd number of clashing slots, sigma_a sigma_b = -sigma_b sigma_a, so
    // [B_a, B_b] = (1/4) * 2 * phase * sigma_c = phase * B_c.
    std::vector<Axis> out(a.num_spins());
    Complex phase = 1;
    for (size_t k = 0; k < a.num_spins(); k++) {
        SlotProduct p = slot_product(a.axes()[k], b.axes()[k]);
        out[k] = p.out;
        phase *= p.phase;
    }
    return {false, PauliString(std::move(out)), phase};
}

std::vector<PauliString> enumerate_basis(size_t num_spins) {
    if (num_spins < 1) {
        throw std::invalid_argument("enumerate_basis: need at least one spin");
    }
    size_t count = size_t{1} << (2 * num_spins);
    std::vector<PauliString> out;
    out.reserve(count);
    for (size_t code = 0; code < count; code++) {
        std::vector<Axis> axes(num_spins);
        for (size_t k = 0; k < num_spins; k++) {
            axes[k] = static_cast<Axis>((code >> (2 * (num_spins - 1 - k))) & 3);
        }
        out.emplace_back(std::move(axes));
    }
    return out;
}

}  // namespace pulsec
