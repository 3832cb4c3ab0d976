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

#include <map>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace pulsec;

namespace {

PauliString ps(const char *text) {
    return PauliString::from_string(text);
}

double zero_distance(const ComplexMatrix &m) {
    return max_abs_diff(m, ComplexMatrix::zeros(m.dim()));
}

}  // namespace

TEST(pauli, string_basics) {
    PauliString s = ps("z0x");
    EXPECT_EQ(s.num_spins(), 3u);
    EXPECT_EQ(s.weight(), 2u);
    EXPECT_EQ(s.at(1), Axis::Z);
    EXPECT_EQ(s.at(2), Axis::I);
    EXPECT_EQ(s.str(), "z0x");
    EXPECT_FALSE(s.is_z_only());
    EXPECT_TRUE(ps("z0z").is_z_only());
    EXPECT_TRUE(ps("000").is_identity());
    EXPECT_THROW(ps("zq"), std::invalid_argument);
    EXPECT_THROW(ps(""), std::invalid_argument);
}

TEST(pauli, materialize_examples) {
    std::vector<Complex> d{0.5, 0.5, -0.5, -0.5};
    EXPECT_LT(max_abs_diff(materialize(ps("z0")), ComplexMatrix::diagonal(d)), 1e-15);

    ComplexMatrix sx = oracle::spin_op('x') * Complex{2, 0};
    ComplexMatrix sy = oracle::spin_op('y') * Complex{2, 0};
    EXPECT_LT(max_abs_diff(materialize(ps("xy")), tensor(sx, sy) * Complex{0.5, 0}), 1e-15);

    EXPECT_LT(max_abs_diff(materialize(ps("00")), ComplexMatrix::identity(4) * Complex{0.5, 0}),
              1e-15);
}

TEST(pauli, materialize_matches_tensor_construction) {
    for (size_t n = 1; n <= 3; n++) {
        for (const PauliString &s : enumerate_basis(n)) {
            EXPECT_LT(max_abs_diff(materialize(s), oracle::product_operator(s.str())), 1e-15)
                << s.str();
        }
    }
}

TEST(pauli, squares_to_quarter_identity) {
    for (size_t n = 1; n <= 3; n++) {
        for (const PauliString &s : enumerate_basis(n)) {
            ComplexMatrix b = materialize(s);
            EXPECT_LT(max_abs_diff(b * b, ComplexMatrix::identity(b.dim()) * Complex{0.25, 0}),
                      1e-15);
            EXPECT_TRUE(is_hermitian(b, 1e-15));
        }
    }
}

TEST(pauli, orthogonality) {
    for (size_t n = 1; n <= 3; n++) {
        auto basis = enumerate_basis(n);
        double expected = std::ldexp(1.0, static_cast<int>(n) - 2);
        for (size_t i = 0; i < basis.size(); i++) {
            ComplexMatrix bi = materialize(basis[i]);
            for (size_t j = 0; j < basis.size(); j++) {
                Complex tr = (bi * materialize(basis[j])).trace();
                Complex want = i == j ? expected : 0.0;
                ASSERT_LT(std::abs(tr - want), 1e-12) << basis[i].str() << " " << basis[j].str();
            }
        }
    }
}

TEST(pauli, commutes_examples) {
    EXPECT_FALSE(commutes(ps("x0"), ps("y0")));
    EXPECT_TRUE(commutes(ps("xx"), ps("yy")));
    EXPECT_TRUE(commutes(ps("zz0"), ps("0zz")));
    EXPECT_THROW(commutes(ps("x"), ps("xx")), std::invalid_argument);
}

TEST(pauli, commutes_matches_matrix_commutator) {
    for (size_t n = 1; n <= 3; n++) {
        auto basis = enumerate_basis(n);
        for (const auto &a : basis) {
            ComplexMatrix ma = oracle::product_operator(a.str());
            for (const auto &b : basis) {
                bool zero = zero_distance(oracle::commutator(ma, oracle::product_operator(b.str()))) <
                            1e-12;
                ASSERT_EQ(commutes(a, b), zero) << a.str() << " " << b.str();
            }
        }
    }
}

TEST(pauli, commutator_examples) {
    Commutator c = commutator(ps("x"), ps("y"));
    EXPECT_FALSE(c.vanishes);
    EXPECT_EQ(c.result, ps("z"));
    EXPECT_EQ(c.coefficient, Complex(0, 1));

    // [2I1x I2z, 2I1y I2z] = i I1z from the 4x4 matrix commutator.
    c = commutator(ps("xz"), ps("yz"));
    EXPECT_FALSE(c.vanishes);
    EXPECT_EQ(c.result, ps("z0"));
    EXPECT_EQ(c.coefficient, Complex(0, 1));
    ComplexMatrix lhs = oracle::commutator(oracle::product_operator("xz"),
                                           oracle::product_operator("yz"));
    EXPECT_LT(max_abs_diff(lhs, oracle::product_operator("z0") * Complex{0, 1}), 1e-15);

    EXPECT_TRUE(commutator(ps("zz"), ps("z0")).vanishes);
    EXPECT_THROW(commutator(ps("x"), ps("xy")), std::invalid_argument);
}

TEST(pauli, commutator_reconstruction_identity) {
    for (size_t n = 1; n <= 3; n++) {
        auto basis = enumerate_basis(n);
        for (const auto &a : basis) {
            for (const auto &b : basis) {
                Commutator c = commutator(a, b);
                if (c.vanishes) {
                    continue;
                }
                ASSERT_TRUE(c.coefficient == Complex(0, 1) || c.coefficient == Complex(0, -1));
                ComplexMatrix lhs = oracle::commutator(materialize(a), materialize(b));
                ASSERT_LT(max_abs_diff(lhs, materialize(c.result) * c.coefficient), 1e-12)
                    << a.str() << " " << b.str();
            }
        }
    }
}

TEST(pauli, enumerate_basis_order_and_inventory) {
    auto one = enumerate_basis(1);
    ASSERT_EQ(one.size(), 4u);
    EXPECT_EQ(one[0].str(), "0");
    EXPECT_EQ(one[1].str(), "x");
    EXPECT_EQ(one[2].str(), "y");
    EXPECT_EQ(one[3].str(), "z");

    auto two = enumerate_basis(2);
    ASSERT_EQ(two.size(), 16u);
    std::map<size_t, int> by_weight;
    for (const auto &s : two) {
        by_weight[s.weight()]++;
    }
    EXPECT_EQ(by_weight[0], 1);
    EXPECT_EQ(by_weight[1], 6);
    EXPECT_EQ(by_weight[2], 9);
    EXPECT_TRUE(std::is_sorted(two.begin(), two.end()));
    EXPECT_EQ(two[1].str(), "0x");
    EXPECT_EQ(two[4].str(), "x0");

    EXPECT_EQ(enumerate_basis(3).size(), 64u);
    EXPECT_THROW(enumerate_basis(0), std::invalid_argument);
}
