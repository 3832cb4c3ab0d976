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

#include "pulsec/io.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "pulsec/gates.h"
#include "pulsec/pipeline.h"

using namespace pulsec;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_same_sequence(const PulseSequence &a, const PulseSequence &b, double tol) {
    ASSERT_EQ(a.num_spins, b.num_spins);
    ASSERT_EQ(a.ops.size(), b.ops.size());
    EXPECT_NEAR(a.global_phase, b.global_phase, tol);
    for (size_t k = 0; k < a.ops.size(); k++) {
        PulseOp x = a.ops[k];
        PulseOp y = b.ops[k];
        EXPECT_NEAR(x.angle, y.angle, tol) << k;
        x.angle = y.angle = 0;
        EXPECT_EQ(x, y) << k;
    }
}

}  // namespace

TEST(io, parse_complex_forms) {
    EXPECT_EQ(parse_complex("1"), Complex(1, 0));
    EXPECT_EQ(parse_complex("-1i"), Complex(0, -1));
    EXPECT_EQ(parse_complex("i"), Complex(0, 1));
    EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
    EXPECT_EQ(parse_complex("0.5-0.5i"), Complex(0.5, -0.5));
    EXPECT_EQ(parse_complex("-0.5+i"), Complex(-0.5, 1));
    EXPECT_EQ(parse_complex("1e-3+2e-3i"), Complex(1e-3, 2e-3));
    EXPECT_EQ(parse_complex("2.5E+2-1E-2i"), Complex(250, -0.01));
    EXPECT_EQ(parse_complex("+3"), Complex(3, 0));
}

TEST(io, parse_complex_errors) {
    for (const char *bad : {"", "abc", "1+", "1+2", "1.0.0", "1+2j", "ii", "1 + 2i"}) {
        EXPECT_THROW(parse_complex(bad), FormatError) << bad;
    }
}

TEST(io, format_complex_forms) {
    EXPECT_EQ(format_complex({1, 0}), "1");
    EXPECT_EQ(format_complex({0, -1}), "-1i");
    EXPECT_EQ(format_complex({0.5, -0.5}), "0.5-0.5i");
    EXPECT_EQ(format_complex({-0.0, 0}), "0");
    EXPECT_EQ(format_complex({0.25, 2}), "0.25+2i");
}

TEST(io, complex_round_trip_is_bit_exact) {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> g;
    for (int k = 0; k < 1000; k++) {
        Complex z{g(rng), g(rng)};
        ASSERT_EQ(parse_complex(format_complex(z)), z);
    }
}

TEST(io, matrix_format_example) {
    EXPECT_EQ(format_matrix(cnot_gate(2, 1, 2)),
              "spins 2\n1 0 0 0\n0 1 0 0\n0 0 0 1\n0 0 1 0\n");
}

TEST(io, matrix_round_trip_is_bit_exact) {
    std::mt19937_64 rng(62);
    for (size_t dim : {2, 4, 8}) {
        ComplexMatrix m = oracle::random_unitary(dim, rng);
        EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    }
}

TEST(io, parse_matrix_with_comments) {
    std::string text = "# hadamard-ish\nspins 1\n  # row 1\n0.5 0.5i\n\n-0.5i -0.5\n";
    ComplexMatrix m = parse_matrix(text);
    EXPECT_EQ(m, (ComplexMatrix{{0.5, Complex(0, 0.5)}, {Complex(0, -0.5), -0.5}}));
}

TEST(io, parse_matrix_errors) {
    EXPECT_THROW(parse_matrix(""), FormatError);
    EXPECT_THROW(parse_matrix("1 0\n0 1\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 1\n1 0\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 1\n1 0 0\n0 1\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 1\n1 0\n0 1\n0 0\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 0\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 13\n"), FormatError);
    EXPECT_THROW(parse_matrix("spins 1\n1 x\n0 1\n"), FormatError);
    try {
        parse_matrix("spins 1\n1 0\n0 q\n");
        FAIL();
    } catch (const FormatError &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(io, sequence_format_example) {
    PulseSequence seq{2,
                      {PulseOp::rotation(1, Axis::X, kPi / 2), PulseOp::coupling(1, 2, -kPi / 4),
                       PulseOp::rotation(2, Axis::Y, 0.1)},
                      0};
    EXPECT_EQ(format_sequence(seq),
              "spins 2\nR 1 x 1.5707963267949\nJ 1 2 -0.785398163397448\nR 2 y 0.1\n");
    seq.global_phase = -kPi / 8;
    EXPECT_EQ(format_sequence(seq).substr(0, 35), "spins 2\n# phase -0.392699081698724\n");
}

TEST(io, sequence_text_round_trip) {
    PulseSequence seq = compile_unitary(toffoli_gate(3, 1, 2, 3)).sequence;
    seq.global_phase = 0.123456789;
    std::string text = format_sequence(seq);
    PulseSequence back = parse_sequence(text);
    expect_same_sequence(back, seq, 1e-14);
    // Text is a fixed point of parse-then-format.
    EXPECT_EQ(format_sequence(back), text);
}

TEST(io, sequence_json_round_trip_is_bit_exact) {
    PulseSequence seq = compile_unitary(toffoli_gate(3, 1, 2, 3)).sequence;
    seq.global_phase = 1.0 / 3;
    PulseSequence back = parse_sequence(format_sequence_json(seq));
    EXPECT_EQ(back, seq);
}

TEST(io, sequence_json_shape) {
    PulseSequence seq{2, {PulseOp::rotation(2, Axis::Y, 0.5), PulseOp::coupling(1, 2, 0.25)}, 0};
    EXPECT_EQ(format_sequence_json(seq),
              "{\n"
              "  \"spins\": 2,\n"
              "  \"phase\": 0.0,\n"
              "  \"ops\": [\n"
              "    {\n"
              "      \"type\": \"R\",\n"
              "      \"spin\": 2,\n"
              "      \"axis\": \"y\",\n"
              "      \"angle\": 0.5\n"
              "    },\n"
              "    {\n"
              "      \"type\": \"J\",\n"
              "      \"spins\": [\n"
              "        1,\n"
              "        2\n"
              "      ],\n"
              "      \"angle\": 0.25\n"
              "    }\n"
              "  ]\n"
              "}\n");
}

TEST(io, empty_sequence) {
    PulseSequence seq = parse_sequence("spins 2\n");
    EXPECT_EQ(seq.num_spins, 2u);
    EXPECT_TRUE(seq.ops.empty());
    EXPECT_EQ(format_sequence(seq), "spins 2\n");
}

TEST(io, parse_sequence_errors) {
    for (const char *bad : {"", "R 1 x 0.5\n", "spins 2\nR 3 x 0.5\n", "spins 2\nR 1 w 0.5\n",
                            "spins 2\nJ 1 1 0.5\n", "spins 2\nJ 1 3 0.5\n", "spins 2\nR 1 x\n",
                            "spins 2\nQ 1 x 0.5\n", "spins 2\nR 1 x nan\n",
                            "spins 2\nR 1 x 0.5 7\n", "spins 2\nR -1 x 0.5\n",
                            "{\"spins\": 2, \"ops\": [{\"type\": \"R\"}]}", "{bad json",
                            "{\"spins\": 2, \"ops\": [{\"type\": \"J\", \"spins\": [1], "
                            "\"angle\": 1}]}"}) {
        EXPECT_THROW(parse_sequence(bad), FormatError) << bad;
    }
}

TEST(io, expansion_table) {
    GeneratorExpansion e;
    e.num_spins = 2;
    e.identity_coeff = -kPi / 4;
    e.coeffs[PauliString::from_string("z0")] = kPi / 2;
    e.coeffs[PauliString::from_string("zz")] = -kPi / 2;
    EXPECT_EQ(format_expansion(e),
              "00 -0.785398163397\nz0 1.57079632679\nzz -1.57079632679\n# exact:true\n");
    e.coeffs[PauliString::from_string("x0")] = 1;
    EXPECT_NE(format_expansion(e).find("# exact:false"), std::string::npos);

    GeneratorExpansion empty;
    empty.num_spins = 2;
    EXPECT_EQ(format_expansion(empty), "# exact:true\n");
}
