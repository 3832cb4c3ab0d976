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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace pulsec {

namespace {

constexpr size_t kMaxFileSpins = 12;

std::string error_at(size_t line, const std::string &msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

double parse_real(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

double parse_unit_or_real(std::string_view s) {
    if (s.empty() || s == "+") {
        return 1;
    }
    if (s == "-") {
        return -1;
    }
    return parse_real(s);
}

std::string format_real(double v, int digits) {
    if (v == 0) {
        v = 0;  // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

struct Line {
    size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return {};
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    size_t number = 0;
    while (!text.empty()) {
        number++;
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        out.push_back({number, trim(line)});
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) {
            k++;
        }
        size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t') {
            k++;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

size_t parse_index(std::string_view s, size_t line) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw FormatError(error_at(line, "not a non-negative integer: '" + std::string(s) + "'"));
    }
    return v;
}

size_t parse_spins_header(const Line &line) {
    auto words = split_words(line.text);
    if (words.size() != 2 || words[0] != "spins") {
        throw FormatError(error_at(line.number, "expected 'spins N'"));
    }
    size_t n = parse_index(words[1], line.number);
    if (n < 1 || n > kMaxFileSpins) {
        throw FormatError(error_at(line.number, "spin count must be in 1.." +
                                                    std::to_string(kMaxFileSpins)));
    }
    return n;
}

PulseOp checked_op(PulseOp op, size_t num_spins, size_t line) {
    bool ok = op.spin >= 1 && op.spin <= num_spins;
    if (!op.is_rotation()) {
        ok = ok && op.partner >= 1 && op.partner <= num_spins;
    }
    if (!ok) {
        throw FormatError(error_at(line, "spin index outside 1.." + std::to_string(num_spins)));
    }
    if (!std::isfinite(op.angle)) {
        throw FormatError(error_at(line, "angle is not finite"));
    }
    return op;
}

PulseSequence parse_sequence_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    try {
        PulseSequence seq;
        seq.num_spins = doc.at("spins").get<size_t>();
        if (seq.num_spins < 1 || seq.num_spins > kMaxFileSpins) {
            throw FormatError("spin count out of range");
        }
        seq.global_phase = doc.value("phase", 0.0);
        size_t k = 0;
        for (const auto &op : doc.at("ops")) {
            k++;
            std::string type = op.at("type").get<std::string>();
            double angle = op.at("angle").get<double>();
            if (type == "R") {
                std::string axis = op.at("axis").get<std::string>();
                if (axis != "x" && axis != "y" && axis != "z") {
                    throw FormatError("op " + std::to_string(k) + ": bad axis '" + axis + "'");
                }
                seq.ops.push_back(checked_op(
                    PulseOp::rotation(op.at("spin").get<size_t>(), axis_from_char(axis[0]), angle),
                    seq.num_spins, k));
            } else if (type == "J") {
                auto pair = op.at("spins").get<std::vector<size_t>>();
                if (pair.size() != 2) {
                    throw FormatError("op " + std::to_string(k) + ": coupling needs two spins");
                }
                seq.ops.push_back(
                    checked_op(PulseOp::coupling(pair[0], pair[1], angle), seq.num_spins, k));
            } else {
                throw FormatError("op " + std::to_string(k) + ": unknown type '" + type + "'");
            }
        }
        return seq;
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed sequence JSON: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

}  // namespace

Complex parse_complex(std::string_view token) {
    if (token.empty()) {
        throw FormatError("empty complex entry");
    }
    if (token.back() != 'i') {
        return {parse_real(token), 0};
    }
    std::string_view body = token.substr(0, token.size() - 1);
    size_t split = std::string_view::npos;
    for (size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0, parse_unit_or_real(body)};
    }
    return {parse_real(body.substr(0, split)), parse_unit_or_real(body.substr(split))};
}

std::string format_complex(Complex z) {
    double re = z.real();
    double im = z.imag();
    if (im == 0) {
        return format_real(re, 17);
    }
    std::string imag_part = format_real(im, 17) + "i";
    if (re == 0) {
        return imag_part;
    }
    return format_real(re, 17) + (im > 0 ? "+" : "") + imag_part;
}

ComplexMatrix parse_matrix(std::string_view text) {
    size_t num_spins = 0;
    size_t dim = 0;
    std::vector<Complex> entries;
    size_t last_line = 0;
    for (const Line &line : split_lines(text)) {
        last_line = line.number;
        if (line.text.empty() || line.text.front() == '#') {
            continue;
        }
        if (num_spins == 0) {
            num_spins = parse_spins_header(line);
            dim = size_t{1} << num_spins;
            entries.reserve(dim * dim);
            continue;
        }
        auto words = split_words(line.text);
        if (words.size() != dim) {
            throw FormatError(error_at(line.number, "expected " + std::to_string(dim) +
                                                        " entries, found " +
                                                        std::to_string(words.size())));
        }
        if (entries.size() == dim * dim) {
            throw FormatError(error_at(line.number, "too many rows"));
        }
        for (auto w : words) {
            try {
                entries.push_back(parse_complex(w));
            } catch (const FormatError &e) {
                throw FormatError(error_at(line.number, e.what()));
            }
        }
    }
    if (num_spins == 0) {
        throw FormatError("missing 'spins N' header");
    }
    if (entries.size() != dim * dim) {
        throw FormatError(error_at(last_line, "expected " + std::to_string(dim) + " rows, found " +
                                                  std::to_string(entries.size() / dim)));
    }
    return ComplexMatrix(dim, std::move(entries));
}

std::string format_matrix(const ComplexMatrix &m) {
    size_t num_spins = 0;
    if (!dim_to_spins(m.dim(), num_spins) || num_spins < 1) {
        throw std::invalid_argument("format_matrix: dimension is not 2^N");
    }
    std::string out = "spins " + std::to_string(num_spins) + "\n";
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            if (c) {
                out += ' ';
            }
            out += format_complex(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string format_sequence(const PulseSequence &seq) {
    std::string out = "spins " + std::to_string(seq.num_spins) + "\n";
    if (seq.global_phase != 0) {
        out += "# phase " + format_real(seq.global_phase, 15) + "\n";
    }
    for (const PulseOp &op : seq.ops) {
        if (op.is_rotation()) {
            out += "R " + std::to_string(op.spin) + " " + axis_char(op.axis) + " ";
        } else {
            out += "J " + std::to_string(op.spin) + " " + std::to_string(op.partner) + " ";
        }
        out += format_real(op.angle, 15) + "\n";
    }
    return out;
}

std::string format_sequence_json(const PulseSequence &seq) {
    nlohmann::ordered_json doc;
    doc["spins"] = seq.num_spins;
    doc["phase"] = seq.global_phase;
    auto ops = nlohmann::ordered_json::array();
    for (const PulseOp &op : seq.ops) {
        nlohmann::ordered_json j;
        j["type"] = op.is_rotation() ? "R" : "J";
        if (op.is_rotation()) {
            j["spin"] = op.spin;
            j["axis"] = std::string(1, axis_char(op.axis));
        } else {
            j["spins"] = {op.spin, op.partner};
        }
        j["angle"] = op.angle;
        ops.push_back(std::move(j));
    }
    doc["ops"] = std::move(ops);
    return doc.dump(2) + "\n";
}

PulseSequence parse_sequence(std::string_view text) {
    std::string_view head = trim(text);
    if (!head.empty() && head.front() == '{') {
        return parse_sequence_json(text);
    }
    PulseSequence seq;
    for (const Line &line : split_lines(text)) {
        if (line.text.empty()) {
            continue;
        }
        auto words = split_words(line.text);
        if (line.text.front() == '#') {
            if (words.size() == 3 && words[0] == "#" && words[1] == "phase") {
                try {
                    seq.global_phase = parse_real(words[2]);
                } catch (const FormatError &e) {
                    throw FormatError(error_at(line.number, e.what()));
                }
            }
            continue;
        }
        if (seq.num_spins == 0) {
            seq.num_spins = parse_spins_header(line);
            continue;
        }
        if (words.size() != 4 || (words[0] != "R" && words[0] != "J")) {
            throw FormatError(error_at(line.number, "expected 'R <spin> <axis> <angle>' or "
                                                    "'J <spin_i> <spin_j> <angle>'"));
        }
        double angle = 0;
        try {
            angle = parse_real(words[3]);
        } catch (const FormatError &e) {
            throw FormatError(error_at(line.number, e.what()));
        }
        size_t a = parse_index(words[1], line.number);
        if (words[0] == "R") {
            if (words[2].size() != 1 || words[2].find_first_of("xyz") != 0) {
                throw FormatError(error_at(line.number, "axis must be x, y or z"));
            }
            seq.ops.push_back(checked_op(PulseOp::rotation(a, axis_from_char(words[2][0]), angle),
                                         seq.num_spins, line.number));
        } else {
            size_t b = parse_index(words[2], line.number);
            if (a == b) {
                throw FormatError(error_at(line.number, "coupling needs two distinct spins"));
            }
            seq.ops.push_back(
                checked_op(PulseOp::coupling(a, b, angle), seq.num_spins, line.number));
        }
    }
    if (seq.num_spins == 0) {
        throw FormatError("missing 'spins N' header");
    }
    return seq;
}

std::string format_expansion(const GeneratorExpansion &expansion) {
    bool all_commute = true;
    for (auto a = expansion.coeffs.begin(); a != expansion.coeffs.end() && all_commute; ++a) {
        for (auto b = std::next(a); b != expansion.coeffs.end(); ++b) {
            if (!commutes(a->first, b->first)) {
                all_commute = false;
                break;
            }
        }
    }
    return expansion.str() + (all_commute ? "# exact:true\n" : "# exact:false\n");
}

}  // namespace pulsec
