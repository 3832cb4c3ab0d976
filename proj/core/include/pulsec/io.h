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

#ifndef PULSEC_IO_H
#define PULSEC_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "pulsec/generator.h"
#include "pulsec/linalg.h"
#include "pulsec/reduce.h"

namespace pulsec {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Entries look like `1`, `-1i`, `i`, `0.5-0.5i`, `1e-3+2e-3i`.
Complex parse_complex(std::string_view token);
std::string format_complex(Complex z);

/// Matrix text format:
///
///     # optional comments
///     spins N
///     <2^N lines of 2^N whitespace-separated complex entries>
///
/// Lines whose first non-blank character is `#` are comments.
ComplexMatrix parse_matrix(std::string_view text);
std::string format_matrix(const ComplexMatrix &m);

/// Sequence text format:
///
///     spins N
///     # phase <radians>        (optional)
///     R <spin> <x|y|z> <angle>
///     J <spin_i> <spin_j> <angle>
///
/// Ops are listed in time order with angles to 15 significant digits.
std::string format_sequence(const PulseSequence &seq);
std::string format_sequence_json(const PulseSequence &seq);

/// Accepts either the text format or its JSON mirror (detected by a leading `{`).
PulseSequence parse_sequence(std::string_view text);

/// The expand table: one `<string> <coefficient>` line per term (12 significant
/// digits) followed by `# exact:true` when all terms commute, else `# exact:false`.
std::string format_expansion(const GeneratorExpansion &expansion);

}  // namespace pulsec

#endif
