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

#ifndef PULSEC_GENERATOR_H
#define PULSEC_GENERATOR_H

#include <map>
#include <string>

#include "pulsec/linalg.h"
#include "pulsec/pauli.h"

namespace pulsec {

/// Interval that eigenphases are folded into when inverting lambda = e^{-i theta}.
enum class BranchConvention {
    kPrincipalUpper,  // (-pi, pi]
    kPrincipalLower,  // [-pi, pi)
};

/// Folds -arg(lambda) into the branch interval. Phases within 1e-8 of the
/// excluded endpoint are snapped to the included one.
double eigenphase(Complex lambda, BranchConvention branch);

/// G = identity_coeff * E + sum_s coeffs[s] * B_s.
///
/// `identity_coeff` is the coefficient of the unit matrix E (one half of the
/// coefficient of B_0 = E/2). It contributes the global phase
/// e^{-i identity_coeff} and is never compiled into pulses.
struct GeneratorExpansion {
    size_t num_spins = 0;
    std::map<PauliString, double> coeffs;
    double identity_coeff = 0;

    /// Non-identity strings in basis order.
    size_t size() const {
        return coeffs.size();
    }
    /// One "<string> <coefficient>" line per term, identity first when nonzero.
    std::string str() const;
};

/// Hermitian G with exp(-i G) = u. Throws std::invalid_argument for non-unitary
/// input and std::runtime_error if the reconstruction misses by more than 10 * tol.
ComplexMatrix extract_generator(const ComplexMatrix &u, BranchConvention branch, double tol);

/// Inner-product expansion b_s = tr(G B_s) / 2^(N-2). Coefficients with
/// |b_s| < tol are dropped. Throws std::invalid_argument for non-Hermitian input
/// or if g.dim() != 2^num_spins.
GeneratorExpansion expand(const ComplexMatrix &g, size_t num_spins, double tol);

/// Inverse of expand, including the identity term.
ComplexMatrix reconstruct(const GeneratorExpansion &expansion);

}  // namespace pulsec

#endif
