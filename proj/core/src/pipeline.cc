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

#include "pulsec/pipeline.h"

#include <stdexcept>

#include "pulsec/sim.h"

namespace pulsec {

namespace {

CompileReport finish(const DecompositionPlan &plan, const ComplexMatrix *target,
                     const CompileOptions &opts) {
    ReduceOptions ro;
    ro.allow_z = opts.allow_z;
    ro.use_pseudo_cnot = opts.use_pseudo_cnot;

    CompileReport report;
    report.sequence = reduce_plan(plan, ro);
    report.exact = plan.exact;
    report.strategy = plan.strategy;
    report.global_phase = report.sequence.global_phase;
    report.op_count = report.sequence.ops.size();

    if (opts.verify && target != nullptr && plan.num_spins <= opts.max_verify_spins) {
        PhaseComparison cmp = equal_up_to_phase(*target, simulate(report.sequence), 10 * opts.tol);
        report.verification_residual = cmp.residual;
        report.verified = !plan.exact || cmp.equal;
    }
    return report;
}

}  // namespace

void CompileOptions::validate() const {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (!(drop_tol > 0)) {
        throw std::invalid_argument("drop tolerance must be positive");
    }
    if (trotter_steps < 1) {
        throw std::invalid_argument("trotter steps must be at least 1");
    }
}

CompileReport compile_unitary(const ComplexMatrix &u, const CompileOptions &opts) {
    opts.validate();
    size_t num_spins = 0;
    if (!dim_to_spins(u.dim(), num_spins) || num_spins < 1) {
        throw std::invalid_argument("matrix dimension " + std::to_string(u.dim()) +
                                    " is not 2^N for N >= 1");
    }
    if (!is_unitary(u, opts.tol)) {
        throw std::invalid_argument("input matrix is not unitary within tolerance");
    }
    ComplexMatrix g = extract_generator(u, opts.branch, opts.tol);
    GeneratorExpansion expansion = expand(g, num_spins, opts.drop_tol);
    DecompositionPlan p = plan(expansion, PlanOptions{opts.trotter_steps});
    return finish(p, &u, opts);
}

ComplexMatrix factorized_unitary(const FactorizedGenerator &fg) {
    if (fg.per_spin.empty()) {
        throw std::invalid_argument("factorized generator needs at least one spin");
    }
    ComplexMatrix g = ComplexMatrix::identity(1);
    for (const auto &[p0, px, py, pz] : fg.per_spin) {
        ComplexMatrix local{
            {Complex{p0 + pz / 2, 0}, Complex{px / 2, -py / 2}},
            {Complex{px / 2, py / 2}, Complex{p0 - pz / 2, 0}},
        };
        g = tensor(g, local);
    }
    return matrix_exp_hermitian(g);
}

CompileReport compile_factorized(const FactorizedGenerator &fg, const CompileOptions &opts) {
    opts.validate();
    DecompositionPlan p = decompose_factorized(fg);
    if (opts.verify && p.num_spins <= opts.max_verify_spins) {
        ComplexMatrix u = factorized_unitary(fg);
        return finish(p, &u, opts);
    }
    return finish(p, nullptr, opts);
}

}  // namespace pulsec
