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

// pulsec command-line front end.
//
//   pulsec compile  (--gate NAME [gate params] | --matrix FILE) [options]
//   pulsec expand   (--gate NAME [gate params] | --matrix FILE) [--branch B]
//   pulsec simulate SEQUENCE_FILE
//   pulsec verify   SEQUENCE_FILE (--gate NAME [gate params] | --matrix FILE)
//
// Exit status: 0 exact and verified, 2 approximate, 3 verification failure or
// mismatch, 1 any other error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pulsec/gates.h"
#include "pulsec/generator.h"
#include "pulsec/io.h"
#include "pulsec/pipeline.h"
#include "pulsec/sim.h"

namespace {

using namespace pulsec;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitApproximate = 2;
constexpr int kExitMismatch = 3;

constexpr size_t kMaxSimulateSpins = 6;
constexpr size_t kMaxCompileSpins = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where the target unitary comes from.
struct TargetArgs {
    std::string gate;
    std::string matrix_file;
    size_t spins = 0;
    std::vector<size_t> controls;
    size_t target = 0;
    std::vector<size_t> pair;
    double phase = 0;
    std::vector<uint64_t> marked;
};

struct Args {
    TargetArgs target;
    std::string sequence_file;
    std::string branch = "lower";
    bool allow_z = false;
    bool full_cnot = false;
    int trotter_steps = 64;
    double tol = 1e-9;
    bool no_verify = false;
    std::string format = "text";
    std::string out;
};

void add_target_options(CLI::App *cmd, TargetArgs &t) {
    auto *gate = cmd->add_option("--gate", t.gate, "Named gate")
                     ->check(CLI::IsMember(gate_names()));
    auto *matrix = cmd->add_option("--matrix", t.matrix_file, "Matrix file")
                       ->check(CLI::ExistingFile);
    gate->excludes(matrix);
    cmd->add_option("--spins", t.spins, "Spin count for --gate")->check(CLI::Range(1, 16));
    cmd->add_option("--control", t.controls, "Control spin (cnot: 1, toffoli: 2)")
        ->take_all();
    cmd->add_option("--target", t.target, "Target spin");
    cmd->add_option("--pair", t.pair, "Spin pair i,j for swap and cphase")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--phase", t.phase, "cphase angle in radians");
    cmd->add_option("--marked", t.marked, "fphase: comma-separated basis indices")
        ->delimiter(',');
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

GateSpec gate_spec(const TargetArgs &t) {
    GateSpec spec;
    spec.name = t.gate;
    spec.phase = t.phase;
    spec.marked = t.marked;
    size_t roles = 2;
    if (t.gate == "cnot" || t.gate == "toffoli") {
        if (!t.pair.empty()) {
            throw UsageError("--pair does not apply to " + t.gate);
        }
        size_t want = t.gate == "cnot" ? 1 : 2;
        roles = want + 1;
        if (!t.controls.empty() && t.controls.size() != want) {
            throw UsageError(t.gate + " takes " + std::to_string(want) + " --control value(s)");
        }
        std::vector<size_t> defaults{1, 2, 3};
        for (size_t k = 0; k < want; k++) {
            spec.spins.push_back(t.controls.empty() ? defaults[k] : t.controls[k]);
        }
        spec.spins.push_back(t.target ? t.target : defaults[want]);
    } else if (t.gate == "swap" || t.gate == "cphase") {
        if (!t.controls.empty() || t.target) {
            throw UsageError("use --pair i,j for " + t.gate);
        }
        spec.spins = t.pair.empty() ? std::vector<size_t>{1, 2} : t.pair;
    } else {
        if (!t.controls.empty() || t.target || !t.pair.empty()) {
            throw UsageError("fphase takes --marked, not spin indices");
        }
        roles = 1;
    }
    if (t.gate != "cphase" && t.phase != 0) {
        throw UsageError("--phase applies to cphase only");
    }
    if (t.gate != "fphase" && !t.marked.empty()) {
        throw UsageError("--marked applies to fphase only");
    }

    size_t needed = roles;
    for (size_t s : spec.spins) {
        needed = std::max(needed, s);
    }
    for (uint64_t m : t.marked) {
        while (needed < 64 && (uint64_t{1} << needed) <= m) {
            needed++;
        }
    }
    spec.num_spins = t.spins ? t.spins : needed;
    return spec;
}

ComplexMatrix load_target(const TargetArgs &t) {
    if (!t.matrix_file.empty()) {
        if (t.spins || !t.controls.empty() || t.target || !t.pair.empty() || t.phase != 0 ||
            !t.marked.empty()) {
            throw UsageError("gate parameters cannot be combined with --matrix");
        }
        return parse_matrix(read_file(t.matrix_file));
    }
    if (t.gate.empty()) {
        throw UsageError("one of --gate or --matrix is required");
    }
    return build(gate_spec(t));
}

size_t spins_of(const ComplexMatrix &m) {
    size_t n = 0;
    dim_to_spins(m.dim(), n);
    return n;
}

BranchConvention parse_branch(const std::string &b) {
    return b == "upper" ? BranchConvention::kPrincipalUpper : BranchConvention::kPrincipalLower;
}

void warn(const std::string &msg) {
    std::cerr << "pulsec: warning: " << msg << "\n";
}

void check_compile_size(size_t n) {
    if (n > kMaxCompileSpins) {
        throw UsageError(std::to_string(n) + " spins exceeds the compile limit of " +
                         std::to_string(kMaxCompileSpins));
    }
    if (n > kMaxSimulateSpins) {
        warn("basis expansion has 4^" + std::to_string(n) +
             " terms; verification is skipped above " + std::to_string(kMaxSimulateSpins) +
             " spins");
    }
}

void check_simulate_size(size_t n) {
    if (n > kMaxSimulateSpins) {
        throw UsageError(std::to_string(n) + " spins exceeds the simulation limit of " +
                         std::to_string(kMaxSimulateSpins));
    }
}

int cmd_compile(const Args &a) {
    ComplexMatrix u = load_target(a.target);
    check_compile_size(spins_of(u));
    CompileOptions opts;
    opts.branch = parse_branch(a.branch);
    opts.allow_z = a.allow_z;
    opts.use_pseudo_cnot = !a.full_cnot;
    opts.trotter_steps = a.trotter_steps;
    opts.tol = a.tol;
    opts.verify = !a.no_verify;
    opts.max_verify_spins = kMaxSimulateSpins;
    CompileReport r = compile_unitary(u, opts);

    write_output(a.out, a.format == "json" ? format_sequence_json(r.sequence)
                                           : format_sequence(r.sequence));

    std::cerr << "strategy " << strategy_name(r.strategy) << ", " << r.op_count << " ops, "
              << (r.exact ? "exact" : "approximate");
    if (r.verification_residual) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", *r.verification_residual);
        std::cerr << ", residual " << buf;
    }
    std::cerr << "\n";
    if (!r.verified) {
        std::cerr << "pulsec: error: compiled sequence does not reproduce the target\n";
        return kExitMismatch;
    }
    if (!r.exact) {
        warn("generator terms do not commute; result is a " + std::to_string(r.sequence.ops.size()) +
             "-op product-formula approximation");
        return kExitApproximate;
    }
    return kExitOk;
}

int cmd_expand(const Args &a) {
    ComplexMatrix u = load_target(a.target);
    size_t n = spins_of(u);
    check_compile_size(n);
    if (!is_unitary(u, a.tol)) {
        throw std::invalid_argument("input matrix is not unitary within tolerance");
    }
    ComplexMatrix g = extract_generator(u, parse_branch(a.branch), a.tol);
    write_output(a.out, format_expansion(expand(g, n, CompileOptions{}.drop_tol)));
    return kExitOk;
}

PulseSequence load_sequence(const std::string &path) {
    PulseSequence seq = parse_sequence(read_file(path));
    check_simulate_size(seq.num_spins);
    return seq;
}

int cmd_simulate(const Args &a) {
    write_output(a.out, format_matrix(simulate(load_sequence(a.sequence_file))));
    return kExitOk;
}

int cmd_verify(const Args &a) {
    PulseSequence seq = load_sequence(a.sequence_file);
    ComplexMatrix u = load_target(a.target);
    if (spins_of(u) != seq.num_spins) {
        throw UsageError("sequence has " + std::to_string(seq.num_spins) +
                         " spins but the target has " + std::to_string(spins_of(u)));
    }
    PhaseComparison cmp = equal_up_to_phase(u, simulate(seq), 10 * a.tol);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "residual %.3e\nphase %.15g\n", cmp.residual, cmp.phase);
    write_output(a.out, buf);
    if (!cmp.equal) {
        std::cerr << "pulsec: sequence does not match the target up to global phase\n";
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compile unitaries into NMR pulse sequences"};
    app.name("pulsec");
    app.require_subcommand(1);
    Args args;

    auto *compile = app.add_subcommand("compile", "Compile a gate or matrix into a pulse sequence");
    add_target_options(compile, args.target);
    compile->add_option("--branch", args.branch, "Eigenphase branch")
        ->check(CLI::IsMember({"lower", "upper"}));
    compile->add_flag("--allow-z", args.allow_z, "Keep z rotations");
    compile->add_flag("--full-cnot", args.full_cnot, "Use full c-NOT sandwiches");
    compile->add_option("--trotter-steps", args.trotter_steps, "Product-formula steps")
        ->check(CLI::PositiveNumber);
    compile->add_option("--tol", args.tol, "Tolerance")->check(CLI::PositiveNumber);
    compile->add_flag("--no-verify", args.no_verify, "Skip simulation check");
    compile->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    compile->add_option("--out", args.out, "Output file (default stdout)");

    auto *expand_cmd = app.add_subcommand("expand", "Print the generator expansion");
    add_target_options(expand_cmd, args.target);
    expand_cmd->add_option("--branch", args.branch, "Eigenphase branch")
        ->check(CLI::IsMember({"lower", "upper"}));
    expand_cmd->add_option("--tol", args.tol, "Tolerance")->check(CLI::PositiveNumber);
    expand_cmd->add_option("--out", args.out, "Output file (default stdout)");

    auto *simulate_cmd = app.add_subcommand("simulate", "Print the matrix of a sequence file");
    simulate_cmd->add_option("sequence", args.sequence_file, "Sequence file")
        ->required()
        ->check(CLI::ExistingFile);
    simulate_cmd->add_option("--out", args.out, "Output file (default stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Check a sequence file against a target");
    verify_cmd->add_option("sequence", args.sequence_file, "Sequence file")
        ->required()
        ->check(CLI::ExistingFile);
    add_target_options(verify_cmd, args.target);
    verify_cmd->add_option("--tol", args.tol, "Tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", args.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*compile) {
            return cmd_compile(args);
        }
        if (*expand_cmd) {
            return cmd_expand(args);
        }
        if (*simulate_cmd) {
            return cmd_simulate(args);
        }
        return cmd_verify(args);
    } catch (const std::exception &e) {
        std::cerr << "pulsec: error: " << e.what() << "\n";
        return kExitError;
    }
}
