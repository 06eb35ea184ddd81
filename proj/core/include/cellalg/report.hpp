#pragma once

#include <optional>
#include <string>

#include "cellalg/monoid_cells.hpp"
#include "cellalg/schur.hpp"
#include "cellalg/theory.hpp"

namespace cellalg {

// Parsed command-line configuration; carries everything the three commands
// need to build an algebra and emit a report.
struct RunConfig {
    std::string command;            // verify | lambda0 | witness
    std::string algebra = "monoid";  // monoid | schur
    MonoidKind kind = MonoidKind::full;
    int r = 2;
    int n = -1;  // schur only; defaults to r
    Side side = Side::left;
    bool side_set = false;
    int characteristic = -1;  // -1 unset, 0 rationals, p prime field
    std::string ordering = "default";  // default | nu
    std::string nu_parts;              // comma separated, for the nu ordering
    bool reversed_variant = false;     // alternative compatible subset order
    std::string witness_kind;
    int p = 0;
    int jobs = 1;
    bool include_gram = false;    // emit full Gram matrices in the lambda0 report
    std::string format = "json";  // json | csv
    std::string output;           // file path; empty writes to stdout

    int monoid_rank_bound = 4;
    int schur_rank_bound = 4;
};

struct CommandResult {
    int exit_code = 0;   // 0 pass/match, 1 falsified check, 2 usage/bounds
    std::string body;    // report payload
    std::string error;   // usage error text when exit_code == 2
};

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_lambda0(const RunConfig& cfg);
CommandResult cmd_witness(const RunConfig& cfg);

// dispatch on cfg.command
CommandResult run_command(const RunConfig& cfg);

}  // namespace cellalg
