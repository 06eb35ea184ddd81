#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cellalg/report.hpp"

namespace {

using cellalg::MonoidKind;
using cellalg::RunConfig;

MonoidKind parse_kind(const std::string& s) {
    if (s == "full") return MonoidKind::full;
    if (s == "rook") return MonoidKind::rook;
    if (s == "partial") return MonoidKind::partial;
    if (s == "symmetric") return MonoidKind::symmetric;
    throw CLI::ValidationError("monoid kind must be full|rook|partial|symmetric");
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& monoid_kind,
                std::string& schur_kind, std::string& side, std::string& variant) {
    cmd->add_option("--monoid", monoid_kind,
                    "monoid-algebra mode on the given kind (full|rook|partial|symmetric)");
    cmd->add_option("--schur", schur_kind, "generalized Schur mode on the given kind");
    cmd->add_option("--r", cfg.r, "rank r")->required();
    cmd->add_option("--n", cfg.n, "number of composition parts (schur, default r)");
    cmd->add_option("--side", side, "left|right (schur)");
    cmd->add_option("--char", cfg.characteristic,
                    "field characteristic, 0 for the rationals");
    cmd->add_option("--ordering", cfg.ordering, "subset ordering: default|nu");
    cmd->add_option("--nu", cfg.nu_parts, "composition for the nu ordering, e.g. 3,0,0");
    cmd->add_option("--ordering-variant", variant,
                    "standard|reversed compatible subset order");
    cmd->add_option("--jobs", cfg.jobs, "parallel workers for per-layer work");
    cmd->add_option("--max-rank", cfg.monoid_rank_bound,
                    "size guard: reject ranks above this bound");
    cmd->add_option("--format", cfg.format, "json|csv");
    cmd->add_option("--output", cfg.output,
                    "output path (relative paths land in $CELLALG_OUTPUT_DIR)");
}

int finish_config(RunConfig& cfg, const std::string& monoid_kind,
                  const std::string& schur_kind, const std::string& side,
                  const std::string& variant) {
    if (!monoid_kind.empty() && !schur_kind.empty()) {
        std::cerr << "error: choose one of --monoid or --schur\n";
        return 2;
    }
    if (!monoid_kind.empty()) {
        cfg.algebra = "monoid";
        cfg.kind = parse_kind(monoid_kind);
    } else if (!schur_kind.empty()) {
        cfg.algebra = "schur";
        cfg.kind = parse_kind(schur_kind);
    } else if (cfg.command != "witness") {
        std::cerr << "error: choose a mode with --monoid or --schur\n";
        return 2;
    }
    if (!side.empty()) {
        if (side != "left" && side != "right") {
            std::cerr << "error: --side must be left or right\n";
            return 2;
        }
        cfg.side = side == "left" ? cellalg::Side::left : cellalg::Side::right;
        cfg.side_set = true;
    }
    if (!variant.empty()) {
        if (variant != "standard" && variant != "reversed") {
            std::cerr << "error: --ordering-variant must be standard or reversed\n";
            return 2;
        }
        cfg.reversed_variant = variant == "reversed";
    }
    if (cfg.n < 0) cfg.n = cfg.r;
    if (cfg.monoid_rank_bound < 1) {
        std::cerr << "error: --max-rank must be positive\n";
        return 2;
    }
    cfg.schur_rank_bound = std::min(cfg.monoid_rank_bound, 4);
    return -1;
}

int emit(const cellalg::CommandResult& res, const RunConfig& cfg) {
    if (res.exit_code == 2) {
        std::cerr << "error: " << res.error << "\n";
        return 2;
    }
    if (cfg.output.empty()) {
        std::cout << res.body;
    } else {
        std::filesystem::path path(cfg.output);
        if (path.is_relative())
            if (const char* dir = std::getenv("CELLALG_OUTPUT_DIR"))
                path = std::filesystem::path(dir) / path;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open " << path << " for writing\n";
            return 2;
        }
        out << res.body;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cell structures on transformation-monoid and generalized Schur algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string monoid_kind, schur_kind, side, variant;

    CLI::App* verify = app.add_subcommand("verify", "verify the cell axioms exhaustively");
    add_common(verify, cfg, monoid_kind, schur_kind, side, variant);

    CLI::App* lambda0 = app.add_subcommand(
        "lambda0", "Gram matrices, lambda0 membership and irreducible dimensions");
    add_common(lambda0, cfg, monoid_kind, schur_kind, side, variant);
    lambda0->add_flag("--gram", cfg.include_gram, "include the integer Gram matrices");

    CLI::App* witness = app.add_subcommand(
        "witness", "bracket witnesses rebuilt from the classification arguments");
    add_common(witness, cfg, monoid_kind, schur_kind, side, variant);
    witness->add_option("--kind", cfg.witness_kind,
                        "char0-full|right-p|left-top|left-p|rook")
        ->required();
    witness->add_option("--p", cfg.p, "prime for the modular witness kinds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    int early = finish_config(cfg, monoid_kind, schur_kind, side, variant);
    if (early >= 0) return early;

    cellalg::CommandResult res = cellalg::run_command(cfg);
    return emit(res, cfg);
}
