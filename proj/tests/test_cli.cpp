#include <regex>

#include "cellalg/report.hpp"
#include "doctest.h"

using namespace cellalg;

namespace {

RunConfig base(std::string command, std::string algebra, MonoidKind kind, int r) {
    RunConfig cfg;
    cfg.command = std::move(command);
    cfg.algebra = std::move(algebra);
    cfg.kind = kind;
    cfg.r = r;
    cfg.n = r;
    return cfg;
}

std::string strip_timing(const std::string& body) {
    return std::regex_replace(body, std::regex("\"timing_ms\": \\d+"), "\"timing_ms\": X");
}

}  // namespace

TEST_CASE("cmd_verify") {
    RunConfig cfg = base("verify", "monoid", MonoidKind::full, 3);
    CommandResult res = cmd_verify(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.body.find("\"axioms\": \"pass\"") != std::string::npos);

    RunConfig schur = base("verify", "schur", MonoidKind::full, 2);
    schur.side = Side::left;
    schur.side_set = true;
    CHECK(cmd_verify(schur).exit_code == 0);

    RunConfig big = base("verify", "monoid", MonoidKind::full, 99);
    CommandResult bounds = cmd_verify(big);
    CHECK(bounds.exit_code == 2);
    CHECK(bounds.error.find("bound") != std::string::npos);
}

TEST_CASE("cmd_lambda0 theorem reproduction") {
    RunConfig cfg = base("lambda0", "schur", MonoidKind::full, 3);
    cfg.side = Side::right;
    cfg.side_set = true;
    cfg.characteristic = 2;
    CommandResult res = cmd_lambda0(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.body.find("\"theorem\": \"pass\"") != std::string::npos);

    RunConfig rook = base("lambda0", "schur", MonoidKind::rook, 2);
    rook.side = Side::left;
    rook.side_set = true;
    rook.characteristic = 0;
    CommandResult rres = cmd_lambda0(rook);
    CHECK(rres.exit_code == 0);
    CHECK(rres.body.find("\"quasi_hereditary_sufficient\": true") != std::string::npos);

    RunConfig mono = base("lambda0", "monoid", MonoidKind::full, 2);
    mono.characteristic = 2;
    CommandResult mres = cmd_lambda0(mono);
    CHECK(mres.exit_code == 0);
    // lambda0 = {(1), (1,1)}: the (2) layer drops over GF(2)
    CHECK(mres.body.find("\"theorem\": \"not-applicable\"") != std::string::npos);
    CHECK(strip_timing(mres.body).find("\"lambda0\": [\n    [\n      1\n    ],\n    [\n      1,\n      1\n    ]\n  ]") != std::string::npos);

    // requires a field
    RunConfig nochar = base("lambda0", "monoid", MonoidKind::full, 2);
    CHECK(cmd_lambda0(nochar).exit_code == 2);
}

TEST_CASE("cmd_witness") {
    RunConfig cfg = base("witness", "schur", MonoidKind::full, 3);
    cfg.witness_kind = "char0-full";
    CommandResult res = cmd_witness(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.body.find("\"witnesses\": \"pass\"") != std::string::npos);
    // six admissible layers at r = 3, one witness row each
    std::size_t rows = 0;
    for (std::size_t pos = res.body.find("\"construction\""); pos != std::string::npos;
         pos = res.body.find("\"construction\"", pos + 1))
        ++rows;
    CHECK(rows == 6);

    RunConfig rook = base("witness", "schur", MonoidKind::rook, 3);
    rook.witness_kind = "rook";
    rook.characteristic = 3;
    CHECK(cmd_witness(rook).exit_code == 0);

    RunConfig rp = base("witness", "schur", MonoidKind::full, 4);
    rp.witness_kind = "right-p";
    rp.p = 2;
    CHECK(cmd_witness(rp).exit_code == 0);

    RunConfig missing = base("witness", "schur", MonoidKind::full, 3);
    missing.witness_kind = "right-p";  // no --p
    CHECK(cmd_witness(missing).exit_code == 2);

    RunConfig unknown = base("witness", "schur", MonoidKind::full, 3);
    unknown.witness_kind = "nope";
    CHECK(cmd_witness(unknown).exit_code == 2);
}

TEST_CASE("deterministic output across parallelism") {
    RunConfig cfg = base("lambda0", "schur", MonoidKind::full, 3);
    cfg.side = Side::left;
    cfg.side_set = true;
    cfg.characteristic = 0;
    CommandResult one = cmd_lambda0(cfg);
    cfg.jobs = 4;
    CommandResult four = cmd_lambda0(cfg);
    // jobs is echoed in the config block; normalize it away with the timing
    auto norm = [](std::string s) {
        s = strip_timing(s);
        return std::regex_replace(s, std::regex("\"jobs\": \\d+"), "\"jobs\": J");
    };
    CHECK(norm(one.body) == norm(four.body));
}

TEST_CASE("csv format") {
    RunConfig cfg = base("lambda0", "monoid", MonoidKind::full, 2);
    cfg.characteristic = 0;
    cfg.format = "csv";
    CommandResult res = cmd_lambda0(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.body.find("lambda,L_size,R_size,gram_rank,in_lambda0") == 0);
    CHECK(res.body.find("\"(1,1)\",1,1,1,true") != std::string::npos);
}

TEST_CASE("ordering selector") {
    RunConfig cfg = base("verify", "monoid", MonoidKind::full, 3);
    cfg.ordering = "nu";
    cfg.nu_parts = "3,0,0";
    CHECK(cmd_verify(cfg).exit_code == 0);

    RunConfig badnu = base("verify", "monoid", MonoidKind::full, 3);
    badnu.ordering = "nu";
    CHECK(cmd_verify(badnu).exit_code == 2);
}

TEST_CASE("gram matrices in the lambda0 report") {
    RunConfig cfg = base("lambda0", "monoid", MonoidKind::full, 2);
    cfg.characteristic = 2;
    cfg.include_gram = true;
    CommandResult res = cmd_lambda0(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.body.find("\"gram\"") != std::string::npos);
    CHECK(res.body.find("\"rank_by_field\"") != std::string::npos);
    // the (2) layer bracket is the decimal string "2" with rank 0 over GF(2)
    CHECK(res.body.find("\"2\"") != std::string::npos);
}
