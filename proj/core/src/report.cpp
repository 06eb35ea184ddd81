#include "cellalg/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cellalg {

namespace {

using ordered_json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

std::string kind_name(MonoidKind kind) {
    switch (kind) {
        case MonoidKind::full: return "full";
        case MonoidKind::rook: return "rook";
        case MonoidKind::partial: return "partial";
        case MonoidKind::symmetric: return "symmetric";
    }
    return "?";
}

ordered_json parts_json(const Partition& lam) {
    ordered_json a = ordered_json::array();
    for (int p : lam.parts()) a.push_back(p);
    return a;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    j["algebra"] = cfg.algebra;
    j["monoid"] = kind_name(cfg.kind);
    j["r"] = cfg.r;
    if (cfg.algebra == "schur") {
        j["n"] = cfg.n;
        j["side"] = cfg.side == Side::left ? "left" : "right";
    }
    if (cfg.characteristic >= 0) j["char"] = cfg.characteristic;
    j["ordering"] = cfg.ordering + (cfg.reversed_variant ? ":reversed" : "");
    if (!cfg.nu_parts.empty()) j["nu"] = cfg.nu_parts;
    if (!cfg.witness_kind.empty()) {
        j["kind"] = cfg.witness_kind;
        j["p"] = cfg.p;
    }
    j["jobs"] = cfg.jobs;
    return j;
}

RingSpec field_of(const RunConfig& cfg) {
    if (cfg.characteristic <= 0) return RingSpec::rationals();
    return RingSpec::gf(cfg.characteristic);
}

SubsetOrdering monoid_ordering(const RunConfig& cfg) {
    if (cfg.ordering == "default") return SubsetOrdering::all_singletons(cfg.r);
    if (cfg.ordering != "nu")
        throw std::invalid_argument("ordering must be 'default' or 'nu'");
    if (cfg.nu_parts.empty())
        throw std::invalid_argument("--ordering nu requires --nu");
    std::vector<int> parts;
    std::stringstream ss(cfg.nu_parts);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    Composition nu(parts);
    if (nu.weight() != cfg.r)
        throw std::invalid_argument("--nu must be a composition of r");
    return SubsetOrdering::with_nu(cfg.r, nu, cfg.reversed_variant);
}

struct BuiltAlgebra {
    std::unique_ptr<MonoidCells> monoid;
    std::unique_ptr<SchurAlgebra> schur;

    const CellStructure& cells() const {
        return monoid ? monoid->cs : schur->cells();
    }
};

BuiltAlgebra build_algebra(const RunConfig& cfg) {
    BuiltAlgebra out;
    if (cfg.algebra == "monoid") {
        if (cfg.r < 1 || cfg.r > cfg.monoid_rank_bound)
            throw std::invalid_argument("monoid rank exceeds the configured bound [1," +
                                        std::to_string(cfg.monoid_rank_bound) + "]");
        out.monoid = std::make_unique<MonoidCells>(monoid_cell_structure(
            {cfg.kind, cfg.r}, RingSpec::integers(), monoid_ordering(cfg)));
    } else if (cfg.algebra == "schur") {
        if (cfg.r < 1 || cfg.r > cfg.schur_rank_bound)
            throw std::invalid_argument("schur rank exceeds the configured bound [1," +
                                        std::to_string(cfg.schur_rank_bound) + "]");
        int n = cfg.n < 0 ? cfg.r : cfg.n;
        if (n < cfg.r) throw std::invalid_argument("schur requires n >= r");
        out.schur = std::make_unique<SchurAlgebra>(MonoidSpec{cfg.kind, cfg.r}, cfg.r, n,
                                                   cfg.side, cfg.reversed_variant);
    } else {
        throw std::invalid_argument("select a mode with --monoid or --schur");
    }
    return out;
}

ordered_json layers_json(const CellStructure& cs, const GramSet* grams,
                         const RingSpec* field) {
    ordered_json layers = ordered_json::array();
    std::vector<int> lz;
    if (grams && field) lz = grams->lambda_zero(*field);
    for (int li = 0; li < cs.num_layers(); ++li) {
        ordered_json layer;
        layer["lambda"] = parts_json(cs.lambdas[li]);
        layer["L_size"] = std::to_string(cs.Lsize(li));
        layer["R_size"] = std::to_string(cs.Rsize(li));
        if (grams && field) {
            layer["gram_rank"] = std::to_string(grams->report(li).rank_over(*field));
            layer["in_lambda0"] =
                std::find(lz.begin(), lz.end(), li) != lz.end();
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::string finish(ordered_json& j, clock_type::time_point t0) {
    j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         clock_type::now() - t0)
                         .count();
    return j.dump(2) + "\n";
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
    auto t0 = clock_type::now();
    CommandResult res;
    try {
        BuiltAlgebra alg = build_algebra(cfg);
        const CellStructure& cs = alg.cells();
        AxiomCheck check = verify_cell_axioms(cs);

        ordered_json j;
        j["config"] = config_json(cfg);
        j["basis_size"] = std::to_string(cs.dim());
        j["layers"] = layers_json(cs, nullptr, nullptr);
        ordered_json verdicts;
        verdicts["axioms"] = check.pass ? "pass" : "fail";
        verdicts["theorem"] = "not-applicable";
        verdicts["witnesses"] = "not-applicable";
        if (!check.pass) verdicts["counterexample"] = check.detail;
        j["verdicts"] = std::move(verdicts);
        res.body = finish(j, t0);
        res.exit_code = check.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

CommandResult cmd_lambda0(const RunConfig& cfg) {
    auto t0 = clock_type::now();
    CommandResult res;
    try {
        if (cfg.characteristic < 0)
            throw std::invalid_argument("lambda0 requires --char (0 for rationals)");
        RingSpec field = field_of(cfg);
        BuiltAlgebra alg = build_algebra(cfg);
        const CellStructure& cs = alg.cells();
        GramSet grams(cs, cfg.jobs);
        std::vector<int> lz = grams.lambda_zero(field);

        std::string theorem = "not-applicable";
        Prediction pred;
        if (cfg.algebra == "schur") {
            pred = predicted_lambda0(cfg.kind, cfg.side, field.characteristic(), cfg.r);
            if (pred.applicable) {
                std::set<std::vector<int>> got, want;
                for (int li : lz) got.insert(cs.lambdas[li].parts());
                for (const Partition& lam : pred.lambda0) want.insert(lam.parts());
                theorem = got == want ? "pass" : "fail";
            }
        }

        if (cfg.format == "csv") {
            std::ostringstream out;
            out << "lambda,L_size,R_size,gram_rank,in_lambda0\n";
            for (int li = 0; li < cs.num_layers(); ++li) {
                out << '"' << cs.lambdas[li].to_string() << '"' << ','
                    << cs.Lsize(li) << ',' << cs.Rsize(li) << ','
                    << grams.report(li).rank_over(field) << ','
                    << (std::find(lz.begin(), lz.end(), li) != lz.end() ? "true"
                                                                        : "false")
                    << '\n';
            }
            res.body = out.str();
        } else {
            ordered_json j;
            j["config"] = config_json(cfg);
            j["basis_size"] = std::to_string(cs.dim());
            j["layers"] = layers_json(cs, &grams, &field);
            ordered_json lam0 = ordered_json::array();
            for (int li : lz) lam0.push_back(parts_json(cs.lambdas[li]));
            j["lambda0"] = std::move(lam0);
            j["quasi_hereditary_sufficient"] = grams.quasi_hereditary_sufficient(field);
            if (cfg.include_gram) {
                ordered_json gram = ordered_json::array();
                for (int li = 0; li < cs.num_layers(); ++li) {
                    const GramReport& rep = grams.report(li);
                    ordered_json g;
                    g["lambda"] = parts_json(rep.lambda);
                    g["rows"] = std::to_string(rep.rows);
                    g["cols"] = std::to_string(rep.cols);
                    ordered_json entries = ordered_json::array();
                    for (const auto& row : rep.entries) {
                        ordered_json jr = ordered_json::array();
                        for (const BigInt& e : row) jr.push_back(e.get_str());
                        entries.push_back(std::move(jr));
                    }
                    g["entries"] = std::move(entries);
                    ordered_json by_field;
                    by_field[field.to_string()] = std::to_string(rep.rank_over(field));
                    g["rank_by_field"] = std::move(by_field);
                    gram.push_back(std::move(g));
                }
                j["gram"] = std::move(gram);
            }
            ordered_json verdicts;
            verdicts["axioms"] = "not-applicable";
            verdicts["theorem"] = theorem;
            verdicts["witnesses"] = "not-applicable";
            if (theorem != "not-applicable") {
                ordered_json predicted = ordered_json::array();
                for (const Partition& lam : pred.lambda0) predicted.push_back(parts_json(lam));
                j["predicted_lambda0"] = std::move(predicted);
            }
            j["verdicts"] = std::move(verdicts);
            res.body = finish(j, t0);
        }
        res.exit_code = theorem == "fail" ? 1 : 0;
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

CommandResult cmd_witness(const RunConfig& cfg) {
    auto t0 = clock_type::now();
    CommandResult res;
    try {
        WitnessKind kind = witness_kind_from_string(cfg.witness_kind);
        if ((kind == WitnessKind::right_p || kind == WitnessKind::left_p) && cfg.p < 2)
            throw std::invalid_argument("this witness kind requires --p");
        if (cfg.r < 1 || cfg.r > cfg.schur_rank_bound)
            throw std::invalid_argument("witness rank exceeds the configured bound");

        MonoidKind mk = witness_monoid(kind);
        Side side = cfg.side_set ? cfg.side : witness_side(kind);
        int characteristic = cfg.characteristic >= 0
                                 ? cfg.characteristic
                                 : (kind == WitnessKind::right_p ||
                                            kind == WitnessKind::left_p
                                        ? cfg.p
                                        : 0);
        SchurAlgebra alg({mk, cfg.r}, cfg.r, cfg.r, side, cfg.reversed_variant);

        ordered_json rows = ordered_json::array();
        bool all_agree = true;
        for (const Partition& lam : witness_admissible(kind, cfg.r, cfg.p)) {
            WitnessResult w = witness_bracket(alg, kind, lam, cfg.p, characteristic);
            all_agree = all_agree && w.agree;
            ordered_json row;
            row["lambda"] = parts_json(w.lambda);
            row["construction"] = w.construction;
            row["expected"] = w.expected.get_str();
            row["computed"] = w.computed.get_str();
            row["agree"] = w.agree;
            rows.push_back(std::move(row));
        }

        ordered_json j;
        j["config"] = config_json(cfg);
        j["basis_size"] = std::to_string(alg.dim());
        j["witnesses"] = std::move(rows);
        ordered_json verdicts;
        verdicts["axioms"] = "not-applicable";
        verdicts["theorem"] = "not-applicable";
        verdicts["witnesses"] = all_agree ? "pass" : "fail";
        j["verdicts"] = std::move(verdicts);
        res.body = finish(j, t0);
        res.exit_code = all_agree ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

CommandResult run_command(const RunConfig& cfg) {
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "lambda0") return cmd_lambda0(cfg);
    if (cfg.command == "witness") return cmd_witness(cfg);
    CommandResult res;
    res.exit_code = 2;
    res.error = "unknown command: " + cfg.command;
    return res;
}

}  // namespace cellalg
