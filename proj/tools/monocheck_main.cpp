// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
//
// monocheck: exact verification of semi-monotone sets, monotone-map graphs
// and their Helly-type intersection property, over rational box-union
// domains and piecewise-affine maps.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "monocheck/acceptance.hpp"
#include "monocheck/io.hpp"
#include "monocheck/nerve.hpp"
#include "monocheck/parallel.hpp"
#include "monocheck/predicates.hpp"

namespace {

using monocheck::verifier_error;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTheoremViolation = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw verifier_error("cannot open input file '" + path + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& bad) {
        throw verifier_error(std::string("invalid JSON: ") + bad.what());
    }
    return doc;
}

void emit(json report, const std::chrono::steady_clock::time_point& start) {
    report["timing_ms"] = static_cast<long>(std::chrono::duration<double, std::milli>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
    std::cout << report.dump(2) << "\n";
}

int cmd_check(const std::string& kind, const std::string& path) {
    const auto start = std::chrono::steady_clock::now();
    const monocheck::FamilyDocument doc = monocheck::parse_family_document(load_json(path));
    if (doc.members.size() != 1) {
        throw verifier_error("check expects exactly one member");
    }
    const monocheck::MemberDocument& member = doc.members[0];
    json report = monocheck::report_header("check");
    report["kind"] = kind;
    report["member"] = member.id;

    monocheck::PredicateVerdict verdict;
    if (kind == "semi-monotone") {
        if (member.constant || member.vertex_values) {
            throw verifier_error("semi-monotone applies to plain sets; remove the map");
        }
        monocheck::BoxUnion domain = member.domain;
        domain.ambient_dim = doc.ambient_dim;
        verdict = monocheck::is_semi_monotone(domain);
    } else {
        const monocheck::PiecewiseAffineGraph g = monocheck::build_member(member, doc.ambient_dim);
        verdict = kind == "quasi-affine" ? monocheck::is_quasi_affine(g)
                                         : monocheck::is_monotone_graph(g);
    }
    report["verdict"] = verdict.verdict;
    if (verdict.witness) {
        report["witness"] = monocheck::witness_to_json(*verdict.witness);
    }
    emit(std::move(report), start);
    return verdict.verdict ? kExitTrue : kExitFalse;
}

int cmd_verify_helly(const std::string& path, std::optional<int> dim_clause, bool min_dim_formula,
                     std::optional<int> witness_p) {
    const auto start = std::chrono::steady_clock::now();
    const monocheck::FamilyDocument doc = monocheck::parse_family_document(load_json(path));
    const monocheck::Family fam = monocheck::build_family(doc);
    const std::vector<std::string> ids = monocheck::member_ids(doc);

    monocheck::VerificationReport rep = monocheck::check_conclusion(fam);
    if (rep.hypothesis_ok && dim_clause) {
        const monocheck::VerificationReport d = monocheck::check_dim_clause(fam, *dim_clause);
        rep.dim_clause_d = d.dim_clause_d;
        rep.dim_clause_applicable = d.dim_clause_applicable;
        rep.dim_clause_ok = d.dim_clause_ok;
        rep.theorem_violation = rep.theorem_violation || d.theorem_violation;
    }
    if (rep.hypothesis_ok && min_dim_formula) {
        const monocheck::VerificationReport m = monocheck::min_dim_formula_check(fam);
        rep.min_subfamily_dim = m.min_subfamily_dim;
        rep.min_dim_formula_ok = m.min_dim_formula_ok;
        rep.theorem_violation = rep.theorem_violation || m.theorem_violation;
    }
    if (rep.hypothesis_ok && witness_p) {
        rep.witness_set = monocheck::find_dim_witness(fam, *witness_p);
    }

    json report = monocheck::report_header("verify-helly");
    report.update(monocheck::verification_report_to_json(rep, ids));
    emit(std::move(report), start);
    if (rep.theorem_violation) {
        return kExitTheoremViolation;
    }
    return rep.hypothesis_ok ? kExitTrue : kExitFalse;
}

int cmd_generate(const std::string& kind_name, const monocheck::GenerateParams& params,
                 std::uint64_t seed) {
    const auto kind = monocheck::parse_family_kind(kind_name);
    if (!kind) {
        throw verifier_error("unknown family kind '" + kind_name + "'");
    }
    const monocheck::Family fam = monocheck::generate(*kind, params, seed);
    std::vector<std::string> ids;
    for (int i = 0; i < fam.size(); ++i) {
        ids.push_back("m" + std::to_string(i));
    }
    std::cout << monocheck::serialize_family(fam, ids).dump(2) << "\n";
    return kExitTrue;
}

int cmd_nerve(const std::string& path) {
    const auto start = std::chrono::steady_clock::now();
    const monocheck::FamilyDocument doc = monocheck::parse_family_document(load_json(path));
    const monocheck::Family fam = monocheck::build_family(doc);
    const std::vector<std::string> ids = monocheck::member_ids(doc);

    const monocheck::SimplicialComplex k = monocheck::nerve(fam);
    const monocheck::HomologyProfile profile = monocheck::homology(k);
    json report = monocheck::report_header("nerve");
    json faces = json::array();
    for (const auto& f : k.faces) {
        json face = json::array();
        for (int v : f) {
            face.push_back(ids[static_cast<std::size_t>(v)]);
        }
        faces.push_back(std::move(face));
    }
    report["faces"] = std::move(faces);
    report["betti"] = profile.betti;
    json torsion = json::array();
    for (const auto& degree : profile.torsion) {
        json t = json::array();
        for (const auto& d : degree) {
            t.push_back(d.get_str());
        }
        torsion.push_back(std::move(t));
    }
    report["torsion"] = std::move(torsion);
    report["reduced"] = profile.reduced;
    emit(std::move(report), start);
    return kExitTrue;
}

int cmd_suite(bool acceptance, std::uint64_t seed) {
    if (!acceptance) {
        throw verifier_error("suite currently offers --acceptance only");
    }
    const auto results = monocheck::run_acceptance(seed, std::cout);
    return monocheck::acceptance_passed(results) ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    monocheck::configure_workers();
    CLI::App app{"exact semi-monotone / monotone-map verifier"};
    app.require_subcommand(1);

    std::string check_kind = "monotone";
    std::string input_path;
    auto* check = app.add_subcommand("check", "check one set or map predicate");
    check->add_option("--kind", check_kind, "semi-monotone | quasi-affine | monotone")
        ->check(CLI::IsMember({"semi-monotone", "quasi-affine", "monotone"}));
    check->add_option("input", input_path, "family document with one member")->required();

    auto* verify = app.add_subcommand("verify-helly", "verify the intersection theorem on a family");
    std::optional<int> dim_clause;
    bool min_dim_formula = false;
    std::optional<int> witness_p;
    verify->add_option("input", input_path, "family document")->required();
    verify->add_option("--dim-clause", dim_clause, "verify the dimension clause for this d");
    verify->add_flag("--min-dim-formula", min_dim_formula, "verify the minimum-dimension identity");
    verify->add_option("--witness", witness_p, "find a dimension-witness subfamily for this p");

    auto* gen = app.add_subcommand("generate", "emit a generated family document");
    std::string gen_kind = "nested_boxes";
    monocheck::GenerateParams params;
    std::uint64_t seed = 1;
    gen->add_option("--kind", gen_kind,
                    "nested_boxes | random_staircase_semimonotone | random_affine_graphs | "
                    "disconnected_pair | minimal_empty_triple");
    gen->add_option("--members", params.members, "member count");
    gen->add_option("--ambient", params.ambient_dim, "ambient dimension");
    gen->add_option("--components", params.components, "components for disconnected_pair");
    gen->add_option("--boxes", params.boxes_per_member, "boxes per staircase member");
    gen->add_option("--seed", seed, "generator seed");

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve complex and homology of a family");
    nerve_cmd->add_option("input", input_path, "family document")->required();

    auto* suite = app.add_subcommand("suite", "run the verification suites");
    bool acceptance = false;
    suite->add_flag("--acceptance", acceptance, "run the acceptance matrix");
    suite->add_option("--seed", seed, "suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return cmd_check(check_kind, input_path);
        }
        if (verify->parsed()) {
            return cmd_verify_helly(input_path, dim_clause, min_dim_formula, witness_p);
        }
        if (gen->parsed()) {
            return cmd_generate(gen_kind, params, seed);
        }
        if (nerve_cmd->parsed()) {
            return cmd_nerve(input_path);
        }
        if (suite->parsed()) {
            return cmd_suite(acceptance, seed);
        }
    } catch (const monocheck::internal_inconsistency& bad) {
        std::cerr << "internal inconsistency (theorem violation): " << bad.what() << "\n";
        return kExitTheoremViolation;
    } catch (const verifier_error& bad) {
        std::cerr << "error: " << bad.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& bad) {
        std::cerr << "error: " << bad.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
