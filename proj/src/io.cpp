// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/io.hpp"

namespace monocheck {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw verifier_error("rationals must be exact p/q strings (" + where + ")");
    }
    auto q = parse_rational(j.get<std::string>());
    if (!q) {
        throw verifier_error("malformed rational '" + j.get<std::string>() + "' (" + where + ")");
    }
    return *q;
}

Point parse_tuple(const json& j, const std::string& where) {
    if (!j.is_array()) {
        throw verifier_error("expected an array of rationals (" + where + ")");
    }
    Point p;
    for (const auto& v : j) {
        p.push_back(parse_rational_field(v, where));
    }
    return p;
}

}  // namespace

FamilyDocument parse_family_document(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw verifier_error("document root must be an object");
    }
    FamilyDocument out;
    out.schema_version = doc.value("schema_version", 1);
    if (out.schema_version != 1) {
        throw verifier_error("unsupported schema_version");
    }
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer()) {
        throw verifier_error("ambient_dim (integer) is required");
    }
    out.ambient_dim = doc["ambient_dim"].get<int>();
    if (out.ambient_dim < 1) {
        throw verifier_error("ambient_dim must be positive");
    }
    if (!doc.contains("members") || !doc["members"].is_array() || doc["members"].empty()) {
        throw verifier_error("members (nonempty array) is required");
    }
    int counter = 0;
    for (const auto& m : doc["members"]) {
        MemberDocument member;
        member.id = m.value("id", "m" + std::to_string(counter));
        ++counter;
        if (!m.contains("domain") || !m["domain"].is_array()) {
            throw verifier_error("member '" + member.id + "': domain (array of boxes) is required");
        }
        int domain_dim = -1;
        for (const auto& bj : m["domain"]) {
            if (!bj.is_array() || bj.empty()) {
                throw verifier_error("member '" + member.id + "': box must be a nonempty array");
            }
            Box box;
            for (const auto& iv : bj) {
                if (!iv.is_array() || iv.size() != 2) {
                    throw verifier_error("member '" + member.id + "': interval must be [lo, hi]");
                }
                const Rational lo = parse_rational_field(iv[0], "member " + member.id);
                const Rational hi = parse_rational_field(iv[1], "member " + member.id);
                if (!(lo < hi)) {
                    throw verifier_error("member '" + member.id +
                                         "': degenerate or unbounded interval (lo < hi required)");
                }
                box.intervals.emplace_back(lo, hi);
            }
            if (domain_dim < 0) {
                domain_dim = box.dim();
            } else if (domain_dim != box.dim()) {
                throw verifier_error("member '" + member.id + "': boxes of mixed dimension");
            }
            member.domain.boxes.push_back(std::move(box));
        }
        member.domain.ambient_dim = std::max(domain_dim, 0);
        if (m.contains("map")) {
            const auto& mp = m["map"];
            if (!mp.is_object()) {
                throw verifier_error("member '" + member.id + "': map must be an object");
            }
            if (mp.contains("constant")) {
                member.constant = parse_tuple(mp["constant"], "member " + member.id + " constant");
            } else if (mp.contains("vertex_values")) {
                std::vector<Point> values;
                for (const auto& v : mp["vertex_values"]) {
                    values.push_back(parse_tuple(v, "member " + member.id + " vertex_values"));
                }
                member.vertex_values = std::move(values);
            } else {
                throw verifier_error("member '" + member.id +
                                     "': map requires constant or vertex_values");
            }
        }
        out.members.push_back(std::move(member));
    }
    return out;
}

PiecewiseAffineGraph build_member(const MemberDocument& member, int ambient_dim) {
    if (member.domain.empty()) {
        throw verifier_error("member '" + member.id + "': empty domain");
    }
    PiecewiseAffineGraph g;
    if (member.vertex_values) {
        g = PiecewiseAffineGraph::from_vertex_values(member.domain, *member.vertex_values);
    } else if (member.constant) {
        g = PiecewiseAffineGraph::constant(member.domain, *member.constant);
    } else {
        g = PiecewiseAffineGraph::constant(member.domain, {});
    }
    if (g.ambient_dim() != ambient_dim) {
        throw verifier_error("member '" + member.id + "': domain dimension plus map arity (" +
                             std::to_string(g.ambient_dim()) + ") must equal ambient_dim (" +
                             std::to_string(ambient_dim) + ")");
    }
    if (!check_continuity(g)) {
        throw verifier_error("member '" + member.id + "': map is discontinuous");
    }
    return g;
}

Family build_family(const FamilyDocument& doc) {
    std::vector<PiecewiseAffineGraph> members;
    members.reserve(doc.members.size());
    for (const auto& m : doc.members) {
        members.push_back(build_member(m, doc.ambient_dim));
    }
    return Family(doc.ambient_dim, std::move(members));
}

std::vector<std::string> member_ids(const FamilyDocument& doc) {
    std::vector<std::string> ids;
    ids.reserve(doc.members.size());
    for (const auto& m : doc.members) {
        ids.push_back(m.id);
    }
    return ids;
}

nlohmann::json serialize_family(const Family& fam, const std::vector<std::string>& ids) {
    json doc;
    doc["schema_version"] = 1;
    doc["ambient_dim"] = fam.ambient_dim();
    json members = json::array();
    for (int i = 0; i < fam.size(); ++i) {
        const PiecewiseAffineGraph& g = fam.member(i);
        json m;
        m["id"] = static_cast<std::size_t>(i) < ids.size() ? ids[static_cast<std::size_t>(i)]
                                                           : "m" + std::to_string(i);
        json domain = json::array();
        for (const auto& box : g.domain.boxes) {
            json bj = json::array();
            for (const auto& [lo, hi] : box.intervals) {
                bj.push_back({rational_to_string(lo), rational_to_string(hi)});
            }
            domain.push_back(std::move(bj));
        }
        m["domain"] = std::move(domain);
        if (g.range_dim > 0) {
            json mp;
            if (g.constant_tag) {
                json tuple = json::array();
                for (const auto& v : *g.constant_tag) {
                    tuple.push_back(rational_to_string(v));
                }
                mp["constant"] = std::move(tuple);
            } else {
                json values = json::array();
                for (std::size_t v = 0; v < g.tri.vertices.size(); ++v) {
                    const Point y = g.value_at_vertex(static_cast<int>(v));
                    json tuple = json::array();
                    for (const auto& c : y) {
                        tuple.push_back(rational_to_string(c));
                    }
                    values.push_back(std::move(tuple));
                }
                mp["vertex_values"] = std::move(values);
            }
            m["map"] = std::move(mp);
        }
        members.push_back(std::move(m));
    }
    doc["members"] = std::move(members);
    return doc;
}

nlohmann::json witness_to_json(const FailureWitness& witness) {
    json w;
    w["description"] = witness.describe();
    switch (witness.kind) {
        case FailureWitness::Kind::ConeDisconnected:
        case FailureWitness::Kind::SubspaceDisconnected: {
            w["kind"] = witness.kind == FailureWitness::Kind::ConeDisconnected
                            ? "cone_disconnected"
                            : "subspace_disconnected";
            json conditions = json::array();
            for (const auto& c : witness.cone.conditions) {
                json cond;
                cond["coord"] = c.coord;
                cond["rel"] = c.sign == Sign::LT ? "<" : (c.sign == Sign::EQ ? "=" : ">");
                cond["threshold"] = rational_to_string(c.threshold);
                conditions.push_back(std::move(cond));
            }
            w["cone"] = std::move(conditions);
            w["components"] = witness.component_count;
            break;
        }
        case FailureWitness::Kind::QuasiAffineMismatch:
            w["kind"] = "quasi_affine_mismatch";
            w["subspace"] = witness.subspace;
            w["injective"] = witness.injective;
            w["image_dim"] = witness.image_dim;
            w["required_dim"] = witness.required_dim;
            break;
        case FailureWitness::Kind::NotAGraph:
            w["kind"] = "not_a_graph";
            break;
        case FailureWitness::Kind::NotOpen:
            w["kind"] = "not_open";
            break;
        case FailureWitness::Kind::Empty:
            w["kind"] = "empty";
            break;
    }
    return w;
}

nlohmann::json report_header(const std::string& command) {
    json r;
    r["tool"] = "monocheck";
    r["version"] = "0.1.0";
    r["command"] = command;
    return r;
}

nlohmann::json verification_report_to_json(const VerificationReport& report,
                                           const std::vector<std::string>& ids) {
    json r;
    auto id_list = [&](const std::vector<int>& j) {
        json out = json::array();
        for (int i : j) {
            out.push_back(static_cast<std::size_t>(i) < ids.size()
                              ? ids[static_cast<std::size_t>(i)]
                              : std::to_string(i));
        }
        return out;
    };
    json records = json::array();
    for (const auto& rec : report.records) {
        json rj;
        rj["J"] = id_list(rec.indices);
        rj["nonempty"] = rec.nonempty;
        rj["monotone"] = rec.monotone;
        rj["dim"] = rec.dim;
        if (rec.witness) {
            rj["witness"] = witness_to_json(*rec.witness);
        }
        records.push_back(std::move(rj));
    }
    r["records"] = std::move(records);
    r["hypothesis_ok"] = report.hypothesis_ok;
    if (report.counterexample) {
        r["counterexample"] = id_list(*report.counterexample);
    }
    if (report.conclusion_ok) {
        r["conclusion_ok"] = *report.conclusion_ok;
    }
    if (report.full_dim) {
        r["dim"] = *report.full_dim;
    }
    if (report.dim_clause_d) {
        json d;
        d["d"] = *report.dim_clause_d;
        if (report.dim_clause_applicable) {
            d["applicable"] = *report.dim_clause_applicable;
        }
        if (report.dim_clause_ok) {
            d["ok"] = *report.dim_clause_ok;
        }
        r["dim_clause"] = std::move(d);
    }
    if (report.min_dim_formula_ok) {
        json m;
        m["ok"] = *report.min_dim_formula_ok;
        m["min_subfamily_dim"] = *report.min_subfamily_dim;
        r["min_dim_formula"] = std::move(m);
    }
    if (report.witness_set) {
        r["witness_set"] = id_list(*report.witness_set);
    }
    r["theorem_violation"] = report.theorem_violation;
    return r;
}

}  // namespace monocheck
