// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "monocheck/helly.hpp"
#include "monocheck/nerve.hpp"

namespace monocheck {

// Input documents carry exact rationals as "p/q" strings; JSON numbers in a
// rational position are rejected outright.
struct MemberDocument {
    std::string id;
    BoxUnion domain;
    std::optional<Point> constant;                    // identically constant map
    std::optional<std::vector<Point>> vertex_values;  // per canonical triangulation vertex
};

struct FamilyDocument {
    int schema_version = 1;
    int ambient_dim = 0;
    std::vector<MemberDocument> members;
};

FamilyDocument parse_family_document(const nlohmann::json& doc);

// Graph construction; rejects empty domains (callers that allow the empty
// set, like the semi-monotone check, handle that case before building).
PiecewiseAffineGraph build_member(const MemberDocument& member, int ambient_dim);

Family build_family(const FamilyDocument& doc);
std::vector<std::string> member_ids(const FamilyDocument& doc);

nlohmann::json serialize_family(const Family& fam, const std::vector<std::string>& ids);

nlohmann::json witness_to_json(const FailureWitness& witness);
nlohmann::json report_header(const std::string& command);
nlohmann::json verification_report_to_json(const VerificationReport& report,
                                           const std::vector<std::string>& ids);

}  // namespace monocheck
