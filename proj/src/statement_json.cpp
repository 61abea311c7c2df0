// Copyright 2026 The qtruth Authors
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

#include <string_view>

#include "qtruth/statement.hpp"

namespace qtruth {

namespace {

using nlohmann::json;

struct OpName {
    std::string_view name;
    Statement::Kind kind;
};

constexpr OpName kOps[] = {
    {"elem", Statement::Kind::elementary},    {"not", Statement::Kind::negation},
    {"and", Statement::Kind::conjunction},    {"or", Statement::Kind::disjunction},
    {"xor", Statement::Kind::exclusive_or},   {"implies", Statement::Kind::implication},
    {"iff", Statement::Kind::equivalence},    {"coarse", Statement::Kind::coarse},
};

Statement::Kind kind_of(std::string_view name) {
    for (const auto &op : kOps) {
        if (op.name == name) {
            return op.kind;
        }
    }
    throw RangeError("unknown statement op '" + std::string(name) + "'");
}

std::string_view name_of(Statement::Kind kind) {
    for (const auto &op : kOps) {
        if (op.kind == kind) {
            return op.name;
        }
    }
    throw RangeError("unnamed statement kind");
}

const TruthOperator &lookup(const ProjectorRegistry &registry, const json &j) {
    if (!j.contains("name") || !j.at("name").is_string()) {
        throw RangeError("elementary statement needs a string 'name'");
    }
    const auto name = j.at("name").get<std::string>();
    const auto it = registry.find(name);
    if (it == registry.end()) {
        throw RangeError("unknown projector '" + name + "'");
    }
    return it->second;
}

const json &args_of(const json &j, std::size_t expected) {
    if (!j.contains("args") || !j.at("args").is_array()) {
        throw RangeError("connective needs an 'args' array");
    }
    const json &args = j.at("args");
    if (expected != 0 && args.size() != expected) {
        throw RangeError("connective '" + j.at("op").get<std::string>() + "' expects " +
                         std::to_string(expected) + " args");
    }
    return args;
}

} // namespace

Statement statement_from_json(const json &j, const ProjectorRegistry &registry, const Tolerances &tol) {
    if (!j.is_object() || !j.contains("op") || !j.at("op").is_string()) {
        throw RangeError("statement node must be an object with a string 'op'");
    }
    const auto kind = kind_of(j.at("op").get<std::string>());
    switch (kind) {
    case Statement::Kind::elementary:
        return Statement::elementary(j.at("name").get<std::string>(), lookup(registry, j));
    case Statement::Kind::coarse: {
        const json &args = args_of(j, 0);
        std::vector<TruthOperator> projs;
        std::vector<std::string> labels;
        for (const auto &a : args) {
            if (!a.is_object() || a.value("op", "") != "elem") {
                throw RangeError("coarse interval args must be elementary statements");
            }
            projs.push_back(lookup(registry, a));
            labels.push_back(a.at("name").get<std::string>());
        }
        return Statement::coarse(std::move(projs), std::move(labels), tol);
    }
    case Statement::Kind::negation:
        return Statement::negation(statement_from_json(args_of(j, 1)[0], registry, tol));
    default: {
        const json &args = args_of(j, 2);
        Statement lhs = statement_from_json(args[0], registry, tol);
        Statement rhs = statement_from_json(args[1], registry, tol);
        switch (kind) {
        case Statement::Kind::conjunction:
            return Statement::conjunction(std::move(lhs), std::move(rhs));
        case Statement::Kind::disjunction:
            return Statement::disjunction(std::move(lhs), std::move(rhs));
        case Statement::Kind::exclusive_or:
            return Statement::exclusive_or(std::move(lhs), std::move(rhs));
        case Statement::Kind::implication:
            return Statement::implication(std::move(lhs), std::move(rhs));
        default:
            return Statement::equivalence(std::move(lhs), std::move(rhs));
        }
    }
    }
}

json statement_to_json(const Statement &s) {
    json j;
    j["op"] = std::string(name_of(s.kind()));
    switch (s.kind()) {
    case Statement::Kind::elementary:
        j["name"] = s.label();
        break;
    case Statement::Kind::coarse: {
        json args = json::array();
        for (const auto &label : s.coarse_labels()) {
            args.push_back({{"op", "elem"}, {"name", label}});
        }
        j["args"] = std::move(args);
        break;
    }
    default: {
        json args = json::array();
        for (const auto &o : s.operands()) {
            args.push_back(statement_to_json(o));
        }
        j["args"] = std::move(args);
    }
    }
    return j;
}

} // namespace qtruth
