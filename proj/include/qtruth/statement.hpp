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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtruth/logic.hpp"

namespace qtruth {

/// Symbolic statement tree over elementary truth operators.
///
/// Nodes are immutable and shared, so copying a Statement is cheap and
/// subtrees may be reused.
class Statement {
  public:
    enum class Kind { elementary, negation, conjunction, disjunction, exclusive_or, implication, equivalence, coarse };

    static Statement elementary(std::string label, TruthOperator proj);
    static Statement negation(Statement s);
    static Statement conjunction(Statement lhs, Statement rhs);
    static Statement disjunction(Statement lhs, Statement rhs);
    static Statement exclusive_or(Statement lhs, Statement rhs);
    static Statement implication(Statement lhs, Statement rhs);
    static Statement equivalence(Statement lhs, Statement rhs);
    /// Disjunction of mutually exclusive projectors, compiled as their sum.
    /// Throws OrthogonalityError if the projectors overlap. `labels`, when
    /// given, names each projector for serialization.
    static Statement coarse(std::vector<TruthOperator> projs, std::vector<std::string> labels = {},
                            const Tolerances &tol = {});

    Kind kind() const;
    long dim() const;
    /// Label of an elementary node.
    const std::string &label() const;
    /// Projector of an elementary node.
    const TruthOperator &projector() const;
    /// Projectors and labels of a coarse node.
    const std::vector<TruthOperator> &coarse_projectors() const;
    const std::vector<std::string> &coarse_labels() const;
    /// Operands of a connective node (one for negation, two otherwise).
    std::vector<Statement> operands() const;

    struct Node;

  private:
    explicit Statement(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Statement binary(Kind kind, Statement lhs, Statement rhs);
    std::shared_ptr<const Node> node_;

    friend Compiled compile(const Statement &s, const Tolerances &tol);
    friend struct StatementAccess;
};

/// Bottom-up compilation. The `statement` flag is cleared as soon as any
/// connective combines noncommuting operands.
Compiled compile(const Statement &s, const Tolerances &tol = {});

struct TautologyReport {
    bool tautology = false;
    /// Largest ||compiled - 1||_F seen across all representations.
    double max_residual = 0.0;
    long representations = 0;
    long assignments = 0;
    /// True when the 0/1 assignment sweep was exhaustive.
    bool exhaustive = false;
};

/// Sampling-based tautology check.
///
/// The statement is compiled for its own leaf family, for `trials` random
/// unitary re-representations of that family, and for every 0/1 truth
/// assignment of its distinct leaves (sampled above 16 leaves). Each result
/// must equal the identity within tol.eq. Throws NonCommutingError when the
/// leaf family does not commute.
TautologyReport check_tautology(const Statement &s, int trials, std::uint64_t seed, const Tolerances &tol = {});
bool is_tautology(const Statement &s, int trials, std::uint64_t seed, const Tolerances &tol = {});

using ProjectorRegistry = std::map<std::string, TruthOperator>;

/// Parses the tree form {"op": "and"|"or"|"not"|"xor"|"implies"|"iff"|
/// "elem"|"coarse", "args": [...]}; elementary leaves are {"op": "elem",
/// "name": <registry key>}. Throws RangeError on malformed input.
Statement statement_from_json(const nlohmann::json &j, const ProjectorRegistry &registry,
                              const Tolerances &tol = {});
nlohmann::json statement_to_json(const Statement &s);

} // namespace qtruth
