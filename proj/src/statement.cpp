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

#include "qtruth/statement.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

#include "qtruth/random.hpp"

namespace qtruth {

struct Statement::Node {
    Kind kind = Kind::elementary;
    long dim = 0;
    std::string label;
    std::optional<TruthOperator> proj;
    std::vector<TruthOperator> coarse;
    std::vector<std::string> coarse_labels;
    std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using Node = Statement::Node;
using LeafFn = std::function<Operator(const Node &)>;

Connective connective_of(Statement::Kind k) {
    switch (k) {
    case Statement::Kind::negation:
        return Connective::negation;
    case Statement::Kind::conjunction:
        return Connective::conjunction;
    case Statement::Kind::disjunction:
        return Connective::disjunction;
    case Statement::Kind::exclusive_or:
        return Connective::exclusive_or;
    case Statement::Kind::implication:
        return Connective::implication;
    case Statement::Kind::equivalence:
        return Connective::equivalence;
    default:
        throw RangeError("node is not a connective");
    }
}

Operator coarse_sum(const Node &n) {
    Operator sum = Operator::zero(n.dim);
    for (const auto &p : n.coarse) {
        sum += p.op();
    }
    return sum;
}

// Evaluates the tree with leaves supplied by `leaf`. When `flag` is non-null
// it is cleared on the first noncommuting combination.
Operator evaluate(const Node &n, const LeafFn &leaf, bool *flag, const Tolerances &tol) {
    switch (n.kind) {
    case Statement::Kind::elementary:
    case Statement::Kind::coarse:
        return leaf(n);
    case Statement::Kind::negation: {
        Operator inner = evaluate(*n.children[0], leaf, flag, tol);
        return Operator::identity(inner.dim()) - inner;
    }
    default: {
        Operator lhs = evaluate(*n.children[0], leaf, flag, tol);
        Operator rhs = evaluate(*n.children[1], leaf, flag, tol);
        if (lhs.dim() != rhs.dim()) {
            throw DimensionError("statement leaves have different dimensions");
        }
        if (flag != nullptr && *flag && !commute(lhs, rhs, tol)) {
            *flag = false;
        }
        return combine(coefficients(connective_of(n.kind)), lhs, rhs);
    }
    }
}

struct LeafTable {
    std::vector<const Node *> leaves;
    std::unordered_map<const Node *, std::size_t> index;
};

void collect_leaves(const Node &n, LeafTable &table, std::unordered_map<std::string, std::size_t> &by_label,
                    const Tolerances &tol) {
    if (n.kind == Statement::Kind::elementary) {
        auto it = by_label.find(n.label);
        if (it == by_label.end()) {
            by_label.emplace(n.label, table.leaves.size());
            table.index.emplace(&n, table.leaves.size());
            table.leaves.push_back(&n);
        } else {
            const Node &first = *table.leaves[it->second];
            if (!Tolerances::within(distance(first.proj->op(), n.proj->op()), tol.eq, n.dim)) {
                throw RangeError("label '" + n.label + "' names two different projectors");
            }
            table.index.emplace(&n, it->second);
        }
        return;
    }
    if (n.kind == Statement::Kind::coarse) {
        if (!table.index.contains(&n)) {
            table.index.emplace(&n, table.leaves.size());
            table.leaves.push_back(&n);
        }
        return;
    }
    for (const auto &c : n.children) {
        collect_leaves(*c, table, by_label, tol);
    }
}

Operator leaf_operator(const Node &n) { return n.kind == Statement::Kind::coarse ? coarse_sum(n) : n.proj->op(); }

} // namespace

Statement Statement::elementary(std::string label, TruthOperator proj) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::elementary;
    n->dim = proj.dim();
    n->label = std::move(label);
    n->proj = std::move(proj);
    return Statement(std::move(n));
}

Statement Statement::negation(Statement s) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::negation;
    n->dim = s.node_->dim;
    n->children.push_back(std::move(s.node_));
    return Statement(std::move(n));
}

Statement Statement::binary(Kind kind, Statement lhs, Statement rhs) {
    if (lhs.node_->dim != rhs.node_->dim) {
        throw DimensionError("statement operands have different dimensions");
    }
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->dim = lhs.node_->dim;
    n->children.push_back(std::move(lhs.node_));
    n->children.push_back(std::move(rhs.node_));
    return Statement(std::move(n));
}

Statement Statement::conjunction(Statement lhs, Statement rhs) {
    return binary(Kind::conjunction, std::move(lhs), std::move(rhs));
}
Statement Statement::disjunction(Statement lhs, Statement rhs) {
    return binary(Kind::disjunction, std::move(lhs), std::move(rhs));
}
Statement Statement::exclusive_or(Statement lhs, Statement rhs) {
    return binary(Kind::exclusive_or, std::move(lhs), std::move(rhs));
}
Statement Statement::implication(Statement lhs, Statement rhs) {
    return binary(Kind::implication, std::move(lhs), std::move(rhs));
}
Statement Statement::equivalence(Statement lhs, Statement rhs) {
    return binary(Kind::equivalence, std::move(lhs), std::move(rhs));
}

Statement Statement::coarse(std::vector<TruthOperator> projs, std::vector<std::string> labels,
                            const Tolerances &tol) {
    if (projs.empty()) {
        throw RangeError("coarse interval needs at least one projector");
    }
    const long dim = projs.front().dim();
    for (const auto &p : projs) {
        if (p.dim() != dim) {
            throw DimensionError("coarse interval projectors have different dimensions");
        }
    }
    if (!is_orthogonal_family(projs, tol)) {
        throw OrthogonalityError("coarse interval projectors are not mutually exclusive");
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < projs.size(); ++i) {
            labels.push_back("k" + std::to_string(i));
        }
    } else if (labels.size() != projs.size()) {
        throw DimensionError("coarse interval needs one label per projector");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::coarse;
    n->dim = dim;
    n->coarse = std::move(projs);
    n->coarse_labels = std::move(labels);
    return Statement(std::move(n));
}

Statement::Kind Statement::kind() const { return node_->kind; }

long Statement::dim() const { return node_->dim; }

const std::string &Statement::label() const {
    if (node_->kind != Kind::elementary) {
        throw RangeError("label() on a non-elementary statement");
    }
    return node_->label;
}

const TruthOperator &Statement::projector() const {
    if (node_->kind != Kind::elementary) {
        throw RangeError("projector() on a non-elementary statement");
    }
    return *node_->proj;
}

const std::vector<TruthOperator> &Statement::coarse_projectors() const {
    if (node_->kind != Kind::coarse) {
        throw RangeError("coarse_projectors() on a non-coarse statement");
    }
    return node_->coarse;
}

const std::vector<std::string> &Statement::coarse_labels() const {
    if (node_->kind != Kind::coarse) {
        throw RangeError("coarse_labels() on a non-coarse statement");
    }
    return node_->coarse_labels;
}

std::vector<Statement> Statement::operands() const {
    std::vector<Statement> out;
    for (const auto &c : node_->children) {
        out.push_back(Statement(c));
    }
    return out;
}

Compiled compile(const Statement &s, const Tolerances &tol) {
    bool flag = true;
    Operator op = evaluate(*s.node_, leaf_operator, &flag, tol);
    return {std::move(op), flag};
}

struct StatementAccess {
    static const Node &root(const Statement &s) { return *s.node_; }
};

TautologyReport check_tautology(const Statement &s, int trials, std::uint64_t seed, const Tolerances &tol) {
    if (trials < 0) {
        throw RangeError("check_tautology: trials must be >= 0");
    }
    const Node &root = StatementAccess::root(s);
    LeafTable table;
    std::unordered_map<std::string, std::size_t> by_label;
    collect_leaves(root, table, by_label, tol);

    std::vector<Operator> base;
    base.reserve(table.leaves.size());
    for (const Node *n : table.leaves) {
        base.push_back(leaf_operator(*n));
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            if (!commute(base[i], base[j], tol)) {
                throw NonCommutingError("tautology check needs a commuting leaf family");
            }
        }
    }

    TautologyReport report;
    report.tautology = true;
    const auto record = [&](const Operator &op) {
        const double r = distance(op, Operator::identity(op.dim()));
        report.max_residual = std::max(report.max_residual, r);
        if (!Tolerances::within(r, tol.eq, op.dim())) {
            report.tautology = false;
        }
    };
    const auto with = [&](const std::vector<Operator> &values) {
        return evaluate(
            root, [&](const Node &n) { return values[table.index.at(&n)]; }, nullptr, tol);
    };

    record(with(base));
    ++report.representations;

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const Operator u = random_unitary(root.dim, rng);
        std::vector<Operator> rotated;
        rotated.reserve(base.size());
        for (const auto &b : base) {
            rotated.push_back(u * b * u.adjoint());
        }
        record(with(rotated));
        ++report.representations;
    }

    // 0/1 assignments, one scalar truth value per distinct leaf.
    const std::size_t leaves = base.size();
    const auto assign = [&](const std::vector<bool> &truth) {
        std::vector<Operator> values;
        values.reserve(leaves);
        for (std::size_t i = 0; i < leaves; ++i) {
            values.push_back(Operator::diagonal({truth[i] ? 1.0 : 0.0}));
        }
        record(with(values));
        ++report.assignments;
    };
    constexpr std::size_t kExhaustiveLeaves = 16;
    std::vector<bool> truth(leaves);
    if (leaves <= kExhaustiveLeaves) {
        report.exhaustive = true;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << leaves); ++bits) {
            for (std::size_t i = 0; i < leaves; ++i) {
                truth[i] = ((bits >> i) & 1U) != 0;
            }
            assign(truth);
        }
    } else {
        std::bernoulli_distribution coin(0.5);
        for (int k = 0; k < 4096; ++k) {
            for (std::size_t i = 0; i < leaves; ++i) {
                truth[i] = coin(rng);
            }
            assign(truth);
        }
    }
    return report;
}

bool is_tautology(const Statement &s, int trials, std::uint64_t seed, const Tolerances &tol) {
    return check_tautology(s, trials, seed, tol).tautology;
}

} // namespace qtruth
