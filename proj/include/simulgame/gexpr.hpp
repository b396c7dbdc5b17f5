#pragma once

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"
#include "simulgame/rulesets.hpp"
#include "simulgame/sums.hpp"

namespace simulgame::gexpr {

struct GameExpr;

struct SqLit {
  std::vector<int> left;
  std::vector<int> right;
  std::set<int> forbidden;  // {2} for the primed form
  int n = 0;
  bool operator==(const SqLit&) const = default;
};

struct StalkLit {
  std::string colors;
  bool operator==(const StalkLit&) const = default;
};

struct CordonLit {
  int n = 0;
  std::vector<rulesets::CordonLeaf> leaves;
  bool operator==(const CordonLit&) const = default;
};

/// hb{x=0-1:B, z=1-2:R}; vertex 0 is the ground.
struct GraphLit {
  std::vector<rulesets::HbEdge> edges;
  bool operator==(const GraphLit&) const = default;
};

struct StripLit {
  std::string cells;
  int acc = 0;
  bool operator==(const StripLit&) const = default;
};

/// cl:K5 (one X, four O).
struct CompleteLit {
  int n = 0;
  bool operator==(const CompleteLit&) const = default;
};

/// cl:K[XOO_] with explicit occupancy.
struct CompleteCellsLit {
  std::string cells;
  int acc = 0;
  bool operator==(const CompleteCellsLit&) const = default;
};

/// hb:fig5G, hb:fig5H, cl:fig9.
struct BuiltinLit {
  std::string name;
  bool operator==(const BuiltinLit&) const = default;
};

struct ScoreLit {
  Rational value;
  bool operator==(const ScoreLit&) const = default;
};

struct OutcomeLit {
  Outcome outcome = Outcome::Draw;
  bool operator==(const OutcomeLit&) const = default;
};

struct ExplicitLit {
  std::vector<GameExpr> left;
  std::vector<GameExpr> right;
  std::vector<std::vector<GameExpr>> table;
  bool operator==(const ExplicitLit&) const;
};

/// Operands of one operator at one parenthesization level.
struct SumExpr {
  sums::SumKind kind = sums::SumKind::Disjunctive;
  std::vector<GameExpr> operands;
  bool operator==(const SumExpr&) const;
};

struct GameExpr {
  using Node = std::variant<SqLit, StalkLit, CordonLit, GraphLit, StripLit, CompleteLit, CompleteCellsLit,
                            BuiltinLit, ScoreLit, OutcomeLit, ExplicitLit, SumExpr>;
  Node node;
  bool operator==(const GameExpr&) const = default;
};

/// Throws ParseError (SyntaxError or MixedOperators) and BadLiteral for a
/// zero denominator.
GameExpr parse(std::string_view text);

/// Canonical text; parse(render(e)) == e.
std::string render(const GameExpr& e);

/// Throws UnknownRuleset for unknown built-ins and BadLiteral,
/// BadCordonSpec for malformed literals.
Position to_position(const GameExpr& e);

/// parse + to_position.
Position compile(std::string_view text);

bool contains_sum(const GameExpr& e);

/// Names accepted after "hb:" and "cl:".
std::vector<std::string> builtin_names();

}  // namespace simulgame::gexpr
