#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "simulgame/memo_table.hpp"
#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"

namespace simulgame {

struct ValueReport {
  Rational ex;
  std::vector<Rational> left_mix;
  std::vector<Rational> right_mix;
  bool terminal = false;
};

struct GuaranteeProfile {
  Rational ell;
  Rational arr;
  bool left_forces_win = false;
  bool right_forces_win = false;
  bool left_cannot_win = false;
  bool right_cannot_win = false;

  static GuaranteeProfile from(Rational ell, Rational arr);
  bool operator==(const GuaranteeProfile&) const = default;
};

/// Which terminal payoff the recursion reads.
///  Expected:  1/0/-1 (or the score under Scoring).
///  LeftWins:  1 for a Left win, else 0.
///  RightWins: -1 for a Right win, else 0.
enum class Payoff { Expected, LeftWins, RightWins };

enum class Execution { Serial, Parallel };

struct EvalOptions {
  Convention convention = Convention::ExtendedNormal;
  bool memoize = true;
  std::size_t memo_limit = std::numeric_limits<std::size_t>::max();
  Execution execution = Execution::Serial;
  /// Recursion depth below which child cells are spawned as OpenMP tasks.
  int parallel_depth = 3;
};

/// Memoized recursive evaluator. One instance owns one memo table per payoff
/// mode; the tables are safe for concurrent readers and writers.
class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});

  const EvalOptions& options() const noexcept { return options_; }

  ValueReport evaluate(const Position& p);
  Rational value(const Position& p, Payoff payoff = Payoff::Expected);
  GuaranteeProfile guarantee_profile(const Position& p);

  /// Terminal payoff of a terminal position under this evaluator's convention.
  Rational terminal_payoff(const Game& g, Payoff payoff) const;

  std::size_t memo_size() const;

 private:
  Rational solve(const Position& p, Payoff payoff, std::vector<std::string>& path, int depth);
  Rational solve_root(const Position& p, Payoff payoff);
  MemoTable& table(Payoff payoff);

  EvalOptions options_;
  std::unique_ptr<MemoTable> tables_[3];
};

/// Checks the tag is registered, then returns the ruleset's matrix.
MoveMatrix move_matrix(const Position& p);
bool is_terminal(const Position& p);
std::string canonical_key(const Position& p);

ValueReport evaluate(const Position& p, Convention convention);
GuaranteeProfile guarantee_profile(const Position& p, Convention convention);

/// L / D / R by the sign of Ex.
Outcome outcome_of(const Rational& ex);

/// Reads SIMULGAME_MEMO_LIMIT; max size_t when unset or unparsable.
std::size_t memo_limit_from_env();

}  // namespace simulgame
