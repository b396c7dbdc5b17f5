#include "simulgame/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>

#include "simulgame/error.hpp"
#include "simulgame/matgame.hpp"

namespace simulgame {

GuaranteeProfile GuaranteeProfile::from(Rational ell, Rational arr) {
  GuaranteeProfile g;
  g.left_forces_win = ell == 1;
  g.right_forces_win = arr == 1;
  g.left_cannot_win = sgn(ell) == 0;
  g.right_cannot_win = sgn(arr) == 0;
  g.ell = std::move(ell);
  g.arr = std::move(arr);
  return g;
}

MoveMatrix move_matrix(const Position& p) {
  if (!is_registered_ruleset(p->tag()))
    throw Error(ErrorCode::UnknownRuleset, "ruleset '" + p->tag() + "' is not registered");
  return p->move_matrix();
}

bool is_terminal(const Position& p) { return p->is_terminal(); }

std::string canonical_key(const Position& p) { return p->key(); }

Outcome outcome_of(const Rational& ex) {
  int s = sgn(ex);
  return s > 0 ? Outcome::LeftWin : s < 0 ? Outcome::RightWin : Outcome::Draw;
}

std::size_t memo_limit_from_env() {
  const char* raw = std::getenv("SIMULGAME_MEMO_LIMIT");
  if (!raw || !*raw) return std::numeric_limits<std::size_t>::max();
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(v);
}

Evaluator::Evaluator(EvalOptions options) : options_(options) {
  for (auto& t : tables_) t = std::make_unique<MemoTable>(options_.memo_limit);
}

MemoTable& Evaluator::table(Payoff payoff) { return *tables_[static_cast<int>(payoff)]; }

std::size_t Evaluator::memo_size() const {
  std::size_t n = 0;
  for (const auto& t : tables_) n += t->size();
  return n;
}

Rational Evaluator::terminal_payoff(const Game& g, Payoff payoff) const {
  int sign;
  Rational score;
  if (options_.convention == Convention::ExtendedNormal) {
    Outcome o = terminal_outcome(g);
    sign = o == Outcome::LeftWin ? 1 : o == Outcome::RightWin ? -1 : 0;
    score = sign;
  } else {
    score = g.terminal_score();
    sign = sgn(score);
  }
  switch (payoff) {
    case Payoff::Expected: return score;
    case Payoff::LeftWins: return sign > 0 ? 1 : 0;
    case Payoff::RightWins: return sign < 0 ? -1 : 0;
  }
  return score;
}

Rational Evaluator::solve(const Position& p, Payoff payoff, std::vector<std::string>& path,
                          int depth) {
  MemoTable* memo = options_.memoize ? &table(payoff) : nullptr;
  if (memo)
    if (auto hit = memo->find(p->key())) return *hit;

  MoveMatrix mm = move_matrix(p);
  if (mm.empty()) {
    Rational v = terminal_payoff(*p, payoff);
    if (memo) memo->insert(p->key(), v);
    return v;
  }
  if (std::find(path.begin(), path.end(), p->key()) != path.end())
    throw Error(ErrorCode::LoopyGame, "position repeats along a play path: " + p->render());

  path.push_back(p->key());
  matgame::PayoffMatrix values(mm.rows(), mm.cols());
  const std::size_t cells = mm.cells.size();

  if (options_.execution == Execution::Parallel && depth < options_.parallel_depth && cells > 1) {
    std::vector<std::exception_ptr> errors(cells);
    for (std::size_t k = 0; k < cells; ++k) {
#pragma omp task default(shared) firstprivate(k)
      {
        try {
          std::vector<std::string> local = path;
          Rational v = solve(mm.cells[k], payoff, local, depth + 1);
          values(k / mm.cols(), k % mm.cols()) = v;
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    }
#pragma omp taskwait
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t k = 0; k < cells; ++k)
      values(k / mm.cols(), k % mm.cols()) = solve(mm.cells[k], payoff, path, depth + 1);
  }
  path.pop_back();

  Rational v = matgame::game_value(values).value;
  if (memo) memo->insert(p->key(), v);
  return v;
}

Rational Evaluator::solve_root(const Position& p, Payoff payoff) {
  if (options_.execution == Execution::Serial) {
    std::vector<std::string> path;
    return solve(p, payoff, path, 0);
  }
  Rational result;
  std::exception_ptr error;
#pragma omp parallel default(shared)
  {
#pragma omp single
    {
      try {
        std::vector<std::string> path;
        result = solve(p, payoff, path, 0);
      } catch (...) {
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return result;
}

Rational Evaluator::value(const Position& p, Payoff payoff) { return solve_root(p, payoff); }

ValueReport Evaluator::evaluate(const Position& p) {
  ValueReport report;
  MoveMatrix mm = move_matrix(p);
  if (mm.empty()) {
    report.terminal = true;
    report.ex = terminal_payoff(*p, Payoff::Expected);
    return report;
  }
  // Child values go through the memo; the root solve then reuses them.
  report.ex = solve_root(p, Payoff::Expected);
  matgame::PayoffMatrix values(mm.rows(), mm.cols());
  for (std::size_t i = 0; i < mm.rows(); ++i)
    for (std::size_t j = 0; j < mm.cols(); ++j) values(i, j) = solve_root(mm.at(i, j), Payoff::Expected);
  matgame::Solution s = matgame::game_value(values);
  report.left_mix = std::move(s.row_mix);
  report.right_mix = std::move(s.col_mix);
  return report;
}

GuaranteeProfile Evaluator::guarantee_profile(const Position& p) {
  Rational ell = value(p, Payoff::LeftWins);
  Rational arr = -value(p, Payoff::RightWins);
  return GuaranteeProfile::from(std::move(ell), std::move(arr));
}

ValueReport evaluate(const Position& p, Convention convention) {
  EvalOptions o;
  o.convention = convention;
  o.memo_limit = memo_limit_from_env();
  return Evaluator(o).evaluate(p);
}

GuaranteeProfile guarantee_profile(const Position& p, Convention convention) {
  EvalOptions o;
  o.convention = convention;
  o.memo_limit = memo_limit_from_env();
  return Evaluator(o).guarantee_profile(p);
}

}  // namespace simulgame
