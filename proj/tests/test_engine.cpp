#include <doctest.h>

#include <cstdlib>
#include <random>

#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/rulesets.hpp"

using namespace simulgame;

namespace {

// A position whose only simultaneous move leads back to itself.
class Loop final : public Game {
 public:
  Loop() : Game("x", "loop") {}
  OptionList left_options() const override {
    OptionList o;
    o.add("a", std::make_shared<Loop>());
    return o;
  }
  OptionList right_options() const override { return left_options(); }

 protected:
  Position simultaneous(std::size_t, std::size_t) const override { return std::make_shared<Loop>(); }
};

Rational ex(const std::string& text, Convention c = Convention::ExtendedNormal) {
  return evaluate(gexpr::compile(text), c).ex;
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("terminal payoffs under extended normal play") {
    CHECK(ex("o(L)") == 1);
    CHECK(ex("o(R)") == -1);
    CHECK(ex("o(D)") == 0);
    CHECK(ex("sq{1}{2}(0)") == 0);
    CHECK(ex("sq{1}{2}(1)") == 1);
  }

  TEST_CASE("scoring terminal payoff is the score") {
    CHECK(ex("s(-5/3)", Convention::Scoring) == ratio(-5, 3));
    CHECK(ex("cl[__;2]", Convention::Scoring) == 2);
  }

  TEST_CASE("small subtraction squares") {
    CHECK(ex("sq{1}{2}(3)") == ratio(1, 2));
    CHECK(ex("sq'{1}{2}(5)") == ratio(-1, 4));
    CHECK(ex("sq'{1}{2}(6)") == ratio(1, 4));
    CHECK(ex("sq'{1,4}{1,3}(4)") == 0);
  }

  TEST_CASE("evaluate reports mixes and the terminal flag") {
    auto r = evaluate(gexpr::compile("sq{1}{2}(3)"), Convention::ExtendedNormal);
    CHECK_FALSE(r.terminal);
    Rational s = 0;
    for (const auto& p : r.left_mix) s += p;
    CHECK(s == 1);
    auto t = evaluate(gexpr::compile("o(L)"), Convention::ExtendedNormal);
    CHECK(t.terminal);
    CHECK(t.left_mix.empty());
  }

  TEST_CASE("outcome follows the sign of Ex") {
    CHECK(outcome_of(ratio(1, 3)) == Outcome::LeftWin);
    CHECK(outcome_of(0) == Outcome::Draw);
    CHECK(outcome_of(ratio(-11, 14)) == Outcome::RightWin);
  }

  TEST_CASE("guarantee profile of literals") {
    auto l = guarantee_profile(gexpr::compile("o(L)"), Convention::ExtendedNormal);
    CHECK(l.ell == 1);
    CHECK(l.arr == 0);
    CHECK(l.left_forces_win);
    CHECK(l.right_cannot_win);
    auto d = guarantee_profile(gexpr::compile("o(D)"), Convention::ExtendedNormal);
    CHECK(d.ell == 0);
    CHECK(d.arr == 0);
  }

  TEST_CASE("profile bounds are probabilities and bracket Ex") {
    for (int n = 0; n <= 12; ++n) {
      const Position p = rulesets::make_sq({1}, {2}, n);
      auto g = guarantee_profile(p, Convention::ExtendedNormal);
      const Rational e = evaluate(p, Convention::ExtendedNormal).ex;
      CHECK(g.ell >= 0);
      CHECK(g.ell <= 1);
      CHECK(g.arr >= 0);
      CHECK(g.arr <= 1);
      CHECK(g.ell + g.arr <= 1);
      // Left wins with probability >= ell against any Right, so Ex >= ell - (1 - ell).
      CHECK(e >= 2 * g.ell - 1);
      CHECK(e <= 1 - 2 * g.arr);
    }
  }

  TEST_CASE("memoized and unmemoized evaluation agree") {
    EvalOptions plain;
    plain.memoize = false;
    for (int n = 0; n <= 6; ++n)
      for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
        const Position p = rulesets::make_sq({a}, {b}, n);
        Evaluator memo, bare(plain);
        CHECK(memo.value(p) == bare.value(p));
        CHECK(memo.guarantee_profile(p) == bare.guarantee_profile(p));
      }
    const Position c = gexpr::compile("cl[OXOX] + cl[XO]");
    EvalOptions scoring_plain = plain;
    scoring_plain.convention = Convention::Scoring;
    EvalOptions scoring;
    scoring.convention = Convention::Scoring;
    CHECK(Evaluator(scoring).value(c) == Evaluator(scoring_plain).value(c));
  }

  TEST_CASE("memo limit caps the table without changing values") {
    EvalOptions capped;
    capped.memo_limit = 3;
    Evaluator small(capped), full;
    const Position p = rulesets::make_sq({1}, {2}, 14);
    CHECK(small.value(p) == full.value(p));
    CHECK(small.memo_size() <= 3);
    CHECK(full.memo_size() > 3);
  }

  TEST_CASE("memo limit from the environment") {
    ::setenv("SIMULGAME_MEMO_LIMIT", "1234", 1);
    CHECK(memo_limit_from_env() == 1234);
    ::unsetenv("SIMULGAME_MEMO_LIMIT");
    CHECK(memo_limit_from_env() == std::numeric_limits<std::size_t>::max());
  }

  TEST_CASE("role swap negates Ex and exchanges the profile") {
    for (int n = 0; n <= 10; ++n) {
      const Position p = rulesets::make_sq({1, 3}, {2}, n);
      const Position q = rulesets::sq_swap(static_cast<const rulesets::SqGame&>(*p));
      CHECK(evaluate(q, Convention::ExtendedNormal).ex == -evaluate(p, Convention::ExtendedNormal).ex);
      auto gp = guarantee_profile(p, Convention::ExtendedNormal);
      auto gq = guarantee_profile(q, Convention::ExtendedNormal);
      CHECK(gq.ell == gp.arr);
      CHECK(gq.arr == gp.ell);
    }
    const Position h = gexpr::compile("hb[BRB]");
    const Position hs = rulesets::hackenbush_swap(static_cast<const rulesets::HackenbushGame&>(*h));
    CHECK(evaluate(hs, Convention::Scoring).ex == -evaluate(h, Convention::Scoring).ex);
  }

  TEST_CASE("a repeated position raises LoopyGame") {
    try {
      evaluate(std::make_shared<Loop>(), Convention::ExtendedNormal);
      FAIL("expected LoopyGame");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LoopyGame);
    }
  }

  TEST_CASE("canonical key ignores construction route") {
    CHECK(canonical_key(gexpr::compile("sq{1}{2}(3) + sq{1}{2}(4)")) ==
          canonical_key(gexpr::compile("sq{1}{2}(4) + sq{1}{2}(3)")));
    CHECK(is_terminal(gexpr::compile("sq{2}{3}(1)")));
    CHECK_FALSE(is_terminal(gexpr::compile("sq{1}{2}(3)")));
  }
}
