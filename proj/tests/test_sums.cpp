#include <doctest.h>

#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/rulesets.hpp"
#include "simulgame/sums.hpp"

using namespace simulgame;
using namespace simulgame::sums;

namespace {

Rational ex(const Position& p, Convention c = Convention::ExtendedNormal) { return evaluate(p, c).ex; }
Rational ex(const std::string& text, Convention c = Convention::ExtendedNormal) {
  return ex(gexpr::compile(text), c);
}

const SumGame& as_sum(const Position& p) { return static_cast<const SumGame&>(*p); }

}  // namespace

TEST_SUITE("sums") {
  TEST_CASE("same-kind sums flatten and ignore order") {
    const Position a = rulesets::make_sq({1}, {2}, 2);
    const Position b = rulesets::make_sq({1}, {2}, 3);
    const Position c = rulesets::make_sq({1}, {2}, 4);
    const Position nested = disjunctive(a, disjunctive(b, c));
    CHECK(as_sum(nested).components().size() == 3);
    CHECK(nested->key() == disjunctive(disjunctive(c, a), b)->key());
    const Position mixed = disjunctive(a, conjunctive(b, c));
    CHECK(as_sum(mixed).components().size() == 2);
    CHECK_THROWS_AS(make_sum(SumKind::Disjunctive, {a}), Error);
  }

  TEST_CASE("disjunctive sum is not compositional") {
    CHECK(ex("sq{1}{2}(2)") == 0);
    CHECK(ex("sq{1}{2}(2) + sq{1}{2}(2)") == ratio(1, 2));
  }

  TEST_CASE("disjunctive options mix unilateral and paired moves") {
    const Position p = gexpr::compile("sq{1}{2}(3) + sq{1}{2}(4)");
    const MoveMatrix mm = move_matrix(p);
    CHECK(mm.rows() == 4);
    CHECK(mm.cols() == 4);
    CHECK(mm.row_labels[0] == "1:1l");
    CHECK(mm.row_labels[2] == "2:1l");
  }

  TEST_CASE("conjunctive sum stops when any component is terminal") {
    const Position p = gexpr::compile("sq{1}{2}(3) ^ sq{1}{2}(1)");
    CHECK(p->is_terminal());
    CHECK(ex("sq{1}{2}(3) ^ o(D)") == 0);
    const MoveMatrix mm = move_matrix(gexpr::compile("sq{1}{2}(3) ^ sq{1}{2}(4)"));
    CHECK(mm.rows() == 4);
    CHECK(mm.row_labels[0].front() == '(');
  }

  TEST_CASE("continued conjunctive sum keeps playing active components") {
    const Position p = gexpr::compile("sq{1}{2}(1) v sq{1}{2}(2) v sq{1}{2}(3)");
    CHECK_FALSE(p->is_terminal());
    CHECK(move_matrix(p).rows() == 4);
    // A forced draw component makes the whole sum a draw.
    for (const char* g : {"sq{1}{2}(3)", "sq'{1}{2}(5)", "cl[OXO]", "hb[BRB]"}) {
      CHECK(ex(std::string(g) + " v o(D)") == 0);
      CHECK(ex(std::string(g) + " v sq{1}{2}(0)") == 0);
    }
    CHECK(ex("o(L) v o(L)") == 1);
  }

  TEST_CASE("scoring terminal scores") {
    CHECK(ex("s(1) + s(2)", Convention::Scoring) == 3);
    CHECK(ex("s(1) v s(-3/2)", Convention::Scoring) == ratio(-1, 2));
    CHECK(ex("s(1) ^ s(2)", Convention::Scoring) == 3);
  }

  TEST_CASE("dead-end scores count only stuck-opponent moves") {
    const Position a = gexpr::compile("x{L:[s(-5)] | R:[] | LR:[]}");
    CHECK(v_A(*a) == 1);
    CHECK(v_A(*rulesets::make_stalk("RRR")) == -3);
    CHECK(v_A(*rulesets::make_stalk("")) == 0);
    CHECK(ex("x{L:[s(-5)] | R:[] | LR:[]} + x{L:[] | R:[s(7)] | LR:[]}", Convention::Scoring) == 2);
  }

  TEST_CASE("continued conjunctive scoring is additive") {
    const char* parts[] = {"cl[OXO]", "sq'{1}{2}(4)", "hb[BRB]", "hb[R]", "cl[OOX]", "s(3/4)"};
    for (const char* g : parts)
      for (const char* h : parts) {
        const std::string text = std::string(g) + " v " + h;
        CHECK_MESSAGE(ex(text, Convention::Scoring) == ex(g, Convention::Scoring) + ex(h, Convention::Scoring),
                      text);
      }
  }

  TEST_CASE("mixed-ruleset sums") {
    CHECK(ex("cl[OXO] + sq'{1}{2}(4) + hb[R]") < 0);
    CHECK(ex("cl[OXO] ^ sq'{1}{2}(4) ^ hb[R]", Convention::Scoring) == -1);
    CHECK(ex("cl[OXO] v sq'{1}{2}(4) v hb[R]", Convention::Scoring) == ratio(-1, 2));
    CHECK(ex("cl[OXO] v sq'{1}{2}(4) v hb[R]") == 0);
  }

  TEST_CASE("sum symbols") {
    CHECK(sum_symbol(SumKind::Disjunctive) == '+');
    CHECK(sum_symbol(SumKind::Conjunctive) == '^');
    CHECK(sum_symbol(SumKind::ContinuedConjunctive) == 'v');
  }
}
