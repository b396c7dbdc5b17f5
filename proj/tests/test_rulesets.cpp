#include <doctest.h>

#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/rulesets.hpp"

using namespace simulgame;
using namespace simulgame::rulesets;

namespace {

const SqGame& as_sq(const Position& p) { return static_cast<const SqGame&>(*p); }
const ClobberGame& as_cl(const Position& p) { return static_cast<const ClobberGame&>(*p); }
const HackenbushGame& as_hb(const Position& p) { return static_cast<const HackenbushGame&>(*p); }

Rational scoring_ex(const Position& p) { return evaluate(p, Convention::Scoring).ex; }

}  // namespace

TEST_SUITE("rulesets") {
  TEST_CASE("subtraction square simultaneous lengths") {
    const Position p = make_sq({1, 4}, {1, 3}, 10);
    const auto& g = as_sq(p);
    CHECK(sq_simultaneous_length(g, {1, Side::Left}, {3, Side::Left}) == 7);
    CHECK(sq_simultaneous_length(g, {4, Side::Right}, {1, Side::Right}) == 6);
    CHECK(sq_simultaneous_length(g, {4, Side::Left}, {3, Side::Right}) == 3);
    CHECK(sq_simultaneous_length(g, {1, Side::Left}, {1, Side::Right}) == 8);

    const Position q = make_sq({4}, {3}, 5);
    CHECK(sq_simultaneous_length(as_sq(q), {4, Side::Left}, {3, Side::Right}) == 0);
    CHECK(as_sq(sq_simultaneous(as_sq(q), {4, Side::Left}, {3, Side::Right})).length() == 0);
  }

  TEST_CASE("subtraction square move matrix and labels") {
    const MoveMatrix mm = move_matrix(make_sq({1}, {2}, 3));
    CHECK(mm.row_labels == std::vector<std::string>{"1l", "1r"});
    CHECK(mm.col_labels == std::vector<std::string>{"2l", "2r"});
    CHECK(as_sq(mm.at(0, 0)).length() == 1);
    CHECK(as_sq(mm.at(0, 1)).length() == 0);
  }

  TEST_CASE("primed variant forbids Left on length 2") {
    const Position p = make_sq_primed({1}, {2}, 2);
    CHECK_FALSE(p->has_left_moves());
    CHECK(p->has_right_moves());
    CHECK(evaluate(p, Convention::ExtendedNormal).ex == -1);
    CHECK(evaluate(make_sq({1}, {2}, 2), Convention::ExtendedNormal).ex != -1);
    CHECK(as_sq(p).primed());
  }

  TEST_CASE("subtraction square rejects bad sets") {
    CHECK_THROWS_AS(make_sq({}, {2}, 3), Error);
    CHECK_THROWS_AS(make_sq({0}, {2}, 3), Error);
    CHECK_THROWS_AS(make_sq({1}, {2}, -1), Error);
  }

  TEST_CASE("clobber strip basics") {
    const Position ox = make_clobber_strip("OX");
    const MoveMatrix mm = move_matrix(ox);
    REQUIRE(mm.cells.size() == 1);
    CHECK(mm.row_labels[0] == "1>0");
    CHECK(mm.col_labels[0] == "0>1");
    CHECK(as_cl(mm.at(0, 0)).cells() == "__");
    CHECK(scoring_ex(ox) == 0);
    CHECK(scoring_ex(make_clobber_strip("OXO")) == ratio(1, 2));
  }

  TEST_CASE("clobber score accumulates on distinct targets") {
    const Position p = make_clobber_strip("OXO");
    const auto& g = as_cl(p);
    // X takes the left O while the right O takes X's old square: no mutual pair.
    const Position q = clobber_simultaneous(g, {1, 0}, {2, 1});
    CHECK(as_cl(q).acc() == 1);
    CHECK(as_cl(q).cells() == "XO_");
    CHECK(q->key() == "cl[XO_;1]");
    // Mutual pair: both pieces vanish, no score.
    const Position r = clobber_simultaneous(g, {1, 2}, {2, 1});
    CHECK(as_cl(r).acc() == 0);
    CHECK(as_cl(r).cells() == "O__");
  }

  TEST_CASE("clobber illegal moves") {
    const Position p = make_clobber_strip("OXO");
    CHECK_THROWS_AS(clobber_simultaneous(as_cl(p), {0, 1}, {2, 1}), Error);
    CHECK_THROWS_AS(make_clobber_strip("OQX"), Error);
  }

  TEST_CASE("complete-graph clobber K_n") {
    CHECK(scoring_ex(make_clobber_kn(3)) == ratio(1, 2));
    CHECK(scoring_ex(make_clobber_kn(4)) == 1);
    CHECK(scoring_ex(gexpr::compile("cl:K[XOO_]")) == ratio(1, 2));
    CHECK(make_clobber_kn(4)->key() == make_clobber_complete("XOOO")->key());
  }

  TEST_CASE("hackenbush stalks and grounding") {
    const Position s = make_stalk("BRB");
    const auto& g = as_hb(s);
    CHECK(g.stalk_colors() == std::optional<std::string>("BRB"));
    // Cutting the bottom edge drops the rest of the stalk.
    const Position cut = hackenbush_simultaneous(g, "e1", "e2");
    CHECK(as_hb(cut).edges().empty());
    const Position top = hackenbush_simultaneous(g, "e3", "e2");
    CHECK(as_hb(top).stalk_colors() == std::optional<std::string>("B"));
    CHECK_THROWS_AS(hackenbush_simultaneous(g, "e2", "e2"), Error);
    CHECK_THROWS_AS(hackenbush_simultaneous(g, "e9", "e2"), Error);
  }

  TEST_CASE("hackenbush scores") {
    CHECK(scoring_ex(make_stalk("BB")) == 2);
    CHECK(scoring_ex(make_stalk("RR")) == -2);
    CHECK(hackenbush_score(as_hb(make_stalk("BB"))) == 2);
    CHECK_THROWS_AS(hackenbush_score(as_hb(make_stalk("BR"))), Error);
    CHECK(scoring_ex(make_stalk("BRB")) == 1);
  }

  TEST_CASE("green edges are playable by both") {
    const Position g = make_stalk("G");
    CHECK(g->has_left_moves());
    CHECK(g->has_right_moves());
    CHECK(move_matrix(g).cells.size() == 1);
  }

  TEST_CASE("cordons") {
    CHECK(scoring_ex(make_cordon(3, {})) == 3);
    CHECK(scoring_ex(make_cordon(3, {{1, EdgeColor::Blue}, {2, EdgeColor::Red}})) == 3);
    CHECK(scoring_ex(make_cordon(2, {{1, EdgeColor::Blue}, {1, EdgeColor::Blue}})) == 4);
    CHECK_THROWS_AS(make_cordon(2, {{2, EdgeColor::Blue}}), Error);
    CHECK_THROWS_AS(make_cordon(0, {}), Error);
  }

  TEST_CASE("built-in positions") {
    const MoveMatrix g = move_matrix(fig5_g());
    CHECK(g.row_labels == std::vector<std::string>{"x", "y"});
    CHECK(g.col_labels == std::vector<std::string>{"z", "w"});
    const MoveMatrix h = move_matrix(fig5_h());
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 1);
    CHECK(as_cl(fig9_clobber()).cells() == "OOXOXOO");
  }

  TEST_CASE("explicit games and literals") {
    const Position a = make_score(-5);
    const Position g = make_explicit({a}, {}, {});
    CHECK(g->has_left_moves());
    CHECK_FALSE(g->has_right_moves());
    CHECK(evaluate(g, Convention::ExtendedNormal).ex == 1);

    const Position l = make_outcome(Outcome::LeftWin);
    const Position r = make_outcome(Outcome::RightWin);
    const Position x = make_explicit({l, r}, {l}, {{l}, {r}});
    CHECK(evaluate(x, Convention::ExtendedNormal).ex == 1);
    CHECK_THROWS_AS(make_explicit({l, r}, {l}, {{l}}), Error);
  }
}
