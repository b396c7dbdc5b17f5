#include <doctest.h>

#include <random>

#include "simulgame/error.hpp"
#include "simulgame/matgame.hpp"

using namespace simulgame;
using namespace simulgame::matgame;

namespace {

PayoffMatrix random_matrix(std::mt19937& rng, int max_dim = 4) {
  std::uniform_int_distribution<int> dim(1, max_dim), num(-3, 3), den(1, 4);
  const int d = den(rng);
  PayoffMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = ratio(num(rng), d);
  return a;
}

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST_SUITE("matgame") {
  TEST_CASE("matching pennies") {
    PayoffMatrix a{{1, -1}, {-1, 1}};
    auto s = game_value(a);
    CHECK(s.value == 0);
    CHECK(s.row_mix == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});
    CHECK(s.col_mix == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});
  }

  TEST_CASE("saddle point and 1x1") {
    CHECK(game_value(PayoffMatrix{{3, 1}, {4, 2}}).value == 2);
    CHECK(game_value(PayoffMatrix{{ratio(-7, 3)}}).value == ratio(-7, 3));
    CHECK(game_value(PayoffMatrix{{1, 0, 0, 0}}).value == 0);
  }

  TEST_CASE("2x2 with fractional value") {
    PayoffMatrix a{{2, -1}, {-1, 1}};
    auto s = game_value(a);
    CHECK(s.value == ratio(1, 5));
    CHECK(s.row_mix == std::vector<Rational>{ratio(2, 5), ratio(3, 5)});
  }

  TEST_CASE("empty matrix is rejected") {
    CHECK_THROWS_AS(PayoffMatrix(0, 3), Error);
    try {
      PayoffMatrix(2, 0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("dominance keeps the lowest index among equals") {
    PayoffMatrix a{{0, 1}, {0, 1}, {2, 3}};
    auto r = eliminate_dominated(a);
    CHECK(r.kept_rows == std::vector<std::size_t>{2});
    CHECK(r.kept_cols == std::vector<std::size_t>{0});
    CHECK(r.matrix == PayoffMatrix{{2}});

    PayoffMatrix b{{1, 1}, {1, 1}};
    auto rb = eliminate_dominated(b);
    CHECK(rb.kept_rows == std::vector<std::size_t>{0});
    CHECK(rb.kept_cols == std::vector<std::size_t>{0});
  }

  TEST_CASE("role swap negates the value") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      auto a = random_matrix(rng);
      CHECK(game_value(a.role_swapped()).value == -game_value(a).value);
    }
  }

  TEST_CASE("optimal mixes certify the value") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
      auto a = random_matrix(rng, 5);
      auto s = game_value(a);
      REQUIRE(s.row_mix.size() == a.rows());
      REQUIRE(s.col_mix.size() == a.cols());
      CHECK(sum(s.row_mix) == 1);
      CHECK(sum(s.col_mix) == 1);
      for (const auto& p : s.row_mix) CHECK(p >= 0);
      for (const auto& p : s.col_mix) CHECK(p >= 0);
      CHECK(expected_payoff(a, s.row_mix, s.col_mix) == s.value);
      CHECK(response_value(a, s.row_mix) == s.value);
      CHECK(pure_maximin(a) <= s.value);
      CHECK(s.value <= pure_minimax(a));
    }
  }

  TEST_CASE("shift and scale covariance") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
      auto a = random_matrix(rng);
      auto b = a;
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = 3 * b(i, j) + ratio(1, 7);
      CHECK(game_value(b).value == 3 * game_value(a).value + ratio(1, 7));
    }
  }

  TEST_CASE("independent oracles agree with the LP") {
    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
      auto a = random_matrix(rng, 5);
      const Rational v = game_value(a).value;
      CHECK(support_enumeration_value(a) == v);
      CHECK(game_value(eliminate_dominated(a).matrix).value == v);
      auto br = fictitious_play(a, 100);
      CHECK(br.lo <= v);
      CHECK(v <= br.hi);
    }
  }

  TEST_CASE("fictitious play bracket narrows") {
    PayoffMatrix a{{1, -1}, {-1, 1}};
    auto coarse = fictitious_play(a, 4);
    auto fine = fictitious_play(a, 400);
    CHECK(fine.hi - fine.lo <= coarse.hi - coarse.lo);
    CHECK(fine.hi - fine.lo < ratio(1, 10));
    CHECK_THROWS_AS(fictitious_play(a, 0), Error);
  }

  TEST_CASE("support enumeration size limit") {
    CHECK_THROWS_AS(support_enumeration_value(PayoffMatrix(6, 2)), Error);
  }

  TEST_CASE("response value validates the mix") {
    PayoffMatrix a{{1, -1}, {-1, 1}};
    std::vector<Rational> short_mix{1};
    std::vector<Rational> bad{ratio(1, 2), ratio(1, 3)};
    std::vector<Rational> pure{1, 0};
    CHECK_THROWS_AS(response_value(a, short_mix), Error);
    CHECK_THROWS_AS(response_value(a, bad), Error);
    CHECK(response_value(a, pure) == -1);
  }
}
