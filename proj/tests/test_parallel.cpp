#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/verify.hpp"

using namespace simulgame;

namespace {

EvalOptions options(Convention c, Execution e, bool memoize = true) {
  EvalOptions o;
  o.convention = c;
  o.execution = e;
  o.memoize = memoize;
  return o;
}

}  // namespace

TEST_SUITE("parallel") {
  TEST_CASE("parallel evaluation matches serial") {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
    for (const char* text : {"cl:K6", "cl[OXOXOXOX]", "sq{1}{2}(18)", "sq'{1}{2}(5) ^ sq'{1}{2}(6)",
                             "cl[OXO] + sq'{1}{2}(4) + hb[R]", "hb:fig5G + hb:fig5H", "cl:fig9"}) {
      const Position p = gexpr::compile(text);
      for (Convention c : {Convention::ExtendedNormal, Convention::Scoring}) {
        Evaluator serial(options(c, Execution::Serial)), parallel(options(c, Execution::Parallel));
        CHECK_MESSAGE(parallel.value(p) == serial.value(p), text);
        CHECK_MESSAGE(parallel.guarantee_profile(p) == serial.guarantee_profile(p), text);
        auto rs = serial.evaluate(p), rp = parallel.evaluate(p);
        CHECK(rp.left_mix == rs.left_mix);
        CHECK(rp.right_mix == rs.right_mix);
      }
    }
  }

  TEST_CASE("parallel without memo matches serial") {
    const Position p = gexpr::compile("cl[OXOXO] + cl[XO]");
    Evaluator serial(options(Convention::Scoring, Execution::Serial, false));
    Evaluator parallel(options(Convention::Scoring, Execution::Parallel, false));
    CHECK(parallel.value(p) == serial.value(p));
  }

  TEST_CASE("errors propagate out of parallel tasks") {
    Evaluator parallel(options(Convention::ExtendedNormal, Execution::Parallel));
    CHECK_THROWS_AS(parallel.value(gexpr::compile("x{L:[hb:nope] | R:[] | LR:[]}")), Error);
  }

  TEST_CASE("repeated parallel runs are deterministic") {
    const Position p = gexpr::compile("cl:K7");
    Rational first;
    for (int run = 0; run < 3; ++run) {
      Evaluator ev(options(Convention::Scoring, Execution::Parallel));
      Rational v = ev.value(p);
      if (run == 0) first = v;
      CHECK(v == first);
    }
    CHECK(first == ratio(5, 2));
  }

  TEST_CASE("parallel manifest run matches serial") {
    const auto serial = verify::run_suite(verify::Suite::All, Execution::Serial);
    const auto parallel = verify::run_suite(verify::Suite::All, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].id == parallel[i].id);
      CHECK_MESSAGE(serial[i].actual == parallel[i].actual, serial[i].id);
      CHECK(serial[i].passed == parallel[i].passed);
    }
  }
}
