#include <doctest.h>

#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/oracle.hpp"
#include "simulgame/verify.hpp"

using namespace simulgame;

namespace {

const char* const kSmall[] = {
    "sq{1}{2}(4)",        "sq'{1}{2}(6)",           "sq'{1}{2}(5) ^ sq'{1}{2}(6)", "sq{1}{2}(2) + sq{1}{2}(2)",
    "sq{1,2}{1,3}(6)",    "sq'{1}{2}(3) v sq'{1}{2}(4)", "cl[OXOX]",             "cl[OXO] + cl[XO]",
    "cl:K4",              "hb[BRB]",                "hb:fig5G",                    "hb:fig5H",
    "hb cordon(3; 1B, 2R)", "cl[OXO] v sq'{1}{2}(4) v hb[R]", "x{L:[s(-5)] | R:[] | LR:[]} + x{L:[] | R:[s(7)] | LR:[]}",
};

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("brute force agrees with the engine") {
    for (const char* text : kSmall) {
      const Position p = gexpr::compile(text);
      for (Convention c : {Convention::ExtendedNormal, Convention::Scoring}) {
        CHECK_MESSAGE(oracle::brute_ex(p, c) == evaluate(p, c).ex, text);
        CHECK_MESSAGE(oracle::brute_profile(p, c) == guarantee_profile(p, c), text);
      }
    }
  }

  TEST_CASE("SQ' 5 conj 6 is -3/8 by both methods") {
    const Position p = gexpr::compile("sq'{1}{2}(5) ^ sq'{1}{2}(6)");
    CHECK(oracle::brute_ex(p, Convention::ExtendedNormal) == ratio(-3, 8));
    CHECK(evaluate(p, Convention::ExtendedNormal).ex == ratio(-3, 8));
  }

  TEST_CASE("oracle refuses matrices above 5x5") {
    const Position big = gexpr::compile("sq{1,2,3}{1,2,3}(8)");
    try {
      oracle::brute_ex(big, Convention::ExtendedNormal);
      FAIL("expected SizeLimit");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeLimit);
    }
  }

  TEST_CASE("manifest positions all compile") {
    const auto& ps = verify::manifest_positions();
    CHECK(ps.size() > 10);
    for (const auto& mp : ps) CHECK_NOTHROW(gexpr::compile(mp.expr));
  }
}
