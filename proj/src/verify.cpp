#include "simulgame/verify.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <random>

#include "simulgame/analysis.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/matgame.hpp"
#include "simulgame/oracle.hpp"
#include "simulgame/rulesets.hpp"
#include "simulgame/sums.hpp"

namespace simulgame::verify {

namespace {

using Clock = std::chrono::steady_clock;
constexpr Convention kNormal = Convention::ExtendedNormal;
constexpr Convention kScoring = Convention::Scoring;

// Adversarial leaf games: values -1/2 and 1/4 from outcome literals only.
const std::string kMinusHalf =
    "x{L:[o(D), o(D)] | R:[o(D), o(D)] | LR:[[o(R), o(D)], [o(D), o(R)]]}";
const std::string kHalf = "x{L:[o(D), o(D)] | R:[o(D), o(D)] | LR:[[o(L), o(D)], [o(D), o(L)]]}";
const std::string kQuarter =
    "x{L:[o(D), o(D)] | R:[o(D), o(D)] | LR:[[" + kHalf + ", o(D)], [o(D), " + kHalf + "]]}";
const std::string kAdversarial = "x{L:[o(D), o(D)] | R:[o(D), o(D), o(D), o(D)] | LR:[[o(L), o(R), " +
                                 kMinusHalf + ", " + kQuarter + "], [o(R), o(L), " + kQuarter + ", " +
                                 kMinusHalf + "]]}";

const std::string kTable5Parts[3] = {"cl[OXO]", "sq'{1}{2}(4)", "hb[R]"};

std::string table5(char op) {
  const std::string sep = std::string(" ") + op + " ";
  return kTable5Parts[0] + sep + kTable5Parts[1] + sep + kTable5Parts[2];
}

Rational ex(const Position& p, Convention c) {
  EvalOptions o;
  o.convention = c;
  o.memo_limit = memo_limit_from_env();
  return Evaluator(o).value(p);
}

Rational ex(const std::string& text, Convention c) { return ex(gexpr::compile(text), c); }

Observation value_of(const std::string& text, Convention c) { return {to_string(ex(text, c)), text}; }

std::string strip_of(int k_left, const std::string& middle, int k_right) {
  return "cl[" + std::string(static_cast<std::size_t>(k_left), 'O') + middle +
         std::string(static_cast<std::size_t>(k_right), 'O') + "]";
}

template <class F>
std::string matrix_text(const MoveMatrix& mm, F f) {
  std::string s = "[";
  for (std::size_t i = 0; i < mm.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < mm.cols(); ++j) s += (j ? "," : "") + f(mm.at(i, j));
    s += "]";
  }
  return s + "]";
}

Observation fig_matrix(const std::string& builtin, const std::string& measure) {
  const Position p = gexpr::compile(builtin);
  const MoveMatrix mm = move_matrix(p);
  std::string text;
  if (measure == "outcome")
    text = matrix_text(mm, [](const Position& c) { return std::string(1, outcome_letter(outcome_of(ex(c, kNormal)))); });
  else if (measure == "ex")
    text = matrix_text(mm, [](const Position& c) { return to_string(ex(c, kNormal)); });
  else
    text = matrix_text(mm, [](const Position& c) { return to_string(ex(c, kScoring)); });
  std::string labels;
  for (const auto& r : mm.row_labels) labels += r + " ";
  labels += "x";
  for (const auto& c : mm.col_labels) labels += " " + c;
  return {text, "rows/cols: " + labels};
}

std::string all_or_count(std::size_t ok, std::size_t total) {
  return ok == total ? "all " + std::to_string(total) : std::to_string(ok) + "/" + std::to_string(total);
}

// Forty-position sample: SQ({1},{2}) and SQ'({1},{2}) strips n <= 8, then
// every blue/red stalk of length 1..3 and the eight 4-stalks starting blue.
std::vector<std::string> additivity_sample() {
  std::vector<std::string> out;
  for (int n = 0; n <= 8; ++n) out.push_back("sq{1}{2}(" + std::to_string(n) + ")");
  for (int n = 0; n <= 8; ++n) out.push_back("sq'{1}{2}(" + std::to_string(n) + ")");
  for (int len = 1; len <= 3; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string c;
      for (int i = 0; i < len; ++i) c += (mask >> i) & 1 ? 'R' : 'B';
      out.push_back("hb[" + c + "]");
    }
  for (int mask = 0; mask < 8; ++mask) {
    std::string c = "B";
    for (int i = 0; i < 3; ++i) c += (mask >> i) & 1 ? 'R' : 'B';
    out.push_back("hb[" + c + "]");
  }
  return out;
}

// Ten SQ positions for the index checks, including role-swapped strips so
// that Right's index is exercised too.
std::vector<std::string> index_sample() {
  std::vector<std::string> out;
  for (int n = 1; n <= 4; ++n) out.push_back("sq{1}{2}(" + std::to_string(n) + ")");
  for (int n = 1; n <= 3; ++n) out.push_back("sq{1}{3}(" + std::to_string(n + 1) + ")");
  for (int n = 1; n <= 3; ++n) out.push_back("sq{2}{1}(" + std::to_string(n + 1) + ")");
  return out;
}

std::vector<std::string> conforming_stalks(int max_len) {
  std::vector<std::string> out;
  for (int len = 1; len <= max_len; ++len)
    for (char first : {'B', 'R'})
      for (int run = 1; run <= len; ++run) {
        std::string c(static_cast<std::size_t>(run), first);
        char next = first == 'B' ? 'R' : 'B';
        while (static_cast<int>(c.size()) < len) {
          c += next;
          next = next == 'B' ? 'R' : 'B';
        }
        out.push_back(c);
      }
  return out;
}

matgame::PayoffMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4), num(-2, 2), den(1, 3);
  const int d = den(rng);
  matgame::PayoffMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = ratio(num(rng), d);
  return a;
}

Observation response_demo(bool take_four) {
  const Position p = gexpr::compile("sq'{1,4}{2}(4) v sq'{1,4}{2}(3)");
  const MoveMatrix mm = move_matrix(p);
  matgame::PayoffMatrix values(mm.rows(), mm.cols());
  for (std::size_t i = 0; i < mm.rows(); ++i)
    for (std::size_t j = 0; j < mm.cols(); ++j) values(i, j) = ex(mm.at(i, j), kNormal);
  // Rows are (strip-4 option, strip-3 option) with the strip-3 option varying
  // fastest; Left mixes the strip-3 options evenly.
  std::vector<Rational> mix(mm.rows());
  std::string used;
  for (std::size_t r = 0; r < mm.rows(); ++r) {
    const std::string& label = mm.row_labels[r];
    const bool four = label.rfind("(4", 0) == 0;
    if (four == take_four) {
      mix[r] = Rational(1, 4);
      used += label + " ";
    }
  }
  return {to_string(matgame::response_value(values, mix)), "mix 1/4 on " + used};
}

std::vector<Check> build_manifest() {
  std::vector<Check> m;
  auto reference = [&](std::string id, int crit, std::string expected, std::function<Observation()> run) {
    m.push_back({std::move(id), crit, Suite::Reference, std::move(expected), std::move(run)});
  };
  auto prop = [&](std::string id, int crit, std::string expected, std::function<Observation()> run) {
    m.push_back({std::move(id), crit, Suite::Properties, std::move(expected), std::move(run)});
  };

  // 1
  reference("sq12-3", 1, "1/2", [] { return value_of("sq{1}{2}(3)", kNormal); });

  // 2
  reference("sq12-2plus2", 2, "1/2", [] { return value_of("sq{1}{2}(2) + sq{1}{2}(2)", kNormal); });
  reference("sq12-2plus2-noncompositional", 2, "1/2 != 0", [] {
    Rational whole = ex("sq{1}{2}(2) + sq{1}{2}(2)", kNormal);
    Rational parts = 2 * ex("sq{1}{2}(2)", kNormal);
    return Observation{to_string(whole) + (whole == parts ? " == " : " != ") + to_string(parts),
                       "Ex(2+2) vs Ex(2)+Ex(2)"};
  });

  // 3
  reference("sqp-5", 3, "-1/4", [] { return value_of("sq'{1}{2}(5)", kNormal); });
  reference("sqp-6", 3, "1/4", [] { return value_of("sq'{1}{2}(6)", kNormal); });
  reference("sqp-5conj6", 3, "-1/4", [] { return value_of("sq'{1}{2}(5) ^ sq'{1}{2}(6)", kNormal); });
  reference("sqp-3conj3", 3, "1/4", [] { return value_of("sq'{1}{2}(3) ^ sq'{1}{2}(3)", kNormal); });
  reference("sqp-3conj4", 3, "1/4", [] { return value_of("sq'{1}{2}(3) ^ sq'{1}{2}(4)", kNormal); });

  // 4
  reference("sqp14-4", 4, "0", [] { return value_of("sq'{1,4}{2}(4)", kNormal); });
  reference("sqp14-4-matrix", 4, "[[-1,1],[1,-1],[0,0],[0,0]]", [] {
    const MoveMatrix mm = move_matrix(gexpr::compile("sq'{1,4}{2}(4)"));
    return Observation{matrix_text(mm, [](const Position& c) { return to_string(ex(c, kNormal)); }),
                       matrix_text(mm, [](const Position& c) { return c->render(); })};
  });
  reference("sqp14-4v3-response-take4", 4, "0", [] { return response_demo(true); });
  reference("sqp14-4v3-response-take1", 4, "1/4", [] { return response_demo(false); });

  // 5
  reference("adversarial-cc", 5, "-1/2", [] { return value_of(kAdversarial + " v o(R)", kNormal); });
  reference("adversarial-isolated-reduced", 5, "-1/4", [] {
    const Position reduced = analysis::reduce_game(gexpr::compile(kAdversarial));
    return Observation{to_string(ex(reduced, kNormal)), "Ex(reduce_game(G))"};
  });

  // 6
  prop("scoring-cc-additivity", 6, "all 820", [] {
    const auto sample = additivity_sample();
    std::vector<Position> ps;
    std::vector<Rational> vals;
    EvalOptions o;
    o.convention = kScoring;
    Evaluator ev(o);
    for (const auto& s : sample) {
      ps.push_back(gexpr::compile(s));
      vals.push_back(ev.value(ps.back()));
    }
    std::size_t ok = 0, total = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i; j < ps.size(); ++j) {
        ++total;
        Rational v = ev.value(sums::continued_conjunctive(ps[i], ps[j]));
        if (v == vals[i] + vals[j]) ++ok;
        else if (first_bad.empty()) first_bad = sample[i] + " v " + sample[j] + " = " + to_string(v);
      }
    return Observation{all_or_count(ok, total),
                       std::to_string(sample.size()) + " positions" + (first_bad.empty() ? "" : "; " + first_bad)};
  });

  // 7
  for (int n = 2; n <= 7; ++n) {
    reference("kn-clobber-" + std::to_string(n), 7, to_string(analysis::clobber_kn_expected(n)), [n] {
      return value_of("cl:K" + std::to_string(n), kScoring);
    });
  }
  reference("kn-clobber-7-time", 7, "under 60s", [] {
    auto t0 = Clock::now();
    ex("cl:K7", kScoring);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return Observation{secs < 60 ? "under 60s" : std::to_string(secs) + "s", std::to_string(secs) + "s"};
  });

  // 8
  reference("clobber-OX", 8, "cl[__] score 0", [] {
    const MoveMatrix mm = move_matrix(gexpr::compile("cl[OX]"));
    if (mm.cells.size() != 1) return Observation{std::to_string(mm.cells.size()) + " move pairs", ""};
    return Observation{mm.at(0, 0)->render() + " score " + to_string(ex(mm.at(0, 0), kScoring)), ""};
  });
  reference("clobber-OOX", 8, "0", [] { return value_of("cl[OOX]", kScoring); });
  reference("clobber-blcl-sum", 8, "3/2", [] { return value_of("cl[OX] + cl[XO] + s(1)", kScoring); });
  reference("clobber-blcl-reduced", 8, "1", [] {
    const Position sub = analysis::substitute_component_values(gexpr::compile("cl[OX] + cl[XO] + s(1)"), kScoring);
    return Observation{to_string(ex(sub, kScoring)), sub->render()};
  });

  // 9
  reference("clobber-truncation", 9, "monotone, |v(10) - 0.809017| < 0.05", [] {
    std::vector<Rational> v;
    std::string detail;
    for (int k = 2; k <= 10; ++k) {
      v.push_back(ex(strip_of(k, "X", k), kScoring));
      detail += (k > 2 ? " " : "") + to_decimal(v.back(), 6);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < v.size(); ++i) monotone = monotone && v[i] >= v[i - 1];
    const bool close = std::fabs(to_double(v.back()) - 0.809017) < 0.05;
    std::string actual = std::string(monotone ? "monotone" : "not monotone") + ", |v(10) - 0.809017| " +
                         (close ? "< 0.05" : ">= 0.05");
    return Observation{actual, "k=2..10: " + detail};
  });

  // 10
  reference("hb-H2-vA", 10, "2", [] {
    return Observation{std::to_string(sums::v_A(*gexpr::compile("hb[BB]"))), "hb[BB]"};
  });
  reference("hb-fig5G-outcomes", 10, "[[D,L],[L,D]]", [] { return fig_matrix("hb:fig5G", "outcome"); });
  reference("hb-fig5G-ex", 10, "[[0,1],[1,0]]", [] { return fig_matrix("hb:fig5G", "ex"); });
  reference("hb-fig5G-scores", 10, "[[0,1],[1,0]]", [] { return fig_matrix("hb:fig5G", "score"); });
  reference("hb-fig5H-outcomes", 10, "[[L],[L],[L]]", [] { return fig_matrix("hb:fig5H", "outcome"); });
  reference("hb-fig5H-ex", 10, "[[1],[1],[1]]", [] { return fig_matrix("hb:fig5H", "ex"); });
  reference("hb-fig5H-scores", 10, "[[2],[1],[2]]", [] { return fig_matrix("hb:fig5H", "score"); });
  prop("hb-stalk-score-formula", 10, "all 56", [] {
    std::size_t ok = 0;
    const auto stalks = conforming_stalks(7);
    std::string bad;
    for (const auto& c : stalks) {
      Rational v = ex(rulesets::make_stalk(c), kScoring);
      if (v == analysis::stalk_score_formula(c)) ++ok;
      else if (bad.empty()) bad = c + " -> " + to_string(v);
    }
    return Observation{all_or_count(ok, stalks.size()), bad};
  });
  prop("hb-cordon-score", 10, "all 46", [] {
    std::size_t ok = 0, total = 0;
    std::string bad;
    // Each leaf colour gets a multiset of attachment vertices.
    std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)> multisets =
        [&](int lo, int hi, int count, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
          if (static_cast<int>(cur.size()) == count) {
            out.push_back(cur);
            return;
          }
          for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            multisets(v, hi, count, cur, out);
            cur.pop_back();
          }
        };
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
          std::vector<std::vector<int>> blues, reds;
          std::vector<int> cur;
          multisets(1, n - 1, a, cur, blues);
          multisets(1, n - 1, b, cur, reds);
          for (const auto& bl : blues)
            for (const auto& rd : reds) {
              std::vector<rulesets::CordonLeaf> leaves;
              for (int v : bl) leaves.push_back({v, rulesets::EdgeColor::Blue});
              for (int v : rd) leaves.push_back({v, rulesets::EdgeColor::Red});
              std::stable_sort(leaves.begin(), leaves.end(),
                               [](const auto& x, const auto& y) { return x.attach < y.attach; });
              ++total;
              Rational v = ex(rulesets::make_cordon(n, leaves), kScoring);
              if (v == n + a - b) ++ok;
              else if (bad.empty()) bad = "n=" + std::to_string(n) + " -> " + to_string(v);
            }
        }
    return Observation{all_or_count(ok, total), bad};
  });
  prop("hb-two-blue-ell", 10, "all 63", [] {
    std::size_t ok = 0, total = 0;
    for (int len = 2; len <= 7; ++len)
      for (int mask = 0; mask < (1 << (len - 2)); ++mask) {
        std::string c = "BB";
        for (int i = 0; i < len - 2; ++i) c += (mask >> i) & 1 ? 'R' : 'B';
        ++total;
        if (guarantee_profile(rulesets::make_stalk(c), kNormal).ell == 1) ++ok;
      }
    return Observation{all_or_count(ok, total), "stalks starting BB, length 2..7"};
  });
  prop("hb-alternating-ell", 10, "all 3", [] {
    std::size_t ok = 0;
    for (const char* c : {"BR", "BRBR", "BRBRBR"})
      if (sgn(guarantee_profile(rulesets::make_stalk(c), kNormal).ell) == 0) ++ok;
    return Observation{all_or_count(ok, 3), "BR, BRBR, BRBRBR"};
  });

  // 11
  const char ops[3] = {'+', '^', 'v'};
  const char* names[3] = {"disj", "conj", "cc"};
  const char* normal[3] = {"R", "R", "D"};
  const char* scoring[3] = {"-1/2", "-1", "-1/2"};
  for (int k = 0; k < 3; ++k) {
    const std::string text = table5(ops[k]);
    reference(std::string("table5-normal-") + names[k], 11, normal[k], [text] {
      Rational v = ex(text, kNormal);
      return Observation{std::string(1, outcome_letter(outcome_of(v))), "Ex = " + to_string(v)};
    });
    reference(std::string("table5-scoring-") + names[k], 11, scoring[k], [text] { return value_of(text, kScoring); });
  }

  // 12
  prop("solver-support-enumeration", 12, "all 1000", [] {
    std::mt19937 rng(20240607);
    std::size_t ok = 0;
    for (int t = 0; t < 1000; ++t) {
      auto a = random_matrix(rng);
      if (matgame::game_value(a).value == matgame::support_enumeration_value(a)) ++ok;
    }
    return Observation{all_or_count(ok, 1000), "seed 20240607, entries {-2..2}/d"};
  });
  prop("solver-fictitious-play", 12, "all 1000", [] {
    std::mt19937 rng(20240607);
    std::size_t ok = 0;
    for (int t = 0; t < 1000; ++t) {
      auto a = random_matrix(rng);
      Rational v = matgame::game_value(a).value;
      auto br = matgame::fictitious_play(a, 200);
      if (br.lo <= v && v <= br.hi) ++ok;
    }
    return Observation{all_or_count(ok, 1000), "200 iterations each"};
  });
  prop("solver-dominance", 12, "all 1000", [] {
    std::mt19937 rng(20240607);
    std::size_t ok = 0;
    for (int t = 0; t < 1000; ++t) {
      auto a = random_matrix(rng);
      if (matgame::game_value(matgame::eliminate_dominated(a).matrix).value == matgame::game_value(a).value) ++ok;
    }
    return Observation{all_or_count(ok, 1000), ""};
  });

  // 13
  prop("oracle-manifest", 13, "all agree", [] {
    std::size_t checked = 0, agree = 0, skipped = 0;
    std::string bad;
    for (const auto& mp : manifest_positions()) {
      const Position p = gexpr::compile(mp.expr);
      Rational brute;
      try {
        brute = oracle::brute_ex(p, mp.convention);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeLimit) throw;
        ++skipped;
        continue;
      }
      ++checked;
      if (brute == ex(p, mp.convention)) ++agree;
      else if (bad.empty()) bad = mp.expr;
    }
    return Observation{agree == checked && checked > 0 ? "all agree" : all_or_count(agree, checked),
                       std::to_string(checked) + " checked, " + std::to_string(skipped) + " over the bound" +
                           (bad.empty() ? "" : "; first mismatch " + bad)};
  });
  prop("index-bounds-and-product", 13, "all 100", [] {
    const auto sample = index_sample();
    Evaluator ev;
    std::vector<Position> ps;
    std::vector<GuaranteeProfile> prof;
    for (const auto& s : sample) {
      ps.push_back(gexpr::compile(s));
      prof.push_back(ev.guarantee_profile(ps.back()));
    }
    std::size_t ok = 0, total = 0;
    std::string bad;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        ++total;
        auto g = ev.guarantee_profile(sums::continued_conjunctive(ps[i], ps[j]));
        const bool bounds = sgn(g.ell) >= 0 && sgn(g.arr) >= 0 && g.ell + g.arr <= 1;
        const bool product = g.ell == prof[i].ell * prof[j].ell && g.arr == prof[i].arr * prof[j].arr;
        if (bounds && product) ++ok;
        else if (bad.empty())
          bad = sample[i] + " v " + sample[j] + " -> [" + to_string(g.ell) + ", " + to_string(g.arr) + "]";
      }
    return Observation{all_or_count(ok, total), bad};
  });

  // 14
  prop("sq12-closed-form", 14, "all 26", [] {
    auto seq = analysis::sq_expected_sequence(1, 2, 25);
    std::size_t ok = 0;
    for (int n = 0; n <= 25; ++n) ok += analysis::sq12_closed_form(n) == seq[n];
    return Observation{all_or_count(ok, 26), "n = 0..25"};
  });
  prop("sq-recurrence-engine", 14, "all 78", [] {
    std::size_t ok = 0;
    for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      EvalOptions o;
      Evaluator ev(o);
      auto seq = analysis::sq_expected_sequence(a, b, 25);
      for (int n = 0; n <= 25; ++n) ok += ev.value(rulesets::make_sq({a}, {b}, n)) == seq[n];
    }
    return Observation{all_or_count(ok, 78), "(1,2), (1,3), (2,3); n = 0..25"};
  });
  reference("sq12-limit", 14, "all 41", [] {
    std::size_t ok = 0;
    Evaluator ev;
    std::string detail;
    for (int n = 20; n <= 60; ++n) {
      Rational v = n <= 30 ? ev.value(rulesets::make_sq({1}, {2}, n)) : analysis::sq12_closed_form(n);
      if (std::fabs(to_double(v) - 0.4) < 1e-3) ++ok;
      if (n == 20) detail = "Ex(20) = " + to_decimal(v, 6);
    }
    return Observation{all_or_count(ok, 41), detail + "; engine n <= 30, closed form above"};
  });

  // Supplementary checks tied to worked examples.
  reference("dead-end-A-plus-B", 0, "2", [] {
    return value_of("x{L:[s(-5)] | R:[] | LR:[]} + x{L:[] | R:[s(7)] | LR:[]}", kScoring);
  });
  return m;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "paper") return Suite::Reference;
  if (name == "properties") return Suite::Properties;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Reference: return "paper";
    case Suite::Properties: return "properties";
    case Suite::All: return "all";
  }
  return "?";
}

const std::vector<Check>& manifest() {
  static const std::vector<Check> m = build_manifest();
  return m;
}

const std::vector<ManifestPosition>& manifest_positions() {
  static const std::vector<ManifestPosition> ps = [] {
    std::vector<ManifestPosition> out = {
        {"sq{1}{2}(3)", kNormal},
        {"sq{1}{2}(2) + sq{1}{2}(2)", kNormal},
        {"sq{1}{2}(2)", kNormal},
        {"sq'{1}{2}(5)", kNormal},
        {"sq'{1}{2}(6)", kNormal},
        {"sq'{1}{2}(5) ^ sq'{1}{2}(6)", kNormal},
        {"sq'{1}{2}(3) ^ sq'{1}{2}(3)", kNormal},
        {"sq'{1}{2}(3) ^ sq'{1}{2}(4)", kNormal},
        {"sq'{1,4}{2}(4)", kNormal},
        {"sq'{1,4}{2}(4) v sq'{1,4}{2}(3)", kNormal},
        {kAdversarial, kNormal},
        {kAdversarial + " v o(R)", kNormal},
        {"cl:K2", kScoring},
        {"cl:K3", kScoring},
        {"cl:K4", kScoring},
        {"cl:K5", kScoring},
        {"cl:K6", kScoring},
        {"cl:K7", kScoring},
        {"cl[OX]", kScoring},
        {"cl[OOX]", kScoring},
        {"cl[OX] + cl[XO] + s(1)", kScoring},
        {"hb[BB]", kScoring},
        {"hb:fig5G", kNormal},
        {"hb:fig5G", kScoring},
        {"hb:fig5H", kNormal},
        {"hb:fig5H", kScoring},
        {"x{L:[s(-5)] | R:[] | LR:[]} + x{L:[] | R:[s(7)] | LR:[]}", kScoring},
    };
    for (int k = 2; k <= 10; ++k) out.push_back({strip_of(k, "X", k), kScoring});
    for (char op : {'+', '^', 'v'}) {
      out.push_back({table5(op), kNormal});
      out.push_back({table5(op), kScoring});
    }
    return out;
  }();
  return ps;
}

std::vector<CheckResult> run_suite(Suite suite, Execution execution) {
  std::vector<const Check*> selected;
  for (const auto& c : manifest())
    if (suite == Suite::All || c.suite == suite) selected.push_back(&c);

  std::vector<CheckResult> results(selected.size());
  auto run_one = [&](std::size_t i) {
    const Check& c = *selected[i];
    CheckResult& r = results[i];
    r.id = c.id;
    r.criterion = c.criterion;
    r.expected = c.expected;
    auto t0 = Clock::now();
    try {
      Observation o = c.run();
      r.actual = std::move(o.actual);
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.passed = r.actual == r.expected;
  };

  const long n = static_cast<long>(selected.size());
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  }
  return results;
}

}  // namespace simulgame::verify
