#include "simulgame/analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "simulgame/error.hpp"
#include "simulgame/matgame.hpp"
#include "simulgame/rulesets.hpp"
#include "simulgame/sums.hpp"

namespace simulgame::analysis {

const char* relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::Less: return "Less";
    case Relation::Equal: return "Equal";
    case Relation::Greater: return "Greater";
    case Relation::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

Position reduce_rec(const Position& p, Evaluator& ev, std::unordered_map<std::string, Position>& memo,
                    std::vector<std::string>& path) {
  if (auto it = memo.find(p->key()); it != memo.end()) return it->second;
  MoveMatrix mm = move_matrix(p);
  if (mm.empty()) return p;
  if (std::find(path.begin(), path.end(), p->key()) != path.end())
    throw Error(ErrorCode::LoopyGame, "position repeats along a play path: " + p->render());

  matgame::PayoffMatrix values(mm.rows(), mm.cols());
  for (std::size_t i = 0; i < mm.rows(); ++i)
    for (std::size_t j = 0; j < mm.cols(); ++j) values(i, j) = ev.value(mm.at(i, j));
  const auto red = matgame::eliminate_dominated(values);

  const OptionList left = p->left_options();
  const OptionList right = p->right_options();
  std::vector<Position> lpos, rpos;
  std::vector<std::string> llab, rlab;
  for (auto i : red.kept_rows) {
    lpos.push_back(left.positions[i]);
    llab.push_back(left.labels[i]);
  }
  for (auto j : red.kept_cols) {
    rpos.push_back(right.positions[j]);
    rlab.push_back(right.labels[j]);
  }

  path.push_back(p->key());
  std::vector<std::vector<Position>> table;
  for (auto i : red.kept_rows) {
    std::vector<Position> row;
    for (auto j : red.kept_cols) row.push_back(reduce_rec(mm.at(i, j), ev, memo, path));
    table.push_back(std::move(row));
  }
  path.pop_back();

  Position out = rulesets::make_explicit(std::move(lpos), std::move(rpos), std::move(table), std::move(llab),
                                         std::move(rlab));
  memo.emplace(p->key(), out);
  return out;
}

struct Gaussian {
  Rational re, im;
  Gaussian operator*(const Gaussian& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
};

Gaussian power(Gaussian base, int n) {
  Gaussian acc{1, 0};
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Relation order(int c) { return c < 0 ? Relation::Less : c > 0 ? Relation::Greater : Relation::Equal; }

}  // namespace

Position reduce_game(const Position& p, Convention convention) {
  EvalOptions o;
  o.convention = convention;
  o.memo_limit = memo_limit_from_env();
  Evaluator ev(o);
  std::unordered_map<std::string, Position> memo;
  std::vector<std::string> path;
  return reduce_rec(p, ev, memo, path);
}

ComparisonResult compare_continued_scoring(const Position& g, const Position& h) {
  EvalOptions o;
  o.convention = Convention::Scoring;
  Evaluator ev(o);
  Rational eg = ev.value(g), eh = ev.value(h);
  return {order(cmp(eg, eh)), {eg, eh}};
}

ComparisonResult compare_index(const Position& g, const Position& h) {
  Evaluator ev;
  const auto pg = ev.guarantee_profile(g);
  const auto ph = ev.guarantee_profile(h);
  std::vector<Rational> witness{pg.ell, pg.arr, ph.ell, ph.arr};
  const int dl = cmp(pg.ell, ph.ell);
  const int dr = cmp(pg.arr, ph.arr);
  Relation rel;
  if (dl == 0 && dr == 0) rel = Relation::Equal;
  else if (dl >= 0 && dr <= 0) rel = Relation::Greater;
  else if (dl <= 0 && dr >= 0) rel = Relation::Less;
  else rel = Relation::Incomparable;
  return {rel, std::move(witness)};
}

std::vector<Rational> sq_expected_sequence(int a, int b, int n_max) {
  if (a < 1 || b <= a) throw Error(ErrorCode::BadParameters, "need 1 <= a < b");
  if (n_max < 0) throw Error(ErrorCode::BadParameters, "need N >= 0");
  std::vector<Rational> ex(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n < a) ex[n] = 0;
    else if (n < b) ex[n] = 1;
    else ex[n] = (ex[n - b] + ex[std::max(0, n - b - a)]) / 2;
  }
  return ex;
}

Rational sq12_closed_form(int n) {
  if (n < 0) throw Error(ErrorCode::BadParameters, "need n >= 0");
  const Rational half(1, 2);
  Gaussian t1 = Gaussian{1, 2} * power({-half, half}, n);
  Gaussian t2 = Gaussian{1, -2} * power({-half, -half}, n);
  Gaussian sum = t1 + t2;
  if (sgn(sum.im) != 0) throw std::logic_error("closed form left an imaginary part");
  return (2 - sum.re) / 5;
}

Rational clobber_kn_expected(int n) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "K_n needs n >= 2");
  return ratio(n, 2) - 1;
}

long stalk_score_formula(const std::string& colors) {
  if (colors.empty()) throw Error(ErrorCode::BadStalk, "empty stalk");
  for (char c : colors)
    if (c != 'B' && c != 'R') throw Error(ErrorCode::BadStalk, "stalks must be blue/red only");
  std::size_t run = 1;
  while (run < colors.size() && colors[run] == colors[0]) ++run;
  for (std::size_t i = run + 1; i < colors.size(); ++i)
    if (colors[i] == colors[i - 1])
      throw Error(ErrorCode::BadStalk, "'" + colors + "' does not alternate after its first run");
  long n = static_cast<long>(run);
  long score = colors.back() == colors.front() ? n : n - 1;
  return colors.front() == 'B' ? score : -score;
}

Position substitute_component_values(const Position& p, Convention convention) {
  EvalOptions o;
  o.convention = convention;
  Evaluator ev(o);
  if (auto* s = dynamic_cast<const sums::SumGame*>(p.get())) {
    std::vector<Position> parts;
    for (const auto& c : s->components()) parts.push_back(rulesets::make_score(ev.value(c)));
    return sums::make_sum(s->kind(), std::move(parts));
  }
  return rulesets::make_score(ev.value(p));
}

}  // namespace simulgame::analysis
