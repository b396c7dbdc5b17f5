#include "simulgame/sums.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <unordered_map>

#include "simulgame/error.hpp"

namespace simulgame::sums {

namespace {

std::string sum_key(SumKind kind, const std::vector<Position>& components) {
  std::vector<std::string> keys;
  keys.reserve(components.size());
  for (const auto& c : components) keys.push_back(c->key());
  std::sort(keys.begin(), keys.end());
  const std::string sep = std::string(" ") + sum_symbol(kind) + " ";
  std::string s = "(";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) s += sep;
    s += keys[i];
  }
  return s + ")";
}

std::vector<Position> replaced(const std::vector<Position>& xs, std::size_t i, Position p) {
  std::vector<Position> out = xs;
  out[i] = std::move(p);
  return out;
}

// Calls visit(digits) for every index tuple with digits[k] < radix[k],
// last position varying fastest.
void for_each_tuple(const std::vector<std::size_t>& radix,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  for (auto r : radix)
    if (r == 0) return;
  std::vector<std::size_t> digits(radix.size(), 0);
  for (;;) {
    visit(digits);
    std::size_t k = radix.size();
    while (k > 0) {
      --k;
      if (++digits[k] < radix[k]) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (radix.empty()) return;
  }
}

std::string tuple_label(const std::vector<const std::vector<std::string>*>& labels,
                        const std::vector<std::size_t>& digits) {
  std::string s = "(";
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) s += ",";
    s += (*labels[k])[digits[k]];
  }
  return s + ")";
}

}  // namespace

char sum_symbol(SumKind kind) noexcept {
  switch (kind) {
    case SumKind::Disjunctive: return '+';
    case SumKind::Conjunctive: return '^';
    case SumKind::ContinuedConjunctive: return 'v';
  }
  return '?';
}

SumGame::SumGame(SumKind kind, std::vector<Position> components)
    : Game(std::string(1, sum_symbol(kind)), sum_key(kind, components)),
      kind_(kind),
      components_(std::move(components)) {}

bool SumGame::has_left_moves() const {
  auto has = [](const Position& c) { return c->has_left_moves(); };
  switch (kind_) {
    case SumKind::Disjunctive:
      return std::any_of(components_.begin(), components_.end(), has);
    case SumKind::Conjunctive:
      return std::all_of(components_.begin(), components_.end(), has);
    case SumKind::ContinuedConjunctive:
      return std::any_of(components_.begin(), components_.end(),
                         [](const Position& c) { return !c->is_terminal(); }) ||
             std::all_of(components_.begin(), components_.end(), has);
  }
  return false;
}

bool SumGame::has_right_moves() const {
  auto has = [](const Position& c) { return c->has_right_moves(); };
  switch (kind_) {
    case SumKind::Disjunctive:
      return std::any_of(components_.begin(), components_.end(), has);
    case SumKind::Conjunctive:
      return std::all_of(components_.begin(), components_.end(), has);
    case SumKind::ContinuedConjunctive:
      return std::any_of(components_.begin(), components_.end(),
                         [](const Position& c) { return !c->is_terminal(); }) ||
             std::all_of(components_.begin(), components_.end(), has);
  }
  return false;
}

OptionList SumGame::unilateral(bool left) const {
  OptionList out;
  std::vector<OptionList> per;
  per.reserve(components_.size());
  for (const auto& c : components_) per.push_back(left ? c->left_options() : c->right_options());

  if (kind_ == SumKind::Disjunctive) {
    for (std::size_t i = 0; i < per.size(); ++i)
      for (std::size_t a = 0; a < per[i].size(); ++a)
        out.add(std::to_string(i + 1) + ":" + per[i].labels[a],
                make_sum(kind_, replaced(components_, i, per[i].positions[a])));
    return out;
  }

  // Product over the moving components; the others are carried unchanged.
  std::vector<std::size_t> moving;
  if (kind_ == SumKind::ContinuedConjunctive)
    for (std::size_t i = 0; i < components_.size(); ++i)
      if (!components_[i]->is_terminal()) moving.push_back(i);
  if (moving.empty())
    for (std::size_t i = 0; i < components_.size(); ++i) moving.push_back(i);

  std::vector<std::size_t> radix;
  std::vector<const std::vector<std::string>*> labels;
  for (auto i : moving) {
    radix.push_back(per[i].size());
    labels.push_back(&per[i].labels);
  }
  for_each_tuple(radix, [&](const std::vector<std::size_t>& digits) {
    std::vector<Position> next = components_;
    for (std::size_t k = 0; k < moving.size(); ++k) next[moving[k]] = per[moving[k]].positions[digits[k]];
    out.add(tuple_label(labels, digits), make_sum(kind_, std::move(next)));
  });
  return out;
}

OptionList SumGame::left_options() const { return unilateral(true); }
OptionList SumGame::right_options() const { return unilateral(false); }

MoveMatrix SumGame::move_matrix() const {
  switch (kind_) {
    case SumKind::Disjunctive: return disjunctive_options(*this);
    case SumKind::Conjunctive: return conjunctive_options(*this);
    case SumKind::ContinuedConjunctive: return continued_conjunctive_options(*this);
  }
  return {};
}

Position SumGame::simultaneous(std::size_t left, std::size_t right) const {
  return move_matrix().at(left, right);
}

Rational SumGame::terminal_score() const {
  Rational total = 0;
  switch (kind_) {
    case SumKind::Disjunctive:
      return disjunctive_terminal_score(*this);
    case SumKind::Conjunctive:
      for (const auto& c : components_)
        if (c->is_terminal()) total += c->terminal_score();
      return total;
    case SumKind::ContinuedConjunctive:
      for (const auto& c : components_) total += c->terminal_score();
      return total;
  }
  return total;
}

std::string SumGame::render() const {
  const std::string sep = std::string(" ") + sum_symbol(kind_) + " ";
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += sep;
    const bool nested = dynamic_cast<const SumGame*>(components_[i].get()) != nullptr;
    s += nested ? "(" + components_[i]->render() + ")" : components_[i]->render();
  }
  return s;
}

Position make_sum(SumKind kind, std::vector<Position> components) {
  std::vector<Position> flat;
  for (auto& c : components) {
    if (!c) throw Error(ErrorCode::BadParameters, "null sum component");
    auto* s = dynamic_cast<const SumGame*>(c.get());
    if (s && s->kind() == kind)
      flat.insert(flat.end(), s->components().begin(), s->components().end());
    else
      flat.push_back(std::move(c));
  }
  if (flat.size() < 2) throw Error(ErrorCode::BadParameters, "a sum needs at least two components");
  return std::make_shared<SumGame>(kind, std::move(flat));
}

Position disjunctive(const Position& a, const Position& b) { return make_sum(SumKind::Disjunctive, {a, b}); }
Position conjunctive(const Position& a, const Position& b) { return make_sum(SumKind::Conjunctive, {a, b}); }
Position continued_conjunctive(const Position& a, const Position& b) {
  return make_sum(SumKind::ContinuedConjunctive, {a, b});
}

MoveMatrix disjunctive_options(const SumGame& s) {
  MoveMatrix mm;
  if (s.is_terminal()) return mm;
  const auto& comps = s.components();
  const std::size_t k = comps.size();
  std::vector<OptionList> left(k), right(k);
  std::vector<MoveMatrix> local(k);
  struct Pick { std::size_t comp, option; };
  std::vector<Pick> rows, cols;
  for (std::size_t i = 0; i < k; ++i) {
    left[i] = comps[i]->left_options();
    right[i] = comps[i]->right_options();
    if (!left[i].empty() && !right[i].empty()) local[i] = comps[i]->move_matrix();
    for (std::size_t a = 0; a < left[i].size(); ++a) {
      rows.push_back({i, a});
      mm.row_labels.push_back(std::to_string(i + 1) + ":" + left[i].labels[a]);
    }
    for (std::size_t b = 0; b < right[i].size(); ++b) {
      cols.push_back({i, b});
      mm.col_labels.push_back(std::to_string(i + 1) + ":" + right[i].labels[b]);
    }
  }
  mm.cells.reserve(rows.size() * cols.size());
  for (const auto& r : rows)
    for (const auto& c : cols) {
      std::vector<Position> next = comps;
      if (r.comp == c.comp) {
        next[r.comp] = local[r.comp].at(r.option, c.option);
      } else {
        next[r.comp] = left[r.comp].positions[r.option];
        next[c.comp] = right[c.comp].positions[c.option];
      }
      mm.cells.push_back(make_sum(SumKind::Disjunctive, std::move(next)));
    }
  return mm;
}

namespace {

MoveMatrix product_options(const SumGame& s, const std::vector<std::size_t>& moving) {
  MoveMatrix mm;
  const auto& comps = s.components();
  std::vector<MoveMatrix> local;
  std::vector<std::size_t> rows_radix, cols_radix;
  std::vector<const std::vector<std::string>*> row_labels, col_labels;
  local.reserve(moving.size());
  for (auto i : moving) local.push_back(comps[i]->move_matrix());
  for (const auto& m : local) {
    rows_radix.push_back(m.rows());
    cols_radix.push_back(m.cols());
    row_labels.push_back(&m.row_labels);
    col_labels.push_back(&m.col_labels);
  }
  std::vector<std::vector<std::size_t>> row_tuples, col_tuples;
  for_each_tuple(rows_radix, [&](const std::vector<std::size_t>& d) {
    row_tuples.push_back(d);
    mm.row_labels.push_back(tuple_label(row_labels, d));
  });
  for_each_tuple(cols_radix, [&](const std::vector<std::size_t>& d) {
    col_tuples.push_back(d);
    mm.col_labels.push_back(tuple_label(col_labels, d));
  });
  mm.cells.reserve(row_tuples.size() * col_tuples.size());
  for (const auto& rt : row_tuples)
    for (const auto& ct : col_tuples) {
      std::vector<Position> next = comps;
      for (std::size_t k = 0; k < moving.size(); ++k) next[moving[k]] = local[k].at(rt[k], ct[k]);
      mm.cells.push_back(make_sum(s.kind(), std::move(next)));
    }
  return mm;
}

}  // namespace

MoveMatrix conjunctive_options(const SumGame& s) {
  const auto& comps = s.components();
  for (const auto& c : comps)
    if (c->is_terminal()) return {};
  std::vector<std::size_t> all(comps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return product_options(s, all);
}

MoveMatrix continued_conjunctive_options(const SumGame& s) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < s.components().size(); ++i)
    if (!s.components()[i]->is_terminal()) active.push_back(i);
  if (active.empty()) return {};
  return product_options(s, active);
}

Rational disjunctive_terminal_score(const SumGame& s) {
  Rational total = 0;
  for (const auto& c : s.components()) total += c->terminal_score();
  return total;
}

namespace {

std::int64_t chain(const Game& g, bool left, std::unordered_map<std::string, std::int64_t>& memo) {
  if (auto it = memo.find(g.key()); it != memo.end()) return it->second;
  std::int64_t best = 0;
  const OptionList opts = left ? g.left_options() : g.right_options();
  for (const auto& o : opts.positions) {
    const bool opponent_still_stuck = left ? !o->has_right_moves() : !o->has_left_moves();
    if (opponent_still_stuck) best = std::max(best, 1 + chain(*o, left, memo));
  }
  memo.emplace(g.key(), best);
  return best;
}

}  // namespace

std::int64_t v_A(const Game& g) {
  const bool left = g.has_left_moves();
  const bool right = g.has_right_moves();
  if (left && right) throw Error(ErrorCode::NotTerminal, g.render() + " is not terminal");
  if (!left && !right) return 0;
  std::unordered_map<std::string, std::int64_t> memo;
  return left ? chain(g, true, memo) : -chain(g, false, memo);
}

}  // namespace simulgame::sums
