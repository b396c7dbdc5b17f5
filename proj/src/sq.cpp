#include <algorithm>
#include <map>
#include <memory>

#include "simulgame/error.hpp"
#include "simulgame/rulesets.hpp"

namespace simulgame::rulesets {

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string sq_key(const SqRules& r, int n) {
  std::string s = "sq";
  if (!r.left_forbidden.empty()) {
    s += '\'';
    if (r.left_forbidden != std::set<int>{2})
      s += "[" + join_ints(std::vector<int>(r.left_forbidden.begin(), r.left_forbidden.end())) + "]";
  }
  s += "{" + join_ints(r.left_set) + "}{" + join_ints(r.right_set) + "}(" + std::to_string(n) + ")";
  return s;
}

std::vector<SqMove> moves_from(const std::vector<int>& set, int n) {
  std::vector<SqMove> out;
  for (int a : set) {
    if (a > n) break;
    out.push_back({a, Side::Left});
    out.push_back({a, Side::Right});
  }
  return out;
}

std::string label(const SqMove& m) {
  return std::to_string(m.amount) + (m.side == Side::Left ? "l" : "r");
}

std::vector<int> normalized(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

SqGame::SqGame(SqRules rules, int n) : Game("sq", sq_key(rules, n)), rules_(std::move(rules)), n_(n) {}

std::vector<SqMove> SqGame::left_moves() const {
  if (rules_.left_forbidden.count(n_)) return {};
  return moves_from(rules_.left_set, n_);
}

std::vector<SqMove> SqGame::right_moves() const { return moves_from(rules_.right_set, n_); }

bool SqGame::has_left_moves() const {
  return !rules_.left_forbidden.count(n_) && rules_.left_set.front() <= n_;
}

bool SqGame::has_right_moves() const { return rules_.right_set.front() <= n_; }

OptionList SqGame::left_options() const {
  OptionList out;
  for (const auto& m : left_moves()) {
    int rest = n_ - m.amount;
    out.add(label(m), std::make_shared<SqGame>(rules_, rest));
  }
  return out;
}

OptionList SqGame::right_options() const {
  OptionList out;
  for (const auto& m : right_moves()) out.add(label(m), std::make_shared<SqGame>(rules_, n_ - m.amount));
  return out;
}

MoveMatrix SqGame::move_matrix() const {
  MoveMatrix mm;
  const auto lm = left_moves();
  const auto rm = right_moves();
  if (lm.empty() || rm.empty()) return mm;
  std::map<int, Position> by_length;
  for (const auto& m : lm) mm.row_labels.push_back(label(m));
  for (const auto& m : rm) mm.col_labels.push_back(label(m));
  for (const auto& l : lm)
    for (const auto& r : rm) {
      int len = sq_simultaneous_length(*this, l, r);
      auto& slot = by_length[len];
      if (!slot) slot = std::make_shared<SqGame>(rules_, len);
      mm.cells.push_back(slot);
    }
  return mm;
}

Position SqGame::simultaneous(std::size_t left, std::size_t right) const {
  return sq_simultaneous(*this, left_moves().at(left), right_moves().at(right));
}

int sq_simultaneous_length(const SqGame& p, SqMove left, SqMove right) {
  const int n = p.length();
  const auto& r = p.rules();
  auto legal = [n](const std::vector<int>& set, const SqMove& m) {
    return m.amount <= n && std::binary_search(set.begin(), set.end(), m.amount);
  };
  if (!legal(r.left_set, left) || r.left_forbidden.count(n))
    throw Error(ErrorCode::IllegalMove, "Left cannot take " + label(left) + " from " + p.key());
  if (!legal(r.right_set, right))
    throw Error(ErrorCode::IllegalMove, "Right cannot take " + label(right) + " from " + p.key());

  if (left.side == right.side) return n - std::max(left.amount, right.amount);
  // Opposite ends: overlapping takes empty the strip.
  return std::max(0, n - left.amount - right.amount);
}

Position sq_simultaneous(const SqGame& p, SqMove left, SqMove right) {
  return std::make_shared<SqGame>(p.rules(), sq_simultaneous_length(p, left, right));
}

Position make_sq(const std::vector<int>& left_set, const std::vector<int>& right_set, int n,
                 const std::set<int>& left_forbidden) {
  SqRules rules{normalized(left_set), normalized(right_set), left_forbidden};
  if (rules.left_set.empty() || rules.right_set.empty())
    throw Error(ErrorCode::BadLiteral, "subtraction sets must be nonempty");
  if (rules.left_set.front() <= 0 || rules.right_set.front() <= 0)
    throw Error(ErrorCode::BadLiteral, "subtraction amounts must be positive");
  if (n < 0) throw Error(ErrorCode::BadLiteral, "strip length must be >= 0");
  return std::make_shared<SqGame>(std::move(rules), n);
}

Position make_sq_primed(const std::vector<int>& left_set, const std::vector<int>& right_set, int n) {
  return make_sq(left_set, right_set, n, {2});
}

Position sq_swap(const SqGame& p) {
  if (!p.rules().left_forbidden.empty())
    throw Error(ErrorCode::BadParameters, "role swap undefined with a forbidden-length filter");
  return make_sq(p.rules().right_set, p.rules().left_set, p.length());
}

}  // namespace simulgame::rulesets
