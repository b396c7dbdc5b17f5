#include "simulgame/position.hpp"

#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>

#include "simulgame/sums.hpp"

namespace simulgame {

const char* convention_name(Convention c) noexcept {
  return c == Convention::Scoring ? "scoring" : "normal";
}

char outcome_letter(Outcome o) noexcept {
  switch (o) {
    case Outcome::LeftWin: return 'L';
    case Outcome::RightWin: return 'R';
    case Outcome::Draw: break;
  }
  return 'D';
}

void OptionList::add(std::string label, Position p) {
  labels.push_back(std::move(label));
  positions.push_back(std::move(p));
}

Game::Game(std::string tag, std::string key) : tag_(std::move(tag)), key_(std::move(key)) {}

MoveMatrix Game::move_matrix() const {
  MoveMatrix mm;
  OptionList left = left_options();
  OptionList right = right_options();
  if (left.empty() || right.empty()) return mm;
  mm.row_labels = std::move(left.labels);
  mm.col_labels = std::move(right.labels);
  mm.cells.reserve(mm.rows() * mm.cols());
  for (std::size_t i = 0; i < mm.rows(); ++i)
    for (std::size_t j = 0; j < mm.cols(); ++j) mm.cells.push_back(simultaneous(i, j));
  return mm;
}

Rational Game::terminal_score() const { return Rational(sums::v_A(*this)); }

Outcome terminal_outcome(const Game& g) {
  const bool left = g.has_left_moves();
  const bool right = g.has_right_moves();
  if (left && !right) return Outcome::LeftWin;
  if (right && !left) return Outcome::RightWin;
  return Outcome::Draw;
}

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::set<std::string, std::less<>> tags{"sq", "cl", "hb", "x", "s", "o", "+", "^", "v"};
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_registered_ruleset(const std::string& tag) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return r.tags.count(tag) != 0;
}

void register_ruleset(const std::string& tag) {
  auto& r = registry();
  std::unique_lock lock(r.mutex);
  r.tags.insert(tag);
}

}  // namespace simulgame
