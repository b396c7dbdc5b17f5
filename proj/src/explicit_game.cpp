#include <memory>

#include "simulgame/error.hpp"
#include "simulgame/rulesets.hpp"

namespace simulgame::rulesets {

namespace {

template <class Text>
std::string explicit_text(const std::vector<Position>& left, const std::vector<Position>& right,
                          const std::vector<std::vector<Position>>& table, Text text) {
  auto list = [&](const std::vector<Position>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += text(xs[i]);
    }
    return s + "]";
  };
  std::string s = "x{L:" + list(left) + " | R:" + list(right) + " | LR:[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) s += ", ";
    s += list(table[i]);
  }
  return s + "]}";
}

std::vector<std::string> default_labels(char side, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(side + std::to_string(i + 1));
  return out;
}

}  // namespace

ExplicitGame::ExplicitGame(std::vector<Position> left, std::vector<Position> right,
                           std::vector<std::vector<Position>> table, std::vector<std::string> left_labels,
                           std::vector<std::string> right_labels)
    : Game("x", explicit_text(left, right, table, [](const Position& p) { return p->key(); })),
      left_(std::move(left)),
      right_(std::move(right)),
      table_(std::move(table)),
      left_labels_(left_labels.empty() ? default_labels('L', left_.size()) : std::move(left_labels)),
      right_labels_(right_labels.empty() ? default_labels('R', right_.size()) : std::move(right_labels)) {}

OptionList ExplicitGame::left_options() const { return {left_labels_, left_}; }
OptionList ExplicitGame::right_options() const { return {right_labels_, right_}; }

Position ExplicitGame::simultaneous(std::size_t left, std::size_t right) const {
  return table_.at(left).at(right);
}

std::string ExplicitGame::render() const {
  return explicit_text(left_, right_, table_, [](const Position& p) { return p->render(); });
}

Position make_explicit(std::vector<Position> left, std::vector<Position> right,
                       std::vector<std::vector<Position>> table, std::vector<std::string> left_labels,
                       std::vector<std::string> right_labels) {
  if (left.empty() || right.empty()) {
    if (!table.empty())
      throw Error(ErrorCode::BadLiteral, "a game with an empty option list has an empty table");
  } else {
    if (table.size() != left.size())
      throw Error(ErrorCode::BadLiteral, "table has " + std::to_string(table.size()) + " rows for " +
                                             std::to_string(left.size()) + " Left options");
    for (const auto& row : table)
      if (row.size() != right.size())
        throw Error(ErrorCode::BadLiteral, "table row width does not match the Right options");
  }
  if (!left_labels.empty() && left_labels.size() != left.size())
    throw Error(ErrorCode::BadLiteral, "Left label count mismatch");
  if (!right_labels.empty() && right_labels.size() != right.size())
    throw Error(ErrorCode::BadLiteral, "Right label count mismatch");
  return std::make_shared<ExplicitGame>(std::move(left), std::move(right), std::move(table),
                                        std::move(left_labels), std::move(right_labels));
}

ScoreLiteral::ScoreLiteral(Rational value) : Game("s", "s(" + value.get_str() + ")"), value_(std::move(value)) {}

Position ScoreLiteral::simultaneous(std::size_t, std::size_t) const {
  throw Error(ErrorCode::IllegalMove, "score literals have no moves");
}

Position make_score(const Rational& value) { return std::make_shared<ScoreLiteral>(value); }

OutcomeLiteral::OutcomeLiteral(Outcome outcome)
    : Game("o", std::string("o(") + outcome_letter(outcome) + ")"), outcome_(outcome) {}

OptionList OutcomeLiteral::left_options() const {
  OptionList out;
  if (outcome_ == Outcome::LeftWin) out.add("o", make_score(0));
  return out;
}

OptionList OutcomeLiteral::right_options() const {
  OptionList out;
  if (outcome_ == Outcome::RightWin) out.add("o", make_score(0));
  return out;
}

Position OutcomeLiteral::simultaneous(std::size_t, std::size_t) const {
  throw Error(ErrorCode::IllegalMove, "outcome literals have no simultaneous moves");
}

Position make_outcome(Outcome outcome) { return std::make_shared<OutcomeLiteral>(outcome); }

}  // namespace simulgame::rulesets
