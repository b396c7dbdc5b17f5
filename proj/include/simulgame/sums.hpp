#pragma once

#include <cstdint>
#include <vector>

#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"

namespace simulgame::sums {

enum class SumKind { Disjunctive, Conjunctive, ContinuedConjunctive };

/// '+', '^' or 'v' (the gexpr operator and the position tag).
char sum_symbol(SumKind kind) noexcept;

/// n-ary sum over at least two components. Same-kind children are flattened
/// by make_sum; the key sorts component keys, so commuted sums share a key.
class SumGame final : public Game {
 public:
  SumGame(SumKind kind, std::vector<Position> components);

  SumKind kind() const noexcept { return kind_; }
  const std::vector<Position>& components() const noexcept { return components_; }

  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override;
  bool has_right_moves() const override;
  MoveMatrix move_matrix() const override;
  Rational terminal_score() const override;
  std::string render() const override;

 protected:
  Position simultaneous(std::size_t left, std::size_t right) const override;

 private:
  OptionList unilateral(bool left) const;

  SumKind kind_;
  std::vector<Position> components_;
};

/// Throws BadParameters for fewer than two components.
Position make_sum(SumKind kind, std::vector<Position> components);
Position disjunctive(const Position& a, const Position& b);
Position conjunctive(const Position& a, const Position& b);
Position continued_conjunctive(const Position& a, const Position& b);

/// Rows: every component's Left options; a row and column in different
/// components advance both, in the same component use its simultaneous table.
MoveMatrix disjunctive_options(const SumGame& s);
/// Componentwise product; empty once any component is terminal.
MoveMatrix conjunctive_options(const SumGame& s);
/// Product over the components where both players still move; the rest wait.
MoveMatrix continued_conjunctive_options(const SumGame& s);

/// Scoring terminal score of a disjunctive sum: the sum of component scores.
Rational disjunctive_terminal_score(const SumGame& s);

/// Longest run of moves the mobile player makes without giving the opponent
/// a move; negative when Right is the mobile player. Throws NotTerminal when
/// both players can move.
std::int64_t v_A(const Game& g);

}  // namespace simulgame::sums
