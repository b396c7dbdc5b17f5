#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"

namespace simulgame::rulesets {

// ---------------------------------------------------------------------------
// Subtraction squares: a strip of n squares; a move removes p squares (p in
// the player's set) from the left or right end.

enum class Side { Left, Right };

struct SqRules {
  std::vector<int> left_set;          // sorted, distinct, positive
  std::vector<int> right_set;
  std::set<int> left_forbidden;       // strip lengths where Left may not move

  bool operator==(const SqRules&) const = default;
};

struct SqMove {
  int amount;
  Side side;
};

class SqGame final : public Game {
 public:
  SqGame(SqRules rules, int n);

  const SqRules& rules() const noexcept { return rules_; }
  int length() const noexcept { return n_; }
  bool primed() const noexcept { return rules_.left_forbidden == std::set<int>{2}; }

  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override;
  bool has_right_moves() const override;
  MoveMatrix move_matrix() const override;
  std::string render() const override { return key(); }

  std::vector<SqMove> left_moves() const;
  std::vector<SqMove> right_moves() const;

 protected:
  Position simultaneous(std::size_t left, std::size_t right) const override;

 private:
  SqRules rules_;
  int n_;
};

/// Throws BadLiteral on empty or non-positive sets or negative n.
Position make_sq(const std::vector<int>& left_set, const std::vector<int>& right_set, int n,
                 const std::set<int>& left_forbidden = {});
/// The primed variant: Left may not move on a strip of length 2.
Position make_sq_primed(const std::vector<int>& left_set, const std::vector<int>& right_set, int n);

/// Strip length after both moves. Throws IllegalMove if either is not legal.
int sq_simultaneous_length(const SqGame& p, SqMove left, SqMove right);
Position sq_simultaneous(const SqGame& p, SqMove left, SqMove right);

/// Role swap (S_L, S_R) exchanged. Throws BadParameters for positions with a
/// forbidden-length filter, which has no Right-side counterpart.
Position sq_swap(const SqGame& p);

// ---------------------------------------------------------------------------
// Clobber. Left owns X, Right owns O; a move takes an adjacent opposing piece.

enum class Board { Strip, Complete };

struct ClobberMove {
  int from;
  int to;
};

class ClobberGame final : public Game {
 public:
  ClobberGame(Board board, std::string cells, int acc);

  Board board() const noexcept { return board_; }
  const std::string& cells() const noexcept { return cells_; }
  int acc() const noexcept { return acc_; }

  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override;
  bool has_right_moves() const override;
  Rational terminal_score() const override { return acc_; }
  std::string render() const override { return key(); }

  std::vector<ClobberMove> moves_for(char piece) const;
  bool adjacent(int a, int b) const;

 protected:
  Position simultaneous(std::size_t left, std::size_t right) const override;

 private:
  std::string move_label(const ClobberMove& m) const;

  Board board_;
  std::string cells_;
  int acc_;
};

/// cells over {X, O, _}. Throws BadLiteral otherwise.
Position make_clobber_strip(const std::string& cells, int acc = 0);
Position make_clobber_complete(const std::string& cells, int acc = 0);
/// K_n with one X and n-1 O pieces.
Position make_clobber_kn(int n);

/// Start-of-round resolution; see clobber.cpp. Throws IllegalMove.
Position clobber_simultaneous(const ClobberGame& p, ClobberMove left, ClobberMove right);

// ---------------------------------------------------------------------------
// Hackenbush on a rooted graph. Vertex 0 is the ground.

enum class EdgeColor : char { Blue = 'B', Red = 'R', Green = 'G' };

struct HbEdge {
  int u;
  int v;
  EdgeColor color;
  std::string name;

  bool operator==(const HbEdge&) const = default;
};

class HackenbushGame final : public Game {
 public:
  /// Edges not connected to the ground are pruned on construction.
  explicit HackenbushGame(std::vector<HbEdge> edges);

  const std::vector<HbEdge>& edges() const noexcept { return edges_; }

  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override;
  bool has_right_moves() const override;
  Rational terminal_score() const override;
  std::string render() const override;

  /// Colors bottom-up if the graph is a single stalk from the ground.
  std::optional<std::string> stalk_colors() const;

 protected:
  Position simultaneous(std::size_t left, std::size_t right) const override;

 private:
  std::vector<std::size_t> playable(EdgeColor own) const;

  std::vector<HbEdge> edges_;
};

/// Edges e1..en from the ground up. Throws BadLiteral on colors outside BRG.
Position make_stalk(std::string_view colors);
Position make_hackenbush(std::vector<HbEdge> edges);

struct CordonLeaf {
  int attach;
  EdgeColor color;

  bool operator==(const CordonLeaf&) const = default;
};

/// Stalk v0..vn of `stalk_color` with leaf edges at v_attach. Attachments
/// must lie in 1..n-1 and be non-decreasing; otherwise BadCordonSpec.
Position make_cordon(int n, const std::vector<CordonLeaf>& leaves,
                     EdgeColor stalk_color = EdgeColor::Blue);

/// Throws IllegalMove if an edge is absent or the wrong color.
Position hackenbush_simultaneous(const HackenbushGame& p, std::string_view left_edge,
                                 std::string_view right_edge);

/// Score of a terminal position. Throws NotTerminal.
Rational hackenbush_score(const HackenbushGame& p);

/// Blue and red exchanged.
Position hackenbush_swap(const HackenbushGame& p);

// ---------------------------------------------------------------------------
// Explicit games: option lists plus a simultaneous table of sub-games.

class ExplicitGame final : public Game {
 public:
  ExplicitGame(std::vector<Position> left, std::vector<Position> right,
               std::vector<std::vector<Position>> table, std::vector<std::string> left_labels = {},
               std::vector<std::string> right_labels = {});

  const std::vector<Position>& left() const noexcept { return left_; }
  const std::vector<Position>& right() const noexcept { return right_; }
  const std::vector<std::vector<Position>>& table() const noexcept { return table_; }

  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override { return !left_.empty(); }
  bool has_right_moves() const override { return !right_.empty(); }
  std::string render() const override;

 protected:
  Position simultaneous(std::size_t left, std::size_t right) const override;

 private:
  std::vector<Position> left_, right_;
  std::vector<std::vector<Position>> table_;
  std::vector<std::string> left_labels_, right_labels_;
};

/// Throws BadLiteral if the table shape does not match the option lists.
Position make_explicit(std::vector<Position> left, std::vector<Position> right,
                       std::vector<std::vector<Position>> table,
                       std::vector<std::string> left_labels = {},
                       std::vector<std::string> right_labels = {});

/// Moveless position carrying a score.
class ScoreLiteral final : public Game {
 public:
  explicit ScoreLiteral(Rational value);
  const Rational& value() const noexcept { return value_; }
  OptionList left_options() const override { return {}; }
  OptionList right_options() const override { return {}; }
  bool has_left_moves() const override { return false; }
  bool has_right_moves() const override { return false; }
  Rational terminal_score() const override { return value_; }

 protected:
  Position simultaneous(std::size_t, std::size_t) const override;

 private:
  Rational value_;
};

Position make_score(const Rational& value);

/// o(L) = {s(0) | .}, o(R) = {. | s(0)}, o(D) = a moveless draw.
class OutcomeLiteral final : public Game {
 public:
  explicit OutcomeLiteral(Outcome outcome);
  Outcome outcome() const noexcept { return outcome_; }
  OptionList left_options() const override;
  OptionList right_options() const override;
  bool has_left_moves() const override { return outcome_ == Outcome::LeftWin; }
  bool has_right_moves() const override { return outcome_ == Outcome::RightWin; }

 protected:
  Position simultaneous(std::size_t, std::size_t) const override;

 private:
  Outcome outcome_;
};

Position make_outcome(Outcome outcome);

// ---------------------------------------------------------------------------
// Named built-in positions.

/// Two stalks: x (blue) under z (red), and y (blue) under w (red).
Position fig5_g();
/// Two stalks: x' (blue) under z' (red), and y' (blue) under w' (blue).
Position fig5_h();
/// Clobber strip OOXOXOO.
Position fig9_clobber();

}  // namespace simulgame::rulesets
