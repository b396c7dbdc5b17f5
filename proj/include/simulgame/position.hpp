#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "simulgame/rational.hpp"

namespace simulgame {

enum class Convention { ExtendedNormal, Scoring };
enum class Outcome { LeftWin, Draw, RightWin };

const char* convention_name(Convention c) noexcept;
char outcome_letter(Outcome o) noexcept;

class Game;
using Position = std::shared_ptr<const Game>;

/// One player's unilateral options: a label and the resulting position each.
struct OptionList {
  std::vector<std::string> labels;
  std::vector<Position> positions;

  std::size_t size() const noexcept { return positions.size(); }
  bool empty() const noexcept { return positions.empty(); }
  void add(std::string label, Position p);
};

/// Left pure strategies × Right pure strategies; cell (i, j) is the position
/// reached when Left plays row i and Right plays column j.
struct MoveMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Position> cells;

  std::size_t rows() const noexcept { return row_labels.size(); }
  std::size_t cols() const noexcept { return col_labels.size(); }
  bool empty() const noexcept { return cells.empty(); }
  const Position& at(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }
};

/// Immutable game position. Subclasses supply options, the simultaneous
/// table and (optionally) a terminal score. The key is the canonical state
/// encoding and doubles as the memo key.
class Game {
 public:
  virtual ~Game() = default;
  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;

  const std::string& tag() const noexcept { return tag_; }
  const std::string& key() const noexcept { return key_; }

  /// Human-readable form; gexpr syntax where one exists.
  virtual std::string render() const { return key_; }

  virtual OptionList left_options() const = 0;
  virtual OptionList right_options() const = 0;

  virtual bool has_left_moves() const { return !left_options().empty(); }
  virtual bool has_right_moves() const { return !right_options().empty(); }
  bool is_terminal() const { return !(has_left_moves() && has_right_moves()); }

  /// Empty iff terminal. The default builds the grid from `simultaneous`.
  virtual MoveMatrix move_matrix() const;

  /// Score read under the Scoring convention at a terminal position.
  /// Default: v_A.
  virtual Rational terminal_score() const;

 protected:
  Game(std::string tag, std::string key);

  /// Result of Left's i-th and Right's j-th option played together.
  virtual Position simultaneous(std::size_t left, std::size_t right) const = 0;

 private:
  std::string tag_;
  std::string key_;
};

/// Extended-normal winner at a terminal: the side that still has moves wins.
Outcome terminal_outcome(const Game& g);

/// Tags recognized by the engine. Built-in rulesets and sum combinators are
/// registered at startup; extensions call register_ruleset.
bool is_registered_ruleset(const std::string& tag);
void register_ruleset(const std::string& tag);

}  // namespace simulgame
