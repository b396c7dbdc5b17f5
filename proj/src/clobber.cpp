#include <cstdlib>
#include <memory>

#include "simulgame/error.hpp"
#include "simulgame/rulesets.hpp"

namespace simulgame::rulesets {

namespace {

std::string clobber_key(Board board, const std::string& cells, int acc) {
  std::string s = board == Board::Strip ? "cl[" : "cl:K[";
  s += cells;
  if (acc != 0) s += ";" + std::to_string(acc);
  s += "]";
  return s;
}

void check_cells(const std::string& cells) {
  if (cells.empty()) throw Error(ErrorCode::BadLiteral, "clobber board needs at least one cell");
  for (char c : cells)
    if (c != 'X' && c != 'O' && c != '_')
      throw Error(ErrorCode::BadLiteral, std::string("clobber cell '") + c + "' is not X, O or _");
}

}  // namespace

ClobberGame::ClobberGame(Board board, std::string cells, int acc)
    : Game("cl", clobber_key(board, cells, acc)), board_(board), cells_(std::move(cells)), acc_(acc) {}

bool ClobberGame::adjacent(int a, int b) const {
  if (a == b) return false;
  return board_ == Board::Complete || std::abs(a - b) == 1;
}

std::vector<ClobberMove> ClobberGame::moves_for(char piece) const {
  const char prey = piece == 'X' ? 'O' : 'X';
  std::vector<ClobberMove> out;
  const int n = static_cast<int>(cells_.size());
  for (int u = 0; u < n; ++u) {
    if (cells_[u] != piece) continue;
    for (int v = 0; v < n; ++v)
      if (cells_[v] == prey && adjacent(u, v)) out.push_back({u, v});
  }
  return out;
}

bool ClobberGame::has_left_moves() const { return !moves_for('X').empty(); }
bool ClobberGame::has_right_moves() const { return !moves_for('O').empty(); }

std::string ClobberGame::move_label(const ClobberMove& m) const {
  return std::to_string(m.from) + ">" + std::to_string(m.to);
}

OptionList ClobberGame::left_options() const {
  OptionList out;
  for (const auto& m : moves_for('X')) {
    std::string next = cells_;
    next[m.from] = '_';
    next[m.to] = 'X';
    out.add(move_label(m), std::make_shared<ClobberGame>(board_, std::move(next), acc_ + 1));
  }
  return out;
}

OptionList ClobberGame::right_options() const {
  OptionList out;
  for (const auto& m : moves_for('O')) {
    std::string next = cells_;
    next[m.from] = '_';
    next[m.to] = 'O';
    out.add(move_label(m), std::make_shared<ClobberGame>(board_, std::move(next), acc_));
  }
  return out;
}

Position ClobberGame::simultaneous(std::size_t left, std::size_t right) const {
  return clobber_simultaneous(*this, moves_for('X').at(left), moves_for('O').at(right));
}

Position clobber_simultaneous(const ClobberGame& p, ClobberMove left, ClobberMove right) {
  const auto& cells = p.cells();
  const int n = static_cast<int>(cells.size());
  auto in_range = [n](const ClobberMove& m) { return m.from >= 0 && m.from < n && m.to >= 0 && m.to < n; };
  if (!in_range(left) || cells[left.from] != 'X' || cells[left.to] != 'O' || !p.adjacent(left.from, left.to))
    throw Error(ErrorCode::IllegalMove, "illegal Left clobber in " + p.key());
  if (!in_range(right) || cells[right.from] != 'O' || cells[right.to] != 'X' ||
      !p.adjacent(right.from, right.to))
    throw Error(ErrorCode::IllegalMove, "illegal Right clobber in " + p.key());

  std::string next = cells;
  int acc = p.acc();
  if (left.to == right.from && right.to == left.from) {
    // Each piece clobbers the other: both disappear, nothing is credited.
    next[left.from] = '_';
    next[left.to] = '_';
  } else {
    next[left.from] = '_';
    next[right.from] = '_';
    next[left.to] = 'X';
    next[right.to] = 'O';
    // The targeted O is only captured if it stayed put this round.
    if (right.from != left.to) ++acc;
  }
  return std::make_shared<ClobberGame>(p.board(), std::move(next), acc);
}

Position make_clobber_strip(const std::string& cells, int acc) {
  check_cells(cells);
  if (acc < 0) throw Error(ErrorCode::BadLiteral, "clobber score must be >= 0");
  return std::make_shared<ClobberGame>(Board::Strip, cells, acc);
}

Position make_clobber_complete(const std::string& cells, int acc) {
  check_cells(cells);
  if (acc < 0) throw Error(ErrorCode::BadLiteral, "clobber score must be >= 0");
  return std::make_shared<ClobberGame>(Board::Complete, cells, acc);
}

Position make_clobber_kn(int n) {
  if (n < 1) throw Error(ErrorCode::BadLiteral, "K_n needs n >= 1");
  return make_clobber_complete("X" + std::string(static_cast<std::size_t>(n - 1), 'O'));
}

Position fig9_clobber() { return make_clobber_strip("OOXOXOO"); }

}  // namespace simulgame::rulesets
