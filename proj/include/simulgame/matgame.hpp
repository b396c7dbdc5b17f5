#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "simulgame/rational.hpp"

namespace simulgame::matgame {

/// Dense row-major payoff matrix for the row (maximizing) player.
class PayoffMatrix {
 public:
  /// Throws DimensionMismatch if either dimension is zero.
  PayoffMatrix(std::size_t rows, std::size_t cols, const Rational& fill = 0);
  PayoffMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static PayoffMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Rational min_entry() const;
  Rational max_entry() const;

  /// -Aᵀ: the same game seen from the column player's side.
  PayoffMatrix role_swapped() const;
  PayoffMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

  bool operator==(const PayoffMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct Solution {
  Rational value;
  std::vector<Rational> row_mix;
  std::vector<Rational> col_mix;
};

/// Exact value and optimal mixes via a shifted LP solved by tableau simplex
/// with Bland's rule. Deterministic for a given matrix.
Solution game_value(const PayoffMatrix& a);

struct Reduction {
  PayoffMatrix matrix;
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_cols;
};

/// Iterated weak dominance elimination to a fixpoint. Among equal strategies
/// the lowest index survives.
Reduction eliminate_dominated(const PayoffMatrix& a);

/// Oracle: enumerates square support pairs and solves the equalization
/// systems exactly. Throws SizeLimit if either dimension exceeds 5.
Rational support_enumeration_value(const PayoffMatrix& a);

struct Bracket {
  Rational lo;
  Rational hi;
};

/// Oracle: simultaneous fictitious play with exact cumulative payoffs.
/// lo is what the empirical row mix guarantees, hi what the empirical column
/// mix concedes; lo <= value <= hi always.
Bracket fictitious_play(const PayoffMatrix& a, std::size_t iterations);

/// min over pure columns of row_mixᵀ·A. Throws DimensionMismatch on a length
/// mismatch and BadParameters if row_mix is not a probability vector.
Rational response_value(const PayoffMatrix& a, std::span<const Rational> row_mix);

/// row_mixᵀ·A·col_mix.
Rational expected_payoff(const PayoffMatrix& a, std::span<const Rational> row_mix,
                         std::span<const Rational> col_mix);

/// Largest pure-row security level and smallest pure-column cap.
Rational pure_maximin(const PayoffMatrix& a);
Rational pure_minimax(const PayoffMatrix& a);

}  // namespace simulgame::matgame
