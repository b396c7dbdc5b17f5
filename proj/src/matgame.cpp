#include "simulgame/matgame.hpp"

#include <algorithm>

#include "simulgame/error.hpp"

namespace simulgame::matgame {

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols, const Rational& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::DimensionMismatch, "payoff matrix needs at least one row and one column");
}

PayoffMatrix::PayoffMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : PayoffMatrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

PayoffMatrix PayoffMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw Error(ErrorCode::DimensionMismatch, "payoff matrix needs at least one row and one column");
  PayoffMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged payoff matrix");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rational PayoffMatrix::min_entry() const { return *std::min_element(data_.begin(), data_.end()); }
Rational PayoffMatrix::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

PayoffMatrix PayoffMatrix::role_swapped() const {
  PayoffMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = -(*this)(i, j);
  return t;
}

PayoffMatrix PayoffMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  PayoffMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

namespace {

// Tableau for: max sum(y) s.t. B y <= 1, y >= 0, with B = A - min + 1 > 0.
// Columns 0..n-1 are y, n..n+m-1 are slacks.
class Tableau {
 public:
  explicit Tableau(const PayoffMatrix& b)
      : m_(b.rows()), n_(b.cols()), width_(b.cols() + b.rows()),
        t_(m_ * width_), rhs_(m_, Rational(1)), reduced_(width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = b(i, j);
      at(i, n_ + i) = 1;
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = 1;
  }

  void solve() {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational ratio = rhs_[i] / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // B > 0 bounds every y, so some row always qualifies.
      pivot(leave, enter);
    }
  }

  Rational objective() const { return objective_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = rhs_[i];
    return y;
  }

  std::vector<Rational> dual() const {
    std::vector<Rational> x(m_);
    for (std::size_t i = 0; i < m_; ++i) x[i] = -reduced_[n_ + i];
    return x;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      Rational f = at(i, col);
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      rhs_[i] -= f * rhs_[row];
    }
    Rational f = reduced_[col];
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] -= f * at(row, j);
    objective_ += f * rhs_[row];
    basis_[row] = col;
  }

  std::size_t m_, n_, width_;
  std::vector<Rational> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  Rational objective_ = 0;
};

}  // namespace

Solution game_value(const PayoffMatrix& a) {
  if (a.rows() == 1 && a.cols() == 1) return {a(0, 0), {Rational(1)}, {Rational(1)}};

  const Rational shift = Rational(1) - a.min_entry();
  PayoffMatrix b = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) += shift;

  Tableau tab(b);
  tab.solve();
  const Rational total = tab.objective();
  const Rational vb = 1 / total;

  Solution s;
  s.value = vb - shift;
  s.col_mix = tab.primal();
  for (auto& y : s.col_mix) y *= vb;
  s.row_mix = tab.dual();
  for (auto& x : s.row_mix) x *= vb;
  return s;
}

Reduction eliminate_dominated(const PayoffMatrix& a) {
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;

  // Row r is removable if another surviving row k is >= everywhere and either
  // strictly better somewhere or an equal copy with a lower index.
  auto row_dominated = [&](std::size_t r) {
    for (std::size_t k : rows) {
      if (k == r) continue;
      bool geq = true, strict = false;
      for (std::size_t c : cols) {
        int s = cmp(a(k, c), a(r, c));
        if (s < 0) { geq = false; break; }
        if (s > 0) strict = true;
      }
      if (geq && (strict || k < r)) return true;
    }
    return false;
  };
  auto col_dominating = [&](std::size_t c) {
    for (std::size_t l : cols) {
      if (l == c) continue;
      bool leq = true, strict = false;
      for (std::size_t r : rows) {
        int s = cmp(a(r, l), a(r, c));
        if (s > 0) { leq = false; break; }
        if (s < 0) strict = true;
      }
      if (leq && (strict || l < c)) return true;
    }
    return false;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t idx = 0; idx < rows.size() && rows.size() > 1; ++idx) {
      if (row_dominated(rows[idx])) {
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t idx = 0; idx < cols.size() && cols.size() > 1; ++idx) {
      if (col_dominating(cols[idx])) {
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
  }
  return {a.submatrix(rows, cols), rows, cols};
}

Rational expected_payoff(const PayoffMatrix& a, std::span<const Rational> row_mix,
                         std::span<const Rational> col_mix) {
  if (row_mix.size() != a.rows() || col_mix.size() != a.cols())
    throw Error(ErrorCode::DimensionMismatch, "mix length does not match matrix");
  Rational total = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(row_mix[i]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) total += row_mix[i] * a(i, j) * col_mix[j];
  }
  return total;
}

Rational response_value(const PayoffMatrix& a, std::span<const Rational> row_mix) {
  if (row_mix.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "row mix has " + std::to_string(row_mix.size()) +
                                                  " entries for " + std::to_string(a.rows()) + " rows");
  Rational sum = 0;
  for (const auto& x : row_mix) {
    if (sgn(x) < 0) throw Error(ErrorCode::BadParameters, "row mix has a negative entry");
    sum += x;
  }
  if (sum != 1) throw Error(ErrorCode::BadParameters, "row mix does not sum to 1");

  Rational worst;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational v = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) v += row_mix[i] * a(i, j);
    if (j == 0 || v < worst) worst = v;
  }
  return worst;
}

Rational pure_maximin(const PayoffMatrix& a) {
  Rational best;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational row_min = a(i, 0);
    for (std::size_t j = 1; j < a.cols(); ++j) row_min = std::min(row_min, a(i, j));
    if (i == 0 || row_min > best) best = row_min;
  }
  return best;
}

Rational pure_minimax(const PayoffMatrix& a) {
  Rational best;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational col_max = a(0, j);
    for (std::size_t i = 1; i < a.rows(); ++i) col_max = std::max(col_max, a(i, j));
    if (j == 0 || col_max < best) best = col_max;
  }
  return best;
}

}  // namespace simulgame::matgame
