// Independent value oracles: support enumeration and fictitious play.
#include <bit>
#include <optional>
#include <stdexcept>

#include "simulgame/error.hpp"
#include "simulgame/matgame.hpp"

namespace simulgame::matgame {

namespace {

// Solves the square system M z = rhs exactly. Returns nullopt if singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= m[r][r];
  return rhs;
}

std::vector<std::size_t> members(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

// Mix over `own` that equalizes the opponent's options in `other`, plus the
// common value. `payoff(o, s)` is the payoff when own strategy o meets s.
template <class Payoff>
std::optional<std::pair<std::vector<Rational>, Rational>> equalizer(
    const std::vector<std::size_t>& own, const std::vector<std::size_t>& other, Payoff payoff) {
  const std::size_t k = own.size();
  std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 1));
  std::vector<Rational> rhs(k + 1);
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t i = 0; i < k; ++i) m[e][i] = payoff(own[i], other[e]);
    m[e][k] = -1;
  }
  for (std::size_t i = 0; i < k; ++i) m[k][i] = 1;
  rhs[k] = 1;
  auto z = solve_linear(std::move(m), std::move(rhs));
  if (!z) return std::nullopt;
  Rational v = z->back();
  z->pop_back();
  for (const auto& p : *z)
    if (sgn(p) < 0) return std::nullopt;
  return std::make_pair(std::move(*z), v);
}

}  // namespace

Rational support_enumeration_value(const PayoffMatrix& input) {
  if (input.rows() > 5 || input.cols() > 5)
    throw Error(ErrorCode::SizeLimit, "support enumeration is limited to 5x5 matrices");
  // Strictly positive entries keep the value nonzero, so some square kernel is nonsingular.
  const Rational shift = 1 - input.min_entry();
  PayoffMatrix a = input;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += shift;
  const unsigned row_masks = 1u << a.rows();
  const unsigned col_masks = 1u << a.cols();
  const std::size_t kmax = std::min(a.rows(), a.cols());

  for (std::size_t k = 1; k <= kmax; ++k) {
    for (unsigned rm = 1; rm < row_masks; ++rm) {
      if (static_cast<std::size_t>(std::popcount(rm)) != k) continue;
      const auto rows = members(rm);
      for (unsigned cm = 1; cm < col_masks; ++cm) {
        if (static_cast<std::size_t>(std::popcount(cm)) != k) continue;
        const auto cols = members(cm);

        auto x = equalizer(rows, cols, [&](std::size_t i, std::size_t j) { return a(i, j); });
        if (!x) continue;
        auto y = equalizer(cols, rows, [&](std::size_t j, std::size_t i) { return a(i, j); });
        if (!y || y->second != x->second) continue;
        const Rational& v = x->second;

        bool ok = true;
        for (std::size_t c = 0; c < a.cols() && ok; ++c) {
          Rational s = 0;
          for (std::size_t t = 0; t < k; ++t) s += x->first[t] * a(rows[t], c);
          ok = s >= v;
        }
        for (std::size_t r = 0; r < a.rows() && ok; ++r) {
          Rational s = 0;
          for (std::size_t t = 0; t < k; ++t) s += a(r, cols[t]) * y->first[t];
          ok = s <= v;
        }
        if (ok) return v - shift;
      }
    }
  }
  throw std::logic_error("support enumeration found no equilibrium");
}

Bracket fictitious_play(const PayoffMatrix& a, std::size_t iterations) {
  if (iterations == 0) throw Error(ErrorCode::BadParameters, "fictitious play needs >= 1 iteration");
  const std::size_t m = a.rows(), n = a.cols();

  mpz_class scale = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
  std::vector<mpz_class> z(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = a(i, j) * Rational(scale);
      z[i * n + j] = s.get_num();
    }

  // col_total[j]: payoff of column j against the row history;
  // row_total[i]: payoff of row i against the column history.
  std::vector<mpz_class> col_total(n), row_total(m);
  std::size_t row_pick = 0, col_pick = 0;
  Bracket best{a.min_entry(), a.max_entry()};
  for (std::size_t t = 1; t <= iterations; ++t) {
    for (std::size_t j = 0; j < n; ++j) col_total[j] += z[row_pick * n + j];
    for (std::size_t i = 0; i < m; ++i) row_total[i] += z[i * n + col_pick];

    std::size_t jmin = 0, imax = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (col_total[j] < col_total[jmin]) jmin = j;
    for (std::size_t i = 1; i < m; ++i)
      if (row_total[i] > row_total[imax]) imax = i;

    const mpz_class denom = scale * static_cast<unsigned long>(t);
    Rational lo(col_total[jmin], denom), hi(row_total[imax], denom);
    lo.canonicalize();
    hi.canonicalize();
    if (lo > best.lo) best.lo = lo;
    if (hi < best.hi) best.hi = hi;
    row_pick = imax;
    col_pick = jmin;
  }
  return best;
}

}  // namespace simulgame::matgame
