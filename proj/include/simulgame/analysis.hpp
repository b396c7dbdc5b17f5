#pragma once

#include <string>
#include <vector>

#include "simulgame/engine.hpp"
#include "simulgame/position.hpp"
#include "simulgame/rational.hpp"

namespace simulgame::analysis {

enum class Relation { Less, Equal, Greater, Incomparable };
const char* relation_name(Relation r) noexcept;

struct ComparisonResult {
  Relation relation;
  /// Measure values compared: {Ex(G), Ex(H)} or {ell_G, arr_G, ell_H, arr_H}.
  std::vector<Rational> witness;
};

/// Recursive weak-dominance elimination on child values, bottom-up. Terminal
/// positions are returned unchanged; others become explicit games keeping
/// only the surviving strategies (with their original labels).
Position reduce_game(const Position& p, Convention convention = Convention::ExtendedNormal);

/// Orders by exact Ex under Scoring; never Incomparable.
ComparisonResult compare_continued_scoring(const Position& g, const Position& h);

/// Orders by ExtendedNormal index [ell, arr] componentwise.
ComparisonResult compare_index(const Position& g, const Position& h);

/// Ex(0)..Ex(N) for SQ({a},{b}) by the two-term recurrence.
/// Throws BadParameters unless 1 <= a < b and N >= 0.
std::vector<Rational> sq_expected_sequence(int a, int b, int n_max);

/// Closed form for SQ({1},{2}) in Gaussian-rational arithmetic.
Rational sq12_closed_form(int n);

/// n/2 - 1. Throws BadParameters for n < 2.
Rational clobber_kn_expected(int n);

/// Scoring value of a stalk: monochrome run of length n then strict
/// alternation; n if the last colour equals the first, n-1 otherwise,
/// negated when the stalk starts red. Throws BadStalk on other shapes.
long stalk_score_formula(const std::string& colors);

/// Replaces every component of a sum by a score literal carrying the
/// component's isolated Ex. Non-sums map to a single score literal.
Position substitute_component_values(const Position& p, Convention convention);

}  // namespace simulgame::analysis
