#include "simulgame/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "simulgame/error.hpp"
#include "simulgame/matgame.hpp"

namespace simulgame::oracle {

namespace {

enum class Mode { Expected, LeftWins, RightWins };

class Brute {
 public:
  Brute(Convention convention, Mode mode) : convention_(convention), mode_(mode) {}

  Rational run(const Position& p) {
    std::vector<std::string> path;
    return visit(p, path);
  }

 private:
  Rational leaf(const Game& g) const {
    int sign;
    Rational score;
    if (convention_ == Convention::ExtendedNormal) {
      const bool l = g.has_left_moves(), r = g.has_right_moves();
      sign = (l && !r) ? 1 : (r && !l) ? -1 : 0;
      score = sign;
    } else {
      score = g.terminal_score();
      sign = sgn(score);
    }
    if (mode_ == Mode::LeftWins) return sign > 0 ? 1 : 0;
    if (mode_ == Mode::RightWins) return sign < 0 ? -1 : 0;
    return score;
  }

  Rational visit(const Position& p, std::vector<std::string>& path) {
    if (auto it = seen_.find(p->key()); it != seen_.end()) return it->second;
    if (std::find(path.begin(), path.end(), p->key()) != path.end())
      throw Error(ErrorCode::LoopyGame, "position repeats: " + p->render());
    if (seen_.size() + path.size() >= kMaxPositions)
      throw Error(ErrorCode::SizeLimit, "more than " + std::to_string(kMaxPositions) + " positions");

    const MoveMatrix mm = p->move_matrix();
    Rational v;
    if (mm.empty()) {
      v = leaf(*p);
    } else {
      if (mm.rows() > 5 || mm.cols() > 5)
        throw Error(ErrorCode::SizeLimit, "matrix " + std::to_string(mm.rows()) + "x" +
                                              std::to_string(mm.cols()) + " exceeds the oracle bound");
      path.push_back(p->key());
      matgame::PayoffMatrix a(mm.rows(), mm.cols());
      for (std::size_t i = 0; i < mm.rows(); ++i)
        for (std::size_t j = 0; j < mm.cols(); ++j) a(i, j) = visit(mm.at(i, j), path);
      path.pop_back();
      v = matgame::support_enumeration_value(a);
    }
    seen_.emplace(p->key(), v);
    return v;
  }

  Convention convention_;
  Mode mode_;
  std::map<std::string, Rational> seen_;
};

}  // namespace

Rational brute_ex(const Position& p, Convention convention) {
  return Brute(convention, Mode::Expected).run(p);
}

GuaranteeProfile brute_profile(const Position& p, Convention convention) {
  Rational ell = Brute(convention, Mode::LeftWins).run(p);
  Rational arr = -Brute(convention, Mode::RightWins).run(p);
  return GuaranteeProfile::from(std::move(ell), std::move(arr));
}

}  // namespace simulgame::oracle
