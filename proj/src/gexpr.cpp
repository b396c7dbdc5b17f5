#include "simulgame/gexpr.hpp"

#include <cctype>
#include <optional>

#include "simulgame/error.hpp"

namespace simulgame::gexpr {

bool ExplicitLit::operator==(const ExplicitLit& o) const {
  return left == o.left && right == o.right && table == o.table;
}

bool SumExpr::operator==(const SumExpr& o) const { return kind == o.kind && operands == o.operands; }

namespace {

const char* const kLiteralStarts[] = {"sq", "hb", "cl", "x{", "s(", "o(", "("};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GameExpr parse_all() {
    GameExpr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"'+'", "'^'", "'v'", "end of input"}, "unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(ErrorCode::SyntaxError, pos_, std::move(expected),
                     what + " at byte " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"}, std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) fail({"'" + std::string(w) + "'"}, "expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  bool starts_with(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail({"integer"}, "expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail({"integer"}, "integer too large");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  // Possibly empty comma-separated integers, closed by `close`.
  std::vector<int> parse_int_list(char close) {
    std::vector<int> out;
    skip_ws();
    if (peek() == close) return out;
    out.push_back(parse_int());
    while (accept(',')) out.push_back(parse_int());
    return out;
  }

  GameExpr parse_expr() {
    std::vector<GameExpr> operands{parse_term()};
    std::optional<sums::SumKind> kind;
    for (;;) {
      skip_ws();
      sums::SumKind k;
      switch (peek()) {
        case '+': k = sums::SumKind::Disjunctive; break;
        case '^': k = sums::SumKind::Conjunctive; break;
        case 'v': k = sums::SumKind::ContinuedConjunctive; break;
        default: k = sums::SumKind::Disjunctive; goto done;
      }
      if (kind && *kind != k)
        throw ParseError(ErrorCode::MixedOperators, pos_, {std::string(1, sums::sum_symbol(*kind)), "')'"},
                         std::string("operator '") + peek() + "' mixed with '" + sums::sum_symbol(*kind) +
                             "' without parentheses at byte " + std::to_string(pos_));
      kind = k;
      ++pos_;
      operands.push_back(parse_term());
    }
  done:
    if (!kind) return std::move(operands.front());
    return GameExpr{SumExpr{*kind, std::move(operands)}};
  }

  GameExpr parse_term() {
    skip_ws();
    if (accept('(')) {
      GameExpr e = parse_expr();
      expect(')');
      return e;
    }
    return parse_literal();
  }

  GameExpr parse_literal() {
    skip_ws();
    if (starts_with("sq")) return parse_sq();
    if (starts_with("hb")) return parse_hb();
    if (starts_with("cl")) return parse_cl();
    const std::size_t start = pos_;
    const char head = peek();
    if (head == 'x' || head == 's' || head == 'o') {
      ++pos_;
      skip_ws();
      const char next = peek();
      if (head == 'x' && next == '{') return parse_explicit();
      if (head == 's' && next == '(') return parse_score();
      if (head == 'o' && next == '(') return parse_outcome();
      pos_ = start;
    }
    fail({std::begin(kLiteralStarts), std::end(kLiteralStarts)}, "expected a game literal");
  }

  GameExpr parse_sq() {
    pos_ += 2;
    SqLit lit;
    if (peek() == '\'') {
      ++pos_;
      if (accept('[')) {
        auto xs = parse_int_list(']');
        expect(']');
        lit.forbidden = std::set<int>(xs.begin(), xs.end());
        if (lit.forbidden.empty()) fail({"integer"}, "empty forbidden-length list");
      } else {
        lit.forbidden = {2};
      }
    }
    expect('{');
    lit.left = parse_int_list('}');
    expect('}');
    expect('{');
    lit.right = parse_int_list('}');
    expect('}');
    expect('(');
    lit.n = parse_int();
    expect(')');
    return GameExpr{std::move(lit)};
  }

  rulesets::EdgeColor parse_color() {
    skip_ws();
    switch (peek()) {
      case 'B': ++pos_; return rulesets::EdgeColor::Blue;
      case 'R': ++pos_; return rulesets::EdgeColor::Red;
      case 'G': ++pos_; return rulesets::EdgeColor::Green;
      default: fail({"'B'", "'R'", "'G'"}, "expected an edge color");
    }
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (is_name_char(peek())) ++pos_;
    if (start == pos_) fail({"name"}, "expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  GameExpr parse_hb() {
    pos_ += 2;
    if (peek() == ':') {
      ++pos_;
      return GameExpr{BuiltinLit{"hb:" + parse_name()}};
    }
    if (accept('[')) {
      StalkLit lit;
      skip_ws();
      while (peek() != ']') lit.colors += static_cast<char>(parse_color()), skip_ws();
      expect(']');
      return GameExpr{std::move(lit)};
    }
    if (accept('{')) return parse_graph();
    skip_ws();
    if (starts_with("cordon")) {
      pos_ += 6;
      CordonLit lit;
      expect('(');
      lit.n = parse_int();
      expect(';');
      skip_ws();
      if (peek() != ')') {
        do {
          int attach = parse_int();
          lit.leaves.push_back({attach, parse_color()});
        } while (accept(','));
      }
      expect(')');
      return GameExpr{std::move(lit)};
    }
    fail({"'['", "'{'", "':'", "'cordon'"}, "expected a hackenbush form");
  }

  GameExpr parse_graph() {
    GraphLit lit;
    skip_ws();
    if (peek() != '}') {
      do {
        skip_ws();
        std::string name;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          name = parse_name();
          expect('=');
        } else {
          name = "e" + std::to_string(lit.edges.size() + 1);
        }
        int u = parse_int();
        expect('-');
        int v = parse_int();
        expect(':');
        lit.edges.push_back({u, v, parse_color(), name});
      } while (accept(','));
    }
    expect('}');
    return GameExpr{std::move(lit)};
  }

  std::pair<std::string, int> parse_cells() {
    std::string cells;
    int acc = 0;
    skip_ws();
    while (peek() == 'O' || peek() == 'X' || peek() == '_') cells += s_[pos_++];
    if (accept(';')) acc = parse_int();
    skip_ws();
    if (peek() != ']') fail({"'O'", "'X'", "'_'", "';'", "']'"}, "expected a clobber cell");
    ++pos_;
    return {cells, acc};
  }

  GameExpr parse_cl() {
    pos_ += 2;
    if (peek() == '[') {
      ++pos_;
      auto [cells, acc] = parse_cells();
      return GameExpr{StripLit{cells, acc}};
    }
    if (peek() == ':') {
      ++pos_;
      if (peek() == 'K' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        return GameExpr{CompleteLit{parse_int()}};
      }
      if (peek() == 'K' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
        pos_ += 2;
        auto [cells, acc] = parse_cells();
        return GameExpr{CompleteCellsLit{cells, acc}};
      }
      return GameExpr{BuiltinLit{"cl:" + parse_name()}};
    }
    fail({"'['", "':'"}, "expected a clobber form");
  }

  std::vector<GameExpr> parse_list() {
    std::vector<GameExpr> out;
    expect('[');
    skip_ws();
    if (peek() != ']') {
      out.push_back(parse_expr());
      while (accept(',')) out.push_back(parse_expr());
    }
    expect(']');
    return out;
  }

  GameExpr parse_explicit() {
    ExplicitLit lit;
    expect('{');
    expect_word("L:");
    lit.left = parse_list();
    expect('|');
    expect_word("R:");
    lit.right = parse_list();
    expect('|');
    expect_word("LR:");
    expect('[');
    skip_ws();
    if (peek() != ']') {
      lit.table.push_back(parse_list());
      while (accept(',')) lit.table.push_back(parse_list());
    }
    expect(']');
    expect('}');
    return GameExpr{std::move(lit)};
  }

  GameExpr parse_score() {
    expect('(');
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail({"integer"}, "expected a score");
    if (peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail({"integer"}, "expected a denominator");
    }
    Rational value = parse_rational(s_.substr(start, pos_ - start));
    expect(')');
    return GameExpr{ScoreLit{value}};
  }

  GameExpr parse_outcome() {
    expect('(');
    skip_ws();
    Outcome o;
    switch (peek()) {
      case 'L': o = Outcome::LeftWin; break;
      case 'D': o = Outcome::Draw; break;
      case 'R': o = Outcome::RightWin; break;
      default: fail({"'L'", "'D'", "'R'"}, "expected an outcome letter");
    }
    ++pos_;
    expect(')');
    return GameExpr{OutcomeLit{o}};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string render_list(const std::vector<GameExpr>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + render(xs[i]);
  return s + "]";
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

GameExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const GameExpr& e) {
  return std::visit(
      Overloaded{
          [](const SqLit& l) {
            std::string s = "sq";
            if (!l.forbidden.empty()) {
              s += '\'';
              if (l.forbidden != std::set<int>{2})
                s += "[" + join_ints(std::vector<int>(l.forbidden.begin(), l.forbidden.end())) + "]";
            }
            return s + "{" + join_ints(l.left) + "}{" + join_ints(l.right) + "}(" + std::to_string(l.n) + ")";
          },
          [](const StalkLit& l) { return "hb[" + l.colors + "]"; },
          [](const CordonLit& l) {
            std::string s = "hb cordon(" + std::to_string(l.n) + ";";
            for (std::size_t i = 0; i < l.leaves.size(); ++i)
              s += (i ? ", " : " ") + std::to_string(l.leaves[i].attach) + static_cast<char>(l.leaves[i].color);
            return s + ")";
          },
          [](const GraphLit& l) {
            std::string s = "hb{";
            for (std::size_t i = 0; i < l.edges.size(); ++i) {
              const auto& x = l.edges[i];
              s += (i ? ", " : "") + x.name + "=" + std::to_string(x.u) + "-" + std::to_string(x.v) + ":" +
                   static_cast<char>(x.color);
            }
            return s + "}";
          },
          [](const StripLit& l) {
            return "cl[" + l.cells + (l.acc ? ";" + std::to_string(l.acc) : "") + "]";
          },
          [](const CompleteLit& l) { return "cl:K" + std::to_string(l.n); },
          [](const CompleteCellsLit& l) {
            return "cl:K[" + l.cells + (l.acc ? ";" + std::to_string(l.acc) : "") + "]";
          },
          [](const BuiltinLit& l) { return l.name; },
          [](const ScoreLit& l) { return "s(" + l.value.get_str() + ")"; },
          [](const OutcomeLit& l) { return std::string("o(") + outcome_letter(l.outcome) + ")"; },
          [](const ExplicitLit& l) {
            std::string s = "x{L:" + render_list(l.left) + " | R:" + render_list(l.right) + " | LR:[";
            for (std::size_t i = 0; i < l.table.size(); ++i) s += (i ? ", " : "") + render_list(l.table[i]);
            return s + "]}";
          },
          [](const SumExpr& l) {
            const std::string sep = std::string(" ") + sums::sum_symbol(l.kind) + " ";
            std::string s;
            for (std::size_t i = 0; i < l.operands.size(); ++i) {
              if (i) s += sep;
              const bool nested = std::holds_alternative<SumExpr>(l.operands[i].node);
              s += nested ? "(" + render(l.operands[i]) + ")" : render(l.operands[i]);
            }
            return s;
          },
      },
      e.node);
}

std::vector<std::string> builtin_names() { return {"hb:fig5G", "hb:fig5H", "cl:fig9"}; }

Position to_position(const GameExpr& e) {
  auto lower_all = [](const std::vector<GameExpr>& xs) {
    std::vector<Position> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_position(x));
    return out;
  };
  return std::visit(
      Overloaded{
          [](const SqLit& l) { return rulesets::make_sq(l.left, l.right, l.n, l.forbidden); },
          [](const StalkLit& l) { return rulesets::make_stalk(l.colors); },
          [](const CordonLit& l) { return rulesets::make_cordon(l.n, l.leaves); },
          [](const GraphLit& l) { return rulesets::make_hackenbush(l.edges); },
          [](const StripLit& l) { return rulesets::make_clobber_strip(l.cells, l.acc); },
          [](const CompleteLit& l) { return rulesets::make_clobber_kn(l.n); },
          [](const CompleteCellsLit& l) { return rulesets::make_clobber_complete(l.cells, l.acc); },
          [](const BuiltinLit& l) -> Position {
            if (l.name == "hb:fig5G") return rulesets::fig5_g();
            if (l.name == "hb:fig5H") return rulesets::fig5_h();
            if (l.name == "cl:fig9") return rulesets::fig9_clobber();
            throw Error(ErrorCode::UnknownRuleset, "no built-in position named " + l.name);
          },
          [](const ScoreLit& l) { return rulesets::make_score(l.value); },
          [](const OutcomeLit& l) { return rulesets::make_outcome(l.outcome); },
          [&](const ExplicitLit& l) {
            std::vector<std::vector<Position>> table;
            for (const auto& row : l.table) table.push_back(lower_all(row));
            return rulesets::make_explicit(lower_all(l.left), lower_all(l.right), std::move(table));
          },
          [&](const SumExpr& l) { return sums::make_sum(l.kind, lower_all(l.operands)); },
      },
      e.node);
}

Position compile(std::string_view text) { return to_position(parse(text)); }

bool contains_sum(const GameExpr& e) {
  if (std::holds_alternative<SumExpr>(e.node)) return true;
  if (const auto* x = std::get_if<ExplicitLit>(&e.node)) {
    for (const auto& c : x->left)
      if (contains_sum(c)) return true;
    for (const auto& c : x->right)
      if (contains_sum(c)) return true;
    for (const auto& row : x->table)
      for (const auto& c : row)
        if (contains_sum(c)) return true;
  }
  return false;
}

}  // namespace simulgame::gexpr
