// simulgame: evaluate simultaneous-game expressions from the command line.
//
//   simulgame eval "sq{1}{2}(3)" --measure ex
//   simulgame table "sq{1}{2}" --n-max 25 --format csv
//   simulgame verify paper
//   simulgame reduce "hb[BRB]"
//
// Exit codes: 0 ok, 1 verify failure, 2 parse error, 3 evaluation error.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "simulgame/analysis.hpp"
#include "simulgame/engine.hpp"
#include "simulgame/error.hpp"
#include "simulgame/gexpr.hpp"
#include "simulgame/matgame.hpp"
#include "simulgame/verify.hpp"

namespace {

using namespace simulgame;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;

struct Formatting {
  std::string format = "text";
  int decimal = -1;

  std::string num(const Rational& q) const { return decimal >= 0 ? to_decimal(q, decimal) : to_string(q); }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\r\n";
}

Convention parse_convention(const std::string& s) {
  return s == "scoring" ? Convention::Scoring : Convention::ExtendedNormal;
}

EvalOptions eval_options(Convention c, bool parallel) {
  EvalOptions o;
  o.convention = c;
  o.memo_limit = memo_limit_from_env();
  o.execution = parallel ? Execution::Parallel : Execution::Serial;
  return o;
}

void print_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
  if (!e.expected().empty()) {
    std::cerr << "expected one of:";
    for (const auto& x : e.expected()) std::cerr << " " << x;
    std::cerr << "\n";
  }
}

int cmd_eval(const std::string& text, const std::string& conv_name, const std::string& measure,
             const Formatting& fmt, bool parallel) {
  const Position p = gexpr::compile(text);
  const Convention conv = parse_convention(conv_name);
  Evaluator ev(eval_options(conv, parallel));

  ordered_json j;
  j["report"] = "eval";
  j["expr"] = text;
  j["convention"] = convention_name(conv);
  j["measure"] = measure;

  // Rows of (name, value) for text/csv output.
  std::vector<std::pair<std::string, std::string>> scalar;
  std::ostringstream text_out;

  if (measure == "ex") {
    std::string v = fmt.num(ev.value(p));
    j["value"] = v;
    scalar.push_back({"value", v});
  } else if (measure == "outcome") {
    std::string v(1, outcome_letter(outcome_of(ev.value(p))));
    j["value"] = v;
    scalar.push_back({"value", v});
  } else if (measure == "score") {
    if (!p->is_terminal()) throw Error(ErrorCode::NotTerminal, p->render() + " is not terminal");
    std::string v = fmt.num(p->terminal_score());
    j["value"] = v;
    scalar.push_back({"value", v});
  } else if (measure == "index") {
    auto g = ev.guarantee_profile(p);
    j["ell"] = fmt.num(g.ell);
    j["arr"] = fmt.num(g.arr);
    j["left_forces_win"] = g.left_forces_win;
    j["right_forces_win"] = g.right_forces_win;
    j["left_cannot_win"] = g.left_cannot_win;
    j["right_cannot_win"] = g.right_cannot_win;
    scalar = {{"ell", fmt.num(g.ell)}, {"arr", fmt.num(g.arr)}};
    text_out << "[" << fmt.num(g.ell) << ", " << fmt.num(g.arr) << "]";
    if (g.left_forces_win) text_out << " left_forces_win";
    if (g.right_forces_win) text_out << " right_forces_win";
    if (g.left_cannot_win) text_out << " left_cannot_win";
    if (g.right_cannot_win) text_out << " right_cannot_win";
    text_out << "\n";
  } else if (measure == "matrix") {
    const MoveMatrix mm = move_matrix(p);
    j["row_labels"] = mm.row_labels;
    j["col_labels"] = mm.col_labels;
    ordered_json values = ordered_json::array(), cells = ordered_json::array();
    std::vector<std::vector<std::string>> grid;
    for (std::size_t r = 0; r < mm.rows(); ++r) {
      ordered_json vrow = ordered_json::array(), crow = ordered_json::array();
      std::vector<std::string> line{mm.row_labels[r]};
      for (std::size_t c = 0; c < mm.cols(); ++c) {
        std::string v = fmt.num(ev.value(mm.at(r, c)));
        vrow.push_back(v);
        crow.push_back(mm.at(r, c)->render());
        line.push_back(v);
      }
      values.push_back(vrow);
      cells.push_back(crow);
      grid.push_back(std::move(line));
    }
    j["values"] = values;
    j["cells"] = cells;
    if (fmt.format == "csv") {
      std::vector<std::string> header{""};
      header.insert(header.end(), mm.col_labels.begin(), mm.col_labels.end());
      csv_row(std::cout, header);
      for (const auto& line : grid) csv_row(std::cout, line);
      return kExitOk;
    }
    if (mm.empty()) {
      text_out << "terminal (empty matrix)\n";
    } else {
      std::size_t w = 1;
      for (const auto& line : grid)
        for (const auto& s : line) w = std::max(w, s.size());
      for (const auto& s : mm.col_labels) w = std::max(w, s.size());
      auto pad = [w](const std::string& s) { return s + std::string(w + 2 - s.size(), ' '); };
      text_out << pad("");
      for (const auto& s : mm.col_labels) text_out << pad(s);
      text_out << "\n";
      for (const auto& line : grid) {
        for (const auto& s : line) text_out << pad(s);
        text_out << "\n";
      }
    }
  } else if (measure == "strategies") {
    ValueReport rep = ev.evaluate(p);
    const MoveMatrix mm = move_matrix(p);
    j["value"] = fmt.num(rep.ex);
    j["terminal"] = rep.terminal;
    ordered_json left = ordered_json::array(), right = ordered_json::array();
    text_out << "value " << fmt.num(rep.ex) << "\n";
    if (rep.terminal) text_out << "terminal\n";
    for (std::size_t i = 0; i < rep.left_mix.size(); ++i) {
      left.push_back({{"label", mm.row_labels[i]}, {"p", fmt.num(rep.left_mix[i])}});
      text_out << "left  " << mm.row_labels[i] << " " << fmt.num(rep.left_mix[i]) << "\n";
    }
    for (std::size_t i = 0; i < rep.right_mix.size(); ++i) {
      right.push_back({{"label", mm.col_labels[i]}, {"p", fmt.num(rep.right_mix[i])}});
      text_out << "right " << mm.col_labels[i] << " " << fmt.num(rep.right_mix[i]) << "\n";
    }
    j["left"] = left;
    j["right"] = right;
    if (fmt.format == "csv") {
      csv_row(std::cout, {"player", "label", "p"});
      for (const auto& e : left) csv_row(std::cout, {"left", e["label"], e["p"]});
      for (const auto& e : right) csv_row(std::cout, {"right", e["label"], e["p"]});
      return kExitOk;
    }
  }

  if (fmt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (fmt.format == "csv") {
    std::vector<std::string> header{"expr", "convention", "measure"}, row{text, convention_name(conv), measure};
    for (const auto& [k, v] : scalar) {
      header.push_back(k);
      row.push_back(v);
    }
    csv_row(std::cout, header);
    csv_row(std::cout, row);
  } else if (!text_out.str().empty()) {
    std::cout << text_out.str();
  } else {
    for (const auto& [k, v] : scalar) std::cout << v << "\n";
  }
  return kExitOk;
}

int cmd_table(const std::string& spec, int n_max, const std::string& conv_name, const Formatting& fmt) {
  gexpr::GameExpr e = gexpr::parse(spec + "(0)");
  const auto* sq = std::get_if<gexpr::SqLit>(&e.node);
  if (!sq) throw Error(ErrorCode::BadParameters, "table supports subtraction-square rulesets only");
  if (n_max < 0) throw Error(ErrorCode::BadParameters, "--n-max must be >= 0");
  const Convention conv = parse_convention(conv_name);
  Evaluator ev(eval_options(conv, false));

  ordered_json rows = ordered_json::array();
  std::vector<std::vector<std::string>> lines;
  for (int n = 0; n <= n_max; ++n) {
    const Position p = rulesets::make_sq(sq->left, sq->right, n, sq->forbidden);
    auto g = ev.guarantee_profile(p);
    std::vector<std::string> line{std::to_string(n), fmt.num(ev.value(p)), fmt.num(g.ell), fmt.num(g.arr)};
    rows.push_back({{"n", n}, {"ex", line[1]}, {"ell", line[2]}, {"arr", line[3]}});
    lines.push_back(std::move(line));
  }
  if (fmt.format == "json") {
    ordered_json j;
    j["report"] = "table";
    j["ruleset"] = spec;
    j["convention"] = convention_name(conv);
    j["columns"] = {"n", "ex", "ell", "arr"};
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else if (fmt.format == "csv") {
    csv_row(std::cout, {"n", "ex", "ell", "arr"});
    for (const auto& l : lines) csv_row(std::cout, l);
  } else {
    std::cout << "n\tex\tell\tarr\n";
    for (const auto& l : lines) std::cout << l[0] << "\t" << l[1] << "\t" << l[2] << "\t" << l[3] << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite_name_arg, const std::string& format, bool serial) {
  auto suite = verify::parse_suite(suite_name_arg);
  if (!suite) throw Error(ErrorCode::BadParameters, "suite must be paper, properties or all");
  auto results = verify::run_suite(*suite, serial ? Execution::Serial : Execution::Parallel);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;

  if (format == "text") {
    for (const auto& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  expected " << r.expected << "  actual "
                << r.actual << "\n";
    std::cout << (results.size() - failed) << " passed, " << failed << " failed\n";
  } else {
    ordered_json j;
    j["report"] = "verify";
    j["suite"] = verify::suite_name(*suite);
    ordered_json checks = ordered_json::array();
    for (const auto& r : results)
      checks.push_back({{"id", r.id},
                        {"criterion", r.criterion},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"status", r.passed ? "pass" : "fail"},
                        {"detail", r.detail}});
    j["checks"] = checks;
    j["passed"] = results.size() - failed;
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_reduce(const std::string& text, const std::string& conv_name, const Formatting& fmt) {
  gexpr::GameExpr e = gexpr::parse(text);
  if (gexpr::contains_sum(e))
    throw Error(ErrorCode::RefusesSum, "reduction is only sound for a single position; drop the sum operator");
  const Position p = gexpr::to_position(e);
  const Convention conv = parse_convention(conv_name);
  const Position r = analysis::reduce_game(p, conv);
  Evaluator ev(eval_options(conv, false));
  const MoveMatrix before = move_matrix(p);
  const MoveMatrix after = move_matrix(r);
  const std::string caveat =
      "reduction preserves Ex in isolation only; a sum of reduced components can have a different value";

  if (fmt.format == "json") {
    ordered_json j;
    j["report"] = "reduce";
    j["expr"] = text;
    j["convention"] = convention_name(conv);
    j["reduced"] = r->render();
    j["value"] = fmt.num(ev.value(r));
    j["rows_kept"] = after.row_labels;
    j["cols_kept"] = after.col_labels;
    j["rows_before"] = before.rows();
    j["cols_before"] = before.cols();
    j["warning"] = caveat;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "reduced: " << r->render() << "\n";
    std::cout << "ex: " << fmt.num(ev.value(r)) << "\n";
    if (!after.empty()) {
      std::cout << "rows kept (" << after.rows() << " of " << before.rows() << "):";
      for (const auto& s : after.row_labels) std::cout << " " << s;
      std::cout << "\ncols kept (" << after.cols() << " of " << before.cols() << "):";
      for (const auto& s : after.col_labels) std::cout << " " << s;
      std::cout << "\n";
    } else {
      std::cout << "terminal: unchanged\n";
    }
    std::cerr << "warning: " << caveat << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate simultaneous combinatorial games exactly"};
  app.require_subcommand(1);

  std::string expr, convention = "normal", measure = "ex", suite, spec;
  Formatting fmt;
  int n_max = 10;
  bool parallel = false, serial = false;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr, "Game expression")->required();
  eval->add_option("--convention", convention)->check(CLI::IsMember({"normal", "scoring"}));
  eval->add_option("--measure", measure)
      ->check(CLI::IsMember({"ex", "index", "outcome", "score", "matrix", "strategies"}));
  eval->add_option("--format", fmt.format)->check(CLI::IsMember({"text", "json", "csv"}));
  eval->add_option("--decimal", fmt.decimal, "Print rationals as decimals rounded half-even");
  eval->add_flag("--parallel", parallel, "Evaluate with OpenMP tasks");

  auto* table = app.add_subcommand("table", "Tabulate a subtraction-square ruleset");
  std::string table_format = "csv";
  table->add_option("ruleset", spec, "e.g. sq{1}{2} or sq'{1}{2}")->required();
  table->add_option("--n-max", n_max)->required();
  table->add_option("--convention", convention)->check(CLI::IsMember({"normal", "scoring"}));
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--decimal", fmt.decimal);

  auto* ver = app.add_subcommand("verify", "Run the verification manifest");
  std::string verify_format = "json";
  ver->add_option("suite", suite, "paper, properties or all")->required();
  ver->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
  ver->add_flag("--serial", serial, "Run checks one at a time");

  auto* red = app.add_subcommand("reduce", "Eliminate dominated strategies recursively");
  red->add_option("expr", expr, "Game expression without sum operators")->required();
  red->add_option("--convention", convention)->check(CLI::IsMember({"normal", "scoring"}));
  red->add_option("--format", fmt.format)->check(CLI::IsMember({"text", "json"}));
  red->add_option("--decimal", fmt.decimal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  const std::string& input = *eval ? expr : *table ? spec : *red ? expr : suite;
  try {
    if (*eval) return cmd_eval(expr, convention, measure, fmt, parallel);
    if (*table) {
      fmt.format = table_format;
      return cmd_table(spec, n_max, convention, fmt);
    }
    if (*ver) return cmd_verify(suite, verify_format, serial);
    if (*red) return cmd_reduce(expr, convention, fmt);
  } catch (const ParseError& e) {
    print_parse_error(*table ? spec + "(0)" : input, e);
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitEval;
  }
  return kExitOk;
}
