#include "scoreplay/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scoreplay/equivalence.hpp"
#include "scoreplay/errors.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/positions.hpp"

namespace scoreplay {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad heap size: " + tok);
    out.push_back(v);
  }
  return out;
}

SearchBudget resolve_budget(const std::string& flag) {
  if (!flag.empty()) return SearchBudget::parse(flag);
  if (const char* env = std::getenv("SCOREPLAY_BUDGET")) return SearchBudget::parse(env);
  return {};
}

Operator op_from(const std::string& name) { return parse_operator(name); }

void print_scores(std::ostream& out, const FinalScores& fs) {
  out << "SL=" << fs.left << " SR=" << fs.right << " outcome=" << to_string(outcome_from_scores(fs.left, fs.right));
}

void write_table(std::ostream& out, const std::vector<std::vector<Score>>& table, const std::string& format) {
  std::size_t cols = table.empty() ? 0 : table.front().size();
  if (format == "md") {
    out << "| m\\n |";
    for (std::size_t n = 0; n < cols; ++n) out << ' ' << n << " |";
    out << "\n|---|";
    for (std::size_t n = 0; n < cols; ++n) out << "---|";
    out << '\n';
    for (std::size_t m = 0; m < table.size(); ++m) {
      out << "| " << m << " |";
      for (const auto& v : table[m]) out << ' ' << v << " |";
      out << '\n';
    }
    return;
  }
  out << "m\\n";
  for (std::size_t n = 0; n < cols; ++n) out << '\t' << n;
  out << '\n';
  for (std::size_t m = 0; m < table.size(); ++m) {
    out << m;
    for (const auto& v : table[m]) out << '\t' << v;
    out << '\n';
  }
}

}  // namespace

std::vector<OctalRuleset> parse_ruleset_list(const std::string& text) {
  std::vector<std::string> groups;
  for (const auto& tok : split(text, ',')) {
    bool starts = tok.find(':') != std::string::npos || tok.rfind("sub{", 0) == 0;
    if (starts || groups.empty())
      groups.push_back(tok);
    else
      groups.back() += "," + tok;
  }
  std::vector<OctalRuleset> out;
  for (const auto& g : groups) out.push_back(OctalRuleset::parse(g));
  if (out.empty()) throw std::invalid_argument("no rulesets given");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scoring-play combinatorial games", "scoreplay"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, op_name = "disj", rule_name = "long", budget_text, format = "tsv", file, board;
  std::vector<std::string> exprs, rulesets_args;
  std::string heaps_text;
  int n_max = 12, m_max = 12, variant = 1;
  std::size_t max_n = 200, max_pre = 0, max_period = 0;

  auto* eval = app.add_subcommand("eval", "Final scores and outcome of a game");
  eval->add_option("expr", expr_a)->required();

  auto* sum = app.add_subcommand("sum", "Combine games with an operator");
  sum->add_option("--op", op_name)->default_val("disj");
  sum->add_option("--rule", rule_name)->default_val("long");
  sum->add_option("exprs", exprs)->required()->expected(2, -1);

  auto* neg = app.add_subcommand("negate", "Swap the roles of Left and Right");
  neg->add_option("expr", expr_a)->required();

  auto* red = app.add_subcommand("reduce", "Remove dominated options and bypass reversible ones");
  red->add_option("expr", expr_a)->required();
  red->add_option("--budget", budget_text);

  auto* dist = app.add_subcommand("distinguish", "Search for a game telling two games apart");
  dist->add_option("first", expr_a)->required();
  dist->add_option("second", expr_b)->required();
  dist->add_option("--op", op_name)->default_val("disj");
  dist->add_option("--budget", budget_text);

  auto* gsc = app.add_subcommand("gs", "Scoring Grundy value of a heap position");
  gsc->add_option("--rulesets", rulesets_args)->required()->expected(1, -1);
  gsc->add_option("--op", op_name)->default_val("disj");
  gsc->add_option("--heaps", heaps_text)->required();

  auto* table = app.add_subcommand("gs-table", "Two-heap value table");
  table->add_option("--rulesets", rulesets_args)->required()->expected(1, -1);
  table->add_option("--op", op_name)->default_val("disj");
  table->add_option("--n", n_max)->default_val(12)->check(CLI::Range(0, 4096));
  table->add_option("--m", m_max)->default_val(12)->check(CLI::Range(0, 4096));
  table->add_option("--format", format)->default_val("tsv")->check(CLI::IsMember({"tsv", "md"}));

  auto* period = app.add_subcommand("period", "Period of the single-heap value sequence");
  period->add_option("--ruleset", rulesets_args)->required()->expected(1, -1);
  period->add_option("--op", op_name)->default_val("disj");
  period->add_option("--max", max_n)->default_val(200)->check(CLI::Range(1, 1 << 20));
  period->add_option("--max-preperiod", max_pre);
  period->add_option("--max-period", max_period);

  auto* tf = app.add_subcommand("tf", "Toads and Frogs position");
  tf->add_option("board", board)->required();

  auto* hack = app.add_subcommand("hack", "Hackenbush position from a file");
  hack->add_option("file", file)->required();
  hack->add_option("--variant", variant)->default_val(1)->check(CLI::Range(1, 3));
  hack->add_option("--split-op", op_name)->default_val("disj");

  std::vector<const char*> argv{"scoreplay"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      Game g = parse_game(expr_a);
      print_scores(out, {final_score_left(g), final_score_right(g)});
      out << '\n';
    } else if (sum->parsed()) {
      std::vector<Game> games;
      for (const auto& e : exprs) games.push_back(parse_game(e));
      out << print_game(n_ary(op_from(op_name), games, parse_end_rule(rule_name))) << '\n';
    } else if (neg->parsed()) {
      out << print_game(negate(parse_game(expr_a))) << '\n';
    } else if (red->parsed()) {
      Reduction r = reduce(parse_game(expr_a), resolve_budget(budget_text));
      out << print_game(r.game) << '\n' << "heuristic=" << (r.heuristic ? "true" : "false") << '\n';
    } else if (dist->parsed()) {
      Game g = parse_game(expr_a);
      Game h = parse_game(expr_b);
      Operator op = op_from(op_name);
      auto w = distinguish(g, h, op, resolve_budget(budget_text));
      if (!w) {
        out << "NONE\n";
      } else {
        out << "X=" << print_game(w->x) << '\n' << "G: ";
        print_scores(out, w->g_sum);
        out << "\nH: ";
        print_scores(out, w->h_sum);
        out << '\n';
      }
    } else if (gsc->parsed()) {
      auto rs = parse_ruleset_list(join(rulesets_args, ","));
      HeapPosition pos;
      int i = 0;
      for (int n : parse_ints(heaps_text)) {
        pos.push_back({n, std::min(i, static_cast<int>(rs.size()) - 1)});
        ++i;
      }
      out << gs(rs, pos, op_from(op_name)) << '\n';
    } else if (table->parsed()) {
      auto rs = parse_ruleset_list(join(rulesets_args, ","));
      if (rs.size() > 2) throw std::invalid_argument("gs-table takes one or two rulesets");
      write_table(out, gs_table(rs.front(), rs.back(), op_from(op_name), n_max, m_max), format);
    } else if (period->parsed()) {
      auto rs = parse_ruleset_list(join(rulesets_args, ","));
      if (rs.size() != 1) throw std::invalid_argument("period takes one ruleset");
      if (max_period == 0) max_period = max_n / 4;
      if (max_pre == 0) max_pre = max_n / 4;
      GrundySolver solver(rs, op_from(op_name));
      std::vector<Score> values;
      for (std::size_t n = 0; n <= max_n; ++n) values.push_back(solver.gs_single(static_cast<int>(n)));
      auto report = find_period(values, max_pre, max_period);
      if (!report) {
        out << "no period found for n <= " << max_n << '\n';
      } else {
        out << "preperiod=" << report->preperiod << " period=" << report->period << " block=";
        for (std::size_t i = 0; i < report->block.size(); ++i) out << (i ? "," : "") << report->block[i];
        out << '\n';
      }
    } else if (tf->parsed()) {
      out << print_game(toads_frogs_game(board)) << '\n';
    } else if (hack->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      HackGraph graph = parse_hackenbush(in);
      graph.variant = variant;
      graph.split_op = op_from(op_name);
      out << print_game(hackenbush_game(graph)) << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace scoreplay
