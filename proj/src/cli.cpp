#include "camina/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "camina/harness.hpp"

namespace camina {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::string report;
  std::string predicate = "center-pair-not-camina-group";
  std::uint64_t order = 0;
  std::uint64_t max_order = 0;
  std::string family;
  std::string id;
};

constexpr const char* kFamilyHelp =
    "family spec name:params, e.g. cyclic:5, dihedral:8, quaternion:8, elementary_abelian:2,3, "
    "extraspecial_p:5, extraspecial_p2:3, heisenberg:3 (heisenberg:p,k over GF(p^k)), T:3,1 (heisenberg:p,k x C_p)";

GroupId parse_group_id(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto order = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto rest = text.substr(colon + 1);
    const auto index = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {order, false, index, {}};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::UnknownGroupId, "group id must look like order:index, got '" + text + "'");
  }
}

GroupRecord resolve(const RunConfig& cfg) {
  if (!cfg.family.empty() && !cfg.id.empty()) throw std::runtime_error("give either --family or --id, not both");
  if (!cfg.family.empty()) return record_from_family(parse_family_spec(cfg.family));
  if (cfg.id.empty()) throw std::runtime_error("a group is required: --family <spec> or --id <order:index> with --input");
  const auto want = parse_group_id(cfg.id);
  for (auto& rec : load_records(cfg.inputs, cfg.order_cap))
    if (rec.id == want) return rec;
  throw Error(ErrorCode::UnknownGroupId, "no group " + cfg.id + " in the given inputs");
}

// Corpus inputs, optionally filtered by max order, plus built-in families up to max order.
std::vector<GroupRecord> gather(const RunConfig& cfg, bool families) {
  auto records = load_records(cfg.inputs, cfg.order_cap);
  if (cfg.max_order > 0) {
    std::erase_if(records, [&](const GroupRecord& r) { return r.id.order > cfg.max_order; });
    if (families)
      for (auto& r : family_records(std::min<std::uint64_t>(cfg.max_order, cfg.order_cap))) records.push_back(std::move(r));
  }
  return records;
}

AnalysisOptions options_of(const RunConfig& cfg) {
  AnalysisOptions o;
  o.order_cap = cfg.order_cap;
  o.workers = cfg.workers;
  return o;
}

std::string orders_of(const CentralSeries& s) {
  std::string out;
  for (const auto& t : s.terms) out += (out.empty() ? "" : " ") + std::to_string(t.order());
  return out;
}

void print_report(std::ostream& out, const BoundReport& r) {
  out << "p=" << r.p << " n=" << r.n << " m=" << r.m << " l=" << r.l
      << " class=" << (r.class_c ? std::to_string(*r.class_c) : std::string("-"))
      << " exp(G/Z)=p^" << r.quotient_exponent_n << '\n';
  for (const auto& c : r.checks) {
    out << "  " << c.id << ' ' << to_string(c.outcome());
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
}

// 1 if any row hit an operational error, else 2 on any FAIL.
int rows_exit_code(const std::vector<AnalysisRow>& rows, std::ostream& err) {
  bool operational = false, failed = false;
  for (const auto& row : rows) {
    if (row.error) err << row.id.to_string() << ": " << *row.error << '\n';
    if (row.error && row.error_code != ErrorCode::EquivalenceViolation) operational = true;
    else if (row.any_fail()) failed = true;
  }
  return operational ? 1 : failed ? 2 : 0;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto rec = resolve(cfg);
  const auto g = rec.build(cfg.order_cap);
  const auto z = center(g);
  const auto derived = derived_subgroup(g);
  out << "group " << rec.id.to_string();
  if (!rec.name.empty() && rec.name != rec.id.to_string()) out << " (" << rec.name << ')';
  out << "\norder " << g.order() << "  |Z|=" << z.order() << "  |G'|=" << derived.order() << '\n';
  out << "lower central series: " << orders_of(lower_central_series(g)) << '\n';
  out << "upper central series: " << orders_of(upper_central_series(g)) << '\n';

  std::optional<CharacterTable> table;
  const bool applicable = !z.is_trivial() && !z.is_whole();
  if (applicable && g.order() <= AnalysisOptions{}.character_order_cap) table = dixon_character_table(g);
  const auto a = analyze_center_pair(g, table ? &*table : nullptr);
  out << "camina group: " << (is_camina_group(g) ? "yes" : "no") << '\n';
  if (!a.applicable) {
    out << "verdict: not applicable (" << (z.is_whole() ? "abelian" : "trivial center") << ")\n";
    return 0;
  }
  const auto& v = *a.verdict;
  out << "verdict: " << (v.holds() ? "true" : "false") << "  (classes=" << v.by_classes
      << " commutators=" << v.by_commutators << " centralizers=" << v.by_centralizers;
  if (v.by_characters) out << " characters=" << *v.by_characters;
  out << ")\n";
  if (v.witness) out << "witness: g=" << v.witness->g << " misses n=" << v.witness->n << '\n';
  if (!a.report) return 0;
  print_report(out, *a.report);
  return a.report->any_fail() ? 2 : 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = analyze_all(gather(cfg, true), options_of(cfg));
  std::size_t pairs = 0, fails = 0;
  for (const auto& row : rows) {
    pairs += row.center_pair();
    fails += row.any_fail();
  }
  if (cfg.report.empty()) {
    write_tsv(out, rows);
  } else {
    std::ofstream file(cfg.report);
    if (!file) throw std::runtime_error("cannot write report: " + cfg.report);
    write_tsv(file, rows);
  }
  std::ostream& summary = cfg.report.empty() ? err : out;
  summary << "rows " << rows.size() << ", center pairs " << pairs << ", failing rows " << fails << '\n';
  return rows_exit_code(rows, err);
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.order == 0) throw std::runtime_error("census needs --order");
  census_predicate(cfg.predicate, AnalysisRow{});
  auto records = gather(cfg, true);
  std::erase_if(records, [&](const GroupRecord& r) { return r.id.order != cfg.order; });
  const auto rows = analyze_all(records, options_of(cfg));
  const auto report = census(rows, cfg.order, cfg.predicate);
  out << "order " << report.order << ", " << report.predicate << ": " << report.hits.size() << " of " << report.scanned
      << '\n';
  for (const auto* row : report.hits) {
    out << "  " << row->id.to_string();
    if (!row->name.empty() && row->name != row->id.to_string()) out << ' ' << row->name;
    out << "  |Z|=" << row->center_order << " |G:Z|=" << row->order / std::max<std::uint64_t>(row->center_order, 1)
        << '\n';
  }
  return rows_exit_code(rows, err);
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_order == 0) throw std::runtime_error("search needs --max-order");
  const auto rows = analyze_all(gather(cfg, true), options_of(cfg));
  const auto report = search_counterexample(rows);
  out << "scanned " << report.scanned << " groups, " << report.center_pairs << " center pairs\n";
  if (report.strict.empty()) {
    out << "no strict counterexample";
  } else {
    out << report.strict.size() << " strict counterexample(s):\n";
    for (const auto* row : report.strict) {
      out << row->id.to_string() << '\n';
      print_report(out, *row->analysis.report);
    }
  }
  out << "; equality cases:";
  for (std::size_t i = 0; i < report.equality.size(); ++i)
    out << (i ? ", " : " ") << report.equality[i]->id.to_string();
  if (report.equality.empty()) out << " none";
  out << '\n';
  return rows_exit_code(rows, err);
}

int cmd_chartable(const RunConfig& cfg, std::ostream& out) {
  const auto rec = resolve(cfg);
  const auto g = rec.build(cfg.order_cap);
  out << "group " << rec.id.to_string() << " order " << g.order() << '\n';
  out << format_character_table(dixon_character_table(g));
  return 0;
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
  const auto limit = cfg.max_order ? cfg.max_order : cfg.order_cap;
  for (const auto& spec : builtin_families(limit)) out << spec.expected_order() << '\t' << spec.to_string() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Camina pairs (G, Z(G)) on finite group corpora"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.inputs, "corpus file (repeatable)");
    sub->add_option("--order-cap", cfg.order_cap, "largest group order to build")->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "parallel workers")->check(CLI::PositiveNumber);
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, kFamilyHelp);
    sub->add_option("--id", cfg.id, "corpus group id order:index");
  };

  auto* analyze = app.add_subcommand("analyze", "verdict, bound checks and central series for one group");
  add_common(analyze);
  add_group(analyze);
  auto* verify = app.add_subcommand("verify", "TSV report over corpora (and families up to --max-order)");
  add_common(verify);
  verify->add_option("--report", cfg.report, "write the TSV here instead of stdout");
  verify->add_option("--max-order", cfg.max_order, "drop larger corpus groups; add built-in families up to this order");
  auto* census_cmd = app.add_subcommand("census", "count groups of one order satisfying a predicate");
  add_common(census_cmd);
  census_cmd->add_option("--order", cfg.order, "group order")->required();
  census_cmd->add_option("--predicate", cfg.predicate,
                         "center-pair, center-pair-not-camina-group, camina-group, center-pair-camina-group, all");
  census_cmd->add_option("--max-order", cfg.max_order, "also include built-in families up to this order");
  auto* search = app.add_subcommand("search", "look for center pairs with |Z|^2 > |G:Z|");
  add_common(search);
  search->add_option("--max-order", cfg.max_order, "largest order scanned (corpus and built-in families)")->required();
  auto* chartable = app.add_subcommand("chartable", "print the character table of one group");
  add_common(chartable);
  add_group(chartable);
  auto* families = app.add_subcommand("families", "list built-in family members");
  families->add_option("--max-order", cfg.max_order, "largest order listed");
  families->add_option("--order-cap", cfg.order_cap, "default for --max-order")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (census_cmd->parsed()) return cmd_census(cfg, out, err);
    if (search->parsed()) return cmd_search(cfg, out, err);
    if (chartable->parsed()) return cmd_chartable(cfg, out);
    if (families->parsed()) return cmd_families(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace camina
