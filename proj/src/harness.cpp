#include "camina/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <thread>

namespace camina {

std::string GroupId::to_string() const {
  if (family) return spec;
  return std::to_string(order) + ":" + std::to_string(index);
}

FiniteGroup GroupRecord::build(std::size_t order_cap) const {
  if (const auto* entry = std::get_if<CorpusEntry>(&source)) return entry->build(order_cap);
  return build_family(std::get<FamilySpec>(source), order_cap);
}

GroupRecord record_from_entry(CorpusEntry entry) {
  GroupRecord r;
  r.id = {entry.order, false, entry.index, {}};
  r.name = entry.name;
  r.source = std::move(entry);
  return r;
}

GroupRecord record_from_family(const FamilySpec& spec) {
  GroupRecord r;
  r.id = {spec.expected_order(), true, 0, spec.to_string()};
  r.name = spec.to_string();
  r.source = spec;
  return r;
}

std::vector<GroupRecord> load_records(const std::vector<std::string>& paths, std::size_t order_cap) {
  std::vector<GroupRecord> records;
  std::map<GroupId, std::string> seen;
  for (const auto& path : paths) {
    for (auto& entry : parse_corpus_file(path, order_cap)) {
      auto rec = record_from_entry(std::move(entry));
      const auto [it, fresh] = seen.emplace(rec.id, path);
      if (!fresh)
        throw Error(ErrorCode::DuplicateId, "id " + rec.id.to_string() + " in " + path + " already defined in " + it->second);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<GroupRecord> family_records(std::uint64_t max_order) {
  std::vector<GroupRecord> records;
  for (const auto& spec : builtin_families(max_order)) records.push_back(record_from_family(spec));
  return records;
}

bool AnalysisRow::any_fail() const {
  if (error) return true;
  if (table && !table->ok()) return true;
  return analysis.report && analysis.report->any_fail();
}

namespace {

bool element_orders_share_a_prime(const FiniteGroup& g) {
  std::uint64_t prime = 0;
  for (ElementId x = 1; x < g.order(); ++x) {
    const auto pp = as_prime_power(element_order(g, x));
    if (!pp) return false;
    if (prime == 0) prime = pp->p;
    if (pp->p != prime) return false;
  }
  return true;
}

TableCheck check_table(const CharacterTable& t, std::uint64_t order) {
  TableCheck c;
  c.characters = t.size();
  std::uint64_t sum = 0;
  for (auto d : t.degrees) sum += static_cast<std::uint64_t>(d * d);
  c.degree_sum = sum == order;
  c.row_orthogonal = rows_orthogonal(t, order);
  c.column_orthogonal = columns_orthogonal(t, order);
  return c;
}

}  // namespace

AnalysisRow analyze_record(const GroupRecord& record, const AnalysisOptions& options) {
  AnalysisRow row;
  row.id = record.id;
  row.name = record.name;
  try {
    const auto g = record.build(options.order_cap);
    row.order = g.order();
    const auto z = center(g);
    row.center_order = z.order();
    row.prime_power_exponents = element_orders_share_a_prime(g);
    row.is_camina_group = is_camina_group(g);
    std::optional<CharacterTable> table;
    const bool applicable = !z.is_trivial() && !z.is_whole();
    if (applicable && g.order() <= options.character_order_cap) {
      table = dixon_character_table(g);
      if (options.check_tables) row.table = check_table(*table, g.order());
    }
    row.analysis = analyze_center_pair(g, table ? &*table : nullptr);
  } catch (const Error& e) {
    row.error = e.what();
    row.error_code = e.code();
  }
  return row;
}

std::vector<AnalysisRow> analyze_all(const std::vector<GroupRecord>& records, const AnalysisOptions& options) {
  std::vector<AnalysisRow> rows(records.size());
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(records.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) rows[i] = analyze_record(records[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < records.size();) rows[i] = analyze_record(records[i], options);
      });
    for (auto& t : pool) t.join();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const AnalysisRow& a, const AnalysisRow& b) { return a.id < b.id; });
  return rows;
}

void write_tsv_header(std::ostream& out) {
  out << "group_id\torder\tp\tn\tm\tl\tclass_c\tverdict";
  for (const auto& id : bound_check_ids()) out << '\t' << id;
  out << '\n';
}

void write_tsv_row(std::ostream& out, const AnalysisRow& row) {
  out << row.id.to_string() << '\t' << row.order;
  const auto& a = row.analysis;
  if (a.report) {
    const auto& r = *a.report;
    out << '\t' << r.p << '\t' << r.n << '\t' << r.m << '\t' << r.l << '\t'
        << (r.class_c ? std::to_string(*r.class_c) : std::string("-")) << "\ttrue";
    for (const auto& id : bound_check_ids()) {
      const auto* check = r.find(id);
      out << '\t' << (check ? to_string(check->outcome()) : std::string_view("VACUOUS"));
    }
  } else {
    const char* verdict = row.error ? "error" : a.applicable ? "false" : "n/a";
    out << "\t-\t-\t-\t-\t-\t" << verdict;
    for (std::size_t i = 0; i < bound_check_ids().size(); ++i)
      out << '\t' << (row.error ? "FAIL" : "VACUOUS");
  }
  out << '\n';
}

void write_tsv(std::ostream& out, const std::vector<AnalysisRow>& rows) {
  write_tsv_header(out);
  for (const auto& row : rows) write_tsv_row(out, row);
}

const std::vector<std::string>& census_predicates() {
  static const std::vector<std::string> names = {"center-pair", "center-pair-not-camina-group", "camina-group",
                                                 "center-pair-camina-group", "all"};
  return names;
}

bool census_predicate(const std::string& predicate, const AnalysisRow& row) {
  if (predicate == "center-pair") return row.center_pair();
  if (predicate == "center-pair-not-camina-group") return row.center_pair() && !row.is_camina_group;
  if (predicate == "camina-group") return row.is_camina_group;
  if (predicate == "center-pair-camina-group") return row.center_pair() && row.is_camina_group;
  if (predicate == "all") return true;
  throw Error(ErrorCode::UnsupportedParameters, "unknown census predicate '" + predicate + "'");
}

CensusReport census(const std::vector<AnalysisRow>& rows, std::uint64_t order, const std::string& predicate) {
  CensusReport report;
  report.order = order;
  report.predicate = predicate;
  census_predicate(predicate, AnalysisRow{});
  for (const auto& row : rows) {
    if (row.order != order) continue;
    ++report.scanned;
    if (census_predicate(predicate, row)) report.hits.push_back(&row);
  }
  return report;
}

SearchReport search_counterexample(const std::vector<AnalysisRow>& rows) {
  SearchReport report;
  for (const auto& row : rows) {
    ++report.scanned;
    if (!row.center_pair() || !row.analysis.report) continue;
    ++report.center_pairs;
    const auto& r = *row.analysis.report;
    if (2 * r.m > r.n) report.strict.push_back(&row);
    else if (2 * r.m == r.n) report.equality.push_back(&row);
  }
  return report;
}

}  // namespace camina
