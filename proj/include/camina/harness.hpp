#pragma once

// Whole-corpus runs: analysis of every group over a worker pool, the TSV
// report, census predicates and the counterexample scan.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "camina/camina.hpp"
#include "camina/corpus.hpp"

namespace camina {

/// Corpus groups sort before family groups of the same order.
struct GroupId {
  std::uint64_t order = 0;
  bool family = false;
  std::uint64_t index = 0;
  std::string spec;

  /// "order:index" for corpus entries, the canonical spec for families.
  std::string to_string() const;
  auto operator<=>(const GroupId&) const = default;
};

struct GroupRecord {
  GroupId id;
  std::string name;
  std::variant<CorpusEntry, FamilySpec> source;

  FiniteGroup build(std::size_t order_cap = kDefaultOrderCap) const;
};

GroupRecord record_from_entry(CorpusEntry entry);
GroupRecord record_from_family(const FamilySpec& spec);

/// Loads the corpus files in order. Ids must be unique across files.
std::vector<GroupRecord> load_records(const std::vector<std::string>& paths, std::size_t order_cap = kDefaultOrderCap);
std::vector<GroupRecord> family_records(std::uint64_t max_order);

struct AnalysisOptions {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t workers = 1;
  /// Character tables are computed (and the character criterion run) up to this order. 0 disables.
  std::size_t character_order_cap = 256;
  bool check_tables = true;
};

struct TableCheck {
  std::size_t characters = 0;
  bool degree_sum = false;
  bool row_orthogonal = false;
  bool column_orthogonal = false;

  bool ok() const { return degree_sum && row_orthogonal && column_orthogonal; }
};

struct AnalysisRow {
  GroupId id;
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  CenterPairAnalysis analysis;
  /// (G, G') Camina pair with 1 < G' < G.
  bool is_camina_group = false;
  /// All element orders are powers of one prime (true for the trivial group).
  bool prime_power_exponents = false;
  std::optional<TableCheck> table;
  /// Set when the analysis threw; EquivalenceViolation lands here too.
  std::optional<std::string> error;
  std::optional<ErrorCode> error_code;

  bool center_pair() const { return analysis.is_center_pair(); }
  bool any_fail() const;
};

AnalysisRow analyze_record(const GroupRecord& record, const AnalysisOptions& options);

/// Rows come back sorted by id regardless of the worker count.
std::vector<AnalysisRow> analyze_all(const std::vector<GroupRecord>& records, const AnalysisOptions& options);

void write_tsv_header(std::ostream& out);
void write_tsv_row(std::ostream& out, const AnalysisRow& row);
void write_tsv(std::ostream& out, const std::vector<AnalysisRow>& rows);

/// center-pair, center-pair-not-camina-group, camina-group, center-pair-camina-group, all.
const std::vector<std::string>& census_predicates();
/// Throws UnsupportedParameters for an unknown predicate.
bool census_predicate(const std::string& predicate, const AnalysisRow& row);

struct CensusReport {
  std::uint64_t order = 0;
  std::string predicate;
  std::size_t scanned = 0;
  std::vector<const AnalysisRow*> hits;
};

CensusReport census(const std::vector<AnalysisRow>& rows, std::uint64_t order, const std::string& predicate);

struct SearchReport {
  std::size_t scanned = 0;
  std::size_t center_pairs = 0;
  /// Center pairs with |Z|^2 > |G:Z|.
  std::vector<const AnalysisRow*> strict;
  /// Center pairs with |Z|^2 = |G:Z|.
  std::vector<const AnalysisRow*> equality;
};

SearchReport search_counterexample(const std::vector<AnalysisRow>& rows);

}  // namespace camina
