#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "camina/cli.hpp"
#include "camina/harness.hpp"

using namespace camina;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSmall = CAMINA_DATA_DIR "/small_le64.grp";
const std::string k32 = CAMINA_DATA_DIR "/order32.grp";

std::vector<std::string> ids(const std::vector<const AnalysisRow*>& rows) {
  std::vector<std::string> out;
  for (const auto* r : rows) out.push_back(r->id.to_string());
  return out;
}

}  // namespace

TEST_CASE("group ids order corpus entries before families") {
  const GroupId a{8, false, 4, {}}, b{8, true, 0, "dihedral:8"}, c{9, false, 1, {}};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a.to_string() == "8:4");
  CHECK(b.to_string() == "dihedral:8");
}

TEST_CASE("census of small orders") {
  auto records = load_records({kSmall});
  std::erase_if(records, [](const GroupRecord& r) { return r.id.order != 8 && r.id.order != 16; });
  const auto rows = analyze_all(records, {});
  const auto eight = census(rows, 8, "center-pair");
  CHECK(eight.scanned == 5);
  CHECK(ids(eight.hits) == std::vector<std::string>{"8:3", "8:4"});
  const auto sixteen = census(rows, 16, "center-pair-not-camina-group");
  CHECK(sixteen.scanned == 14);
  CHECK(sixteen.hits.empty());
  CHECK_THROWS_AS(census(rows, 8, "nonsense"), Error);
}

TEST_CASE("census of order 32") {
  const auto rows = analyze_all(load_records({k32}), {});
  const auto report = census(rows, 32, "center-pair-not-camina-group");
  CHECK(report.scanned == 51);
  CHECK(ids(report.hits) == std::vector<std::string>{"32:6", "32:7", "32:8", "32:43", "32:44"});
  for (const auto* row : report.hits) {
    CHECK(row->center_order == 2);
    CHECK(row->order / row->center_order == 16);
  }
}

TEST_CASE("rows are identical for any worker count") {
  auto records = load_records({kSmall});
  std::erase_if(records, [](const GroupRecord& r) { return r.id.order > 24; });
  for (auto& r : family_records(81)) records.push_back(std::move(r));
  AnalysisOptions one, three;
  three.workers = 3;
  std::ostringstream a, b;
  write_tsv(a, analyze_all(records, one));
  write_tsv(b, analyze_all(records, three));
  CHECK(a.str() == b.str());
}

TEST_CASE("TSV layout") {
  std::ostringstream out;
  write_tsv_header(out);
  const auto header = out.str();
  CHECK(header.rfind("group_id\torder\tp\tn\tm\tl\tclass_c\tverdict\tT1.1\t", 0) == 0);

  const auto rows = analyze_all({record_from_family(parse_family_spec("quaternion:8")),
                                 record_from_family(parse_family_spec("cyclic:4")),
                                 record_from_family(parse_family_spec("dihedral:6"))},
                                {});
  std::ostringstream body;
  for (const auto& r : rows) write_tsv_row(body, r);
  std::istringstream lines(body.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("cyclic:4\t4\t-\t-\t-\t-\t-\tn/a\tVACUOUS", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("dihedral:6\t6\t-\t-\t-\t-\t-\tn/a", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("quaternion:8\t8\t2\t2\t1\t0\t2\ttrue\tPASS", 0) == 0);
  CHECK(line.find("FAIL") == std::string::npos);
}

TEST_CASE("search finds only equality cases up to order 64") {
  auto records = load_records({kSmall});
  for (auto& r : family_records(64)) records.push_back(std::move(r));
  const auto rows = analyze_all(records, {});
  const auto report = search_counterexample(rows);
  CHECK(report.strict.empty());
  const auto eq = ids(report.equality);
  for (const char* id : {"8:3", "8:4", "27:3", "27:4", "heisenberg:3", "dihedral:8", "quaternion:8"})
    CHECK(std::find(eq.begin(), eq.end(), id) != eq.end());
  for (const auto* row : report.equality) CHECK(row->center_order * row->center_order == row->order / row->center_order);
}

TEST_CASE("cli: analyze") {
  auto r = cli({"analyze", "--family", "quaternion:8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: true") != std::string::npos);
  CHECK(r.out.find("p=2 n=2 m=1") != std::string::npos);

  r = cli({"analyze", "--id", "32:6", "--input", k32});
  CHECK(r.code == 0);
  CHECK(r.out.find("|Z|=2") != std::string::npos);
  CHECK(r.out.find("verdict: true") != std::string::npos);

  r = cli({"analyze", "--family", "cyclic:5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not applicable") != std::string::npos);

  r = cli({"analyze", "--id", "32:99", "--input", k32});
  CHECK(r.code == 1);
  CHECK(r.err.find("UnknownGroupId") != std::string::npos);

  CHECK(cli({"analyze", "--family", "heisenberg:4"}).code == 1);
  CHECK(cli({"analyze"}).code == 1);
  CHECK(cli({"analyze", "--workers", "0", "--family", "cyclic:2"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli: verify") {
  auto r = cli({"verify", "--input", k32, "--workers", "1"});
  CHECK(r.code == 0);
  std::size_t rows = 0, true_rows = 0;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    true_rows += line.find("\ttrue\t") != std::string::npos;
  }
  CHECK(rows == 51);
  // the five census groups plus the two extraspecial groups, which are Camina groups
  CHECK(true_rows == 7);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto again = cli({"verify", "--input", k32, "--workers", "2"});
  CHECK(again.out == r.out);

  const std::string empty = (std::filesystem::temp_directory_path() / "camina_empty.grp").string();
  { std::ofstream(empty) << "# nothing\n"; }
  r = cli({"verify", "--input", empty});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);

  const std::string report = (std::filesystem::temp_directory_path() / "camina_report.tsv").string();
  r = cli({"verify", "--max-order", "30", "--report", report});
  CHECK(r.code == 0);
  CHECK(r.out.find("failing rows 0") != std::string::npos);
  std::ifstream file(report);
  std::getline(file, line);
  CHECK(line.rfind("group_id", 0) == 0);

  CHECK(cli({"verify", "--input", "/nonexistent/file.grp"}).code == 1);
}

TEST_CASE("cli: census, search, chartable, families") {
  auto r = cli({"census", "--order", "32", "--predicate", "center-pair-not-camina-group", "--input", k32});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("order 32, center-pair-not-camina-group: 5 of 51", 0) == 0);
  CHECK(cli({"census", "--order", "32", "--predicate", "bogus", "--input", k32}).code == 1);

  r = cli({"search", "--max-order", "27", "--input", kSmall});
  CHECK(r.code == 0);
  CHECK(r.out.find("no strict counterexample; equality cases: 8:3, 8:4") != std::string::npos);

  r = cli({"chartable", "--family", "quaternion:8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degrees: 1,1,1,1,2") != std::string::npos);

  r = cli({"families", "--max-order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8\tquaternion:8\n") != std::string::npos);
  CHECK(r.out.find("27") == std::string::npos);
}
