#include <doctest.h>

#include <sstream>

#include "camina/corpus.hpp"
#include "camina/structure.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

ErrorCode parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_corpus(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::InternalError;
}

std::string parse_message(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_corpus(in);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parsing") {
  std::istringstream empty("");
  CHECK(parse_corpus(empty).empty());

  std::istringstream c2("# comment\n\ngroup 2 1 C2\ndegree 2\ngen 2 1\nend\n");
  const auto entries = parse_corpus(c2);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].id() == "2:1");
  CHECK(entries[0].name == "C2");
  CHECK(entries[0].build().order() == 2);

  std::istringstream trivial("group 1 1 1\ndegree 1\nend\n");
  CHECK(parse_corpus(trivial).at(0).build().order() == 1);
}

TEST_CASE("parse errors") {
  CHECK(parse_error("group 2 1 C2\ndegree 2\ngen 2 1\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("group 2 1 C2\ndegree 2\ngen 2 x\nend\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("group 2 1 C2\ndegree 2\ngen 2 1 3\nend\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("gen 2 1\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("group 2 1 C2\ngen 2 1\nend\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("bogus\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("group 3 1 C2\ndegree 2\ngen 2 1\nend\n") == ErrorCode::OrderMismatch);
  CHECK(parse_error("group 2 1 a\ndegree 2\ngen 2 1\nend\ngroup 2 1 b\ndegree 2\ngen 2 1\nend\n") ==
        ErrorCode::DuplicateId);
  CHECK(parse_error("group 2 1 C2\ndegree 2\ngen 1 1\nend\n") == ErrorCode::InvalidPermutation);
  CHECK(parse_message("\n\ngroup 2 1 C2\ndegree 2\ngen 2 q\nend\n").find("line 5") != std::string::npos);
}

TEST_CASE("fixture of order 32") {
  const auto entries = parse_corpus_file(CAMINA_DATA_DIR "/order32.grp");
  CHECK(entries.size() == 51);
  std::set<std::uint64_t> indices;
  for (const auto& e : entries) {
    CHECK(e.order == 32);
    indices.insert(e.index);
    std::vector<oracle::Images> gens;
    for (const auto& p : e.generators) gens.push_back(p.images());
    CHECK(oracle::closure(e.degree, gens).size() == 32);
  }
  CHECK(indices.size() == 51);
  CHECK(*indices.rbegin() == 51);
}

TEST_CASE("fixture up to order 64") {
  const auto entries = parse_corpus_file(CAMINA_DATA_DIR "/small_le64.grp");
  std::map<std::uint64_t, std::size_t> per_order;
  for (const auto& e : entries) ++per_order[e.order];
  CHECK(per_order[8] == 5);
  CHECK(per_order[16] == 14);
  CHECK(per_order[32] == 51);
  CHECK(per_order[64] == 267);
  CHECK(per_order.size() == 64);
}

TEST_CASE("family specs") {
  CHECK(parse_family_spec("heisenberg:3").to_string() == "heisenberg:3");
  CHECK(parse_family_spec("sl3_sylow:2,2").to_string() == "heisenberg:2,2");
  CHECK(parse_family_spec("T:3").to_string() == "T:3,1");
  CHECK(parse_family_spec("direct_product_with_cyclic:5,1").to_string() == "T:5,1");
  CHECK(parse_family_spec("extraspecial_exp_p:5").to_string() == "extraspecial_p:5");
  CHECK(parse_family_spec("Q:8").to_string() == "quaternion:8");
  CHECK(parse_family_spec("ea:2,3").expected_order() == 8);
  CHECK(parse_family_spec("T:5,1").expected_order() == 625);
  CHECK(parse_family_spec("extraspecial_p2:3,2").expected_order() == 243);
  CHECK_THROWS_AS(parse_family_spec("heisenberg"), Error);
  CHECK_THROWS_AS(parse_family_spec("nope:3"), Error);
  CHECK_THROWS_AS(parse_family_spec("cyclic:x"), Error);
  CHECK_THROWS_AS(parse_family_spec("cyclic:3,4"), Error);
}

TEST_CASE("family construction errors") {
  CHECK_THROWS_AS(build_family(parse_family_spec("heisenberg:4")), Error);
  CHECK_THROWS_AS(build_family(parse_family_spec("extraspecial_p:2,2")), Error);
  CHECK_THROWS_AS(build_family(parse_family_spec("dihedral:7")), Error);
  CHECK_THROWS_AS(build_family(parse_family_spec("quaternion:6")), Error);
  try {
    build_family(parse_family_spec("T:5,1"), 100);
    FAIL("expected ClosureExceedsCap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureExceedsCap);
  }
}

TEST_CASE("families have textbook invariants") {
  struct Expect {
    const char* spec;
    std::size_t order, center, cls;
  };
  for (const auto& x : std::vector<Expect>{
           {"cyclic:9", 9, 9, 1},
           {"dihedral:8", 8, 2, 2},
           {"dihedral:16", 16, 2, 3},
           {"dihedral:6", 6, 1, 0},
           {"quaternion:8", 8, 2, 2},
           {"quaternion:16", 16, 2, 3},
           {"quaternion:12", 12, 2, 0},
           {"elementary_abelian:3,3", 27, 27, 1},
           {"extraspecial_p:3", 27, 3, 2},
           {"extraspecial_p2:3", 27, 3, 2},
           {"extraspecial_p:3,2", 243, 3, 2},
           {"extraspecial_p:2", 8, 2, 2},
           {"extraspecial_p2:2", 8, 2, 2},
           {"heisenberg:3", 27, 3, 2},
           {"heisenberg:2,2", 64, 4, 2},
           {"T:3,1", 81, 9, 2},
       }) {
    CAPTURE(x.spec);
    const auto g = build_family(parse_family_spec(x.spec));
    CHECK(g.order() == x.order);
    CHECK(oracle::naive_center(g).size() == x.center);
    const auto cls = nilpotency_class(g);
    CHECK(cls.value_or(0) == static_cast<int>(x.cls));
  }
  CHECK(oracle::naive_exponent(build_family(parse_family_spec("extraspecial_p:5"))) == 5);
  CHECK(oracle::naive_exponent(build_family(parse_family_spec("extraspecial_p2:5"))) == 25);
  CHECK(oracle::naive_exponent(build_family(parse_family_spec("quaternion:8"))) == 4);
  CHECK(oracle::naive_exponent(build_family(parse_family_spec("heisenberg:2,2"))) == 4);

  // quaternion:8 is Q8: one involution
  const auto q = build_family(parse_family_spec("quaternion:8"));
  int involutions = 0;
  for (ElementId x = 0; x < 8; ++x) involutions += oracle::naive_order(q, x) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("T = S x C_p") {
  const auto t = build_family(parse_family_spec("T:3,1"));
  CHECK(t.order() == 81);
  const auto z = oracle::naive_center(t);
  CHECK(z.size() == 9);
  CHECK(z.size() / oracle::naive_derived(t).size() == 3);

  const auto r3 = verify_witness_properties(t, 3, 1);
  CHECK(r3.all_hold());
  const auto r5 = verify_witness_properties(build_family(parse_family_spec("T:5,1")), 5, 1);
  CHECK(r5.all_hold());
  CHECK(verify_witness_properties(build_family(parse_family_spec("T:2,2")), 2, 2).all_hold());

  // Heisenberg alone has the wrong center
  const auto control = verify_witness_properties(build_family(parse_family_spec("heisenberg:3")), 3, 1);
  CHECK_FALSE(control.all_hold());
  CHECK_FALSE(control.checks.at(0).holds);
}

TEST_CASE("serialize and re-parse gives the same table") {
  for (const auto& spec : builtin_families(256)) {
    CAPTURE(spec.to_string());
    const auto g = build_family(spec);
    std::ostringstream out;
    write_corpus_entry(out, corpus_entry_from_group(g, 1, spec.to_string()));
    std::istringstream in(out.str());
    const auto back = parse_corpus(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].name == spec.to_string());
    CHECK(back[0].build().same_table(g));
  }
}

TEST_CASE("builtin families are sorted and capped") {
  const auto all = builtin_families(625);
  CHECK_FALSE(all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].expected_order() <= all[i].expected_order());
  for (const auto& s : all) CHECK(s.expected_order() <= 625);
  CHECK(std::any_of(all.begin(), all.end(), [](const FamilySpec& s) { return s.to_string() == "T:5,1"; }));
}
