#include <doctest.h>

#include "camina/group.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("closure: trivial, cyclic and Q8") {
  CHECK(group_from_generators(1, {}).order() == 1);

  const auto c4 = group_from_generators(4, std::vector<Permutation>{Permutation({2, 3, 4, 1})});
  CHECK(c4.order() == 4);
  CHECK(element_order(c4, c4.generators().at(0)) == 4);

  const auto q8 = oracle::q8();
  CHECK(q8.order() == oracle::closure(8, oracle::q8_generators()).size());
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (ElementId x = 0; x < 8; ++x) involutions += oracle::naive_order(q8, x) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("closure matches the naive closure on larger groups") {
  CHECK(oracle::heisenberg27().order() == oracle::closure(27, oracle::heisenberg27_generators()).size());
  CHECK(oracle::c3_wreath_c3().order() == 81);
}

TEST_CASE("closure respects the cap") {
  std::vector<Permutation> s5{Permutation({2, 3, 4, 5, 1}), Permutation({2, 1, 3, 4, 5})};
  CHECK(code_of([&] { group_from_generators(5, s5, 100); }) == ErrorCode::ClosureExceedsCap);
  CHECK(group_from_generators(5, s5, 120).order() == 120);
}

TEST_CASE("permutations are validated") {
  CHECK(code_of([] { Permutation({1, 1, 2}); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { Permutation({0, 1}); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { Permutation({3, 1}); }) == ErrorCode::InvalidPermutation);
  CHECK(code_of([] { group_from_generators(3, std::vector<Permutation>{Permutation({2, 1})}); }) ==
        ErrorCode::InvalidPermutation);
}

TEST_CASE("product convention: left factor acts first") {
  const Permutation a({2, 3, 1}), b({2, 1, 3});
  CHECK(a.then(b).images() == oracle::compose(a.images(), b.images()));
  const auto s3 = oracle::s3();
  // tables agree with composing permutations
  const auto reg = regular_representation(s3);
  REQUIRE(reg.size() == s3.generators().size());
  for (std::size_t k = 0; k < reg.size(); ++k)
    for (ElementId x = 0; x < s3.order(); ++x) CHECK(reg[k](x + 1) == s3.mul(x, s3.generators()[k]) + 1);
}

TEST_CASE("Cayley tables") {
  CHECK(group_from_cayley_table({{0}}).order() == 1);
  const auto c2 = group_from_cayley_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == 0);

  // row swap breaks the column Latin property
  CHECK(code_of([] { group_from_cayley_table({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}); }) != ErrorCode::InternalError);
  const auto swapped = code_of([] { group_from_cayley_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}); });
  CHECK((swapped == ErrorCode::NotLatinSquare || swapped == ErrorCode::NotAssociative ||
         swapped == ErrorCode::NoIdentity));
  CHECK(code_of([] { group_from_cayley_table({{0, 1}, {1, 1}}); }) == ErrorCode::NotLatinSquare);
  CHECK(code_of([] { group_from_cayley_table({{0, 2}, {1, 0}}); }) == ErrorCode::NotLatinSquare);

  // a Latin square with identity that is not associative (order 5 loop)
  const std::vector<std::vector<std::int64_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { group_from_cayley_table(loop); }) == ErrorCode::NotAssociative);
}

TEST_CASE("Cayley table round trip") {
  const auto h = oracle::heisenberg27();
  std::vector<std::vector<std::int64_t>> t(h.order(), std::vector<std::int64_t>(h.order()));
  for (ElementId a = 0; a < h.order(); ++a)
    for (ElementId b = 0; b < h.order(); ++b) t[a][b] = h.mul(a, b);
  CHECK(group_from_cayley_table(t).same_table(h));
  CHECK_FALSE(find_nonassociative_triple(h).has_value());
}

TEST_CASE("element orders and exponents") {
  const auto q8 = oracle::q8();
  CHECK(element_order(q8, 0) == 1);
  const auto minus_one = oracle::element_of_order(q8, 2);
  CHECK(element_order(q8, minus_one) == 2);
  for (ElementId x = 0; x < q8.order(); ++x) CHECK(element_order(q8, x) == oracle::naive_order(q8, x));
  CHECK(group_exponent(q8) == 4);
  CHECK(group_exponent(oracle::heisenberg27()) == 3);
  CHECK(group_exponent(direct_product(oracle::cyclic(2), oracle::cyclic(2))) == 2);
  CHECK(group_exponent(oracle::s3()) == oracle::naive_exponent(oracle::s3()));
}

TEST_CASE("subgroup generation") {
  const auto c4 = oracle::cyclic(4);
  CHECK(subgroup_generate(c4, {}).is_trivial());
  const ElementId x = oracle::element_of_order(c4, 4);
  CHECK(subgroup_generate(c4, std::vector<ElementId>{x}).is_whole());

  const auto q8 = oracle::q8();
  const auto gens = q8.generators();
  CHECK(subgroup_generate(q8, gens).order() == 8);
  for (ElementId a = 0; a < 8; ++a) {
    const std::vector<ElementId> seed{a};
    CHECK(oracle::as_set(subgroup_generate(q8, seed)) == oracle::naive_generate(q8, {a}));
  }
}

TEST_CASE("Subgroup::from_members validates closure") {
  const auto s3 = oracle::s3();
  CHECK(code_of([&] { Subgroup::from_members(s3, {0, 1, 2, 3}); }) == ErrorCode::InternalError);
  const auto a3 = derived_subgroup(s3);
  CHECK(Subgroup::from_members(s3, a3.members()) == a3);
}

TEST_CASE("center and centralizers") {
  const auto c6 = oracle::cyclic(6);
  CHECK(center(c6).is_whole());

  const auto q8 = oracle::q8();
  CHECK(oracle::as_set(center(q8)) == oracle::naive_center(q8));
  CHECK(center(q8).order() == 2);
  CHECK(centralizer(q8, 0).is_whole());
  const ElementId i = q8.generators()[0];
  CHECK(centralizer(q8, i).order() == 4);
  CHECK(oracle::as_set(centralizer(q8, i)) == oracle::naive_generate(q8, {i}));

  const auto h = oracle::heisenberg27();
  CHECK(center(h).order() == 3);
  CHECK(center(h) == derived_subgroup(h));
  for (ElementId x = 0; x < h.order(); ++x) {
    const auto c = centralizer(h, x);
    CHECK(oracle::as_set(c) == oracle::naive_centralizer(h, x));
    if (!center(h).contains(x)) CHECK(c.order() == 9);
  }
}

TEST_CASE("conjugacy classes") {
  const auto c5 = oracle::cyclic(5);
  CHECK(conjugacy_classes(c5).count() == 5);

  const auto sizes = [](const ConjugacyClasses& cc) {
    std::multiset<std::size_t> s;
    for (const auto& c : cc.classes) s.insert(c.size());
    return s;
  };
  CHECK(sizes(conjugacy_classes(oracle::q8())) == std::multiset<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sizes(conjugacy_classes(oracle::s3())) == std::multiset<std::size_t>{1, 2, 3});

  for (const auto& g : {oracle::q8(), oracle::s3(), oracle::heisenberg27(), oracle::c3_wreath_c3()}) {
    const auto cc = conjugacy_classes(g);
    const auto naive = oracle::naive_classes(g);
    REQUIRE(cc.count() == naive.size());
    for (ElementId x = 0; x < g.order(); ++x) {
      const auto& mine = cc.classes[cc.class_of[x]];
      const oracle::ElementSet as_set(mine.begin(), mine.end());
      CHECK(std::find(naive.begin(), naive.end(), as_set) != naive.end());
      CHECK(as_set.count(x) == 1);
    }
  }
}

TEST_CASE("commutators and derived subgroups") {
  const auto q8 = oracle::q8();
  for (ElementId x = 0; x < 8; ++x) CHECK(commutator(q8, x, x) == 0);
  const auto c6 = oracle::cyclic(6);
  for (ElementId x = 0; x < 6; ++x)
    for (ElementId y = 0; y < 6; ++y) CHECK(commutator(c6, x, y) == 0);
  const ElementId i = q8.generators()[0], j = q8.generators()[1];
  CHECK(commutator(q8, i, j) == oracle::element_of_order(q8, 2));
  for (ElementId x = 0; x < 8; ++x)
    for (ElementId y = 0; y < 8; ++y) CHECK(commutator(q8, x, y) == oracle::naive_commutator(q8, x, y));

  CHECK(derived_subgroup(c6).is_trivial());
  CHECK(oracle::as_set(derived_subgroup(q8)) == oracle::naive_derived(q8));
  CHECK(derived_subgroup(q8).order() == 2);
  CHECK(derived_subgroup(oracle::s3()).order() == 3);
  const auto w = oracle::c3_wreath_c3();
  CHECK(oracle::as_set(derived_subgroup(w)) == oracle::naive_derived(w));
}

TEST_CASE("normality") {
  const auto q8 = oracle::q8();
  CHECK(is_normal(q8, center(q8)));
  CHECK(is_normal(q8, subgroup_generate(q8, std::vector<ElementId>{q8.generators()[0]})));
  const auto s3 = oracle::s3();
  const ElementId s = oracle::element_of_order(s3, 2);
  CHECK_FALSE(is_normal(s3, subgroup_generate(s3, std::vector<ElementId>{s})));
}

TEST_CASE("quotients") {
  const auto q8 = oracle::q8();
  CHECK(quotient(q8, Subgroup::whole(q8)).group.order() == 1);
  const auto same = quotient(q8, Subgroup::trivial(q8));
  CHECK(same.group.order() == 8);
  CHECK(std::set<ElementId>(same.projection.begin(), same.projection.end()).size() == 8);

  const auto q = quotient(q8, center(q8));
  CHECK(q.group.order() == 4);
  CHECK(group_exponent(q.group) == 2);
  for (ElementId a = 0; a < 8; ++a)
    for (ElementId b = 0; b < 8; ++b) CHECK(q.projection[q8.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

  const auto s3 = oracle::s3();
  const ElementId s = oracle::element_of_order(s3, 2);
  CHECK(code_of([&] { quotient(s3, subgroup_generate(s3, std::vector<ElementId>{s})); }) == ErrorCode::NotNormal);
  CHECK(preimage(q8, q, Subgroup::trivial(q.group)) == center(q8));
}

TEST_CASE("direct products") {
  const auto s3 = oracle::s3();
  const auto with_trivial = direct_product(s3, oracle::cyclic(1));
  CHECK(with_trivial.order() == 6);
  CHECK(group_exponent(with_trivial) == 6);
  const auto v4 = direct_product(oracle::cyclic(2), oracle::cyclic(2));
  CHECK(v4.order() == 4);
  const auto t = direct_product(oracle::heisenberg27(), oracle::cyclic(3));
  CHECK(t.order() == 81);
  CHECK(center(t).order() == 9);
  CHECK(oracle::naive_center(t).size() == 9);
}

TEST_CASE("breadth-first relabelling keeps the group") {
  const auto h = oracle::heisenberg27();
  const auto r = relabel_breadth_first(h, h.generators());
  CHECK(r.order() == 27);
  CHECK(center(r).order() == 3);
  CHECK(conjugacy_classes(r).count() == conjugacy_classes(h).count());
}
