#include <doctest.h>

#include "camina/corpus.hpp"
#include "camina/structure.hpp"
#include "oracle.hpp"

using namespace camina;

namespace {

std::vector<std::size_t> orders(const CentralSeries& s) {
  std::vector<std::size_t> out;
  for (const auto& t : s.terms) out.push_back(t.order());
  return out;
}

// {x : [g, x] in z}, straight from the table.
oracle::ElementSet naive_d(const FiniteGroup& g, ElementId x, const oracle::ElementSet& z) {
  oracle::ElementSet d;
  for (ElementId y = 0; y < g.order(); ++y)
    if (z.count(oracle::naive_commutator(g, x, y))) d.insert(y);
  return d;
}

FiniteGroup fixture32(std::uint64_t index) {
  for (const auto& e : parse_corpus_file(CAMINA_DATA_DIR "/order32.grp"))
    if (e.index == index) return e.build();
  FAIL("missing fixture entry");
  return oracle::cyclic(1);
}

}  // namespace

TEST_CASE("lower central series") {
  const auto c6 = oracle::cyclic(6);
  auto s = lower_central_series(c6);
  CHECK(orders(s) == std::vector<std::size_t>{6, 1});
  CHECK(s.class_c == 1);

  s = lower_central_series(oracle::q8());
  CHECK(orders(s) == std::vector<std::size_t>{8, 2, 1});
  CHECK(s.class_c == 2);

  const auto h = oracle::heisenberg27();
  s = lower_central_series(h);
  CHECK(orders(s) == std::vector<std::size_t>{27, 3, 1});
  CHECK(oracle::as_set(s.terms[1]) == oracle::naive_derived(h));

  s = lower_central_series(oracle::s3());
  CHECK(orders(s) == std::vector<std::size_t>{6, 3});
  CHECK_FALSE(s.class_c.has_value());
}

TEST_CASE("upper central series") {
  auto s = upper_central_series(oracle::cyclic(6));
  CHECK(orders(s) == std::vector<std::size_t>{1, 6});

  const auto q8 = oracle::q8();
  s = upper_central_series(q8);
  CHECK(orders(s) == std::vector<std::size_t>{1, 2, 8});
  CHECK(oracle::as_set(s.terms[1]) == oracle::naive_center(q8));

  s = upper_central_series(oracle::s3());
  CHECK(orders(s) == std::vector<std::size_t>{1});
  CHECK_FALSE(s.class_c.has_value());

  s = upper_central_series(oracle::c3_wreath_c3());
  CHECK(s.class_c == 3);
  CHECK(orders(s).back() == 81);
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(oracle::cyclic(5)) == 1);
  CHECK(nilpotency_class(oracle::q8()) == 2);
  CHECK(nilpotency_class(direct_product(oracle::heisenberg27(), oracle::cyclic(3))) == 2);
  CHECK(nilpotency_class(oracle::c3_wreath_c3()) == 3);
  CHECK_FALSE(nilpotency_class(oracle::s3()).has_value());
}

TEST_CASE("D(g)") {
  const auto q8 = oracle::q8();
  const auto z = center(q8);
  CHECK_THROWS_AS(d_subgroup(q8, 0, z), Error);
  for (ElementId x = 0; x < 8; ++x)
    if (!z.contains(x)) CHECK(d_subgroup(q8, x, z).is_whole());

  const auto h = oracle::heisenberg27();
  const auto zh = center(h);
  for (ElementId x = 0; x < 27; ++x)
    if (!zh.contains(x)) CHECK(d_subgroup(h, x, zh).is_whole());

  const auto w = oracle::c3_wreath_c3();
  const auto zw = center(w);
  const auto upper = upper_central_series(w);
  const auto& z2 = upper.terms.at(2);
  bool saw_proper = false;
  for (ElementId x = 0; x < w.order(); ++x) {
    if (zw.contains(x)) continue;
    const auto d = d_subgroup(w, x, zw);
    CHECK(oracle::as_set(d) == naive_d(w, x, oracle::as_set(zw)));
    if (!z2.contains(x)) {
      CHECK_FALSE(d.is_whole());
      saw_proper = true;
    }
  }
  CHECK(saw_proper);
}

TEST_CASE("prime powers") {
  CHECK(as_prime_power(1) == std::nullopt);
  CHECK(as_prime_power(12) == std::nullopt);
  CHECK(as_prime_power(2) == PrimePower{2, 1});
  CHECK(as_prime_power(81) == PrimePower{3, 4});
  CHECK(as_prime_power(625) == PrimePower{5, 4});
}

TEST_CASE("exponent of G/Z") {
  CHECK(quotient_exponent_over_center(oracle::q8()) == PrimePower{2, 1});
  CHECK(quotient_exponent_over_center(oracle::heisenberg27()) == PrimePower{3, 1});
  CHECK(quotient_exponent_over_center(oracle::cyclic(4)) == std::nullopt);
  CHECK(quotient_exponent_over_center(oracle::s3()) == std::nullopt);

  // 32:6 has G/Z of order 16 and nonabelian
  const auto g = fixture32(6);
  const auto q = quotient(g, center(g));
  CHECK(q.group.order() == 16);
  CHECK_FALSE(is_abelian(q.group));
  CHECK(oracle::naive_exponent(q.group) == 4);
  CHECK(quotient_exponent_over_center(g) == PrimePower{2, 2});
}

TEST_CASE("exponent of central factors") {
  const auto w = oracle::c3_wreath_c3();
  const auto upper = upper_central_series(w);
  for (std::size_t i = 1; i < upper.terms.size(); ++i)
    CHECK(factor_has_exponent_dividing(w, upper.terms[i], upper.terms[i - 1], 3));
  const auto c9 = oracle::cyclic(9);
  CHECK_FALSE(factor_has_exponent_dividing(c9, Subgroup::whole(c9), Subgroup::trivial(c9), 3));
  CHECK(factor_has_exponent_dividing(c9, Subgroup::whole(c9), Subgroup::trivial(c9), 9));
}
