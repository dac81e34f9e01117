#include "camina/structure.hpp"

#include <sstream>

namespace camina {

CentralSeries lower_central_series(const FiniteGroup& g) {
  CentralSeries s;
  s.kind = SeriesKind::Lower;
  const auto whole = Subgroup::whole(g);
  s.terms.push_back(whole);
  while (!s.terms.back().is_trivial()) {
    auto next = commutator_subgroup(g, s.terms.back(), whole);
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  if (s.terms.back().is_trivial()) s.class_c = static_cast<int>(s.terms.size()) - 1;
  return s;
}

CentralSeries upper_central_series(const FiniteGroup& g) {
  CentralSeries s;
  s.kind = SeriesKind::Upper;
  s.terms.push_back(Subgroup::trivial(g));
  while (!s.terms.back().is_whole()) {
    const auto q = quotient(g, s.terms.back());
    auto next = preimage(g, q, center(q.group));
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  if (s.terms.back().is_whole()) s.class_c = static_cast<int>(s.terms.size()) - 1;
  return s;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  const auto lower = lower_central_series(g).class_c;
  const auto upper = upper_central_series(g).class_c;
  if (lower != upper) {
    std::ostringstream msg;
    msg << "lower series gives class " << (lower ? std::to_string(*lower) : "none") << ", upper gives "
        << (upper ? std::to_string(*upper) : "none");
    throw Error(ErrorCode::InternalError, msg.str());
  }
  return lower;
}

Subgroup d_subgroup(const FiniteGroup& g, ElementId x, const Subgroup& z) {
  if (z.contains(x)) throw Error(ErrorCode::CentralElement, "D(g) requested for a central element");
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y)
    if (z.contains(commutator(g, x, y))) members.push_back(y);
  // The set is the preimage of a centralizer in G/Z, so closure must hold.
  Subgroup d = Subgroup::from_sorted_unchecked(g, std::move(members));
  for (auto a : d.members())
    for (auto s : generating_set(g, d))
      if (!d.contains(g.mul(a, s)))
        throw Error(ErrorCode::InternalError, "D(g) is not closed; is z the center?");
  return d;
}

std::optional<PrimePower> as_prime_power(std::uint64_t value) {
  if (value < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= value && value % p != 0) ++p;
  if (value % p != 0) p = value;
  int n = 0;
  while (value % p == 0) {
    value /= p;
    ++n;
  }
  if (value != 1) return std::nullopt;
  return PrimePower{p, n};
}

std::optional<PrimePower> quotient_exponent_over_center(const FiniteGroup& g) {
  const auto q = quotient(g, center(g));
  return as_prime_power(group_exponent(q.group));
}

bool factor_has_exponent_dividing(const FiniteGroup& g, const Subgroup& upper, const Subgroup& lower,
                                  std::uint64_t p) {
  for (auto x : upper.members())
    if (!lower.contains(g.pow(x, p))) return false;
  return true;
}

}  // namespace camina
