#include "camina/camina.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace camina {

std::string_view to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::Pass: return "PASS";
    case CheckOutcome::Fail: return "FAIL";
    case CheckOutcome::Vacuous: return "VACUOUS";
  }
  return "?";
}

void validate_pair_target(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order()) throw Error(ErrorCode::InvalidPairTarget, "subgroup of a different group");
  if (n.is_trivial()) throw Error(ErrorCode::InvalidPairTarget, "N is trivial");
  if (n.is_whole()) throw Error(ErrorCode::InvalidPairTarget, "N is the whole group");
  if (!is_normal(g, n)) throw Error(ErrorCode::InvalidPairTarget, "N is not normal");
}

CriterionResult camina_by_classes(const FiniteGroup& g, const Subgroup& n) {
  validate_pair_target(g, n);
  const auto classes = conjugacy_classes(g);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    for (auto y : n.members())
      if (classes.class_of[g.mul(x, y)] != classes.class_of[x]) return {false, PairWitness{x, y}};
  }
  return {};
}

CriterionResult camina_by_commutators(const FiniteGroup& g, const Subgroup& n) {
  validate_pair_target(g, n);
  std::vector<std::uint8_t> hit(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    std::fill(hit.begin(), hit.end(), 0);
    for (ElementId y = 0; y < g.order(); ++y) hit[commutator(g, y, x)] = 1;
    for (auto z : n.members())
      if (!hit[z]) return {false, PairWitness{x, z}};
  }
  return {};
}

CriterionResult camina_by_centralizers(const FiniteGroup& g, const Subgroup& n) {
  validate_pair_target(g, n);
  const auto q = quotient(g, n);
  const auto& qg = q.group;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    std::size_t in_g = 0;
    for (ElementId y = 0; y < g.order(); ++y) in_g += g.mul(x, y) == g.mul(y, x);
    const auto xq = q.projection[x];
    std::size_t in_q = 0;
    for (ElementId y = 0; y < qg.order(); ++y) in_q += qg.mul(xq, y) == qg.mul(y, xq);
    if (in_g != in_q) return {false, PairWitness{x, kIdentity}};
  }
  return {};
}

bool is_camina_group(const FiniteGroup& g) {
  const auto derived = derived_subgroup(g);
  if (derived.is_trivial() || derived.is_whole()) return false;
  return camina_by_classes(g, derived).holds;
}

CaminaVerdict camina_verdict(const FiniteGroup& g, const Subgroup& n, const CharacterTable* table) {
  CaminaVerdict v;
  v.pair_target = n;
  const auto classes = camina_by_classes(g, n);
  const auto commutators = camina_by_commutators(g, n);
  const auto centralizers = camina_by_centralizers(g, n);
  v.by_classes = classes.holds;
  v.by_commutators = commutators.holds;
  v.by_centralizers = centralizers.holds;
  v.witness = classes.witness ? classes.witness : commutators.witness ? commutators.witness : centralizers.witness;
  if (table) v.by_characters = characters_vanish_off(g, n, *table).holds;
  const bool agree = v.by_classes == v.by_commutators && v.by_classes == v.by_centralizers &&
                     (!v.by_characters || *v.by_characters == v.by_classes);
  if (!agree) {
    std::ostringstream msg;
    msg << "classes=" << v.by_classes << " commutators=" << v.by_commutators << " centralizers=" << v.by_centralizers;
    if (v.by_characters) msg << " characters=" << *v.by_characters;
    throw Error(ErrorCode::EquivalenceViolation, msg.str());
  }
  v.is_camina_group = is_camina_group(g);
  return v;
}

// ---------------------------------------------------------------- script C

std::vector<ElementId> script_c(const FiniteGroup& g, const Subgroup& z, const Subgroup& derived) {
  if (z == derived) throw Error(ErrorCode::NotApplicable, "Z(G) = G', so the set is empty");
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    std::size_t meet = 0;
    for (auto y : derived.members()) meet += g.mul(x, y) == g.mul(y, x);
    if (meet > z.order()) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> script_c_union(const FiniteGroup& g, const Subgroup& z, const Subgroup& derived) {
  std::vector<std::uint8_t> in(g.order(), 0);
  for (auto a : derived.members()) {
    if (z.contains(a)) continue;
    const auto c = centralizer(g, a);
    for (auto x : c.members()) in[x] = 1;
  }
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- bounds

const std::vector<std::string>& bound_check_ids() {
  static const std::vector<std::string> ids{
      "T1.1", "T1.2", "T1.3", "T1.4", "T1.5",      "Texp",  "L2.1",       "L2.2",    "L2.3",     "L2.4",     "Lcents",
      "LZ2G'", "Cor2grp", "Cm2", "CGpZ", "T5.1", "LDquo", "Lidxp", "Lidxp-conv", "Csmall", "LscriptC", "Z2G'comm"};
  return ids;
}

const NamedCheck* BoundReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool BoundReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.outcome() == CheckOutcome::Fail; });
}

namespace {

// Largest k with p^k dividing value, and whether value is exactly p^k.
std::pair<int, bool> log_p(std::uint64_t value, std::uint64_t p) {
  int k = 0;
  while (p > 1 && value % p == 0) {
    value /= p;
    ++k;
  }
  return {k, value == 1};
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool is_square(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

bool quotient_by_abelian(const FiniteGroup& g, const Subgroup& top, const Subgroup& bottom) {
  const auto gens = generating_set(g, top);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!bottom.contains(commutator(g, gens[i], gens[j]))) return false;
  return true;
}

}  // namespace

BoundReport verify_bounds(const FiniteGroup& g, const CaminaVerdict& verdict, const CharacterTable* table) {
  if (!verdict.holds()) throw Error(ErrorCode::NotApplicable, "bounds are only checked for Camina pairs");
  const auto z = center(g);
  if (!(verdict.pair_target == z)) throw Error(ErrorCode::NotApplicable, "verdict is not for N = Z(G)");
  const auto derived = derived_subgroup(g);
  const auto lower = lower_central_series(g);
  const auto upper = upper_central_series(g);

  BoundReport r;
  r.p = smallest_prime_factor(g.order());
  const auto p = r.p;
  const std::uint64_t z_order = z.order();
  const std::uint64_t index = g.order() / z_order;
  const auto [n, n_exact] = log_p(index, p);
  const auto [m, m_exact] = log_p(z_order, p);
  const bool z_in_derived = z.is_subset_of(derived);
  const auto [l, l_exact] = log_p(z_in_derived ? derived.order() / z_order : 0, p);
  r.n = n;
  r.m = m;
  r.l = z_in_derived ? l : -1;
  r.class_c = lower.class_c;
  const auto qexp = quotient_exponent_over_center(g);
  r.quotient_exponent_n = qexp && qexp->p == p ? qexp->n : 0;
  const int q = r.quotient_exponent_n;
  const bool z_below_derived = z_in_derived && derived.order() > z_order;

  auto add = [&](std::string id, bool hypothesis, bool conclusion, std::string detail = {}) {
    r.checks.push_back({std::move(id), hypothesis, conclusion, std::move(detail)});
  };
  auto detail = [](auto&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
  };

  bool p_group = n_exact && m_exact;
  for (ElementId x = 0; x < g.order() && p_group; ++x) p_group = log_p(element_order(g, x), p).second;

  add("T1.1", true, z_order <= g.order() / derived.order(), detail("|Z|=", z_order, " |G:G'|=", g.order() / derived.order()));
  add("T1.2", z_below_derived, m < 3 * l, detail("m=", m, " l=", l));
  add("T1.3", true, 4 * m + 1 <= 3 * n, detail("4m+1=", 4 * m + 1, " 3n=", 3 * n));
  add("T1.4", z_below_derived, 2 * m <= n || m + 4 <= n, detail("m=", m, " n=", n));
  add("T1.5", p_group && q > 1, 2 * m < n, detail("exp(G/Z)=p^", q));
  add("Texp", p_group && q >= 1, q * m + q <= n, detail("q=", q, " |Z|^q p^q=p^", q * m + q, " |G:Z|=p^", n));
  add("L2.1", true, p_group, detail("|G|=", g.order()));

  bool upper_exponent_p = upper.class_c.has_value();
  for (std::size_t i = 1; i < upper.terms.size() && upper_exponent_p; ++i)
    upper_exponent_p = factor_has_exponent_dividing(g, upper.terms[i], upper.terms[i - 1], p);
  add("L2.2", true, upper_exponent_p, detail("class=", upper.class_c.value_or(-1)));

  const bool z_is_last_lower = lower.class_c && *lower.class_c >= 1 && lower.terms[*lower.class_c - 1] == z;
  add("L2.3", true, z_is_last_lower);

  {
    bool ok = is_square(index);
    std::string note = ok ? "index square" : "index not square";
    if (table) {
      const auto fr = verify_fully_ramified(g, z, *table);
      const auto vanish = characters_vanish_off(g, z, *table);
      ok = ok && fr.holds && vanish.holds;
      if (!fr.holds) note += "; " + fr.witness->reason;
    } else {
      note += "; no character table";
    }
    add("L2.4", true, ok, note);
  }

  // One pass over noncentral elements for the centralizer-based checks.
  const bool z_elementary = factor_has_exponent_dividing(g, z, Subgroup::trivial(g), p);
  bool cents_ok = z_elementary;
  bool dquo_hyp = false, dquo_ok = true;
  bool idxp_hyp = false;
  bool idxp_conv_ok = true;
  std::string cents_note;
  std::vector<Subgroup> derived_centralizers(g.order());
  for (ElementId a = 0; a < g.order(); ++a) {
    if (z.contains(a)) continue;
    const auto c = centralizer(g, a);
    const auto d = d_subgroup(g, a, z);
    if (derived.contains(a)) derived_centralizers[a] = c;

    if (cents_ok) {
      bool ok = d.order() == c.order() * z_order && c.is_subset_of(d);
      const auto dgens = generating_set(g, d);
      const auto cgens = generating_set(g, c);
      for (auto s : dgens) {
        if (!ok) break;
        ok = c.contains(g.pow(s, p));
        for (auto t : cgens) ok = ok && c.contains(conjugate(g, t, s));
      }
      ok = ok && quotient_by_abelian(g, d, c);
      if (!ok) {
        cents_ok = false;
        cents_note = detail("fails at g=", a, " |D|=", d.order(), " |C|=", c.order());
      }
    }

    const auto d_mod_z_abelian = quotient_by_abelian(g, d, z);
    const std::uint64_t d_index = g.order() / d.order();
    std::size_t meet = 0;
    for (auto y : derived.members()) meet += c.contains(y);
    if (meet == z_order) {
      dquo_hyp = true;
      dquo_ok = dquo_ok && d_mod_z_abelian;
    }
    if (d_mod_z_abelian && d_index == p) idxp_hyp = true;
    if (d_index == p && d_mod_z_abelian) idxp_conv_ok = false;
  }
  add("Lcents", true, cents_ok, cents_note);

  const auto z2 = upper.terms.size() > 2 ? upper.terms[2] : upper.terms.back();
  const auto derived_z2 = subgroup_join(g, derived, z2);
  add("LZ2G'", z_below_derived, g.order() / derived_z2.order() >= z_order,
      detail("|G:G'Z2|=", g.order() / derived_z2.order(), " |Z|=", z_order));
  add("Cor2grp", p == 2, 2 * m <= n && (2 * m != n || verdict.is_camina_group),
      detail("2m=", 2 * m, " n=", n, " camina_group=", verdict.is_camina_group));
  add("Cm2", p_group, 2 * m <= n || m + 3 <= n, detail("m=", m, " n=", n));
  add("CGpZ", z_in_derived && l == 1 && l_exact, 2 * m <= n, detail("l=", l));
  add("T5.1", z_below_derived, m <= 3 * l - 1, detail("m=", m, " 3l-1=", 3 * l - 1));
  add("LDquo", dquo_hyp, dquo_ok);
  add("Lidxp", idxp_hyp, 2 * m <= n, detail("2m=", 2 * m, " n=", n));
  add("Lidxp-conv", 2 * m > n, idxp_conv_ok);

  {
    bool hyp = false;
    if (z_below_derived) {
      for (auto a : derived.members()) {
        if (z.contains(a) || !z2.contains(a)) continue;
        const auto& ca = derived_centralizers[a];
        bool dominates = true;
        for (auto b : derived.members()) {
          if (z.contains(b)) continue;
          if (!derived_centralizers[b].is_subset_of(ca)) {
            dominates = false;
            break;
          }
        }
        if (dominates) {
          hyp = true;
          break;
        }
      }
    }
    add("Csmall", hyp, 3 * m + 2 <= 2 * n, detail("3m+2=", 3 * m + 2, " 2n=", 2 * n));
  }

  {
    bool ok = true;
    if (z_below_derived) {
      const auto by_definition = script_c(g, z, derived);
      const auto by_union = script_c_union(g, z, derived);
      const auto contains = [&](const std::vector<ElementId>& set, const Subgroup& h) {
        return std::all_of(h.members().begin(), h.members().end(),
                           [&](ElementId x) { return std::binary_search(set.begin(), set.end(), x); });
      };
      ok = by_definition == by_union && contains(by_definition, derived) &&
           contains(by_definition, centralizer_of(g, derived));
    }
    add("LscriptC", z_below_derived, ok);
  }

  add("Z2G'comm", true, commutator_subgroup(g, z2, derived).is_trivial());
  return r;
}

CenterPairAnalysis analyze_center_pair(const FiniteGroup& g, const CharacterTable* table) {
  CenterPairAnalysis a;
  const auto z = center(g);
  if (z.is_trivial() || z.is_whole()) return a;
  a.applicable = true;
  a.verdict = camina_verdict(g, z, table);
  if (a.verdict->holds()) a.report = verify_bounds(g, *a.verdict, table);
  return a;
}

}  // namespace camina
