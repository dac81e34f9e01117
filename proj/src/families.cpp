#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "camina/corpus.hpp"
#include "camina/structure.hpp"

namespace camina {

namespace {

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorCode::UnsupportedParameters, what); }

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 40)) return r;  // saturates well above any order cap
    r *= base;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_cap(std::uint64_t order, std::size_t cap) {
  if (order > cap) {
    std::ostringstream msg;
    msg << "family order " << order << " exceeds the order cap of " << cap;
    throw Error(ErrorCode::ClosureExceedsCap, msg.str());
  }
}

// Builds a table from a multiplication rule on [0, n), then puts it in
// breadth-first order over gens.
FiniteGroup from_rule(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      std::vector<ElementId> gens) {
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<ElementId>(mul(a, b));
  const auto g = group_from_trusted_table(n, std::move(table), std::move(gens));
  return relabel_breadth_first(g, g.generators());
}

// GF(p^k) with elements encoded as base-p digit vectors of polynomials.
class GaloisField {
public:
  GaloisField(std::uint64_t p, std::uint64_t k) : p_(p), k_(k), q_(ipow(p, k)) {
    modulus_ = find_irreducible();
    mul_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) mul_[a * q_ + b] = slow_mul(a, b);
  }

  std::uint64_t size() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, scale = 1;
    for (std::uint64_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) r += ((a % p_ + b % p_) % p_) * scale;
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
  /// x^i, an F_p basis element.
  std::uint64_t basis(std::uint64_t i) const { return ipow(p_, i); }

private:
  using Poly = std::vector<std::uint64_t>;

  Poly digits(std::uint64_t a) const {
    Poly d(k_);
    for (std::uint64_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }

  // Remainder of a modulo monic f.
  Poly reduce(Poly a, const Poly& f) const {
    const std::size_t df = f.size() - 1;
    for (std::size_t i = a.size(); i-- > df;) {
      const auto c = a[i] % p_;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= df; ++j) a[i - df + j] = (a[i - df + j] + (p_ - c) * f[j]) % p_;
    }
    a.resize(std::min(a.size(), df));
    return a;
  }

  Poly find_irreducible() const {
    if (k_ == 1) return {0, 1};
    for (std::uint64_t low = 0; low < q_; ++low) {
      Poly f = digits(low);
      f.push_back(1);
      bool irreducible = true;
      for (std::uint64_t d = 1; d <= k_ / 2 && irreducible; ++d) {
        for (std::uint64_t g_low = 0; g_low < ipow(p_, d) && irreducible; ++g_low) {
          Poly g(d + 1, 0);
          auto v = g_low;
          for (std::uint64_t i = 0; i < d; ++i, v /= p_) g[i] = v % p_;
          g[d] = 1;
          const auto rem = reduce(f, g);
          irreducible = std::any_of(rem.begin(), rem.end(), [](std::uint64_t c) { return c != 0; });
        }
      }
      if (irreducible) return f;
    }
    unsupported("no irreducible polynomial found");
  }

  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    const auto da = digits(a), db = digits(b);
    Poly prod(2 * k_, 0);
    for (std::uint64_t i = 0; i < k_; ++i)
      for (std::uint64_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    const auto r = reduce(prod, modulus_);
    std::uint64_t out = 0, scale = 1;
    for (std::uint64_t i = 0; i < k_; ++i, scale *= p_) out += (i < r.size() ? r[i] : 0) * scale;
    return out;
  }

  std::uint64_t p_, k_, q_;
  Poly modulus_;
  std::vector<std::uint64_t> mul_;
};

FiniteGroup cyclic(std::uint64_t n) {
  return from_rule(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, {n > 1 ? ElementId{1} : ElementId{0}});
}

// r^i s^t, index i + k t.
FiniteGroup dihedral(std::uint64_t order) {
  const std::uint64_t k = order / 2;
  auto mul = [k](std::size_t x, std::size_t y) {
    const std::size_t i = x % k, t = x / k, j = y % k, u = y / k;
    const std::size_t rot = t ? (i + k - j) % k : (i + j) % k;
    return rot + k * (t ^ u);
  };
  return from_rule(order, mul, {static_cast<ElementId>(k > 1 ? 1 : 0), static_cast<ElementId>(k)});
}

// x^i y^t with x of order 2m, y^2 = x^m, y^-1 x y = x^-1; index i + 2m t.
FiniteGroup dicyclic(std::uint64_t order) {
  const std::uint64_t m = order / 4;
  const std::uint64_t h = 2 * m;
  auto mul = [m, h](std::size_t x, std::size_t y) {
    const std::size_t i = x % h, t = x / h, j = y % h, u = y / h;
    std::size_t e = t ? (i + h - j) % h : (i + j) % h;
    if (t && u) e = (e + m) % h;
    return e + h * (t ^ u);
  };
  return from_rule(order, mul, {ElementId{1}, static_cast<ElementId>(h)});
}

// Tuples of base-p digits.
std::vector<std::uint64_t> unpack(std::size_t x, std::uint64_t p, std::size_t len) {
  std::vector<std::uint64_t> d(len);
  for (std::size_t i = 0; i < len; ++i, x /= p) d[i] = x % p;
  return d;
}

std::size_t pack(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

FiniteGroup elementary_abelian(std::uint64_t p, std::uint64_t k) {
  const auto n = ipow(p, k);
  auto mul = [p, k](std::size_t x, std::size_t y) {
    auto a = unpack(x, p, k), b = unpack(y, p, k);
    for (std::size_t i = 0; i < k; ++i) a[i] = (a[i] + b[i]) % p;
    return pack(a, p);
  };
  std::vector<ElementId> gens;
  for (std::uint64_t i = 0; i < k; ++i) gens.push_back(static_cast<ElementId>(ipow(p, i)));
  return from_rule(n, mul, gens);
}

// Digits (a_1..a_r, b_1..b_r, c); (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b'
// [+ carry of a_1 + a_1' when the first a-coordinate is read in Z/p^2]).
FiniteGroup extraspecial_odd(std::uint64_t p, std::uint64_t r, bool exponent_p_squared) {
  const std::size_t len = 2 * r + 1;
  const auto n = ipow(p, len);
  auto mul = [=](std::size_t x, std::size_t y) {
    const auto u = unpack(x, p, len), v = unpack(y, p, len);
    std::vector<std::uint64_t> w(len);
    std::uint64_t c = u[2 * r] + v[2 * r];
    for (std::size_t i = 0; i < r; ++i) {
      w[i] = (u[i] + v[i]) % p;
      w[r + i] = (u[r + i] + v[r + i]) % p;
      c += u[i] * v[r + i];
    }
    if (exponent_p_squared && u[0] + v[0] >= p) c += 1;
    w[2 * r] = c % p;
    return pack(w, p);
  };
  std::vector<ElementId> gens;
  for (std::size_t i = 0; i < 2 * r; ++i) gens.push_back(static_cast<ElementId>(ipow(p, i)));
  return from_rule(n, mul, gens);
}

// Upper unitriangular [[1,a,c],[0,1,b],[0,0,1]] over GF(q); index (c*q + b)*q + a.
FiniteGroup unitriangular(std::uint64_t p, std::uint64_t k) {
  const GaloisField f(p, k);
  const auto q = f.size();
  auto mul = [&f, q](std::size_t x, std::size_t y) {
    const std::uint64_t a = x % q, b = (x / q) % q, c = x / (q * q);
    const std::uint64_t a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
    const auto c3 = f.add(f.add(c, c2), f.mul(a, b2));
    return static_cast<std::size_t>((c3 * q + f.add(b, b2)) * q + f.add(a, a2));
  };
  std::vector<ElementId> gens;
  for (std::uint64_t i = 0; i < k; ++i) gens.push_back(static_cast<ElementId>(f.basis(i)));
  for (std::uint64_t i = 0; i < k; ++i) gens.push_back(static_cast<ElementId>(f.basis(i) * q));
  return from_rule(q * q * q, mul, gens);
}

std::uint64_t parse_param(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    unsupported("bad parameter '" + std::string(s) + "' in family spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::Cyclic: out << "cyclic:" << n; break;
    case Family::Dihedral: out << "dihedral:" << n; break;
    case Family::Quaternion: out << "quaternion:" << n; break;
    case Family::ElementaryAbelian: out << "elementary_abelian:" << p << ',' << k; break;
    case Family::ExtraspecialExpP: out << "extraspecial_p:" << p; break;
    case Family::ExtraspecialExpP2: out << "extraspecial_p2:" << p; break;
    case Family::HeisenbergSl3Sylow: out << "heisenberg:" << p; break;
    case Family::DirectProductWithCyclic: out << "T:" << p << ',' << k; break;
  }
  const bool extraspecial = family == Family::ExtraspecialExpP || family == Family::ExtraspecialExpP2;
  if ((extraspecial || family == Family::HeisenbergSl3Sylow) && k != 1) out << ',' << k;
  return out.str();
}

std::uint64_t FamilySpec::expected_order() const {
  switch (family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Quaternion: return n;
    case Family::ElementaryAbelian: return ipow(p, k);
    case Family::ExtraspecialExpP:
    case Family::ExtraspecialExpP2: return ipow(p, 2 * k + 1);
    case Family::HeisenbergSl3Sylow: return ipow(p, 3 * k);
    case Family::DirectProductWithCyclic: return ipow(p, 3 * k + 1);
  }
  return 0;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) unsupported("family spec must look like name:params, got '" + std::string(text) + "'");
  const std::string name(text.substr(0, colon));
  std::vector<std::uint64_t> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    params.push_back(parse_param(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  FamilySpec s;
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      unsupported("wrong number of parameters in family spec '" + std::string(text) + "'");
  };
  if (name == "cyclic" || name == "C") {
    want(1, 1);
    s.family = Family::Cyclic;
    s.n = params[0];
  } else if (name == "dihedral" || name == "D") {
    want(1, 1);
    s.family = Family::Dihedral;
    s.n = params[0];
  } else if (name == "quaternion" || name == "Q" || name == "dicyclic") {
    want(1, 1);
    s.family = Family::Quaternion;
    s.n = params[0];
  } else if (name == "elementary_abelian" || name == "ea") {
    want(2, 2);
    s.family = Family::ElementaryAbelian;
    s.p = params[0];
    s.k = params[1];
  } else if (name == "extraspecial_p" || name == "extraspecial_exp_p") {
    want(1, 2);
    s.family = Family::ExtraspecialExpP;
    s.p = params[0];
    s.k = params.size() > 1 ? params[1] : 1;
  } else if (name == "extraspecial_p2" || name == "extraspecial_exp_p2") {
    want(1, 2);
    s.family = Family::ExtraspecialExpP2;
    s.p = params[0];
    s.k = params.size() > 1 ? params[1] : 1;
  } else if (name == "heisenberg" || name == "heisenberg_sl3_sylow" || name == "sl3_sylow") {
    want(1, 2);
    s.family = Family::HeisenbergSl3Sylow;
    s.p = params[0];
    s.k = params.size() > 1 ? params[1] : 1;
  } else if (name == "T" || name == "direct_product_with_cyclic") {
    want(1, 2);
    s.family = Family::DirectProductWithCyclic;
    s.p = params[0];
    s.k = params.size() > 1 ? params[1] : 1;
  } else {
    unsupported("unknown family '" + name + "'");
  }
  return s;
}

FiniteGroup build_family(const FamilySpec& s, std::size_t order_cap) {
  const auto needs_prime = [&] {
    if (!is_prime(s.p)) unsupported(s.to_string() + ": p must be prime");
    if (s.k < 1) unsupported(s.to_string() + ": exponent parameter must be at least 1");
  };
  switch (s.family) {
    case Family::Cyclic:
      if (s.n < 1) unsupported("cyclic order must be positive");
      check_cap(s.n, order_cap);
      return cyclic(s.n);
    case Family::Dihedral:
      if (s.n < 2 || s.n % 2) unsupported("dihedral order must be even and at least 2");
      check_cap(s.n, order_cap);
      return dihedral(s.n);
    case Family::Quaternion:
      if (s.n < 8 || s.n % 4) unsupported("quaternion order must be a multiple of 4, at least 8");
      check_cap(s.n, order_cap);
      return dicyclic(s.n);
    case Family::ElementaryAbelian:
      needs_prime();
      check_cap(s.expected_order(), order_cap);
      return elementary_abelian(s.p, s.k);
    case Family::ExtraspecialExpP:
    case Family::ExtraspecialExpP2: {
      needs_prime();
      const bool squared = s.family == Family::ExtraspecialExpP2;
      if (s.p == 2) {
        if (s.k != 1) unsupported("extraspecial 2-groups are only built for order 8 (D8, Q8)");
        return squared ? dicyclic(8) : dihedral(8);
      }
      check_cap(s.expected_order(), order_cap);
      return extraspecial_odd(s.p, s.k, squared);
    }
    case Family::HeisenbergSl3Sylow:
      needs_prime();
      check_cap(s.expected_order(), order_cap);
      return unitriangular(s.p, s.k);
    case Family::DirectProductWithCyclic: {
      needs_prime();
      check_cap(s.expected_order(), order_cap);
      const auto product = direct_product(unitriangular(s.p, s.k), cyclic(s.p), order_cap);
      return relabel_breadth_first(product, product.generators());
    }
  }
  unsupported("unknown family");
}

std::vector<FamilySpec> builtin_families(std::uint64_t max_order) {
  std::vector<FamilySpec> all;
  for (std::uint64_t n : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32}) all.push_back({Family::Cyclic, n, 0, 1});
  for (std::uint64_t n : {6, 8, 10, 16, 18, 32, 64, 128}) all.push_back({Family::Dihedral, n, 0, 1});
  for (std::uint64_t n : {8, 12, 16, 32, 64, 128}) all.push_back({Family::Quaternion, n, 0, 1});
  for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}})
    all.push_back({Family::ElementaryAbelian, 1, p, k});
  for (auto [p, r] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    all.push_back({Family::ExtraspecialExpP, 1, p, r});
    all.push_back({Family::ExtraspecialExpP2, 1, p, r});
  }
  for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {5, 1}, {7, 1}, {3, 2}})
    all.push_back({Family::HeisenbergSl3Sylow, 1, p, k});
  for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{2, 1}, {2, 2}, {3, 1}, {5, 1}, {2, 3}})
    all.push_back({Family::DirectProductWithCyclic, 1, p, k});

  std::vector<FamilySpec> out;
  for (const auto& s : all)
    if (s.expected_order() <= max_order) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) {
    if (a.expected_order() != b.expected_order()) return a.expected_order() < b.expected_order();
    return a.to_string() < b.to_string();
  });
  return out;
}

bool PropertyReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.holds; });
}

PropertyReport verify_witness_properties(const FiniteGroup& t, std::uint64_t p, std::uint64_t k) {
  PropertyReport report;
  auto add = [&](std::string name, bool holds, std::string detail) {
    report.checks.push_back({std::move(name), holds, std::move(detail)});
  };
  const auto z = center(t);
  const std::uint64_t index = t.order() / z.order();
  add("center", z.order() == ipow(p, k + 1) && index == ipow(p, 2 * k),
      "|Z|=" + std::to_string(z.order()) + " |T:Z|=" + std::to_string(index));

  bool abelian = true, right_order = true;
  std::string where;
  for (ElementId x = 0; x < t.order(); ++x) {
    if (z.contains(x)) continue;
    const auto c = centralizer(t, x);
    const auto gens = generating_set(t, c);
    bool comm = true;
    for (std::size_t i = 0; i < gens.size() && comm; ++i)
      for (std::size_t j = i + 1; j < gens.size() && comm; ++j) comm = t.mul(gens[i], gens[j]) == t.mul(gens[j], gens[i]);
    if (!comm && abelian) {
      abelian = false;
      where += " nonabelian C(" + std::to_string(x) + ")";
    }
    if (c.order() != ipow(p, 2 * k + 1) && right_order) {
      right_order = false;
      where += " |C(" + std::to_string(x) + ")|=" + std::to_string(c.order());
    }
  }
  add("noncentral-centralizers", abelian && right_order, where.empty() ? "abelian of order p^(2k+1)" : where);

  const auto derived = derived_subgroup(t);
  add("center-over-derived", derived.is_subset_of(z) && z.order() == derived.order() * p,
      "|Z|=" + std::to_string(z.order()) + " |T'|=" + std::to_string(derived.order()));
  const auto cls = nilpotency_class(t);
  add("class-2", cls == 2, "class=" + (cls ? std::to_string(*cls) : std::string("none")));
  if (p % 2 == 1) {
    const auto e = group_exponent(t);
    add("exponent-p", e == p, "exponent=" + std::to_string(e));
  }
  return report;
}

}  // namespace camina
