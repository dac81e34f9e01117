#include "camina/characters.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace camina {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 k, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
  return 1;  // p = 2
}

using Matrix = std::vector<std::vector<u64>>;
using Poly = std::vector<u64>;  // lowest degree first

// Characteristic polynomial det(xI - a) via reduction to Hessenberg form.
Poly characteristic_polynomial(Matrix h, u64 p) {
  const std::size_t d = h.size();
  for (std::size_t m = 1; m + 1 < d; ++m) {
    std::size_t i = m;
    while (i < d && h[i][m - 1] == 0) ++i;
    if (i == d) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 t_inv = invmod(h[m][m - 1], p);
    for (i = m + 1; i < d; ++i) {
      const u64 u = mulmod(h[i][m - 1], t_inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < d; ++j) h[i][j] = (h[i][j] + p - mulmod(u, h[m][j], p)) % p;
      for (std::size_t j = 0; j < d; ++j) h[j][m] = (h[j][m] + mulmod(u, h[j][i], p)) % p;
    }
  }
  std::vector<Poly> chars{Poly{1}};
  for (std::size_t m = 0; m < d; ++m) {
    // (x - h[m][m]) * chars[m]
    Poly next(m + 2, 0);
    for (std::size_t k = 0; k <= m; ++k) {
      next[k + 1] = (next[k + 1] + chars[m][k]) % p;
      next[k] = (next[k] + p - mulmod(h[m][m], chars[m][k], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = mulmod(t, h[i + 1][i], p);
      const u64 coef = mulmod(t, h[i][m], p);
      if (coef == 0) continue;
      for (std::size_t k = 0; k < chars[i].size(); ++k)
        next[k] = (next[k] + p - mulmod(coef, chars[i][k], p)) % p;
    }
    chars.push_back(std::move(next));
  }
  return chars.back();
}

u64 eval_poly(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t k = f.size(); k-- > 0;) r = (mulmod(r, x, p) + f[k]) % p;
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a, u64 p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t i = row;
    while (i < a.size() && a[i][c] == 0) ++i;
    if (i == a.size()) continue;
    std::swap(a[i], a[row]);
    const u64 inv = invmod(a[row][c], p);
    for (auto& v : a[row]) v = mulmod(v, inv, p);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == row || a[k][c] == 0) continue;
      const u64 f = a[k][c];
      for (std::size_t j = 0; j < cols; ++j) a[k][j] = (a[k][j] + p - mulmod(f, a[row][j], p)) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

// Basis of the null space of a (square), as row vectors.
Matrix null_space(Matrix a, u64 p) {
  const std::size_t n = a.size();
  const auto pivots = row_reduce(a, p);
  std::vector<int> is_pivot(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) is_pivot[pivots[r]] = static_cast<int>(r);
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// A subspace of F_l^r held as an RREF basis.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

// Splits v into eigenspaces of the linear map x -> m x.
std::vector<Subspace> split_by(const Subspace& v, const Matrix& m, u64 p) {
  const std::size_t d = v.basis.size();
  const std::size_t r = m.size();
  Matrix images(d, std::vector<u64>(r, 0));
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t j = 0; j < r; ++j) {
      u64 acc = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (m[j][k] && v.basis[s][k]) acc = (acc + mulmod(m[j][k], v.basis[s][k], p)) % p;
      images[s][j] = acc;
    }
  Matrix restricted(d, std::vector<u64>(d, 0));  // restricted[t][s] = coordinate t of m b_s
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) restricted[t][s] = images[s][v.pivots[t]];

  const Poly chi = characteristic_polynomial(restricted, p);
  std::vector<Subspace> parts;
  std::size_t total = 0;
  for (u64 lambda = 0; lambda < p; ++lambda) {
    if (eval_poly(chi, lambda, p) != 0) continue;
    Matrix shifted = restricted;
    for (std::size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + p - lambda) % p;
    const Matrix coords = null_space(std::move(shifted), p);
    Subspace part;
    for (const auto& c : coords) {
      std::vector<u64> vec(r, 0);
      for (std::size_t s = 0; s < d; ++s)
        if (c[s])
          for (std::size_t j = 0; j < r; ++j) vec[j] = (vec[j] + mulmod(c[s], v.basis[s][j], p)) % p;
      part.basis.push_back(std::move(vec));
    }
    part.pivots = row_reduce(part.basis, p);
    total += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (total != d) throw Error(ErrorCode::InternalError, "class matrix is not diagonalizable over the chosen prime");
  return parts;
}

}  // namespace

// ---------------------------------------------------------------- structure constants

ClassStructureConstants::ClassStructureConstants(const FiniteGroup& g, const ConjugacyClasses& classes)
    : r_(classes.count()), data_(r_ * r_ * r_, 0) {
  for (std::size_t k = 0; k < r_; ++k) {
    const ElementId target = classes.classes[k].front();
    for (std::size_t i = 0; i < r_; ++i)
      for (auto x : classes.classes[i]) {
        const auto y = g.mul(g.inv(x), target);
        ++data_[(i * r_ + classes.class_of[y]) * r_ + k];
      }
  }
}

ClassStructureConstants class_mult_coefficients(const FiniteGroup& g) {
  return ClassStructureConstants(g, conjugacy_classes(g));
}

// ---------------------------------------------------------------- table

u64 dixon_prime(u64 exponent, u64 order) {
  constexpr u64 kCap = 1'000'000;
  for (u64 l = exponent + 1; l <= kCap; l += exponent) {
    if (l * l > 4 * order && is_prime(l)) return l;
  }
  throw Error(ErrorCode::InternalPrimeSearchFailed, "no suitable prime below 10^6");
}

CharacterTable dixon_character_table(const FiniteGroup& g) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const std::size_t r = t.classes.count();
  const u64 n = g.order();
  for (const auto& c : t.classes.classes) {
    t.representatives.push_back(c.front());
    t.class_sizes.push_back(c.size());
  }
  for (std::size_t k = 0; k < r; ++k) t.inverse_class.push_back(t.classes.class_of[g.inv(t.representatives[k])]);
  t.exponent = static_cast<std::uint32_t>(group_exponent(g));
  const u64 p = dixon_prime(t.exponent, n);
  t.modulus = p;

  const ClassStructureConstants a(g, t.classes);
  auto class_matrix = [&](std::size_t i) {
    Matrix m(r, std::vector<u64>(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m[j][k] = a(i, j, k) % p;
    return m;
  };

  Subspace whole;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<u64> e(r, 0);
    e[j] = 1;
    whole.basis.push_back(std::move(e));
    whole.pivots.push_back(j);
  }
  std::vector<Subspace> pending{whole};
  std::vector<std::vector<u64>> eigenvectors;

  auto settle = [&](std::vector<Subspace>& parts) {
    std::vector<Subspace> still;
    for (auto& s : parts) {
      if (s.basis.size() == 1)
        eigenvectors.push_back(std::move(s.basis[0]));
      else
        still.push_back(std::move(s));
    }
    parts = std::move(still);
  };

  // A fixed random combination of class matrices usually separates every
  // character at once; individual class matrices finish the rest.
  if (r > 1) {
    std::mt19937_64 rng(0x5eed);
    Matrix combo(r, std::vector<u64>(r, 0));
    for (std::size_t i = 1; i < r; ++i) {
      const u64 c = rng() % p;
      if (c == 0) continue;
      const Matrix m = class_matrix(i);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) combo[j][k] = (combo[j][k] + mulmod(c, m[j][k], p)) % p;
    }
    std::vector<Subspace> next;
    for (const auto& s : pending)
      for (auto& part : split_by(s, combo, p)) next.push_back(std::move(part));
    pending = std::move(next);
  }
  settle(pending);
  for (std::size_t i = 1; i < r && !pending.empty(); ++i) {
    const Matrix m = class_matrix(i);
    std::vector<Subspace> next;
    for (const auto& s : pending)
      for (auto& part : split_by(s, m, p)) next.push_back(std::move(part));
    pending = std::move(next);
    settle(pending);
  }
  if (!pending.empty() || eigenvectors.size() != r)
    throw Error(ErrorCode::InternalError, "class matrices failed to separate the characters");

  // Central characters -> degrees and values mod p.
  std::vector<std::vector<u64>> residues;
  for (auto& w : eigenvectors) {
    if (w[0] == 0) throw Error(ErrorCode::InternalError, "central character vanishes at the identity class");
    const u64 scale = invmod(w[0], p);
    for (auto& v : w) v = mulmod(v, scale, p);
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = (sum + mulmod(mulmod(w[k], w[t.inverse_class[k]], p), invmod(t.class_sizes[k] % p, p), p)) % p;
    const u64 d_squared = mulmod(n % p, invmod(sum, p), p);
    u64 degree = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if ((d * d) % p == d_squared) {
        degree = d;
        break;
      }
    if (degree == 0) throw Error(ErrorCode::InternalError, "no integral degree for a central character");
    std::vector<u64> vals(r);
    for (std::size_t k = 0; k < r; ++k)
      vals[k] = mulmod(mulmod(degree, w[k], p), invmod(t.class_sizes[k] % p, p), p);
    residues.push_back(std::move(vals));
  }

  // Order: degree, trivial character first, then residues.
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t c) {
    return std::all_of(residues[c].begin(), residues[c].end(), [](u64 v) { return v == 1; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (residues[x][0] != residues[y][0]) return residues[x][0] < residues[y][0];
    if (is_trivial(x) != is_trivial(y)) return is_trivial(x);
    return residues[x] < residues[y];
  });

  // Lift: multiplicity of zeta^j as an eigenvalue of rho(g) is
  // e^-1 sum_t chi(g^t) z^(-jt).
  const std::uint32_t e = t.exponent;
  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);
  std::vector<u64> zpow(e);
  for (std::uint32_t k = 0; k < e; ++k) zpow[k] = powmod(z, k, p);
  const u64 e_inv = invmod(e % p, p);
  std::vector<std::vector<std::uint32_t>> power_class(r, std::vector<std::uint32_t>(e));
  for (std::size_t k = 0; k < r; ++k) {
    ElementId x = kIdentity;
    for (std::uint32_t s = 0; s < e; ++s) {
      power_class[k][s] = t.classes.class_of[x];
      x = g.mul(x, t.representatives[k]);
    }
  }

  u64 degree_square_sum = 0;
  for (auto c : order) {
    const auto& chi = residues[c];
    const auto degree = static_cast<std::int64_t>(chi[0]);
    degree_square_sum += chi[0] * chi[0];
    std::vector<CyclotomicValue> row;
    row.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::int64_t> mult(e, 0);
      for (std::uint32_t j = 0; j < e; ++j) {
        u64 acc = 0;
        for (std::uint32_t s = 0; s < e; ++s)
          acc = (acc + mulmod(chi[power_class[k][s]], zpow[(e - (std::uint64_t{j} * s) % e) % e], p)) % p;
        acc = mulmod(acc, e_inv, p);
        if (acc > chi[0]) throw Error(ErrorCode::InternalError, "eigenvalue multiplicity exceeds the degree");
        mult[j] = static_cast<std::int64_t>(acc);
      }
      row.push_back(CyclotomicValue::from_coefficients(e, mult));
    }
    t.degrees.push_back(degree);
    t.values.push_back(std::move(row));
  }
  if (degree_square_sum != n) throw Error(ErrorCode::InternalError, "degrees squared do not sum to |G|");
  return t;
}

namespace {

// Accumulates sum of coefficient * a * conj(b) into raw (unreduced) slots.
void accumulate_product_conj(std::vector<std::int64_t>& acc, const CyclotomicValue& a, const CyclotomicValue& b,
                             std::int64_t weight) {
  const std::uint32_t e = a.e();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<std::pair<std::uint32_t, std::int64_t>> nb;
  for (std::uint32_t j = 0; j < e; ++j)
    if (cb[j]) nb.emplace_back(j, cb[j]);
  for (std::uint32_t i = 0; i < e; ++i) {
    if (!ca[i]) continue;
    for (const auto& [j, c] : nb) acc[(i + e - j) % e] += weight * ca[i] * c;
  }
}

}  // namespace

bool rows_orthogonal(const CharacterTable& t, std::uint64_t group_order) {
  const std::size_t r = t.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::vector<std::int64_t> acc(t.exponent, 0);
      for (std::size_t k = 0; k < r; ++k)
        accumulate_product_conj(acc, t.values[i][k], t.values[j][k], static_cast<std::int64_t>(t.class_sizes[k]));
      const auto sum = CyclotomicValue::from_coefficients(t.exponent, acc);
      const auto expected = CyclotomicValue::integer(t.exponent, i == j ? static_cast<std::int64_t>(group_order) : 0);
      if (sum != expected) return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTable& t, std::uint64_t group_order) {
  const std::size_t r = t.size();
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      std::vector<std::int64_t> acc(t.exponent, 0);
      for (std::size_t c = 0; c < r; ++c) accumulate_product_conj(acc, t.values[c][k], t.values[c][l], 1);
      const auto sum = CyclotomicValue::from_coefficients(t.exponent, acc);
      const auto centralizer_order = static_cast<std::int64_t>(group_order / t.class_sizes[k]);
      if (sum != CyclotomicValue::integer(t.exponent, k == l ? centralizer_order : 0)) return false;
    }
  return true;
}

std::vector<std::size_t> irr_over(const FiniteGroup& g, const Subgroup& n, const CharacterTable& t) {
  (void)g;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const auto degree = CyclotomicValue::integer(t.exponent, t.degrees[c]);
    for (std::size_t k = 0; k < t.classes.count(); ++k) {
      if (n.contains(t.representatives[k]) && t.values[c][k] != degree) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

RamificationResult characters_vanish_off(const FiniteGroup& g, const Subgroup& n, const CharacterTable& t) {
  for (auto c : irr_over(g, n, t))
    for (std::size_t k = 0; k < t.classes.count(); ++k)
      if (!n.contains(t.representatives[k]) && !t.values[c][k].is_zero())
        return {false, CharacterWitness{c, t.representatives[k], "character over N is nonzero off N"}};
  return {};
}

RamificationResult verify_fully_ramified(const FiniteGroup& g, const Subgroup& z, const CharacterTable& t) {
  const auto index = static_cast<std::int64_t>(g.order() / z.order());
  for (auto c : irr_over(g, z, t)) {
    if (t.degrees[c] * t.degrees[c] != index) {
      std::ostringstream msg;
      msg << "chi(1)^2 = " << t.degrees[c] * t.degrees[c] << " but |G:Z| = " << index;
      return {false, CharacterWitness{c, kIdentity, msg.str()}};
    }
    for (std::size_t k = 0; k < t.classes.count(); ++k)
      if (!z.contains(t.representatives[k]) && !t.values[c][k].is_zero())
        return {false, CharacterWitness{c, t.representatives[k], "character does not vanish off Z"}};
  }
  return {};
}

std::string format_character_table(const CharacterTable& t) {
  std::ostringstream out;
  out << "classes " << t.size() << "  exponent " << t.exponent << "  prime " << t.modulus << "\n";
  out << "reps:";
  for (auto x : t.representatives) out << ' ' << x;
  out << "\nsizes:";
  for (auto s : t.class_sizes) out << ' ' << s;
  out << "\ndegrees:";
  for (std::size_t c = 0; c < t.size(); ++c) out << (c ? "," : " ") << t.degrees[c];
  out << '\n';
  for (std::size_t c = 0; c < t.size(); ++c) {
    out << "chi_" << c + 1 << ':';
    for (const auto& v : t.values[c]) out << ' ' << v.to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace camina
