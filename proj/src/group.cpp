#include "camina/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace camina {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::CentralElement: return "CentralElement";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InternalPrimeSearchFailed: return "InternalPrimeSearchFailed";
    case ErrorCode::InvalidPairTarget: return "InvalidPairTarget";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::UnknownGroupId: return "UnknownGroupId";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<std::uint8_t> seen(images_.size() + 1, 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto im = images_[i];
    if (im < 1 || im > images_.size() || seen[im]) {
      std::ostringstream msg;
      msg << "images are not a bijection on {1.." << images_.size() << "} (position " << i + 1
          << " maps to " << im << ")";
      throw Error(ErrorCode::InvalidPermutation, msg.str());
    }
    seen[im] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 1u);
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = other.images_[images_[i] - 1];
  return out;
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

ElementId FiniteGroup::pow(ElementId x, std::uint64_t k) const {
  ElementId result = kIdentity;
  ElementId base = x;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order())
    throw Error(ErrorCode::InternalError, "label count does not match group order");
  auto copy = std::make_shared<Data>(*data_);
  copy->labels = std::move(labels);
  data_ = std::move(copy);
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return from_sorted_unchecked(parent, {kIdentity});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<ElementId> all(parent.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return from_sorted_unchecked(parent, std::move(all), parent.generators());
}

Subgroup Subgroup::from_sorted_unchecked(const FiniteGroup& parent, std::vector<ElementId> members,
                                         std::vector<ElementId> generators) {
  Subgroup h;
  h.mask_.assign(parent.order(), 0);
  for (auto x : members) h.mask_[x] = 1;
  h.members_ = std::move(members);
  h.generators_ = std::move(generators);
  return h;
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto x : members)
    if (x >= parent.order()) throw Error(ErrorCode::InternalError, "subgroup member out of range");
  if (members.empty() || members.front() != kIdentity)
    throw Error(ErrorCode::InternalError, "subgroup must contain the identity");
  Subgroup h = from_sorted_unchecked(parent, std::move(members));
  for (auto x : h.members_) {
    if (!h.contains(parent.inv(x))) throw Error(ErrorCode::InternalError, "set not closed under inverses");
    for (auto y : h.members_)
      if (!h.contains(parent.mul(x, y)))
        throw Error(ErrorCode::InternalError, "set not closed under multiplication");
  }
  return h;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](ElementId x) { return other.contains(x); });
}

// ---------------------------------------------------------------- construction

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Breadth-first closure of {identity} under right multiplication by gens.
// Returns members in discovery order.
std::vector<ElementId> bfs_closure(const FiniteGroup& g, std::span<const ElementId> gens,
                                   std::vector<std::uint8_t>& mask) {
  mask.assign(g.order(), 0);
  std::vector<ElementId> found{kIdentity};
  mask[kIdentity] = 1;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto s : gens) {
      const auto y = g.mul(found[i], s);
      if (!mask[y]) {
        mask[y] = 1;
        found.push_back(y);
      }
    }
  }
  return found;
}

}  // namespace

FiniteGroup group_from_trusted_table(std::size_t order, std::vector<ElementId> table,
                                     std::vector<ElementId> generators) {
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = order;
  data->table = std::move(table);
  data->inverse.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    const ElementId* row = data->table.data() + x * order;
    const auto it = std::find(row, row + order, kIdentity);
    data->inverse[x] = static_cast<ElementId>(it - row);
  }
  // Drop the identity and duplicates while preserving order.
  std::vector<ElementId> gens;
  for (auto s : generators)
    if (s != kIdentity && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  data->generators = std::move(gens);
  FiniteGroup result{std::shared_ptr<const FiniteGroup::Data>(data)};

  if (order > 1 && data->generators.empty()) {
    // Greedy: add the smallest element not yet generated.
    std::vector<ElementId> chosen;
    std::vector<std::uint8_t> mask;
    std::size_t reached = 1;
    mask.assign(order, 0);
    mask[kIdentity] = 1;
    for (ElementId x = 1; x < order && reached < order; ++x) {
      if (mask[x]) continue;
      chosen.push_back(x);
      reached = bfs_closure(result, chosen, mask).size();
    }
    data->generators = std::move(chosen);
  }
  return result;
}

FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens, std::size_t max_order) {
  if (max_order < 1) throw Error(ErrorCode::ClosureExceedsCap, "order cap must be at least 1");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].degree() != degree) {
      std::ostringstream msg;
      msg << "generator " << k + 1 << " has degree " << gens[k].degree() << ", expected " << degree;
      throw Error(ErrorCode::InvalidPermutation, msg.str());
    }
  }

  const std::size_t ngens = gens.size();
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<std::vector<std::uint32_t>, ElementId, VectorHash> index;
  index.emplace(elements[0].images(), kIdentity);
  std::vector<ElementId> right;  // right[x * ngens + k] = x * gens[k]
  // BFS tree: element b (b > 0) = parent[b] * gens[via[b]]
  std::vector<ElementId> parent{kIdentity};
  std::vector<std::uint32_t> via{0};

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t k = 0; k < ngens; ++k) {
      Permutation y = elements[i].then(gens[k]);
      auto [it, inserted] = index.try_emplace(y.images(), static_cast<ElementId>(elements.size()));
      if (inserted) {
        if (elements.size() >= max_order) {
          std::ostringstream msg;
          msg << "closure exceeds the order cap of " << max_order;
          throw Error(ErrorCode::ClosureExceedsCap, msg.str());
        }
        elements.push_back(std::move(y));
        parent.push_back(static_cast<ElementId>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<ElementId>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const std::size_t p = parent[b];
    const std::size_t k = via[b];
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = right[table[a * n + p] * ngens + k];
  }

  std::vector<ElementId> group_gens;
  for (std::size_t k = 0; k < ngens; ++k) group_gens.push_back(right[k]);
  return group_from_trusted_table(n, std::move(table), std::move(group_gens));
}

FiniteGroup group_from_cayley_table(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NoIdentity, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " entries, expected " << n;
      throw Error(ErrorCode::NotLatinSquare, msg.str());
    }
    for (auto v : rows[r]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::ostringstream msg;
        msg << "row " << r << " has out-of-range entry " << v;
        throw Error(ErrorCode::NotLatinSquare, msg.str());
      }
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(rows[a][b]); };

  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[at(r, c)]++) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(r) + " repeats an entry");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[at(r, c)]++)
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(c) + " repeats an entry");
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");
  const std::size_t e = *identity;

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = at(x, y) == e && at(y, x) == e;
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  // Swap the identity into slot 0.
  auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[relabel(a) * n + relabel(b)] = static_cast<ElementId>(relabel(at(a, b)));
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * n + b]; };

  // Light's test: the elements z with (xy)z = x(yz) for all x, y are closed
  // under products, so checking z over a generating set of the magma suffices.
  std::vector<std::size_t> magma_gens;
  std::vector<std::uint8_t> in_closure(n, 0);
  std::vector<std::size_t> closure;
  auto add_to_closure = [&](std::size_t u) {
    std::deque<std::size_t> work{u};
    if (in_closure[u]) return;
    in_closure[u] = 1;
    closure.push_back(u);
    while (!work.empty()) {
      const auto v = work.front();
      work.pop_front();
      for (std::size_t i = 0; i < closure.size(); ++i) {
        const auto s = closure[i];
        for (auto prod : {mul(v, s), mul(s, v)}) {
          if (!in_closure[prod]) {
            in_closure[prod] = 1;
            closure.push_back(prod);
            work.push_back(prod);
          }
        }
      }
    }
  };
  for (std::size_t x = 1; x < n && closure.size() < n; ++x) {
    if (in_closure[x]) continue;
    magma_gens.push_back(x);
    add_to_closure(x);
  }
  for (auto z : magma_gens) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          std::ostringstream msg;
          msg << "(" << relabel(x) << "*" << relabel(y) << ")*" << relabel(z) << " != " << relabel(x) << "*("
              << relabel(y) << "*" << relabel(z) << ")";
          throw Error(ErrorCode::NotAssociative, msg.str());
        }
      }
    }
  }

  std::vector<ElementId> gens(magma_gens.begin(), magma_gens.end());
  return group_from_trusted_table(n, std::move(table), std::move(gens));
}

FiniteGroup relabel_breadth_first(const FiniteGroup& g, std::span<const ElementId> gens) {
  std::vector<std::uint8_t> mask;
  const auto order_found = bfs_closure(g, gens, mask);
  const std::size_t n = g.order();
  if (order_found.size() != n) throw Error(ErrorCode::InternalError, "relabel generators do not generate the group");
  std::vector<ElementId> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[order_found[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[std::size_t{new_id[a]} * n + new_id[b]] = new_id[g.mul(static_cast<ElementId>(a), static_cast<ElementId>(b))];
  std::vector<ElementId> new_gens;
  for (auto s : gens) new_gens.push_back(new_id[s]);
  return group_from_trusted_table(n, std::move(table), std::move(new_gens));
}

std::optional<std::array<ElementId, 3>> find_nonassociative_triple(const FiniteGroup& g) {
  const auto n = static_cast<ElementId>(g.order());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const auto xy = g.mul(x, y);
      for (ElementId z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) return std::array<ElementId, 3>{x, y, z};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- arithmetic

std::uint64_t element_order(const FiniteGroup& g, ElementId x) {
  std::uint64_t k = 1;
  for (ElementId y = x; y != kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (ElementId x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

ElementId commutator(const FiniteGroup& g, ElementId x, ElementId y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

ElementId conjugate(const FiniteGroup& g, ElementId x, ElementId by) {
  return g.mul(g.mul(g.inv(by), x), by);
}

// ---------------------------------------------------------------- subgroups

Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& h, ElementId x) {
  if (h.contains(x)) return h;
  std::vector<ElementId> gens = generating_set(g, h);
  gens.push_back(x);
  std::vector<std::uint8_t> mask;
  auto members = bfs_closure(g, gens, mask);
  std::sort(members.begin(), members.end());
  return Subgroup::from_sorted_unchecked(g, std::move(members), std::move(gens));
}

Subgroup subgroup_generate(const FiniteGroup& g, std::span<const ElementId> seeds) {
  Subgroup h = Subgroup::trivial(g);
  for (auto s : seeds) h = extend_subgroup(g, h, s);
  return h;
}

std::vector<ElementId> generating_set(const FiniteGroup& g, const Subgroup& h) {
  if (!h.generators().empty() || h.is_trivial()) return h.generators();
  std::vector<ElementId> gens;
  std::vector<std::uint8_t> mask(g.order(), 0);
  mask[kIdentity] = 1;
  std::size_t reached = 1;
  for (auto x : h.members()) {
    if (reached == h.order()) break;
    if (mask[x]) continue;
    gens.push_back(x);
    reached = bfs_closure(g, gens, mask).size();
  }
  return gens;
}

Subgroup subgroup_join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  Subgroup h = a;
  for (auto s : generating_set(g, b)) h = extend_subgroup(g, h, s);
  return h;
}

Subgroup subgroup_intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(members));
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementId> members;
  for (ElementId z = 0; z < g.order(); ++z) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](ElementId s) { return g.mul(z, s) == g.mul(s, z); });
    if (central) members.push_back(z);
  }
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup centralizer(const FiniteGroup& g, ElementId x) {
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) members.push_back(y);
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup centralizer_of(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y) {
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId s) { return g.mul(s, y) == g.mul(y, s); }))
      members.push_back(y);
  }
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  ConjugacyClasses out;
  out.class_of.assign(g.order(), kUnassigned);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<ElementId> orbit{x};
    out.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto s : g.generators()) {
        const auto y = conjugate(g, orbit[i], s);
        if (out.class_of[y] == kUnassigned) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  Subgroup h = Subgroup::trivial(g);
  for (auto x : a.members())
    for (auto y : b.members()) {
      const auto c = commutator(g, x, y);
      if (!h.contains(c)) h = extend_subgroup(g, h, c);
    }
  return h;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto whole = Subgroup::whole(g);
  return commutator_subgroup(g, whole, whole);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  for (auto s : g.generators())
    for (auto x : gens)
      if (!h.contains(conjugate(g, x, s))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order() || !is_normal(g, n))
    throw Error(ErrorCode::NotNormal, "quotient requires a normal subgroup");
  constexpr auto kUnassigned = static_cast<ElementId>(-1);
  std::vector<ElementId> projection(g.order(), kUnassigned);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnassigned) continue;
    const auto id = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (auto y : n.members()) projection[g.mul(x, y)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = projection[g.mul(reps[a], reps[b])];
  std::vector<ElementId> gens;
  for (auto s : g.generators()) gens.push_back(projection[s]);
  return {group_from_trusted_table(m, std::move(table), std::move(gens)), std::move(projection)};
}

Subgroup preimage(const FiniteGroup& g, const Quotient& q, const Subgroup& in_quotient) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x)
    if (in_quotient.contains(q.projection[x])) members.push_back(x);
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > max_order) {
    std::ostringstream msg;
    msg << "direct product of order " << n << " exceeds the order cap of " << max_order;
    throw Error(ErrorCode::ClosureExceedsCap, msg.str());
  }
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto ax = static_cast<ElementId>(x / nb), bx = static_cast<ElementId>(x % nb);
      const auto ay = static_cast<ElementId>(y / nb), by = static_cast<ElementId>(y % nb);
      table[x * n + y] = static_cast<ElementId>(std::size_t{a.mul(ax, ay)} * nb + b.mul(bx, by));
    }
  std::vector<ElementId> gens;
  for (auto s : a.generators()) gens.push_back(static_cast<ElementId>(std::size_t{s} * nb));
  for (auto s : b.generators()) gens.push_back(s);
  return group_from_trusted_table(n, std::move(table), std::move(gens));
}

std::vector<Permutation> regular_representation(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (auto s : g.generators()) {
    std::vector<std::uint32_t> images(g.order());
    for (ElementId i = 0; i < g.order(); ++i) images[i] = g.mul(i, s) + 1;
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace camina
