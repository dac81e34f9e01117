#pragma once

// Group corpora: the line-based permutation format and the built-in
// families (cyclic, dihedral, quaternion, extraspecial, unitriangular).
//
//   group <order> <index> <name>
//   degree <d>
//   gen <d space-separated 1-based images>
//   ...
//   end
//
// Blank lines and lines starting with '#' are ignored.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "camina/group.hpp"

namespace camina {

struct CorpusEntry {
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  std::string id() const { return std::to_string(order) + ":" + std::to_string(index); }
  FiniteGroup build(std::size_t order_cap = kDefaultOrderCap) const;
};

/// Parses and validates a corpus: every entry must close to its declared
/// order. Errors: SyntaxError (with line number), OrderMismatch, DuplicateId,
/// InvalidPermutation, ClosureExceedsCap.
std::vector<CorpusEntry> parse_corpus(std::istream& in, std::size_t order_cap = kDefaultOrderCap);
std::vector<CorpusEntry> parse_corpus_file(const std::string& path, std::size_t order_cap = kDefaultOrderCap);

void write_corpus_entry(std::ostream& out, const CorpusEntry& entry);

/// Entry whose generators are the regular representation of g's generators.
CorpusEntry corpus_entry_from_group(const FiniteGroup& g, std::uint64_t index, std::string name);

enum class Family {
  Cyclic,
  Dihedral,
  Quaternion,
  ElementaryAbelian,
  ExtraspecialExpP,
  ExtraspecialExpP2,
  HeisenbergSl3Sylow,
  DirectProductWithCyclic,
};

/// Parameters by family:
///   Cyclic             n = order
///   Dihedral           n = order (2k, k >= 1)
///   Quaternion         n = order (4k, k >= 2; generalized quaternion when a power of 2)
///   ElementaryAbelian  p, k     -> order p^k
///   ExtraspecialExpP   p, k = r -> order p^(1+2r); p = 2 only for r = 1 (D8)
///   ExtraspecialExpP2  p, k = r -> order p^(1+2r); p = 2 only for r = 1 (Q8)
///   HeisenbergSl3Sylow p, k     -> unitriangular 3x3 over GF(p^k), order p^(3k)
///   DirectProductWithCyclic p, k -> HeisenbergSl3Sylow(p, k) x C_p
struct FamilySpec {
  Family family = Family::Cyclic;
  std::uint64_t n = 1;
  std::uint64_t p = 0;
  std::uint64_t k = 1;

  /// Canonical "name:params" form, e.g. "T:3,1", "quaternion:8".
  std::string to_string() const;
  /// Order of the group the spec describes (computed from parameters).
  std::uint64_t expected_order() const;
};

/// Parses "name:params". Names: cyclic, dihedral, quaternion,
/// elementary_abelian, extraspecial_p, extraspecial_p2, heisenberg,
/// sl3_sylow, T (and the long family names). Throws UnsupportedParameters.
FamilySpec parse_family_spec(std::string_view text);

/// Builds the group with elements in breadth-first order over its
/// defining generators. Throws UnsupportedParameters or ClosureExceedsCap.
FiniteGroup build_family(const FamilySpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Built-in family members with order <= max_order, sorted by order.
std::vector<FamilySpec> builtin_families(std::uint64_t max_order);

struct PropertyCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_hold() const;
};

/// Structural properties of T = S x C_p with S unitriangular over GF(p^k):
/// center of order p^(k+1) and index p^(2k), every noncentral centralizer
/// abelian of order p^(2k+1), |Z(T) : T'| = p, class 2, exponent p for odd p.
PropertyReport verify_witness_properties(const FiniteGroup& t, std::uint64_t p, std::uint64_t k);

}  // namespace camina
