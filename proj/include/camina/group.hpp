#pragma once

// Finite groups stored as dense Cayley tables.
//
// Element 0 is always the identity. Products are read as "apply the left
// factor first": for permutations, (x * y)(i) = y(x(i)). All subgroup
// computations return value-type sorted index sets.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "camina/error.hpp"

namespace camina {

using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;
inline constexpr std::size_t kDefaultOrderCap = 2048;

/// A permutation of {1..degree}, stored as its 1-based image list.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidPermutation unless images is a bijection on {1..size}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point - 1]; }

  /// this first, then other.
  Permutation then(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

class Subgroup;

class FiniteGroup {
public:
  /// Trivial group.
  FiniteGroup();

  std::size_t order() const { return data_->order; }
  ElementId mul(ElementId x, ElementId y) const { return data_->table[std::size_t{x} * data_->order + y]; }
  ElementId inv(ElementId x) const { return data_->inverse[x]; }
  ElementId pow(ElementId x, std::uint64_t k) const;

  std::span<const ElementId> row(ElementId x) const {
    return {data_->table.data() + std::size_t{x} * data_->order, data_->order};
  }
  const std::vector<ElementId>& table() const { return data_->table; }

  /// A generating set; empty only for the trivial group.
  const std::vector<ElementId>& generators() const { return data_->generators; }

  const std::vector<std::string>& labels() const { return data_->labels; }
  void set_labels(std::vector<std::string> labels);

  /// Two handles are the same group object (cheap identity test).
  bool same_object(const FiniteGroup& other) const { return data_ == other.data_; }
  bool same_table(const FiniteGroup& other) const { return data_->table == other.data_->table; }

private:
  struct Data {
    std::size_t order = 1;
    std::vector<ElementId> table{0};
    std::vector<ElementId> inverse{0};
    std::vector<ElementId> generators;
    std::vector<std::string> labels;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend FiniteGroup group_from_trusted_table(std::size_t, std::vector<ElementId>, std::vector<ElementId>);

  std::shared_ptr<const Data> data_;
};

/// Sorted set of element indices of a parent group, closed under the
/// parent's multiplication. Equality is member-sequence equality.
class Subgroup {
public:
  Subgroup() = default;

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);
  /// Wraps a member set; throws InternalError if it is not a subgroup.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<ElementId> members);
  /// members must be sorted and already known to form a subgroup.
  static Subgroup from_sorted_unchecked(const FiniteGroup& parent, std::vector<ElementId> members,
                                        std::vector<ElementId> generators = {});

  std::size_t order() const { return members_.size(); }
  const std::vector<ElementId>& members() const { return members_; }
  bool contains(ElementId x) const { return mask_[x] != 0; }
  std::size_t parent_order() const { return mask_.size(); }

  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == mask_.size(); }
  bool is_subset_of(const Subgroup& other) const;

  /// Generators recorded while the subgroup was built; may be empty for a
  /// nontrivial subgroup. Use generating_set() when a full set is needed.
  const std::vector<ElementId>& generators() const { return generators_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  std::vector<ElementId> members_;
  std::vector<std::uint8_t> mask_;
  std::vector<ElementId> generators_;
};

/// Closure of permutation generators, indexed in breadth-first discovery
/// order (generators applied in input order on the right).
FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t max_order = kDefaultOrderCap);

/// Validates a full Cayley table. If the identity is not element 0 it is
/// swapped into place.
FiniteGroup group_from_cayley_table(const std::vector<std::vector<std::int64_t>>& table);

/// Constructor for tables produced by the library itself. The table must
/// already be a group table with identity 0; inverses are derived and a
/// generating set is chosen greedily when none is supplied.
FiniteGroup group_from_trusted_table(std::size_t order, std::vector<ElementId> table,
                                     std::vector<ElementId> generators = {});

/// Re-indexes G by breadth-first discovery from the identity, multiplying
/// on the right by gens in order. The result's generators are the images
/// of gens. Used to give constructed groups a canonical element order.
FiniteGroup relabel_breadth_first(const FiniteGroup& g, std::span<const ElementId> gens);

/// Exhaustive O(n^3) associativity check; returns the first failing triple.
std::optional<std::array<ElementId, 3>> find_nonassociative_triple(const FiniteGroup& g);

std::uint64_t element_order(const FiniteGroup& g, ElementId x);
std::uint64_t group_exponent(const FiniteGroup& g);

ElementId commutator(const FiniteGroup& g, ElementId x, ElementId y);
ElementId conjugate(const FiniteGroup& g, ElementId x, ElementId by);

Subgroup subgroup_generate(const FiniteGroup& g, std::span<const ElementId> seeds);
std::vector<ElementId> generating_set(const FiniteGroup& g, const Subgroup& h);
/// <H, x>, reusing H's generators.
Subgroup extend_subgroup(const FiniteGroup& g, const Subgroup& h, ElementId x);
/// Subgroup generated by a and b together.
Subgroup subgroup_join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, ElementId x);
/// Elements commuting with every member of h.
Subgroup centralizer_of(const FiniteGroup& g, const Subgroup& h);

struct ConjugacyClasses {
  /// Each class sorted; classes ordered by smallest member, so class 0 is {identity}.
  std::vector<std::vector<ElementId>> classes;
  std::vector<std::uint32_t> class_of;

  std::size_t count() const { return classes.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// Subgroup generated by [a, b] for a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g);

struct Quotient {
  FiniteGroup group;
  /// projection[x] is the coset of x; the coset of the identity is 0.
  std::vector<ElementId> projection;
};

/// Cosets xN, numbered by their smallest element. Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// Full preimage of a subgroup of a quotient.
Subgroup preimage(const FiniteGroup& g, const Quotient& q, const Subgroup& in_quotient);

/// Element (a, b) has index a * |B| + b. Throws ClosureExceedsCap.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t max_order = kDefaultOrderCap);

/// Regular representation of each generator, as degree-|G| permutations
/// (point i+1 goes to (i * gen) + 1).
std::vector<Permutation> regular_representation(const FiniteGroup& g);

}  // namespace camina
