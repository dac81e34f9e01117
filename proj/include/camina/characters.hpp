#pragma once

// Exact character tables by the Dixon-Burnside method: simultaneous
// eigenvectors of the class matrices over a prime field F_l with
// l = 1 (mod exp G), lifted to cyclotomic integers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "camina/cyclotomic.hpp"
#include "camina/group.hpp"

namespace camina {

/// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, x y = g_k} for the fixed
/// representative g_k of C_k.
class ClassStructureConstants {
public:
  ClassStructureConstants(const FiniteGroup& g, const ConjugacyClasses& classes);

  std::size_t class_count() const { return r_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }

private:
  std::size_t r_;
  std::vector<std::uint32_t> data_;
};

ClassStructureConstants class_mult_coefficients(const FiniteGroup& g);

struct CharacterTable {
  ConjugacyClasses classes;
  /// Smallest element of each class.
  std::vector<ElementId> representatives;
  std::vector<std::uint64_t> class_sizes;
  /// inverse_class[k] is the class containing g_k^-1.
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::int64_t> degrees;
  /// values[chi][k]; characters sorted by degree, trivial character first.
  std::vector<std::vector<CyclotomicValue>> values;
  std::uint32_t exponent = 1;
  /// The prime l used for the modular eigenvector computation.
  std::uint64_t modulus = 0;

  std::size_t size() const { return degrees.size(); }
  const CyclotomicValue& value(std::size_t chi, ElementId x) const { return values[chi][classes.class_of[x]]; }
};

/// Least prime l = 1 (mod exponent) with l > 2 sqrt(order). Throws
/// InternalPrimeSearchFailed past 10^6.
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

CharacterTable dixon_character_table(const FiniteGroup& g);

/// Sum_k |C_k| chi_i(g_k) conj(chi_j(g_k)) == |G| delta_ij, exactly.
bool rows_orthogonal(const CharacterTable& table, std::uint64_t group_order);
/// Sum_chi chi(g_k) conj(chi(g_l)) == |C_G(g_k)| delta_kl, exactly.
bool columns_orthogonal(const CharacterTable& table, std::uint64_t group_order);

/// Characters chi with n not contained in ker chi.
std::vector<std::size_t> irr_over(const FiniteGroup& g, const Subgroup& n, const CharacterTable& table);

struct CharacterWitness {
  std::size_t character = 0;
  ElementId element = 0;
  std::string reason;
};

struct RamificationResult {
  bool holds = true;
  std::optional<CharacterWitness> witness;
};

/// Every character over z vanishes off z and has chi(1)^2 = |G : z|.
RamificationResult verify_fully_ramified(const FiniteGroup& g, const Subgroup& z, const CharacterTable& table);

/// Character form of the Camina condition: every chi in Irr(G | N)
/// vanishes on G \ N.
RamificationResult characters_vanish_off(const FiniteGroup& g, const Subgroup& n, const CharacterTable& table);

std::string format_character_table(const CharacterTable& table);

}  // namespace camina
