#pragma once

// Central series, nilpotency class and the subgroups D(g) = {x : [g, x] in Z}.

#include <optional>
#include <vector>

#include "camina/group.hpp"

namespace camina {

enum class SeriesKind { Lower, Upper };

struct CentralSeries {
  SeriesKind kind = SeriesKind::Lower;
  /// Lower: G = G_1 > G_2 > ...; upper: 1 = Z_0 < Z_1 < .... Terms are
  /// strictly monotone; the sequence stops at the first repeated term.
  std::vector<Subgroup> terms;
  /// Nilpotency class, or nullopt when the series stalls short of 1 (lower)
  /// or G (upper).
  std::optional<int> class_c;
};

CentralSeries lower_central_series(const FiniteGroup& g);
CentralSeries upper_central_series(const FiniteGroup& g);

/// Class from both series; throws InternalError if they disagree.
std::optional<int> nilpotency_class(const FiniteGroup& g);

/// D(g) relative to the center z. Throws CentralElement if g is in z.
Subgroup d_subgroup(const FiniteGroup& g, ElementId x, const Subgroup& z);

struct PrimePower {
  std::uint64_t p = 0;
  int n = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Splits value as p^n; nullopt unless value is a prime power greater than 1.
std::optional<PrimePower> as_prime_power(std::uint64_t value);

/// Exponent of G/Z(G) as p^n; nullopt when G/Z(G) is not a p-group
/// (including the trivial quotient, where no prime is determined).
std::optional<PrimePower> quotient_exponent_over_center(const FiniteGroup& g);

/// Every element of `upper` raised to the p-th power lies in `lower`.
bool factor_has_exponent_dividing(const FiniteGroup& g, const Subgroup& upper, const Subgroup& lower,
                                  std::uint64_t p);

}  // namespace camina
