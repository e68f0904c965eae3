#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhh/circuits.hpp"

namespace qhh {

// Field characteristic: 0 or a prime.
struct CharSpec {
  long value = 0;

  static CharSpec of(long v);  // throws ValidationError unless 0 or prime
  bool positive() const { return value > 0; }
};

struct VanishingWitness {
  // "strong_circuit": a non-trivial circuit with no zero cycle;
  // "w_count": a relevant circuit whose count of single-relation cycles != 1;
  // "not_p_prime": an efficient circuit whose multiplicity is divisible by p.
  std::string kind;
  CircuitKey circuit;
  long count = 0;
};

struct HH1Result {
  long dimension = 0;
  long via_theorem = 0;    // s + sum_C w_C - e (or e_{p'})
  long via_corollary = 0;  // |Q_1⊙B| - |Q_0⊙B| + |Q_0| - e (or e_{p'}) + s
  std::vector<std::pair<CircuitKey, long>> per_circuit;
  std::optional<VanishingWitness> vanishing_obstruction;
};

// Both expressions are always computed and compared; a mismatch throws
// CrossCheckError (implementation bug, never user error).
HH1Result dim_hh1(const CircuitCensus& census, CharSpec ch);

struct VanishingCheck {
  bool vanishes = false;
  std::optional<VanishingWitness> witness;
};

// Evaluates the vanishing conditions directly on the census, not through the
// dimension: no non-trivial circuit may be strong, and every circuit with
// both (Q_1⊙B)_C and (Z⊙B)_C nonempty must carry exactly one cycle whose
// only relation sits at its end (and, in characteristic p, have multiplicity
// coprime to p).
VanishingCheck hh1_vanishes(const CircuitCensus& census, CharSpec ch);

// Sum over connected components.
long total_hh1(const ComponentSplit& split, CharSpec ch);

std::string format_witness(const Quiver& q, const VanishingWitness& w);

}  // namespace qhh
