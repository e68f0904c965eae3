#include "qhh/hh1.hpp"

#include <algorithm>

namespace qhh {

namespace {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

CharSpec CharSpec::of(long v) {
  if (v != 0 && !is_prime(v))
    throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(v));
  return CharSpec{v};
}

HH1Result dim_hh1(const CircuitCensus& census, CharSpec ch) {
  const long effective_e =
      ch.positive() ? census.efficient_pprime_count(ch.value) : census.efficient_count;

  HH1Result result;
  long w_sum = 0;
  for (const auto& c : census.circuits) {
    long contribution = 0;
    if (c.efficient) {
      w_sum += c.w;
      bool drops_rank = !ch.positive() || c.multiplicity % ch.value != 0;
      contribution = c.w - (drops_rank ? 1 : 0);
    } else if (c.strong && !c.key.trivial()) {
      contribution = 1;
    }
    result.per_circuit.emplace_back(c.key, contribution);
  }
  result.via_theorem = census.strong_count + w_sum - effective_e;
  result.via_corollary = census.q1b_total - census.q0b_total + census.vertex_count -
                         effective_e + census.strong_count;
  if (result.via_theorem != result.via_corollary)
    throw CrossCheckError("dim HH_1: theorem expression " + std::to_string(result.via_theorem) +
                          " != corollary expression " + std::to_string(result.via_corollary));
  result.dimension = result.via_theorem;

  long per_circuit_sum = 0;
  for (const auto& [key, c] : result.per_circuit) per_circuit_sum += c;
  if (per_circuit_sum != result.dimension)
    throw CrossCheckError("dim HH_1: per-circuit contributions sum to " +
                          std::to_string(per_circuit_sum) + ", expected " +
                          std::to_string(result.dimension));

  auto vanishing = hh1_vanishes(census, ch);
  if (vanishing.vanishes != (result.dimension == 0))
    throw CrossCheckError("dim HH_1: vanishing conditions disagree with the dimension");
  result.vanishing_obstruction = vanishing.witness;
  return result;
}

VanishingCheck hh1_vanishes(const CircuitCensus& census, CharSpec ch) {
  for (const auto& c : census.circuits) {
    if (c.key.trivial()) continue;
    // Circuits that never met the pair sets consist of zero cycles anyway,
    // so the "every non-trivial circuit contains a zero cycle" condition can
    // only fail on a discovered strong circuit.
    if (c.strong)
      return {false, VanishingWitness{"strong_circuit", c.key, 0}};
  }
  for (const auto& c : census.circuits) {
    if (c.q1b == 0 || c.zb == 0) continue;
    // Exactly one pair (xi, beta) in (Z ⊙ B)_C whose cycle carries no
    // relation besides the terminal xi; that count is w_C.
    if (c.w != 1) return {false, VanishingWitness{"w_count", c.key, c.w}};
    if (ch.positive() && c.multiplicity % ch.value == 0)
      return {false, VanishingWitness{"not_p_prime", c.key, c.multiplicity}};
  }
  return {true, std::nullopt};
}

long total_hh1(const ComponentSplit& split, CharSpec ch) {
  long total = 0;
  for (const auto& component : split.components) {
    PathBasis b = enumerate_basis(component);
    total += dim_hh1(classify(component, b), ch).dimension;
  }
  return total;
}

std::string format_witness(const Quiver& q, const VanishingWitness& w) {
  if (w.kind == "strong_circuit")
    return "circuit " + format_circuit(q, w.circuit) + " has no zero cycle";
  if (w.kind == "w_count")
    return "circuit " + format_circuit(q, w.circuit) + " carries " + std::to_string(w.count) +
           " cycles with a single terminal relation (need exactly 1)";
  if (w.kind == "not_p_prime")
    return "circuit " + format_circuit(q, w.circuit) + " has multiplicity " +
           std::to_string(w.count) + " divisible by the characteristic";
  return w.kind;
}

}  // namespace qhh
