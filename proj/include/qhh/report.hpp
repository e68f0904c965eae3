#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhh/alt.hpp"
#include "qhh/hh1.hpp"
#include "qhh/oracle.hpp"

namespace qhh {

// The equivalent characterizations of a minimal first cohomology group of the
// trivial extension, each evaluated on its own:
//   (1) dim Z(A) == dim HH^1(TA)
//   (2) dim HH^1(TA) == 1
//   (3) dim HH^1(A) == 0
//   (4) the quiver is a tree without double arrows
// The one-point algebra in characteristic 2 is the known exception: its
// trivial extension k[x]/(x^2) has a two-dimensional space of outer
// derivations, so (2) fails while (3) and (4) hold.  That case is flagged
// instead of being treated as a cross-check failure.
struct MinimalityVerdict {
  bool center_isomorphic = false;
  bool hh1_ta_is_one = false;
  bool hh1_cohomology_zero = false;
  bool tree_quiver = false;
  bool degenerate_point_char2 = false;

  bool minimal() const { return hh1_ta_is_one; }
};

struct ComponentInvariants {
  std::string name;
  long dim_a = 0;  // |B|
  long dim_z = 0;
  long hh1 = 0;
  long hh1_cohomology = 0;
  long alt = 0;
  long r = 0;
  long sym = 0;
  long s = 0;
  long e = 0;
  std::optional<long> e_p_prime;  // absent in characteristic 0
  long hh1_ta = 0;
  MinimalityVerdict minimality;
  std::optional<long> oracle_hh1;  // set when the oracle ran
  std::optional<long> oracle_hom;
  std::optional<long> oracle_alt;
};

struct InvariantsReport {
  long characteristic = 0;
  std::vector<ComponentInvariants> components;
  ComponentInvariants total;
  bool minimal = false;                  // all components minimal
  std::optional<bool> oracle_agreement;  // absent when the oracle did not run
};

// Full pipeline for one presentation: per component, basis, census, formula
// dimensions, linear-algebra dimensions for Z(A) and HH^1(A), and the summed
// decomposition dim HH^1(TA) = dim Z + dim HH^1(A) + dim HH_1 + dim Alt.
// With `with_oracle`, the homology and bimodule nullspace computations run
// too and any disagreement with the formulas throws CrossCheckError.
InvariantsReport compute_report(const ValidatedPresentation& p, CharSpec ch, bool with_oracle);

// Evaluates the four conditions for one component and asserts their
// agreement (modulo the flagged degenerate case).
MinimalityVerdict minimality_check(const ValidatedPresentation& component, CharSpec ch,
                                   const ComponentInvariants& inv);

enum class ReportFormat { text, json };

std::string serialize_report(const InvariantsReport& report, ReportFormat format);

}  // namespace qhh
