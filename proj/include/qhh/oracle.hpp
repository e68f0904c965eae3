#pragma once

#include <utility>
#include <vector>

#include "qhh/basis.hpp"
#include "qhh/linalg.hpp"

namespace qhh {

// Low-degree slice of the chain complex of a monomial algebra,
//   k(Z ⊙ B) --d1--> k(Q_1 ⊙ B) --d0--> k(Q_0 ⊙ B),
// with the convention that a summand vanishes when its path component is a
// zero path.  Matrices are stored row-per-domain-element with entries indexed
// by the codomain basis.
struct ChainComplexSlice {
  std::vector<std::pair<Path, Path>> zb;   // (relation, basis path)
  std::vector<std::pair<Path, Path>> q1b;  // (arrow path, basis path)
  std::vector<std::pair<Path, Path>> q0b;  // (vertex path, basis cycle)
  SparseIntMatrix d1;
  SparseIntMatrix d0;
};

ChainComplexSlice build_chain_slice(const ValidatedPresentation& p, const PathBasis& b);

bool composes_to_zero(const ChainComplexSlice& slice);  // d0 ∘ d1 == 0

// dim ker d0 - rank d1
long hh1_homology_dim(const ChainComplexSlice& slice, ExactField f);

// Nullity of { xg = gx : g a vertex or an arrow }, x running over A.
long center_dim(const ValidatedPresentation& p, const PathBasis& b, ExactField f);

// dim ker d^1 - rank d^0 for the cochain slice obtained from the bimodule
// resolution in degrees <= 2: spaces ⊕_u uAu, ⊕_a t(a)As(a), ⊕_ξ t(ξ)As(ξ).
long hh1_cohomology_dim(const ValidatedPresentation& p, const PathBasis& b, ExactField f);

struct HomAltDims {
  long hom = 0;  // dim Hom_{A-A}(DA, A)
  long alt = 0;  // dim Alt(DA)
};

// Models a candidate morphism DA -> A as a |B| x |B| matrix M over the bases
// (B*, B), imposes the bimodule constraints generated by vertices and arrows,
// and reads both dimensions off nullities (Alt adds M + M^T = 0).
HomAltDims hom_and_alt_dims(const ValidatedPresentation& p, const PathBasis& b, ExactField f);

// The constraint system above, unknowns indexed gamma * |B| + delta.
SparseIntMatrix bimodule_constraint_matrix(const ValidatedPresentation& p, const PathBasis& b);

}  // namespace qhh
