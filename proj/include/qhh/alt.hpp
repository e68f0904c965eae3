#pragma once

#include <utility>
#include <vector>

#include "qhh/circuits.hpp"
#include "qhh/hh1.hpp"
#include "qhh/linalg.hpp"

namespace qhh {

// A cyclic pair (alpha, beta) in B ⊙ B is neat when every one-arrow extension
// of either member that stays in B is matched by the corresponding end arrow
// of the other member: if walking a before beta stays in B, a must be the
// last walked arrow of alpha; if walking a after beta stays in B, a must be
// the first walked arrow of alpha; and symmetrically for alpha.  Trivial
// members admit no matching arrow, so any extension breaks neatness.
bool is_neat(const Quiver& q, const PathBasis& b, const Path& alpha, const Path& beta);

// Partition of B ⊙ B by the moves that slide one arrow across a split point
// of the underlying cycle:
//   (alpha·a, beta) ~ (alpha, a·beta)   and   (b·alpha, beta) ~ (alpha, beta·b)
// (shown here in traversal order).  A move is admitted only when all four
// paths lie in B.  A class is neat when all its members are.
struct NeatClassTable {
  std::vector<std::pair<int, int>> pairs;  // B ⊙ B as basis-index pairs
  std::vector<int> class_of;               // pair -> class id

  struct ClassInfo {
    std::vector<int> members;  // pair ids, ascending
    bool neat = false;
    CircuitKey circuit;   // common circuit of all members' cycles
    int flip_class = -1;  // class of the swapped pairs
  };
  std::vector<ClassInfo> classes;

  int r = 0;    // neat classes
  int sym = 0;  // neat classes fixed by the flip

  bool symmetric(int class_id) const { return classes[class_id].flip_class == class_id; }
};

NeatClassTable neat_classes(const ValidatedPresentation& p, const PathBasis& b);

// (r - sym)/2 away from characteristic 2, (r + sym)/2 in characteristic 2.
long dim_alt(const NeatClassTable& table, CharSpec ch);

// r: the neat classes index a basis of Hom_{A-A}(DA, A).
long dim_hom_da_a(const NeatClassTable& table);

// Characteristic-function matrix of one neat class in the bases (B*, B):
// a single 1 per member pair.  Throws DomainError for a non-neat class.
SparseIntMatrix psi_matrix(const NeatClassTable& table, int class_id, const PathBasis& b);

}  // namespace qhh
