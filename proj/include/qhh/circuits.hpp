#pragma once

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qhh/basis.hpp"

namespace qhh {

enum class PathSet { Q0, Q1, Z, B };

// X ⊙ Y: pairs (alpha, beta) with t(beta) = s(alpha) and t(alpha) = s(beta),
// so that both concatenations are cycles.  Membership is decided by
// endpoints alone.
std::vector<std::pair<Path, Path>> cyclic_pairs(const ValidatedPresentation& p,
                                                const PathBasis& b, PathSet x,
                                                PathSet y);

// Rotation class of cycles.  The canonical word is the lexicographically
// least rotation of the traversal word, ranked by arrow id; trivial circuits
// carry their vertex instead.
struct CircuitKey {
  int trivial_vertex = -1;
  std::vector<int> word;  // traversal order

  bool trivial() const { return trivial_vertex >= 0; }
  friend auto operator<=>(const CircuitKey&, const CircuitKey&) = default;
};

// Booth's least-rotation algorithm; returns the starting offset.
int least_rotation(std::span<const int> word);

// Throws DomainError when the path is not a cycle.
CircuitKey circuit_of(const Quiver& q, const Path& cycle);

// (period, multiplicity) of a canonical word: the period is the smallest
// rotation fixing the word, the multiplicity is length / period.
std::pair<int, int> period_multiplicity(std::span<const int> word);

struct Circuit {
  CircuitKey key;
  int length = 0;
  int period = 0;
  int multiplicity = 1;
  bool strong = false;     // every rotation is a basis vector (non-trivial only)
  bool useful = false;     // (Q_1 ⊙ B)_C nonempty
  bool efficient = false;  // useful, not strong, (Z ⊙ B)_C nonempty
  long w = 0;              // cycles of W lying in this circuit
  std::vector<Path> w_members;
  long q0b = 0, q1b = 0, zb = 0;  // fiber sizes over this circuit
};

struct WCycle {
  Path cycle;
  CircuitKey circuit;
};

// All cycles carrying exactly one relation as a subpath, located at the
// walked end.
std::vector<WCycle> enumerate_W(const ValidatedPresentation& p, const PathBasis& b);

struct CircuitCensus {
  std::vector<Circuit> circuits;  // trivial first, then by (length, word)
  std::map<CircuitKey, int> index;

  long q0b_total = 0;  // |Q_0 ⊙ B|
  long q1b_total = 0;  // |Q_1 ⊙ B|
  long zb_total = 0;   // |Z ⊙ B|
  long w_total = 0;    // |W|
  int vertex_count = 0;

  int strong_count = 0;     // s: non-trivial strong circuits
  int efficient_count = 0;  // e

  int efficient_pprime_count(long p) const;  // e_{p'}
  const Circuit* find(const CircuitKey& key) const;
};

// Discovers circuits through the concrete pair sets (never by abstract cycle
// enumeration), classifies them and counts W per circuit.
CircuitCensus classify(const ValidatedPresentation& p, const PathBasis& b);

std::string format_circuit(const Quiver& q, const CircuitKey& key);

}  // namespace qhh
