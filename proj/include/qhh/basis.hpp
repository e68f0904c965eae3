#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "qhh/presentation.hpp"

namespace qhh {

// Forbidden-factor automaton over the arrow alphabet, Aho-Corasick style:
// a state is (head vertex, longest suffix of the walked word that is a
// proper prefix of some relation).  A run dies exactly when the walked path
// acquires a relation as a subpath, so the live runs are the nonzero paths.
class AvoidanceAutomaton {
 public:
  static constexpr int kDead = -1;

  int start_state(int vertex) const { return vertex; }
  int step(int state, int arrow) const { return delta_[state * num_arrows_ + arrow]; }
  int state_vertex(int state) const { return state_vertex_[state]; }
  int num_states() const { return static_cast<int>(state_vertex_.size()); }

  bool accepts(const Path& p) const;
  // false iff some live state lies on a cycle, i.e. the basis is infinite
  bool finite_language() const { return finite_; }

 private:
  friend AvoidanceAutomaton build_automaton(const ValidatedPresentation& p);
  int num_arrows_ = 0;
  std::vector<int> delta_;         // num_states x num_arrows, kDead included
  std::vector<int> state_vertex_;  // head vertex per state
  bool finite_ = false;
};

AvoidanceAutomaton build_automaton(const ValidatedPresentation& p);
bool is_finite_dimensional(const AvoidanceAutomaton& aut);

// The set B of nonzero paths, indexed.  Order is fixed: by length, then
// source id, then arrow ids, so runs are reproducible.
class PathBasis {
 public:
  int size() const { return static_cast<int>(paths_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int i) const { return paths_[i]; }
  int max_length() const { return max_length_; }

  std::optional<int> index_of(const Path& p) const;
  bool contains(const Path& p) const { return index_of(p).has_value(); }
  // Automaton run; works for paths longer than any basis member.
  bool is_nonzero(const Path& p) const { return automaton_.accepts(p); }

  const std::vector<int>& with_endpoints(int source, int target) const;
  const std::vector<int>& with_length(int len) const;

  const AvoidanceAutomaton& automaton() const { return automaton_; }

 private:
  friend PathBasis enumerate_basis(const ValidatedPresentation& p);
  std::vector<Path> paths_;
  std::unordered_map<Path, int, PathHash> index_;
  std::vector<std::vector<int>> by_endpoints_;  // source * nv + target
  std::vector<std::vector<int>> by_length_;
  int num_vertices_ = 0;
  int max_length_ = 0;
  AvoidanceAutomaton automaton_;
};

// Throws InfiniteDimensionalError when the algebra is not finite-dimensional.
PathBasis enumerate_basis(const ValidatedPresentation& p);

bool is_nonzero(const Path& p, const PathBasis& b);

}  // namespace qhh
