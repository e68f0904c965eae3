#include "qhh/basis.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace qhh {

namespace {

struct TrieNode {
  std::map<int, int> children;  // arrow -> node
  int fail = 0;
  int depth = 0;
  int head = -1;   // target vertex of the node's word; -1 for the root
  bool match = false;
};

}  // namespace

bool AvoidanceAutomaton::accepts(const Path& p) const {
  int state = start_state(p.source);
  for (int a : p.arrows) {
    state = step(state, a);
    if (state == kDead) return false;
  }
  return true;
}

AvoidanceAutomaton build_automaton(const ValidatedPresentation& vp) {
  const Quiver& q = vp->quiver;
  const int nv = q.num_vertices();
  const int na = q.num_arrows();

  // Trie of the relations' traversal words.
  std::vector<TrieNode> trie(1);
  for (const auto& rel : vp->relations) {
    int node = 0;
    for (int a : rel.arrows) {
      auto it = trie[node].children.find(a);
      if (it == trie[node].children.end()) {
        int next = static_cast<int>(trie.size());
        trie.push_back(TrieNode{});
        trie[next].depth = trie[node].depth + 1;
        trie[next].head = q.target(a);
        trie[node].children.emplace(a, next);
        node = next;
      } else {
        node = it->second;
      }
    }
    trie[node].match = true;
  }

  // Failure links, breadth first; a node matches when it is a relation or a
  // proper suffix of its word is (the latter cannot happen for a minimal Z,
  // but costs nothing to track).
  std::deque<int> queue;
  for (auto& [a, child] : trie[0].children) {
    trie[child].fail = 0;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    trie[node].match = trie[node].match || trie[trie[node].fail].match;
    for (auto& [a, child] : trie[node].children) {
      int f = trie[node].fail;
      while (f != 0 && !trie[f].children.count(a)) f = trie[f].fail;
      auto it = trie[f].children.find(a);
      trie[child].fail = (it != trie[f].children.end() && it->second != child) ? it->second : 0;
      queue.push_back(child);
    }
  }

  // States: one per vertex (empty suffix) followed by the live trie nodes.
  std::vector<int> state_of_node(trie.size(), -1);
  std::vector<int> state_vertex;
  for (int v = 0; v < nv; ++v) state_vertex.push_back(v);
  for (std::size_t n = 1; n < trie.size(); ++n) {
    if (!trie[n].match) {
      state_of_node[n] = static_cast<int>(state_vertex.size());
      state_vertex.push_back(trie[n].head);
    }
  }
  auto goto_node = [&](int node, int a) {
    while (true) {
      auto it = trie[node].children.find(a);
      if (it != trie[node].children.end()) return it->second;
      if (node == 0) return 0;
      node = trie[node].fail;
    }
  };

  AvoidanceAutomaton aut;
  aut.num_arrows_ = na;
  aut.state_vertex_ = state_vertex;
  aut.delta_.assign(state_vertex.size() * static_cast<std::size_t>(na), AvoidanceAutomaton::kDead);
  std::vector<int> node_of_state(state_vertex.size(), 0);
  for (std::size_t n = 1; n < trie.size(); ++n)
    if (state_of_node[n] >= 0) node_of_state[state_of_node[n]] = static_cast<int>(n);

  for (int s = 0; s < static_cast<int>(state_vertex.size()); ++s) {
    int node = node_of_state[s];
    int head = state_vertex[s];
    for (int a = 0; a < na; ++a) {
      if (q.source(a) != head) continue;  // not composable from here
      int next = goto_node(node, a);
      if (trie[next].match) continue;  // the walked path just died
      int next_state = next == 0 ? q.target(a) : state_of_node[next];
      aut.delta_[s * na + a] = next_state;
    }
  }

  // Finiteness: the basis is finite iff no live state reachable from a start
  // state lies on a cycle of the transition graph.
  const int nstates = static_cast<int>(state_vertex.size());
  std::vector<int> color(nstates, 0);  // 0 unseen, 1 on stack, 2 done
  bool cyclic = false;
  std::vector<std::pair<int, int>> stack;
  for (int start = 0; start < nv && !cyclic; ++start) {
    if (color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty() && !cyclic) {
      auto& [s, ai] = stack.back();
      bool advanced = false;
      while (ai < na) {
        int t = aut.delta_[s * na + ai];
        ++ai;
        if (t == AvoidanceAutomaton::kDead) continue;
        if (color[t] == 1) {
          cyclic = true;
          break;
        }
        if (color[t] == 0) {
          color[t] = 1;
          stack.push_back({t, 0});
          advanced = true;
          break;
        }
      }
      if (cyclic || advanced) continue;
      if (ai >= na) {
        color[s] = 2;
        stack.pop_back();
      }
    }
    stack.clear();
  }
  aut.finite_ = !cyclic;
  return aut;
}

bool is_finite_dimensional(const AvoidanceAutomaton& aut) { return aut.finite_language(); }

namespace {

struct BasisOrder {
  const Quiver& q;
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    const std::string& sa = q.vertex_id(a.source);
    const std::string& sb = q.vertex_id(b.source);
    if (sa != sb) return sa < sb;
    for (int i = 0; i < a.length(); ++i) {
      const std::string& ia = q.arrow_id(a.arrows[i]);
      const std::string& ib = q.arrow_id(b.arrows[i]);
      if (ia != ib) return ia < ib;
    }
    return false;
  }
};

}  // namespace

PathBasis enumerate_basis(const ValidatedPresentation& vp) {
  const Quiver& q = vp->quiver;
  AvoidanceAutomaton aut = build_automaton(vp);
  if (!aut.finite_language())
    throw InfiniteDimensionalError(
        "the algebra is infinite-dimensional: arbitrarily long nonzero paths exist");

  PathBasis basis;
  basis.automaton_ = aut;
  basis.num_vertices_ = q.num_vertices();

  const int na = q.num_arrows();
  std::vector<int> word;
  // depth-first over live runs; the transition graph is acyclic, so every
  // run is a distinct basis path
  struct Frame {
    int state;
    int next_arrow;
  };
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::vector<Frame> stack{{aut.start_state(v), 0}};
    word.clear();
    basis.paths_.push_back(trivial_path(v));
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_arrow >= na) {
        stack.pop_back();
        if (!word.empty()) word.pop_back();
        continue;
      }
      int a = f.next_arrow++;
      int t = aut.step(f.state, a);
      if (t == AvoidanceAutomaton::kDead) continue;
      word.push_back(a);
      Path p;
      p.source = v;
      p.target = q.target(a);
      p.arrows = word;
      basis.paths_.push_back(std::move(p));
      stack.push_back({t, 0});
    }
  }

  std::sort(basis.paths_.begin(), basis.paths_.end(), BasisOrder{q});
  basis.by_endpoints_.assign(static_cast<std::size_t>(q.num_vertices()) * q.num_vertices(), {});
  for (int i = 0; i < basis.size(); ++i) {
    const Path& p = basis.paths_[i];
    basis.index_.emplace(p, i);
    basis.by_endpoints_[p.source * q.num_vertices() + p.target].push_back(i);
    if (p.length() >= static_cast<int>(basis.by_length_.size()))
      basis.by_length_.resize(p.length() + 1);
    basis.by_length_[p.length()].push_back(i);
    basis.max_length_ = std::max(basis.max_length_, p.length());
  }
  return basis;
}

std::optional<int> PathBasis::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& PathBasis::with_endpoints(int source, int target) const {
  return by_endpoints_[source * num_vertices_ + target];
}

const std::vector<int>& PathBasis::with_length(int len) const {
  static const std::vector<int> empty;
  if (len < 0 || len >= static_cast<int>(by_length_.size())) return empty;
  return by_length_[len];
}

bool is_nonzero(const Path& p, const PathBasis& b) { return b.is_nonzero(p); }

}  // namespace qhh
