#include "qhh/alt.hpp"

#include <algorithm>
#include <unordered_map>

namespace qhh {

namespace {

struct DisjointSet {
  std::vector<int> parent;
  std::vector<int> size;

  explicit DisjointSet(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

// one-arrow extensions that stay in B
bool extends_front(const Quiver& q, const PathBasis& b, int arrow, const Path& p) {
  if (q.target(arrow) != p.source) return false;
  return b.contains(*concat(arrow_path(q, arrow), p));
}

bool extends_back(const Quiver& q, const PathBasis& b, const Path& p, int arrow) {
  if (p.target != q.source(arrow)) return false;
  return b.contains(*concat(p, arrow_path(q, arrow)));
}

}  // namespace

bool is_neat(const Quiver& q, const PathBasis& b, const Path& alpha, const Path& beta) {
  for (int a = 0; a < q.num_arrows(); ++a) {
    // walking a before beta must be matched by alpha's final arrow
    if (extends_front(q, b, a, beta) && (alpha.trivial() || alpha.arrows.back() != a)) return false;
    // walking a after beta must be matched by alpha's first arrow
    if (extends_back(q, b, beta, a) && (alpha.trivial() || alpha.arrows.front() != a)) return false;
    if (extends_front(q, b, a, alpha) && (beta.trivial() || beta.arrows.back() != a)) return false;
    if (extends_back(q, b, alpha, a) && (beta.trivial() || beta.arrows.front() != a)) return false;
  }
  return true;
}

NeatClassTable neat_classes(const ValidatedPresentation& vp, const PathBasis& b) {
  const Quiver& q = vp->quiver;
  NeatClassTable table;

  std::unordered_map<long long, int> pair_id;
  for (int i = 0; i < b.size(); ++i) {
    const Path& alpha = b.path(i);
    for (int j : b.with_endpoints(alpha.target, alpha.source)) {
      pair_id.emplace(static_cast<long long>(i) * b.size() + j,
                      static_cast<int>(table.pairs.size()));
      table.pairs.emplace_back(i, j);
    }
  }
  auto id_of = [&](int i, int j) { return pair_id.at(static_cast<long long>(i) * b.size() + j); };

  // Moves slide one arrow of the underlying cycle across a split point; both
  // directions are covered by shrinking every pair's first member.
  DisjointSet ds(static_cast<int>(table.pairs.size()));
  for (int id = 0; id < static_cast<int>(table.pairs.size()); ++id) {
    auto [i, j] = table.pairs[id];
    const Path& alpha = b.path(i);
    const Path& beta = b.path(j);
    if (alpha.trivial()) continue;

    // (alpha'·a, beta) ~ (alpha', a·beta): last walked arrow of alpha moves
    // to the front of beta
    {
      int a = alpha.arrows.back();
      Path rest = subpath(q, alpha, 0, alpha.length() - 1);
      Path grown = *concat(arrow_path(q, a), beta);
      if (auto gi = b.index_of(grown)) ds.unite(id, id_of(*b.index_of(rest), *gi));
    }
    // (b·alpha', beta) ~ (alpha', beta·b): first walked arrow of alpha moves
    // to the back of beta
    {
      int a = alpha.arrows.front();
      Path rest = subpath(q, alpha, 1, alpha.length() - 1);
      Path grown = *concat(beta, arrow_path(q, a));
      if (auto gi = b.index_of(grown)) ds.unite(id, id_of(*b.index_of(rest), *gi));
    }
  }

  std::unordered_map<int, int> class_of_root;
  table.class_of.assign(table.pairs.size(), -1);
  for (int id = 0; id < static_cast<int>(table.pairs.size()); ++id) {
    int root = ds.find(id);
    auto [it, inserted] = class_of_root.try_emplace(root, static_cast<int>(table.classes.size()));
    if (inserted) table.classes.emplace_back();
    table.class_of[id] = it->second;
    table.classes[it->second].members.push_back(id);
  }

  for (auto& cls : table.classes) {
    cls.neat = true;
    bool first = true;
    for (int id : cls.members) {
      auto [i, j] = table.pairs[id];
      const Path& alpha = b.path(i);
      const Path& beta = b.path(j);
      if (cls.neat && !is_neat(q, b, alpha, beta)) cls.neat = false;
      CircuitKey key = circuit_of(q, *concat(beta, alpha));
      if (first) {
        cls.circuit = key;
        first = false;
      } else if (key != cls.circuit) {
        throw CrossCheckError("neat classes: members of one class lie on different circuits");
      }
    }
  }

  for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) {
    auto [i, j] = table.pairs[table.classes[c].members.front()];
    int flipped = table.class_of[id_of(j, i)];
    table.classes[c].flip_class = flipped;
    // the flip must send the whole class to one class
    for (int id : table.classes[c].members) {
      auto [x, y] = table.pairs[id];
      if (table.class_of[id_of(y, x)] != flipped)
        throw CrossCheckError("neat classes: the flip is not constant on a class");
    }
  }
  for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) {
    const auto& cls = table.classes[c];
    if (table.classes[cls.flip_class].flip_class != c)
      throw CrossCheckError("neat classes: the flip is not an involution");
    if (table.classes[cls.flip_class].neat != cls.neat)
      throw CrossCheckError("neat classes: the flip does not preserve neatness");
    if (cls.neat) {
      ++table.r;
      if (cls.flip_class == c) ++table.sym;
    }
  }
  if ((table.r - table.sym) % 2 != 0)
    throw CrossCheckError("neat classes: r - sym is odd");
  return table;
}

long dim_alt(const NeatClassTable& table, CharSpec ch) {
  if (ch.value == 2) return (table.r + table.sym) / 2;
  return (table.r - table.sym) / 2;
}

long dim_hom_da_a(const NeatClassTable& table) { return table.r; }

SparseIntMatrix psi_matrix(const NeatClassTable& table, int class_id, const PathBasis& b) {
  const auto& cls = table.classes[class_id];
  if (!cls.neat) throw DomainError("psi_matrix: class " + std::to_string(class_id) + " is not neat");
  SparseIntMatrix m(b.size(), b.size());
  for (int id : cls.members) {
    auto [gamma, delta] = table.pairs[id];
    m.add(gamma, delta, 1);
  }
  return m;
}

}  // namespace qhh
