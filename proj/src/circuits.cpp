#include "qhh/circuits.hpp"

#include <algorithm>
#include <numeric>

namespace qhh {

int least_rotation(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n <= 1) return 0;
  // Booth's algorithm on the doubled word.
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int sj = word[j % n];
    int i = f[j - k - 1];
    while (i != -1 && sj != word[(k + i + 1) % n]) {
      if (sj < word[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != word[(k + i + 1) % n]) {
      if (sj < word[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

namespace {

// Ranks arrows by id so canonical words do not depend on declaration order.
std::vector<int> arrow_ranks(const Quiver& q) {
  std::vector<int> order(q.num_arrows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return q.arrow_id(a) < q.arrow_id(b); });
  std::vector<int> rank(q.num_arrows());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
  return rank;
}

CircuitKey canonical_key(const Quiver& q, const std::vector<int>& ranks, const Path& cycle) {
  if (cycle.source != cycle.target)
    throw DomainError("circuit_of: path " + format_path(q, cycle) + " is not a cycle");
  CircuitKey key;
  if (cycle.trivial()) {
    key.trivial_vertex = cycle.source;
    return key;
  }
  std::vector<int> ranked(cycle.arrows.size());
  for (std::size_t i = 0; i < cycle.arrows.size(); ++i) ranked[i] = ranks[cycle.arrows[i]];
  int start = least_rotation(ranked);
  key.word.reserve(cycle.arrows.size());
  for (std::size_t i = 0; i < cycle.arrows.size(); ++i)
    key.word.push_back(cycle.arrows[(start + i) % cycle.arrows.size()]);
  return key;
}

Path rotation_path(const Quiver& q, const std::vector<int>& word, int start) {
  std::vector<int> arrows(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) arrows[i] = word[(start + i) % word.size()];
  return path_from_arrows(q, std::move(arrows));
}

std::vector<Path> paths_of(const ValidatedPresentation& vp, const PathBasis& b, PathSet set) {
  const Quiver& q = vp->quiver;
  std::vector<Path> out;
  switch (set) {
    case PathSet::Q0:
      for (int v = 0; v < q.num_vertices(); ++v) out.push_back(trivial_path(v));
      break;
    case PathSet::Q1:
      for (int a = 0; a < q.num_arrows(); ++a) out.push_back(arrow_path(q, a));
      break;
    case PathSet::Z:
      out = vp->relations;
      break;
    case PathSet::B:
      out = b.paths();
      break;
  }
  return out;
}

}  // namespace

CircuitKey circuit_of(const Quiver& q, const Path& cycle) {
  return canonical_key(q, arrow_ranks(q), cycle);
}

std::pair<int, int> period_multiplicity(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return {0, 1};
  for (int l = 1; l <= n; ++l) {
    if (n % l != 0) continue;
    bool periodic = true;
    for (int i = 0; i < n && periodic; ++i) periodic = word[i] == word[(i + l) % n];
    if (periodic) return {l, n / l};
  }
  return {n, 1};
}

std::vector<std::pair<Path, Path>> cyclic_pairs(const ValidatedPresentation& vp,
                                                const PathBasis& b, PathSet x, PathSet y) {
  std::vector<Path> xs = paths_of(vp, b, x);
  std::vector<std::pair<Path, Path>> out;
  if (y == PathSet::B) {
    for (const auto& alpha : xs)
      for (int j : b.with_endpoints(alpha.target, alpha.source))
        out.emplace_back(alpha, b.path(j));
    return out;
  }
  std::vector<Path> ys = paths_of(vp, b, y);
  for (const auto& alpha : xs)
    for (const auto& beta : ys)
      if (beta.source == alpha.target && beta.target == alpha.source) out.emplace_back(alpha, beta);
  return out;
}

std::vector<WCycle> enumerate_W(const ValidatedPresentation& vp, const PathBasis& b) {
  const Quiver& q = vp->quiver;
  auto ranks = arrow_ranks(q);
  std::vector<WCycle> out;
  // Every W cycle splits uniquely as (basis path, then relation): walking the
  // relation last puts it at the end, and minimality makes the terminal
  // relation unique.
  for (const auto& xi : vp->relations) {
    for (int j : b.with_endpoints(xi.target, xi.source)) {
      const Path& alpha = b.path(j);
      Path cycle = *concat(alpha, xi);
      int occurrences = 0;
      for (const auto& rel : vp->relations) occurrences += count_subpath_occurrences(cycle, rel);
      if (occurrences == 1) out.push_back(WCycle{cycle, canonical_key(q, ranks, cycle)});
    }
  }
  return out;
}

CircuitCensus classify(const ValidatedPresentation& vp, const PathBasis& b) {
  const Quiver& q = vp->quiver;
  auto ranks = arrow_ranks(q);

  CircuitCensus census;
  census.vertex_count = q.num_vertices();

  std::map<CircuitKey, Circuit> table;
  auto circuit_at = [&](const CircuitKey& key) -> Circuit& {
    auto [it, inserted] = table.try_emplace(key);
    if (inserted) {
      Circuit& c = it->second;
      c.key = key;
      c.length = static_cast<int>(key.word.size());
      auto [l, m] = period_multiplicity(key.word);
      c.period = l;
      c.multiplicity = m;
    }
    return it->second;
  };

  // Q_0 ⊙ B: one trivial pair per vertex plus the basis cycles.  Whenever a
  // circuit first shows up through a basis cycle, decide strongness by
  // checking every rotation.
  for (int v = 0; v < q.num_vertices(); ++v) {
    ++census.q0b_total;
    Circuit& c = circuit_at(CircuitKey{v, {}});
    ++c.q0b;
    c.strong = true;  // its only cycle is the vertex, a basis vector
  }
  for (int v = 0; v < q.num_vertices(); ++v) {
    for (int j : b.with_endpoints(v, v)) {
      const Path& cycle = b.path(j);
      if (cycle.trivial()) continue;
      ++census.q0b_total;
      CircuitKey key = canonical_key(q, ranks, cycle);
      bool fresh = !table.count(key);
      Circuit& c = circuit_at(key);
      ++c.q0b;
      if (fresh) {
        bool strong = true;
        for (int r = 0; r < c.period && strong; ++r)
          strong = b.is_nonzero(rotation_path(q, key.word, r));
        c.strong = strong;
      }
    }
  }

  // Q_1 ⊙ B: usefulness.
  for (int a = 0; a < q.num_arrows(); ++a) {
    Path ap = arrow_path(q, a);
    for (int j : b.with_endpoints(ap.target, ap.source)) {
      ++census.q1b_total;
      Path cycle = *concat(b.path(j), ap);  // walked beta, then a
      Circuit& c = circuit_at(canonical_key(q, ranks, cycle));
      ++c.q1b;
      c.useful = true;
    }
  }

  // Z ⊙ B.
  for (const auto& xi : vp->relations) {
    for (int j : b.with_endpoints(xi.target, xi.source)) {
      ++census.zb_total;
      Path cycle = *concat(b.path(j), xi);
      Circuit& c = circuit_at(canonical_key(q, ranks, cycle));
      ++c.zb;
    }
  }

  // W, grouped by circuit.
  for (auto& wc : enumerate_W(vp, b)) {
    ++census.w_total;
    Circuit& c = circuit_at(wc.circuit);
    ++c.w;
    c.w_members.push_back(std::move(wc.cycle));
  }

  for (auto& [key, c] : table) {
    c.efficient = c.useful && !c.strong && c.zb > 0;
    if (c.strong && !key.trivial()) ++census.strong_count;
    if (c.efficient) ++census.efficient_count;
  }

  // Cheap consistency gates on the construction.
  long w_sum = 0;
  for (auto& [key, c] : table) {
    w_sum += c.w;
    if (!key.trivial() && c.w != c.q1b - c.q0b)
      throw CrossCheckError("census: w_C != |(Q_1⊙B)_C| - |(Q_0⊙B)_C| for circuit " +
                            format_circuit(q, key));
    if (!c.efficient && c.w != 0)
      throw CrossCheckError("census: nonzero w_C on a non-efficient circuit " +
                            format_circuit(q, key));
    if (c.efficient && c.w < 1)
      throw CrossCheckError("census: efficient circuit with w_C = 0: " + format_circuit(q, key));
  }
  if (w_sum != census.q1b_total - census.q0b_total + census.vertex_count)
    throw CrossCheckError("census: sum of w_C != |Q_1⊙B| - |Q_0⊙B| + |Q_0|");

  census.circuits.reserve(table.size());
  for (auto& [key, c] : table) census.circuits.push_back(std::move(c));
  std::sort(census.circuits.begin(), census.circuits.end(), [&](const Circuit& x, const Circuit& y) {
    if (x.key.trivial() != y.key.trivial()) return x.key.trivial();
    if (x.key.trivial())
      return q.vertex_id(x.key.trivial_vertex) < q.vertex_id(y.key.trivial_vertex);
    if (x.length != y.length) return x.length < y.length;
    return format_circuit(q, x.key) < format_circuit(q, y.key);
  });
  for (int i = 0; i < static_cast<int>(census.circuits.size()); ++i)
    census.index.emplace(census.circuits[i].key, i);
  return census;
}

int CircuitCensus::efficient_pprime_count(long p) const {
  int count = 0;
  for (const auto& c : circuits)
    if (c.efficient && c.multiplicity % p != 0) ++count;
  return count;
}

const Circuit* CircuitCensus::find(const CircuitKey& key) const {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &circuits[it->second];
}

std::string format_circuit(const Quiver& q, const CircuitKey& key) {
  if (key.trivial()) return "(" + q.vertex_id(key.trivial_vertex) + ")";
  std::string out;
  for (auto it = key.word.rbegin(); it != key.word.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += q.arrow_id(*it);
  }
  return out;
}

}  // namespace qhh
