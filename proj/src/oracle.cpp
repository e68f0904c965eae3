#include "qhh/oracle.hpp"

#include <map>
#include <unordered_map>

namespace qhh {

namespace {

using PairIndex = std::unordered_map<Path, int, PathHash>;

PairIndex index_paths(const std::vector<std::pair<Path, Path>>& basis, bool by_cycle) {
  // For Q_0 ⊙ B and cochain spaces the second component determines the
  // element, so index by it when asked.
  PairIndex idx;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    idx.emplace(by_cycle ? basis[i].second : basis[i].first, i);
  return idx;
}

}  // namespace

ChainComplexSlice build_chain_slice(const ValidatedPresentation& vp, const PathBasis& b) {
  const Quiver& q = vp->quiver;
  ChainComplexSlice slice;

  for (int v = 0; v < q.num_vertices(); ++v)
    for (int j : b.with_endpoints(v, v)) slice.q0b.emplace_back(trivial_path(v), b.path(j));
  for (int a = 0; a < q.num_arrows(); ++a) {
    Path ap = arrow_path(q, a);
    for (int j : b.with_endpoints(ap.target, ap.source)) slice.q1b.emplace_back(ap, b.path(j));
  }
  for (const auto& xi : vp->relations)
    for (int j : b.with_endpoints(xi.target, xi.source)) slice.zb.emplace_back(xi, b.path(j));

  // Q_0 ⊙ B elements are determined by the cycle; Q_1 ⊙ B ones by the pair.
  PairIndex q0_index = index_paths(slice.q0b, true);
  std::map<std::pair<int, Path>, int> q1_index;
  for (int i = 0; i < static_cast<int>(slice.q1b.size()); ++i)
    q1_index.emplace(std::pair{slice.q1b[i].first.arrows[0], slice.q1b[i].second}, i);

  // d0(a, beta) = (t(a), walk beta then a) - (s(a), walk a then beta),
  // dropping zero paths.
  slice.d0 = SparseIntMatrix(static_cast<int>(slice.q1b.size()), static_cast<int>(slice.q0b.size()));
  for (int i = 0; i < static_cast<int>(slice.q1b.size()); ++i) {
    const auto& [ap, beta] = slice.q1b[i];
    Path left = *concat(beta, ap);  // a·beta in composition order
    if (auto it = q0_index.find(left); it != q0_index.end()) slice.d0.add(i, it->second, 1);
    Path right = *concat(ap, beta);  // beta·a in composition order
    if (auto it = q0_index.find(right); it != q0_index.end()) slice.d0.add(i, it->second, -1);
  }

  // d1(xi, beta) = sum_i (a_i, complement of a_i in the cycle beta·xi).
  slice.d1 = SparseIntMatrix(static_cast<int>(slice.zb.size()), static_cast<int>(slice.q1b.size()));
  for (int i = 0; i < static_cast<int>(slice.zb.size()); ++i) {
    const auto& [xi, beta] = slice.zb[i];
    const int n = xi.length();
    for (int k = 0; k < n; ++k) {
      // walked complement: the rest of xi after a_k, then beta, then the
      // part of xi before a_k
      Path complement;
      complement.source = q.target(xi.arrows[k]);
      for (int t = k + 1; t < n; ++t) complement.arrows.push_back(xi.arrows[t]);
      complement.arrows.insert(complement.arrows.end(), beta.arrows.begin(), beta.arrows.end());
      for (int t = 0; t < k; ++t) complement.arrows.push_back(xi.arrows[t]);
      complement.target = complement.arrows.empty() ? complement.source
                                                    : q.target(complement.arrows.back());
      if (!b.contains(complement)) continue;  // zero summand
      slice.d1.add(i, q1_index.at(std::pair{xi.arrows[k], complement}), 1);
    }
  }
  return slice;
}

bool composes_to_zero(const ChainComplexSlice& slice) {
  for (int i = 0; i < slice.d1.rows(); ++i) {
    std::map<int, long long> image;
    for (const auto& e1 : slice.d1.row(i))
      for (const auto& e0 : slice.d0.row(e1.col)) image[e0.col] += e1.value * e0.value;
    for (const auto& [col, v] : image)
      if (v != 0) return false;
  }
  return true;
}

long hh1_homology_dim(const ChainComplexSlice& slice, ExactField f) {
  long kernel = static_cast<long>(slice.q1b.size()) - rank(slice.d0, f);
  return kernel - rank(slice.d1, f);
}

long center_dim(const ValidatedPresentation& vp, const PathBasis& b, ExactField f) {
  const Quiver& q = vp->quiver;
  // Unknowns x_beta.  Vertex constraints force the support onto cycles;
  // arrow constraints force xa = ax, one row per (arrow, coordinate path).
  std::vector<std::vector<IntEntry>> rows;
  for (int j = 0; j < b.size(); ++j)
    if (!b.path(j).is_cycle()) rows.push_back({IntEntry{j, 1}});

  std::map<std::pair<int, int>, int> row_index;  // (arrow, coordinate) -> row
  auto coord_row = [&](int arrow, int coordinate) {
    auto [it, inserted] = row_index.try_emplace({arrow, coordinate}, static_cast<int>(rows.size()));
    if (inserted) rows.emplace_back();
    return it->second;
  };
  for (int a = 0; a < q.num_arrows(); ++a) {
    Path ap = arrow_path(q, a);
    for (int j = 0; j < b.size(); ++j) {
      const Path& beta = b.path(j);
      if (beta.source == ap.target) {  // x·a walks a then beta
        if (auto idx = b.index_of(*concat(ap, beta)))
          rows[coord_row(a, *idx)].push_back(IntEntry{j, 1});
      }
      if (beta.target == ap.source) {  // a·x walks beta then a
        if (auto idx = b.index_of(*concat(beta, ap)))
          rows[coord_row(a, *idx)].push_back(IntEntry{j, -1});
      }
    }
  }
  SparseIntMatrix mat(static_cast<int>(rows.size()), b.size());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& e : rows[r]) mat.add(r, e.col, e.value);
  return b.size() - rank(mat, f);
}

long hh1_cohomology_dim(const ValidatedPresentation& vp, const PathBasis& b, ExactField f) {
  const Quiver& q = vp->quiver;

  // C^0: basis cycles.  C^1: (arrow, parallel basis path).  C^2: (relation
  // index, parallel basis path).
  std::vector<int> c0;  // basis indices of cycles
  for (int v = 0; v < q.num_vertices(); ++v)
    for (int j : b.with_endpoints(v, v)) c0.push_back(j);

  std::vector<std::pair<int, int>> c1;  // (arrow, basis index)
  std::map<std::pair<int, int>, int> c1_index;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int j : b.with_endpoints(q.source(a), q.target(a))) {
      c1_index.emplace(std::pair{a, j}, static_cast<int>(c1.size()));
      c1.emplace_back(a, j);
    }

  std::vector<std::pair<int, int>> c2;  // (relation index, basis index)
  std::map<std::pair<int, int>, int> c2_index;
  for (int r = 0; r < static_cast<int>(vp->relations.size()); ++r) {
    const Path& xi = vp->relations[r];
    for (int j : b.with_endpoints(xi.source, xi.target)) {
      c2_index.emplace(std::pair{r, j}, static_cast<int>(c2.size()));
      c2.emplace_back(r, j);
    }
  }

  // d^0(x)_a = a·x_{s(a)} - x_{t(a)}·a
  SparseIntMatrix d0(static_cast<int>(c0.size()), static_cast<int>(c1.size()));
  for (int i = 0; i < static_cast<int>(c0.size()); ++i) {
    const Path& cycle = b.path(c0[i]);
    for (int a = 0; a < q.num_arrows(); ++a) {
      Path ap = arrow_path(q, a);
      if (q.source(a) == cycle.source) {
        Path prod = *concat(cycle, ap);  // walk the cycle, then a
        if (auto idx = b.index_of(prod)) d0.add(i, c1_index.at({a, *idx}), 1);
      }
      if (q.target(a) == cycle.source) {
        Path prod = *concat(ap, cycle);  // walk a, then the cycle
        if (auto idx = b.index_of(prod)) d0.add(i, c1_index.at({a, *idx}), -1);
      }
    }
  }

  // d^1(f)_xi = sum over positions of xi: prefix · f(arrow) · suffix
  SparseIntMatrix d1(static_cast<int>(c1.size()), static_cast<int>(c2.size()));
  for (int i = 0; i < static_cast<int>(c1.size()); ++i) {
    const auto& [a, j] = c1[i];
    const Path& value = b.path(j);
    for (int r = 0; r < static_cast<int>(vp->relations.size()); ++r) {
      const Path& xi = vp->relations[r];
      for (int k = 0; k < xi.length(); ++k) {
        if (xi.arrows[k] != a) continue;
        Path assembled;
        assembled.source = xi.source;
        assembled.arrows.assign(xi.arrows.begin(), xi.arrows.begin() + k);
        assembled.arrows.insert(assembled.arrows.end(), value.arrows.begin(), value.arrows.end());
        assembled.arrows.insert(assembled.arrows.end(), xi.arrows.begin() + k + 1, xi.arrows.end());
        assembled.target = xi.target;
        if (auto idx = b.index_of(assembled)) d1.add(i, c2_index.at({r, *idx}), 1);
      }
    }
  }

  long kernel = static_cast<long>(c1.size()) - rank(d1, f);
  return kernel - rank(d0, f);
}

SparseIntMatrix bimodule_constraint_matrix(const ValidatedPresentation& vp, const PathBasis& b) {
  const Quiver& q = vp->quiver;
  const int n = b.size();
  auto unknown = [n](int gamma, int delta) { return gamma * n + delta; };

  std::vector<std::vector<IntEntry>> rows;
  auto row_of = [&](std::map<std::pair<long, long>, int>& index, long key1, long key2) -> int {
    auto [it, inserted] = index.try_emplace({key1, key2}, static_cast<int>(rows.size()));
    if (inserted) rows.emplace_back();
    return it->second;
  };

  // Vertex constraints: entry (gamma, delta) survives only on cyclic pairs.
  for (int g = 0; g < n; ++g)
    for (int d = 0; d < n; ++d) {
      const Path& gamma = b.path(g);
      const Path& delta = b.path(d);
      if (gamma.source != delta.target || gamma.target != delta.source) {
        rows.push_back({IntEntry{unknown(g, d), 1}});
      }
    }

  // Arrow constraints, one coordinate row per (side, arrow, gamma, epsilon).
  std::map<std::pair<long, long>, int> left_rows, right_rows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    Path ap = arrow_path(q, a);
    for (int g = 0; g < n; ++g) {
      const Path& gamma = b.path(g);

      // left action: phi(a·gamma*) = a·phi(gamma*)
      // a·gamma* = (gamma minus first walked arrow)* when gamma starts with a
      if (!gamma.trivial() && gamma.arrows.front() == a) {
        Path rest = subpath(q, gamma, 1, gamma.length() - 1);
        int rest_idx = *b.index_of(rest);
        for (int e = 0; e < n; ++e) {
          int r = row_of(left_rows, static_cast<long>(a) * n + g, e);
          rows[r].push_back(IntEntry{unknown(rest_idx, e), 1});
        }
      }
      // a·phi(gamma*): each delta with "walk delta then a" nonzero lands on
      // that product coordinate
      for (int d = 0; d < n; ++d) {
        const Path& delta = b.path(d);
        if (delta.target != q.source(a)) continue;
        Path prod = *concat(delta, ap);
        auto idx = b.index_of(prod);
        if (!idx) continue;
        int r = row_of(left_rows, static_cast<long>(a) * n + g, *idx);
        rows[r].push_back(IntEntry{unknown(g, d), -1});
      }

      // right action: phi(gamma*·a) = phi(gamma*)·a
      // gamma*·a = (gamma minus last walked arrow)* when gamma ends with a
      if (!gamma.trivial() && gamma.arrows.back() == a) {
        Path rest = subpath(q, gamma, 0, gamma.length() - 1);
        int rest_idx = *b.index_of(rest);
        for (int e = 0; e < n; ++e) {
          int r = row_of(right_rows, static_cast<long>(a) * n + g, e);
          rows[r].push_back(IntEntry{unknown(rest_idx, e), 1});
        }
      }
      for (int d = 0; d < n; ++d) {
        const Path& delta = b.path(d);
        if (delta.source != q.target(a)) continue;
        Path prod = *concat(ap, delta);  // walk a, then delta
        auto idx = b.index_of(prod);
        if (!idx) continue;
        int r = row_of(right_rows, static_cast<long>(a) * n + g, *idx);
        rows[r].push_back(IntEntry{unknown(g, d), -1});
      }
    }
  }

  SparseIntMatrix mat(static_cast<int>(rows.size()), n * n);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& e : rows[r]) mat.add(r, e.col, e.value);
  return mat;
}

HomAltDims hom_and_alt_dims(const ValidatedPresentation& vp, const PathBasis& b, ExactField f) {
  const int n = b.size();
  SparseIntMatrix constraints = bimodule_constraint_matrix(vp, b);

  HomAltDims dims;
  dims.hom = nullity(constraints, f);

  // Alt adds M + M^T = 0: the transpose is the matrix of phi* in the same
  // bases.
  int extra = n * (n + 1) / 2;
  SparseIntMatrix alt_sys(constraints.rows() + extra, n * n);
  for (int r = 0; r < constraints.rows(); ++r)
    for (const auto& e : constraints.row(r)) alt_sys.add(r, e.col, e.value);
  int row = constraints.rows();
  for (int g = 0; g < n; ++g)
    for (int d = g; d < n; ++d) {
      alt_sys.add(row, g * n + d, 1);
      alt_sys.add(row, d * n + g, 1);  // g == d accumulates to 2
      ++row;
    }
  dims.alt = nullity(alt_sys, f);
  return dims;
}

}  // namespace qhh
