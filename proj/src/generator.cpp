#include "qhh/generator.hpp"

#include <algorithm>
#include <numeric>

#include "qhh/basis.hpp"

namespace qhh {

namespace {

std::string vertex_name(int i) { return "v" + std::to_string(i); }
std::string arrow_name(int i) { return "a" + std::to_string(i); }

// all paths of length in [2, max_len], walked from every vertex
std::vector<Path> short_paths(const Quiver& q, int max_len) {
  std::vector<std::vector<int>> out_arrows(q.num_vertices());
  for (int a = 0; a < q.num_arrows(); ++a) out_arrows[q.source(a)].push_back(a);

  std::vector<Path> all;
  std::vector<Path> frontier;
  for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back(arrow_path(q, a));
  for (int len = 2; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a : out_arrows[p.target]) {
        next.push_back(*concat(p, arrow_path(q, a)));
        all.push_back(next.back());
      }
    frontier = std::move(next);
  }
  return all;
}

// drop duplicates and any candidate containing another candidate
std::vector<Path> minimalize(std::vector<Path> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Path> kept;
  for (const auto& c : candidates) {
    bool contains_kept = false;
    for (const auto& k : kept)
      if (contains_subpath(c, k)) {
        contains_kept = true;
        break;
      }
    if (!contains_kept) kept.push_back(c);
  }
  return kept;
}

}  // namespace

PresentationGenerator::PresentationGenerator(GenConfig cfg) : cfg_(cfg), rng_(cfg.seed) {}

ValidatedPresentation PresentationGenerator::next() {
  auto pick = [this](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  };
  auto chance = [this](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  };

  for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
    Presentation p;
    p.name = "gen" + std::to_string(cfg_.seed) + "_" + std::to_string(counter_);

    int nv = pick(1, cfg_.max_vertices);
    for (int v = 0; v < nv; ++v) p.quiver.add_vertex(vertex_name(v));
    int na = pick(1, cfg_.max_arrows);
    int next_arrow = 0;
    // a ring first, most of the time, so cycles and the circuits over them
    // actually occur
    if (chance(0.7)) {
      int ring = std::min(na, nv);
      for (int i = 0; i < ring; ++i)
        p.quiver.add_arrow(arrow_name(next_arrow++), i, (i + 1) % ring);
    }
    while (p.quiver.num_arrows() < na) {
      int s = pick(0, nv - 1);
      int t = chance(0.25) ? s : pick(0, nv - 1);
      p.quiver.add_arrow(arrow_name(next_arrow++), s, t);
    }

    // candidate relations: random walks, biased short
    std::vector<std::vector<int>> out_arrows(nv);
    for (int a = 0; a < p.quiver.num_arrows(); ++a) out_arrows[p.quiver.source(a)].push_back(a);
    std::vector<Path> candidates;
    int walks = pick(1, 2 * cfg_.max_arrows);
    for (int w = 0; w < walks; ++w) {
      if (!chance(cfg_.relation_density)) continue;
      int start = pick(0, p.quiver.num_arrows() - 1);
      Path path = arrow_path(p.quiver, start);
      int len = pick(2, cfg_.max_relation_length);
      bool ok = true;
      while (path.length() < len) {
        const auto& outs = out_arrows[path.target];
        if (outs.empty()) {
          ok = false;
          break;
        }
        path = *concat(path, arrow_path(p.quiver, outs[pick(0, static_cast<int>(outs.size()) - 1)]));
      }
      if (ok && path.length() >= 2) candidates.push_back(std::move(path));
    }
    p.relations = minimalize(std::move(candidates));

    ValidatedPresentation vp = validate(std::move(p));
    if (!cfg_.require_finite || is_finite_dimensional(build_automaton(vp))) {
      ++counter_;
      return vp;
    }
  }

  // attempt budget exhausted: fall back to a 2-nilpotent instance, which is
  // always finite-dimensional
  Presentation p;
  p.name = "gen" + std::to_string(cfg_.seed) + "_" + std::to_string(counter_) + "_nilpotent";
  int nv = pick(1, cfg_.max_vertices);
  for (int v = 0; v < nv; ++v) p.quiver.add_vertex(vertex_name(v));
  int na = std::min(cfg_.max_arrows, nv + 1);
  for (int i = 0; i < na; ++i) p.quiver.add_arrow(arrow_name(i), i % nv, (i + 1) % nv);
  p.relations = minimalize(short_paths(p.quiver, 2));
  ++counter_;
  return validate(std::move(p));
}

std::vector<ValidatedPresentation> exhaustive_presentations(const Presentation& quiver_only,
                                                            int max_len, bool require_finite,
                                                            std::size_t pool_cap) {
  std::vector<Path> pool = short_paths(quiver_only.quiver, max_len);
  std::sort(pool.begin(), pool.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.size() > pool_cap)
    throw ValidationError("exhaustive_presentations: candidate pool of " +
                          std::to_string(pool.size()) + " paths exceeds the cap of " +
                          std::to_string(pool_cap));

  std::vector<ValidatedPresentation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    Presentation p;
    p.name = quiver_only.name + "_z" + std::to_string(mask);
    p.quiver = quiver_only.quiver;
    bool antichain = true;
    for (std::size_t i = 0; i < pool.size() && antichain; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < pool.size() && antichain; ++j)
        if (j != i && (mask >> j & 1) && contains_subpath(pool[i], pool[j])) antichain = false;
      p.relations.push_back(pool[i]);
    }
    if (!antichain) continue;
    ValidatedPresentation vp = validate(std::move(p));
    if (require_finite && !is_finite_dimensional(build_automaton(vp))) continue;
    out.push_back(std::move(vp));
  }
  return out;
}

ValidatedPresentation random_tree_presentation(std::mt19937_64& rng, int max_vertices,
                                               int max_relation_length) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Presentation p;
  p.name = "tree";
  int nv = pick(2, std::max(2, max_vertices));
  for (int v = 0; v < nv; ++v) p.quiver.add_vertex(vertex_name(v));
  for (int v = 1; v < nv; ++v) {
    int other = pick(0, v - 1);
    if (pick(0, 1))
      p.quiver.add_arrow(arrow_name(v - 1), other, v);
    else
      p.quiver.add_arrow(arrow_name(v - 1), v, other);
  }
  std::vector<Path> candidates = short_paths(p.quiver, max_relation_length);
  std::vector<Path> sampled;
  for (const auto& c : candidates)
    if (pick(0, 3) == 0) sampled.push_back(c);
  p.relations = minimalize(std::move(sampled));
  return validate(std::move(p));
}

ValidatedPresentation two_nilpotent(const Presentation& quiver_only) {
  Presentation p;
  p.name = quiver_only.name.empty() ? "nilpotent" : quiver_only.name + "_nilpotent";
  p.quiver = quiver_only.quiver;
  p.relations = short_paths(p.quiver, 2);
  return validate(std::move(p));
}

ValidatedPresentation crown_presentation(int n, int m) {
  Presentation p;
  p.name = "crown_" + std::to_string(n) + "_" + std::to_string(m);
  for (int v = 0; v < n; ++v) p.quiver.add_vertex(std::to_string(v));
  for (int a = 0; a < n; ++a) p.quiver.add_arrow("a" + std::to_string(a), a, (a + 1) % n);

  // the relation a_0 γ^{m-1}: walk the full cycle at 0 m-1 times, then a_0
  Path rel;
  rel.source = 0;
  for (int rep = 0; rep < m - 1; ++rep)
    for (int a = 0; a < n; ++a) rel.arrows.push_back(a);
  rel.arrows.push_back(0);
  rel.target = 1 % n;
  p.relations.push_back(std::move(rel));
  return validate(std::move(p));
}

void CoverageCounters::observe(const CircuitCensus& census, const NeatClassTable& table) {
  ++total;
  if (census.strong_count > 0) ++strong_pos;
  if (census.efficient_count > 0) ++efficient_pos;
  for (long p : {2L, 3L, 5L})
    if (census.efficient_pprime_count(p) != census.efficient_count) {
      ++char_dependent;
      break;
    }
  if (table.sym > 0) ++sym_pos;
}

}  // namespace qhh
