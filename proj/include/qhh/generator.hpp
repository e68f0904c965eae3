#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qhh/alt.hpp"
#include "qhh/circuits.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

struct GenConfig {
  int max_vertices = 4;
  int max_arrows = 6;
  int max_relation_length = 4;
  double relation_density = 0.5;
  std::uint64_t seed = 0;
  bool require_finite = true;
  int max_attempts = 400;
};

// Random valid presentations, deterministic per seed.  Sampling is biased
// toward short cycles plus cycle-killing relations so strong and efficient
// circuits actually occur; minimality is enforced by dropping any candidate
// relation that contains another; finiteness by rejection, with a 2-nilpotent
// fallback once the attempt budget runs out.
class PresentationGenerator {
 public:
  explicit PresentationGenerator(GenConfig cfg);
  ValidatedPresentation next();

 private:
  GenConfig cfg_;
  std::mt19937_64 rng_;
  long counter_ = 0;
};

// Every presentation over the given quiver whose relation set is a minimal
// antichain drawn from the paths of length 2..max_len.  The candidate pool is
// capped; exceeding it throws ValidationError.
std::vector<ValidatedPresentation> exhaustive_presentations(const Presentation& quiver_only,
                                                            int max_len, bool require_finite,
                                                            std::size_t pool_cap = 20);

// Random orientation of a random tree on 2..max_vertices vertices, with a few
// random relations when long enough paths exist.
ValidatedPresentation random_tree_presentation(std::mt19937_64& rng, int max_vertices,
                                               int max_relation_length);

// Z = all paths of length two.
ValidatedPresentation two_nilpotent(const Presentation& quiver_only);

// Crown on Z_n with the single relation a_0 γ^{m-1}, γ the full cycle at 0.
ValidatedPresentation crown_presentation(int n, int m);

// Buckets the test suites require to be nonempty over a default run.
struct CoverageCounters {
  long total = 0;
  long strong_pos = 0;      // s > 0
  long efficient_pos = 0;   // e > 0
  long char_dependent = 0;  // e != e_{p'} for some p in {2, 3, 5}
  long sym_pos = 0;         // sym > 0

  void observe(const CircuitCensus& census, const NeatClassTable& table);
};

}  // namespace qhh
