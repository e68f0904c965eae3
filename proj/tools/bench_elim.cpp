// Times the serial elimination kernel against the OpenMP one, on synthetic
// sparse matrices and on the bimodule constraint system of a crown algebra.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qhh/generator.hpp"
#include "qhh/linalg.hpp"
#include "qhh/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

qhh::SparseIntMatrix random_matrix(int rows, int cols, int per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> col(0, cols - 1);
  std::uniform_int_distribution<long long> val(-3, 3);
  qhh::SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < per_row; ++k) {
      long long v = val(rng);
      if (v != 0) m.add(r, col(rng), v);
    }
  return m;
}

void bench_one(const std::string& label, const qhh::SparseIntMatrix& m, qhh::ExactField f,
               int trials) {
  double serial_ms = 0, parallel_ms = 0;
  long rank_s = 0, rank_p = 0;
  for (int t = 0; t < trials; ++t) {
    auto start = Clock::now();
    rank_s = qhh::rank_serial(m, f);
    serial_ms += ms_since(start);
    start = Clock::now();
    rank_p = qhh::rank_parallel(m, f);
    parallel_ms += ms_since(start);
  }
  serial_ms /= trials;
  parallel_ms /= trials;
  if (rank_s != rank_p) {
    std::cerr << label << ": RANK MISMATCH serial=" << rank_s << " parallel=" << rank_p << "\n";
    std::exit(1);
  }
  std::cout << label << ": rank " << rank_s << ", serial " << serial_ms << " ms, parallel "
            << parallel_ms << " ms, speedup " << serial_ms / parallel_ms << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  // random exact elimination densifies quickly, so default sizes stay modest
  int rows = 1500, cols = 1200, per_row = 4, trials = 3;
  int crown_n = 4, crown_m = 4;
  std::uint64_t seed = 1;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    long value = std::stol(argv[i + 1]);
    if (key == "--rows") rows = static_cast<int>(value);
    else if (key == "--cols") cols = static_cast<int>(value);
    else if (key == "--fill") per_row = static_cast<int>(value);
    else if (key == "--trials") trials = static_cast<int>(value);
    else if (key == "--seed") seed = static_cast<std::uint64_t>(value);
    else if (key == "--crown-n") crown_n = static_cast<int>(value);
    else if (key == "--crown-m") crown_m = static_cast<int>(value);
    else {
      std::cerr << "unknown option " << key << "\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP: the parallel kernel runs serially\n";
#endif

  auto m = random_matrix(rows, cols, per_row, seed);
  std::cout << "random " << rows << "x" << cols << ", " << m.nonzeros() << " nonzeros\n";
  bench_one("  GF(32003)", m, qhh::ExactField::prime(32003), trials);
  bench_one("  GF(2)", m, qhh::ExactField::prime(2), trials);
  bench_one("  char 0", m, qhh::ExactField::rationals(), trials);

  auto crown = qhh::crown_presentation(crown_n, crown_m);
  auto basis = qhh::enumerate_basis(crown);
  auto constraints = qhh::bimodule_constraint_matrix(crown, basis);
  std::cout << "crown(" << crown_n << "," << crown_m << ") bimodule system: "
            << constraints.rows() << "x" << constraints.cols() << ", " << constraints.nonzeros()
            << " nonzeros\n";
  bench_one("  GF(5)", constraints, qhh::ExactField::prime(5), trials);
  bench_one("  char 0", constraints, qhh::ExactField::rationals(), trials);
  return 0;
}
