#include "qhh/linalg.hpp"

#include <algorithm>
#include <utility>

#include <gmpxx.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhh {

ExactField ExactField::prime(long p) {
  if (p < 2) throw ValidationError("field characteristic must be a prime, got " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw ValidationError("field characteristic must be a prime, got " + std::to_string(p));
  return ExactField{p};
}

void SparseIntMatrix::add(int row, int col, long long value) {
  if (value == 0) return;
  if (dirty_.empty()) dirty_.assign(rows_, false);
  data_[row].push_back(IntEntry{col, value});
  dirty_[row] = true;
}

void SparseIntMatrix::normalize(int r) const {
  auto& row = data_[r];
  std::sort(row.begin(), row.end(), [](const IntEntry& a, const IntEntry& b) { return a.col < b.col; });
  std::vector<IntEntry> merged;
  for (const auto& e : row) {
    if (!merged.empty() && merged.back().col == e.col)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const IntEntry& e) { return e.value == 0; });
  row = std::move(merged);
  dirty_[r] = false;
}

std::span<const IntEntry> SparseIntMatrix::row(int r) const {
  if (!dirty_.empty() && dirty_[r]) normalize(r);
  return data_[r];
}

long long SparseIntMatrix::entry(int r, int c) const {
  for (const auto& e : row(r))
    if (e.col == c) return e.value;
  return 0;
}

long long SparseIntMatrix::nonzeros() const {
  long long n = 0;
  for (int r = 0; r < rows_; ++r) n += static_cast<long long>(row(r).size());
  return n;
}

namespace {

// ---- field kernels ---------------------------------------------------------
//
// Both eliminations walk the columns left to right, keeping the still-active
// rows bucketed by leading column.  Processing column c picks the sparsest
// row of bucket c as pivot and cancels the leading entry of every other row
// in the bucket; surviving rows fall into strictly later buckets, so the
// sweep terminates with one pivot per independent row.

struct GfpRow {
  std::vector<std::pair<int, unsigned long>> entries;  // sorted by col, values in (0, p)
};

unsigned long gfp_inv(unsigned long a, unsigned long p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<unsigned long>(t);
}

// target -= factor * pivot, where factor kills the shared leading column;
// scratch keeps its capacity across calls so steady-state runs allocation-free
void gfp_eliminate(GfpRow& target, const GfpRow& pivot, unsigned long p, GfpRow& scratch) {
  unsigned long factor =
      target.entries.front().second * gfp_inv(pivot.entries.front().second, p) % p;
  auto& out = scratch.entries;
  out.clear();
  out.reserve(target.entries.size() + pivot.entries.size());
  std::size_t i = 0, j = 0;
  while (i < target.entries.size() || j < pivot.entries.size()) {
    if (j == pivot.entries.size() ||
        (i < target.entries.size() && target.entries[i].first < pivot.entries[j].first)) {
      out.push_back(target.entries[i++]);
    } else if (i == target.entries.size() || pivot.entries[j].first < target.entries[i].first) {
      unsigned long v = (p - factor * pivot.entries[j].second % p) % p;
      if (v != 0) out.emplace_back(pivot.entries[j].first, v);
      ++j;
    } else {
      unsigned long v = (target.entries[i].second + p - factor * pivot.entries[j].second % p) % p;
      if (v != 0) out.emplace_back(target.entries[i].first, v);
      ++i;
      ++j;
    }
  }
  std::swap(target.entries, scratch.entries);
}

struct IntRow {
  std::vector<std::pair<int, mpz_class>> entries;  // sorted by col
};

void int_normalize_content(IntRow& row) {
  if (row.entries.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row.entries) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.entries.front().second) < 0) g = -g;
  if (g != 1 && g != 0)
    for (auto& [c, v] : row.entries) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target := pivot_lead * target - target_lead * pivot, then content-reduced;
// stays in integers, no rationals anywhere
void int_eliminate(IntRow& target, const IntRow& pivot, IntRow& scratch) {
  const mpz_class a = pivot.entries.front().second;
  const mpz_class b = target.entries.front().second;
  auto& out = scratch.entries;
  out.clear();
  out.reserve(target.entries.size() + pivot.entries.size());
  std::size_t i = 0, j = 0;
  while (i < target.entries.size() || j < pivot.entries.size()) {
    if (j == pivot.entries.size() ||
        (i < target.entries.size() && target.entries[i].first < pivot.entries[j].first)) {
      out.emplace_back(target.entries[i].first, a * target.entries[i].second);
      ++i;
    } else if (i == target.entries.size() || pivot.entries[j].first < target.entries[i].first) {
      out.emplace_back(pivot.entries[j].first, -b * pivot.entries[j].second);
      ++j;
    } else {
      mpz_class v = a * target.entries[i].second - b * pivot.entries[j].second;
      if (v != 0) out.emplace_back(target.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  std::swap(target.entries, scratch.entries);
  int_normalize_content(target);
}

template <class Row>
int leading_col(const Row& r) {
  return r.entries.front().first;
}

// Shared sweep.  Eliminate is (target, pivot, scratch) -> void; the parallel
// flag gates the OpenMP loop over a bucket, with one scratch row per thread.
template <class Row, class Eliminate>
long eliminate_sweep(std::vector<Row>&& rows, int ncols, Eliminate&& eliminate, bool parallel) {
  std::vector<std::vector<int>> buckets(ncols);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    if (!rows[i].entries.empty()) buckets[leading_col(rows[i])].push_back(i);

  int nthreads = 1;
#ifdef _OPENMP
  if (parallel) nthreads = omp_get_max_threads();
#endif
  std::vector<Row> scratch(nthreads);

  long rank = 0;
  for (int col = 0; col < ncols; ++col) {
    auto& bucket = buckets[col];
    if (bucket.empty()) continue;
    int pivot = bucket[0];
    for (int id : bucket)
      if (rows[id].entries.size() < rows[pivot].entries.size() ||
          (rows[id].entries.size() == rows[pivot].entries.size() && id < pivot))
        pivot = id;
    ++rank;

    std::vector<int> rest;
    rest.reserve(bucket.size() - 1);
    for (int id : bucket)
      if (id != pivot) rest.push_back(id);
    bucket.clear();

#ifdef _OPENMP
    if (parallel && rest.size() >= 48) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::size_t k = 0; k < rest.size(); ++k)
        eliminate(rows[rest[k]], rows[pivot], scratch[omp_get_thread_num()]);
    } else {
      for (int id : rest) eliminate(rows[id], rows[pivot], scratch[0]);
    }
#else
    (void)parallel;
    for (int id : rest) eliminate(rows[id], rows[pivot], scratch[0]);
#endif

    for (int id : rest) {
      if (rows[id].entries.empty()) continue;
      buckets[leading_col(rows[id])].push_back(id);
    }
    rows[pivot].entries.clear();
    rows[pivot].entries.shrink_to_fit();
  }
  return rank;
}

long rank_gfp(const SparseIntMatrix& m, long p, bool parallel) {
  const unsigned long up = static_cast<unsigned long>(p);
  std::vector<GfpRow> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      long long v = e.value % p;
      if (v < 0) v += p;
      if (v != 0) rows[r].entries.emplace_back(e.col, static_cast<unsigned long>(v));
    }
  }
  return eliminate_sweep(
      std::move(rows), m.cols(),
      [up](GfpRow& target, const GfpRow& pivot, GfpRow& scratch) {
        gfp_eliminate(target, pivot, up, scratch);
      },
      parallel);
}

long rank_int(const SparseIntMatrix& m, bool parallel) {
  std::vector<IntRow> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r))
      rows[r].entries.emplace_back(e.col, mpz_class(static_cast<long>(e.value)));
    int_normalize_content(rows[r]);
  }
  return eliminate_sweep(
      std::move(rows), m.cols(),
      [](IntRow& target, const IntRow& pivot, IntRow& scratch) {
        int_eliminate(target, pivot, scratch);
      },
      parallel);
}

}  // namespace

long rank_serial(const SparseIntMatrix& m, ExactField f) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return f.characteristic == 0 ? rank_int(m, false) : rank_gfp(m, f.characteristic, false);
}

long rank_parallel(const SparseIntMatrix& m, ExactField f) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return f.characteristic == 0 ? rank_int(m, true) : rank_gfp(m, f.characteristic, true);
}

long rank(const SparseIntMatrix& m, ExactField f) {
#ifdef _OPENMP
  // the modular kernel scales with threads; the big-integer one is bound by
  // limb allocation, so it stays on the reference path
  if (f.characteristic > 0 && m.rows() >= 512 && omp_get_max_threads() > 1 &&
      m.nonzeros() >= 4096)
    return rank_parallel(m, f);
#endif
  return rank_serial(m, f);
}

long nullity(const SparseIntMatrix& m, ExactField f) { return m.cols() - rank(m, f); }

}  // namespace qhh
