#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

// 0 or a prime.  Every matrix handed to rank() has integer entries, so its
// rank over any field of a given characteristic equals the rank over the
// prime field: exact rationals for 0, Z/p otherwise.
struct ExactField {
  long characteristic = 0;

  static ExactField rationals() { return {0}; }
  static ExactField prime(long p);  // throws ValidationError unless prime
};

struct IntEntry {
  int col;
  long long value;
};

// Integer matrix, sparse rows.  add() accumulates; rows are normalized
// (sorted, zero-free) lazily on first read, so share a matrix across threads
// only after touching every row once.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void add(int row, int col, long long value);
  std::span<const IntEntry> row(int r) const;
  long long entry(int r, int c) const;
  long long nonzeros() const;

 private:
  void normalize(int r) const;
  int rows_ = 0;
  int cols_ = 0;
  mutable std::vector<std::vector<IntEntry>> data_;
  mutable std::vector<bool> dirty_;
};

// Exact rank.  Characteristic p runs modular elimination; characteristic 0
// runs integer-preserving elimination (cross-multiplied row updates with
// content normalization) over arbitrary-precision integers, so there is no
// floating point and no rational blowup anywhere.
//
// rank_serial is the reference kernel; rank_parallel eliminates each pivot
// column's rows with OpenMP.  rank() picks between them by problem size.
long rank(const SparseIntMatrix& m, ExactField f);
long rank_serial(const SparseIntMatrix& m, ExactField f);
long rank_parallel(const SparseIntMatrix& m, ExactField f);

long nullity(const SparseIntMatrix& m, ExactField f);

}  // namespace qhh
