// Exact linear algebra over arbitrary-precision rationals and integers.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlie {

using BigInt = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rational& c, const RatVec& a);
bool vec_is_zero(const RatVec& a);

// Canonical byte encodings used as set keys during orbit/group enumeration.
std::string vec_key(const RatVec& v);
std::string mat_key(const RatMat& m);

RatMat mat_identity(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& m, const RatVec& v);
bool mat_equal(const RatMat& a, const RatMat& b);

struct RrefResult {
  RatMat mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(RatMat m);

// One solution of A x = b with free variables set to zero; nullopt if
// inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Inverse of a square matrix; throws std::invalid_argument if singular.
RatMat mat_inverse(const RatMat& a);

// Basis of { x : A x = 0 }.
std::vector<RatVec> nullspace(const RatMat& a);

// Incremental exact rank of a sparse integer matrix. Rows are reduced
// against a growing echelon basis with fraction-free updates; rows are kept
// primitive (content 1) so coefficients stay small.
class SparseRankAccumulator {
 public:
  // Sorted by column index, all coefficients nonzero.
  using Row = std::vector<std::pair<int, BigInt>>;

  // Returns true if the row was independent of the rows seen so far.
  bool add(Row row);

  // Clears denominators and adds; zero entries are skipped.
  bool add_rational(const std::map<int, Rational>& row);

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<int, Row> pivots_;  // leading column -> echelon row
  static void normalize(Row& row);
};

}  // namespace qlie
