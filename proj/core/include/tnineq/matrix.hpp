#pragma once

#include <cstdint>
#include <vector>

#include "tnineq/det_expr.hpp"
#include "tnineq/index_set.hpp"
#include "tnineq/rational.hpp"

namespace tnineq {

/// Dense square matrix of exact rationals, 1-based accessors.
class Matrix {
 public:
  explicit Matrix(int n);
  Matrix(int n, std::vector<Scalar> row_major_entries);

  static Matrix identity(int n);

  int n() const { return n_; }
  const Scalar& operator()(int i, int j) const;
  Scalar& operator()(int i, int j);
  const std::vector<Scalar>& entries() const { return a_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<Scalar> a_;  // row-major
};

/// One factor of a bidiagonal factorization: I + w*E_{k+1,k} (lower),
/// I + w*E_{k,k+1} (upper), or a positive diagonal.
struct BidiagFactor {
  enum class Kind { Lower, Upper, Diag };

  Kind kind = Kind::Diag;
  int k = 0;          // subdiagonal position for Lower/Upper, in [1, n-1]
  Scalar weight;      // >= 0 for Lower/Upper
  std::vector<Scalar> diag;  // strictly positive entries for Diag

  static BidiagFactor lower(int k, Scalar w);
  static BidiagFactor upper(int k, Scalar w);
  static BidiagFactor diagonal(std::vector<Scalar> d);
};

/// Ordered factor list with all lower factors first, then exactly one
/// diagonal, then all upper factors. Sub-products of the full layout are
/// permitted.
class BidiagFactorization {
 public:
  BidiagFactorization(int n, std::vector<BidiagFactor> factors);

  int n() const { return n_; }
  const std::vector<BidiagFactor>& factors() const { return factors_; }

 private:
  int n_ = 0;
  std::vector<BidiagFactor> factors_;
};

/// Exact product of the factors in the given order. The result is totally
/// nonnegative and, since diagonal entries are positive, nonsingular.
Matrix compose(const BidiagFactorization& f);

/// det A(I|J) by fraction-free (Bareiss) elimination with row-swap pivoting.
/// Empty index sets give 1.
Scalar minor(const Matrix& A, const IndexSet& I, const IndexSet& J);

/// Independent route: recursive cofactor expansion along the first row.
Scalar minor_cofactor(const Matrix& A, const IndexSet& I, const IndexSet& J);

Scalar determinant(const Matrix& A);

/// adj A, with cofactor signs; A * adj A = det(A) * I exactly.
Matrix adjugate(const Matrix& A);

/// A o (adj A)^T - det(A) * I  (entrywise product). Rows sum to zero.
Matrix a_star(const Matrix& A);

/// Exact value of the expression at A (sum over terms of coeff times the
/// product of its minors). Distinct minors are evaluated once per call.
Scalar evaluate(const DetExpr& e, const Matrix& A);

/// Deterministic-in-seed full factorization layout with integer weights in
/// {0,...,weight_bound} ({1,...,weight_bound} when positive_weights is set)
/// and diagonal entries in {1,...,weight_bound}.
BidiagFactorization sample_factorization(int n, std::uint64_t seed,
                                         int weight_bound,
                                         bool positive_weights = false);

/// Random integer matrix with entries in [-bound, bound]; not TN in general.
Matrix sample_integer_matrix(int n, std::uint64_t seed, int bound);

/// Checks every minor for nonnegativity. Refuses n > 8.
bool is_tn_bruteforce(const Matrix& A);

/// Verifies det((I + w*E_{uv})A)(I|J) against det A(I|J) + w*det A(I(u,v)|J)
/// when u in I, v not in I, and against det A(I|J) otherwise.
bool elementary_shift_identity_check(const Matrix& A, int u, int v,
                                     const Scalar& w, const IndexSet& I,
                                     const IndexSet& J);

}  // namespace tnineq
