#include "tnineq/matrix.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace tnineq {

Matrix::Matrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n, Scalar(0));
}

Matrix::Matrix(int n, std::vector<Scalar> row_major_entries)
    : n_(n), a_(std::move(row_major_entries)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("entry count does not match dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

const Scalar& Matrix::operator()(int i, int j) const {
  return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

Scalar& Matrix::operator()(int i, int j) {
  return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

BidiagFactor BidiagFactor::lower(int k, Scalar w) {
  BidiagFactor f;
  f.kind = Kind::Lower;
  f.k = k;
  f.weight = std::move(w);
  return f;
}

BidiagFactor BidiagFactor::upper(int k, Scalar w) {
  BidiagFactor f;
  f.kind = Kind::Upper;
  f.k = k;
  f.weight = std::move(w);
  return f;
}

BidiagFactor BidiagFactor::diagonal(std::vector<Scalar> d) {
  BidiagFactor f;
  f.kind = Kind::Diag;
  f.diag = std::move(d);
  return f;
}

BidiagFactorization::BidiagFactorization(int n, std::vector<BidiagFactor> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n < 1) throw std::invalid_argument("factorization dimension must be >= 1");
  int diag_count = 0;
  bool seen_diag = false;
  bool seen_upper = false;
  for (const BidiagFactor& f : factors_) {
    switch (f.kind) {
      case BidiagFactor::Kind::Lower:
        if (seen_diag || seen_upper)
          throw std::invalid_argument("lower factors must precede the diagonal");
        if (f.k < 1 || f.k > n - 1)
          throw std::invalid_argument("lower factor position out of range");
        if (f.weight < 0)
          throw std::invalid_argument("factor weights must be nonnegative");
        break;
      case BidiagFactor::Kind::Upper:
        if (!seen_diag)
          throw std::invalid_argument("upper factors must follow the diagonal");
        seen_upper = true;
        if (f.k < 1 || f.k > n - 1)
          throw std::invalid_argument("upper factor position out of range");
        if (f.weight < 0)
          throw std::invalid_argument("factor weights must be nonnegative");
        break;
      case BidiagFactor::Kind::Diag:
        ++diag_count;
        seen_diag = true;
        if (static_cast<int>(f.diag.size()) != n)
          throw std::invalid_argument("diagonal length does not match dimension");
        for (const Scalar& d : f.diag)
          if (d <= 0)
            throw std::invalid_argument("diagonal entries must be positive");
        break;
    }
  }
  if (diag_count != 1)
    throw std::invalid_argument("factorization must contain exactly one diagonal");
}

Matrix compose(const BidiagFactorization& f) {
  const int n = f.n();
  Matrix m = Matrix::identity(n);
  // Right-multiply factor by factor: (M * (I + w E_{uv})) adds w * col_u to
  // col_v; a diagonal factor scales columns.
  for (const BidiagFactor& factor : f.factors()) {
    switch (factor.kind) {
      case BidiagFactor::Kind::Lower:
        if (factor.weight != 0)
          for (int i = 1; i <= n; ++i)
            m(i, factor.k) += factor.weight * m(i, factor.k + 1);
        break;
      case BidiagFactor::Kind::Upper:
        if (factor.weight != 0)
          for (int i = 1; i <= n; ++i)
            m(i, factor.k + 1) += factor.weight * m(i, factor.k);
        break;
      case BidiagFactor::Kind::Diag:
        for (int j = 1; j <= n; ++j)
          for (int i = 1; i <= n; ++i) m(i, j) *= factor.diag[j - 1];
        break;
    }
  }
  return m;
}

namespace {

void check_minor_args(const Matrix& A, const IndexSet& I, const IndexSet& J) {
  if (I.ambient() != A.n() || J.ambient() != A.n())
    throw std::invalid_argument("index set ambient differs from matrix size");
  if (I.size() != J.size())
    throw std::invalid_argument("minor requires |rows| = |cols|");
}

Scalar bareiss_det(std::vector<Scalar>& m, int k) {
  // Fraction-free elimination; zero pivots resolved by row swaps with sign
  // tracking, a fully zero pivot column short-circuits to 0.
  auto at = [&](int i, int j) -> Scalar& { return m[static_cast<std::size_t>(i) * k + j]; };
  int sign = 1;
  Scalar prev(1);
  for (int col = 0; col < k - 1; ++col) {
    if (at(col, col) == 0) {
      int pivot_row = -1;
      for (int r = col + 1; r < k; ++r) {
        if (at(r, col) != 0) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row < 0) return Scalar(0);
      for (int j = 0; j < k; ++j) std::swap(at(col, j), at(pivot_row, j));
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r) {
      for (int j = col + 1; j < k; ++j)
        at(r, j) = (at(r, j) * at(col, col) - at(r, col) * at(col, j)) / prev;
      at(r, col) = 0;
    }
    prev = at(col, col);
  }
  return sign > 0 ? at(k - 1, k - 1) : Scalar(-at(k - 1, k - 1));
}

}  // namespace

Scalar minor(const Matrix& A, const IndexSet& I, const IndexSet& J) {
  check_minor_args(A, I, J);
  const int k = I.size();
  if (k == 0) return Scalar(1);
  const std::vector<int> rows = I.elements();
  const std::vector<int> cols = J.elements();
  std::vector<Scalar> sub;
  sub.reserve(static_cast<std::size_t>(k) * k);
  for (int r : rows)
    for (int c : cols) sub.push_back(A(r, c));
  return bareiss_det(sub, k);
}

Scalar minor_cofactor(const Matrix& A, const IndexSet& I, const IndexSet& J) {
  check_minor_args(A, I, J);
  const int k = I.size();
  if (k == 0) return Scalar(1);
  const std::vector<int> rows = I.elements();
  if (k == 1) return A(rows[0], J.elements()[0]);
  Scalar total(0);
  const IndexSet rest_rows = I.erased(rows[0]);
  int sign = 1;
  for (int c : J.elements()) {
    if (A(rows[0], c) != 0)
      total += Scalar(sign) * A(rows[0], c) * minor_cofactor(A, rest_rows, J.erased(c));
    sign = -sign;
  }
  return total;
}

Scalar determinant(const Matrix& A) {
  const IndexSet all = IndexSet::full(A.n());
  return minor(A, all, all);
}

Matrix adjugate(const Matrix& A) {
  const int n = A.n();
  Matrix adj(n);
  if (n == 1) {
    adj(1, 1) = 1;
    return adj;
  }
  const IndexSet all = IndexSet::full(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Scalar cof = minor(A, all.erased(j), all.erased(i));
      adj(i, j) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

Matrix a_star(const Matrix& A) {
  const int n = A.n();
  const Matrix adj = adjugate(A);
  const Scalar det = determinant(A);
  Matrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      out(i, j) = A(i, j) * adj(j, i);
      if (i == j) out(i, j) -= det;
    }
  return out;
}

Scalar evaluate(const DetExpr& e, const Matrix& A) {
  if (e.ambient() != A.n())
    throw std::invalid_argument("expression ambient differs from matrix size");
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Scalar, PairHash>
      cache;
  Scalar total(0);
  for (const Term& t : e.terms()) {
    Scalar prod = t.coeff;
    for (const Minor& m : t.minors) {
      const auto key = std::make_pair(m.rows.mask(), m.cols.mask());
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, minor(A, m.rows, m.cols)).first;
      prod *= it->second;
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

BidiagFactorization sample_factorization(int n, std::uint64_t seed,
                                         int weight_bound,
                                         bool positive_weights) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (weight_bound < 1) throw std::invalid_argument("weight bound must be >= 1");
  std::mt19937_64 rng(seed);
  const int lo = positive_weights ? 1 : 0;
  std::uniform_int_distribution<int> weight(lo, weight_bound);
  std::uniform_int_distribution<int> diag(1, weight_bound);

  // Full elementary bidiagonal layout, the upper half mirroring the lower so
  // that all-positive weights parametrize the totally positive matrices.
  std::vector<BidiagFactor> factors;
  for (int j = 1; j <= n - 1; ++j)
    for (int k = n - 1; k >= j; --k)
      factors.push_back(BidiagFactor::lower(k, Scalar(weight(rng))));
  std::vector<Scalar> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d.emplace_back(diag(rng));
  factors.push_back(BidiagFactor::diagonal(std::move(d)));
  for (int j = n - 1; j >= 1; --j)
    for (int k = j; k <= n - 1; ++k)
      factors.push_back(BidiagFactor::upper(k, Scalar(weight(rng))));
  return BidiagFactorization(n, std::move(factors));
}

Matrix sample_integer_matrix(int n, std::uint64_t seed, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-bound, bound);
  Matrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i, j) = entry(rng);
  return m;
}

bool is_tn_bruteforce(const Matrix& A) {
  const int n = A.n();
  if (n > 8)
    throw std::domain_error("brute-force TN check refused for n > 8");
  for (int size = 1; size <= n; ++size) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (std::popcount(m) == size) masks.push_back(m);
    for (std::uint64_t rm : masks)
      for (std::uint64_t cm : masks)
        if (minor(A, IndexSet::from_mask(rm, n), IndexSet::from_mask(cm, n)) < 0)
          return false;
  }
  return true;
}

bool elementary_shift_identity_check(const Matrix& A, int u, int v,
                                     const Scalar& w, const IndexSet& I,
                                     const IndexSet& J) {
  validate_op_pair(A.n(), u, v);
  if (u == v) throw std::invalid_argument("u and v must be consecutive");
  if (w <= 0) throw std::invalid_argument("the perturbation weight must be positive");
  const int n = A.n();
  Matrix B = A;
  for (int j = 1; j <= n; ++j) B(u, j) += w * A(v, j);
  const Scalar lhs = minor(B, I, J);
  Scalar rhs = minor(A, I, J);
  if (I.contains(u) && !I.contains(v)) rhs += w * minor(A, shift_set(I, u, v), J);
  return lhs == rhs;
}

}  // namespace tnineq
