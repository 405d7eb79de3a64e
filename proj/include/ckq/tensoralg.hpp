#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ckq/scalars.hpp"

namespace ckq {

/// Generator u_{ab}; a, b in 1..15.
using Gen = std::uint8_t;

inline Gen gen(int a, int b) { return static_cast<Gen>(a * 16 + b); }
inline int gen_row(Gen g) { return g / 16; }
inline int gen_col(Gen g) { return g % 16; }
std::string gen_str(Gen g);

using Word = std::vector<Gen>;

/// Shorter words first, then lexicographic on symbols.
struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

std::string word_str(const Word& w);

class NCPoly {
 public:
  using Terms = std::map<Word, ExpScalar, WordLess>;

  NCPoly() = default;
  NCPoly(const ExpScalar& c);  // constant polynomial
  static NCPoly generator(Gen g, const ExpScalar& c);
  static NCPoly word(const Word& w, const ExpScalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Parameter context of the coefficients (0 when zero).
  int nparams() const;
  /// Coefficient of a word (zero if absent).
  ExpScalar coeff(const Word& w) const;

  void add_term(const Word& w, const ExpScalar& c);

  NCPoly& operator+=(const NCPoly& y);
  NCPoly& operator-=(const NCPoly& y);
  friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
  friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
  friend NCPoly operator-(const NCPoly& x);
  friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
  friend NCPoly operator*(const ExpScalar& c, const NCPoly& x);
  friend bool operator==(const NCPoly& x, const NCPoly& y) { return x.terms_ == y.terms_; }

  /// Apply f to every coefficient, dropping zeros.
  NCPoly map_coefficients(const std::function<ExpScalar(const ExpScalar&)>& f) const;
  /// Generators occurring anywhere in the polynomial.
  std::vector<Gen> generators() const;

  std::string str() const;

 private:
  Terms terms_;
};

NCPoly ncp_add(const NCPoly& x, const NCPoly& y);
NCPoly ncp_mul(const NCPoly& x, const NCPoly& y, IndexSet s = 0);
NCPoly ncp_commutator(const NCPoly& x, const NCPoly& y, IndexSet s = 0);

using GenMap = std::map<Gen, NCPoly>;
/// Algebra homomorphism sending each mapped generator to its image.
NCPoly substitute_generators(const NCPoly& p, const GenMap& map);

/// Element of an arity-fold tensor power of the generator algebra.
class Tensor {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, ExpScalar>;

  Tensor() = default;
  explicit Tensor(int arity) : arity_(arity) {}
  static Tensor pure(const std::vector<NCPoly>& factors);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const ExpScalar& c);
  Tensor& operator+=(const Tensor& y);
  Tensor& operator-=(const Tensor& y);
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  friend Tensor operator*(const ExpScalar& c, const Tensor& x);
  /// Factorwise product (x1 (x) y1)(x2 (x) y2) = x1x2 (x) y1y2.
  friend Tensor operator*(const Tensor& x, const Tensor& y);
  friend bool operator==(const Tensor& x, const Tensor& y) {
    return x.arity_ == y.arity_ && x.terms_ == y.terms_;
  }

  Tensor map_coefficients(const std::function<ExpScalar(const ExpScalar&)>& f) const;
  /// Apply a linear map to factor `slot`, producing a tensor of possibly
  /// different arity: each word w at that slot is replaced by f(w).
  Tensor map_factor(int slot, const std::function<Tensor(const Word&)>& f) const;
  /// Multiply all factors together into one polynomial.
  NCPoly multiply_out() const;

  std::string str() const;

 private:
  int arity_ = 2;
  Terms terms_;
};

using TensorPoly = Tensor;

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const E& fill = E()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-based access.
  E& operator()(int i, int k) { return a_.at((i - 1) * cols_ + (k - 1)); }
  const E& operator()(int i, int k) const { return a_.at((i - 1) * cols_ + (k - 1)); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
      for (int k = 1; k <= cols_; ++k) t(k, i) = (*this)(i, k);
    return t;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const E&>()))> {
    Matrix<decltype(f(std::declval<const E&>()))> r(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int k = 1; k <= cols_; ++k) r(i, k) = f((*this)(i, k));
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<E> a_;
};

namespace detail {
template <class E>
bool is_zero_entry(const E& e) {
  return e.is_zero();
}
}  // namespace detail

template <class E>
Matrix<E> operator*(const Matrix<E>& x, const Matrix<E>& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<E> r(x.rows(), y.cols());
  for (int i = 1; i <= x.rows(); ++i)
    for (int l = 1; l <= x.cols(); ++l) {
      const E& a = x(i, l);
      if (detail::is_zero_entry(a)) continue;
      for (int k = 1; k <= y.cols(); ++k) {
        const E& b = y(l, k);
        if (detail::is_zero_entry(b)) continue;
        r(i, k) += a * b;
      }
    }
  return r;
}

template <class E>
Matrix<E> operator+(const Matrix<E>& x, const Matrix<E>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<E> r = x;
  for (int i = 1; i <= x.rows(); ++i)
    for (int k = 1; k <= x.cols(); ++k) r(i, k) += y(i, k);
  return r;
}

template <class E>
Matrix<E> operator-(const Matrix<E>& x, const Matrix<E>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<E> r = x;
  for (int i = 1; i <= x.rows(); ++i)
    for (int k = 1; k <= x.cols(); ++k) r(i, k) -= y(i, k);
  return r;
}

/// Block-row-major Kronecker product.
template <class E>
Matrix<E> kron(const Matrix<E>& a, const Matrix<E>& b) {
  Matrix<E> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) {
      if (detail::is_zero_entry(a(i, j))) continue;
      for (int k = 1; k <= b.rows(); ++k)
        for (int l = 1; l <= b.cols(); ++l)
          r((i - 1) * b.rows() + k, (j - 1) * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

using ScalarMatrix = Matrix<ExpScalar>;
using PolyMatrix = Matrix<NCPoly>;
using NumMatrix = Matrix<Coefficient>;

ScalarMatrix identity_matrix(int n, int nparams);
NumMatrix identity_num(int n);
/// Entry (i, sigma_i) = 1.
ScalarMatrix permutation_matrix(const std::vector<int>& sigma, int nparams);
PolyMatrix to_poly(const ScalarMatrix& m);
NumMatrix evaluate(const ScalarMatrix& m, const Point& pt);

/// Coordinates of p over the word basis at an evaluation point.
std::map<Word, Coefficient, WordLess> evaluate(const NCPoly& p, const Point& pt);

/// Seeded random points with rational coordinates for t, v and nparams j's.
std::vector<Point> random_points(std::uint64_t seed, int count, int nparams);

/// True iff target lies in the span of candidates at every point.
bool span_membership(const std::vector<NCPoly>& candidates, const NCPoly& target,
                     const std::vector<Point>& points);
/// Rank of the evaluated polynomials at a point.
int span_rank(const std::vector<NCPoly>& polys, const Point& pt);

/// Incremental row-echelon basis over Q(i, sqrt 2), keyed by words.
class EchelonBasis {
 public:
  using Vec = std::map<Word, Coefficient, WordLess>;
  /// Returns true if v was independent (and adds it).
  bool insert(Vec v);
  /// True if v reduces to zero.
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<Word, Vec, WordLess> rows_;  // pivot word -> row normalized to pivot 1
  Vec reduce(Vec v) const;
};

}  // namespace ckq
