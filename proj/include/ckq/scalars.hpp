#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

using Rational = mpq_class;

/// n/d in lowest terms.
Rational frac(long n, long d);

/// Exact a + b i with rational parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Gaussian inverse() const;

  friend Gaussian operator+(const Gaussian& x, const Gaussian& y);
  friend Gaussian operator-(const Gaussian& x, const Gaussian& y);
  friend Gaussian operator*(const Gaussian& x, const Gaussian& y);
  friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
  friend bool operator==(const Gaussian& x, const Gaussian& y) {
    return x.re == y.re && x.im == y.im;
  }
};

/// Element a + b sqrt(2) of Q(i, sqrt 2), a and b Gaussian rationals.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long v) : a_(v) {}
  Coefficient(Rational v) : a_(std::move(v)) {}
  Coefficient(Gaussian a, Gaussian b = {}) : a_(std::move(a)), b_(std::move(b)) {}

  static Coefficient i() { return Coefficient(Gaussian(0, 1)); }
  static Coefficient sqrt2() { return Coefficient(Gaussian(0), Gaussian(1)); }
  /// i^e for any integer e.
  static Coefficient i_pow(int e);

  const Gaussian& a() const { return a_; }
  const Gaussian& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const;
  /// Purely rational (no i, no sqrt 2 part).
  bool is_rational() const { return b_.is_zero() && a_.is_real(); }
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator-(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator*(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator/(const Coefficient& x, const Coefficient& y) {
    return x * y.inverse();
  }
  friend Coefficient operator-(const Coefficient& x) { return {-x.a_, -x.b_}; }
  Coefficient& operator+=(const Coefficient& y) { return *this = *this + y; }
  Coefficient& operator-=(const Coefficient& y) { return *this = *this - y; }
  Coefficient& operator*=(const Coefficient& y) { return *this = *this * y; }
  friend bool operator==(const Coefficient& x, const Coefficient& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  Gaussian a_;
  Gaussian b_;
};

inline constexpr int kMaxParams = 8;

/// Bitmask over parameter indices 1..kMaxParams (bit k set = index k).
using IndexSet = std::uint32_t;

inline bool contains(IndexSet s, int k) { return (s >> k) & 1u; }
inline IndexSet with(IndexSet s, int k) { return s | (1u << k); }
IndexSet index_set(const std::vector<int>& ks);
std::vector<int> indices(IndexSet s);

/// Exponent vector of j_1 .. j_len. Exponents of formal parameters may go
/// negative after division by a formal monomial; nilpotent ones never do.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  explicit ParamMonomial(int len);
  static ParamMonomial single(int len, int k, int e = 1);

  int size() const { return len_; }
  int operator[](int k) const { return e_.at(k - 1); }
  void set(int k, int e) { e_.at(k - 1) = e; }

  bool is_one() const;
  int degree() const;
  /// Indices with nonzero exponent.
  IndexSet support() const;
  /// Keep exponents only at indices in s.
  ParamMonomial restrict(IndexSet s) const;
  /// Squarefree union (first-power product of the joint support).
  ParamMonomial unite(const ParamMonomial& o) const;
  /// Componentwise >= o.
  bool divisible_by(const ParamMonomial& o) const;

  friend ParamMonomial operator*(const ParamMonomial& x, const ParamMonomial& y);
  friend ParamMonomial operator/(const ParamMonomial& x, const ParamMonomial& y);
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  std::string str(const char* letter = "j") const;

 private:
  std::array<int, kMaxParams> e_{};
  int len_ = 0;
};

struct ScalarMonomial {
  int m = 0;  // power of t = exp(Jv/2)
  int p = 0;  // power of v
  ParamMonomial beta;

  friend auto operator<=>(const ScalarMonomial&, const ScalarMonomial&) = default;
  friend bool operator==(const ScalarMonomial&, const ScalarMonomial&) = default;
};

class ExpScalar {
 public:
  using Terms = std::map<ScalarMonomial, Coefficient>;

  ExpScalar() = default;
  explicit ExpScalar(int nparams) : np_(nparams) {}
  ExpScalar(int nparams, const Coefficient& c);

  static ExpScalar monomial(int nparams, int m, int p, const ParamMonomial& beta,
                            const Coefficient& c = 1);
  static ExpScalar t(int nparams, int m) { return monomial(nparams, m, 0, ParamMonomial(nparams)); }
  static ExpScalar v(int nparams, int p = 1) { return monomial(nparams, 0, p, ParamMonomial(nparams)); }
  static ExpScalar j(int nparams, int k, int e = 1) {
    return monomial(nparams, 0, 0, ParamMonomial::single(nparams, k, e));
  }
  static ExpScalar param(const ParamMonomial& beta, const Coefficient& c = 1) {
    return monomial(beta.size(), 0, 0, beta, c);
  }

  int nparams() const { return np_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Single term with monomial 1.
  bool is_constant() const;
  Coefficient constant_term() const;

  void add_term(const ScalarMonomial& mono, const Coefficient& c);

  ExpScalar& operator+=(const ExpScalar& y);
  ExpScalar& operator-=(const ExpScalar& y);
  friend ExpScalar operator+(ExpScalar x, const ExpScalar& y) { return x += y; }
  friend ExpScalar operator-(ExpScalar x, const ExpScalar& y) { return x -= y; }
  friend ExpScalar operator-(const ExpScalar& x);
  friend ExpScalar operator*(const ExpScalar& x, const ExpScalar& y);
  friend ExpScalar operator*(const Coefficient& c, const ExpScalar& x);
  friend bool operator==(const ExpScalar& x, const ExpScalar& y) {
    return x.terms_ == y.terms_;
  }

  std::string str() const;

 private:
  int np_ = 0;
  Terms terms_;

  void adopt_context(const ExpScalar& y);
};

ExpScalar scalar_add(const ExpScalar& x, const ExpScalar& y);
/// Product with truncation: terms with exponent >= 2 at an index of s vanish.
ExpScalar scalar_mul(const ExpScalar& x, const ExpScalar& y, IndexSet s);
ExpScalar truncate(const ExpScalar& x, IndexSet s);
/// Terms whose exponents vanish on every index of s.
ExpScalar principal_part(const ExpScalar& x, IndexSet s);

struct NonDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact division by a parameter monomial; throws NonDivisible if some term
/// lacks the factor.
ExpScalar divide_param(const ExpScalar& x, const ParamMonomial& m);
/// Division where only the indices in strict must divide exactly; other
/// exponents may become negative (Laurent in generic parameters).
ExpScalar divide_param(const ExpScalar& x, const ParamMonomial& m, IndexSet strict);
ParamMonomial common_param_divisor(const std::vector<ScalarMonomial>& terms, IndexSet restrict_to);

enum class Param { Unit, Nilpotent, Imaginary, Formal };

struct CKAssignment {
  std::vector<Param> values;  // values[k-1] is the value of j_k

  int size() const { return static_cast<int>(values.size()); }
  Param operator[](int k) const { return values.at(k - 1); }
  IndexSet nilpotent() const;
  IndexSet of(Param p) const;
  bool mixed() const;  // both imaginary and nilpotent present

  static CKAssignment all(int len, Param p) { return {std::vector<Param>(len, p)}; }
  friend bool operator==(const CKAssignment&, const CKAssignment&) = default;
};

/// Units dropped, imaginary units turned into powers of i. Nilpotent and
/// formal exponents are kept as they are (no truncation).
ExpScalar substitute_values(const ExpScalar& x, const CKAssignment& a);
/// Substitution followed by truncation and, when the substituted J carries a
/// nilpotent factor, first-order linearization t^m -> 1 + (m/2) J v.
ExpScalar substitute_params(const ExpScalar& x, const CKAssignment& a, const ParamMonomial& J);
/// Replace every t^m by its exponential series in J v up to the given order:
/// sum_{k <= order} (m J v / 2)^k / k!. Jsub must be a single-term scalar.
ExpScalar expand_exponentials(const ExpScalar& x, const ExpScalar& Jsub, int order);

/// Exact rational evaluation point for t, v and every j.
struct Point {
  Rational t = 1;
  Rational v = 1;
  std::vector<Rational> j;
};

Coefficient evaluate(const ExpScalar& x, const Point& pt);

/// cosh(Jv r/2) and sinh(Jv r/2) as Laurent polynomials in t, for integer r.
ExpScalar cosh_t(int nparams, int r);
ExpScalar sinh_t(int nparams, int r);

}  // namespace ckq
