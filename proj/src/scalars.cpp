#include "ckq/scalars.hpp"

#include <sstream>

namespace ckq {

Rational frac(long n, long d) {
  if (d == 0) throw std::domain_error("division by zero");
  Rational r(n);
  r /= d;
  return r;
}

Gaussian operator+(const Gaussian& x, const Gaussian& y) { return {x.re + y.re, x.im + y.im}; }
Gaussian operator-(const Gaussian& x, const Gaussian& y) { return {x.re - y.re, x.im - y.im}; }

Gaussian operator*(const Gaussian& x, const Gaussian& y) {
  if (x.is_real() && y.is_real()) return {x.re * y.re, 0};
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Gaussian Gaussian::inverse() const {
  Rational n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  return {re / n, -im / n};
}

Coefficient Coefficient::i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return i();
    case 2: return -1;
    default: return -i();
  }
}

bool Coefficient::is_one() const { return b_.is_zero() && a_.is_real() && a_.re == 1; }

Coefficient operator+(const Coefficient& x, const Coefficient& y) {
  return {x.a_ + y.a_, x.b_ + y.b_};
}

Coefficient operator-(const Coefficient& x, const Coefficient& y) {
  return {x.a_ - y.a_, x.b_ - y.b_};
}

Coefficient operator*(const Coefficient& x, const Coefficient& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return {x.a_ * y.a_};
  Gaussian two(2);
  return {x.a_ * y.a_ + two * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

Coefficient Coefficient::inverse() const {
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2), r = sqrt 2; the norm is nonzero
  // because sqrt 2 is not in Q(i).
  if (b_.is_zero()) return {a_.inverse()};
  Gaussian norm = a_ * a_ - Gaussian(2) * b_ * b_;
  Gaussian inv = norm.inverse();
  return {a_ * inv, -(b_ * inv)};
}

namespace {

std::string gaussian_str(const Gaussian& g) {
  if (g.is_real()) return g.re.get_str();
  if (sgn(g.re) == 0) {
    if (g.im == 1) return "i";
    if (g.im == -1) return "-i";
    return g.im.get_str() + "i";
  }
  std::string im = sgn(g.im) > 0 ? "+" + g.im.get_str() : g.im.get_str();
  return "(" + g.re.get_str() + im + "i)";
}

}  // namespace

std::string Coefficient::str() const {
  if (b_.is_zero()) return gaussian_str(a_);
  std::string s = a_.is_zero() ? "" : gaussian_str(a_) + "+";
  return s + gaussian_str(b_) + "√2";
}

IndexSet index_set(const std::vector<int>& ks) {
  IndexSet s = 0;
  for (int k : ks) {
    if (k < 1 || k >= 31) throw std::out_of_range("parameter index out of range");
    s = with(s, k);
  }
  return s;
}

std::vector<int> indices(IndexSet s) {
  std::vector<int> out;
  for (int k = 1; k < 32; ++k)
    if (contains(s, k)) out.push_back(k);
  return out;
}

ParamMonomial::ParamMonomial(int len) : len_(len) {
  if (len < 0 || len > kMaxParams) throw std::invalid_argument("unsupported parameter count");
}

ParamMonomial ParamMonomial::single(int len, int k, int e) {
  ParamMonomial m(len);
  if (k < 1 || k > len) throw std::out_of_range("parameter index out of range");
  m.set(k, e);
  return m;
}

bool ParamMonomial::is_one() const {
  for (int k = 0; k < len_; ++k)
    if (e_[k] != 0) return false;
  return true;
}

int ParamMonomial::degree() const {
  int d = 0;
  for (int k = 0; k < len_; ++k) d += e_[k];
  return d;
}

IndexSet ParamMonomial::support() const {
  IndexSet s = 0;
  for (int k = 1; k <= len_; ++k)
    if (e_[k - 1] != 0) s = with(s, k);
  return s;
}

ParamMonomial ParamMonomial::restrict(IndexSet s) const {
  ParamMonomial r(len_);
  for (int k = 1; k <= len_; ++k)
    if (contains(s, k)) r.set(k, (*this)[k]);
  return r;
}

ParamMonomial ParamMonomial::unite(const ParamMonomial& o) const {
  if (o.len_ != len_) throw std::invalid_argument("mismatched parameter context");
  ParamMonomial r(len_);
  for (int k = 1; k <= len_; ++k) r.set(k, ((*this)[k] != 0 || o[k] != 0) ? 1 : 0);
  return r;
}

bool ParamMonomial::divisible_by(const ParamMonomial& o) const {
  for (int k = 1; k <= len_; ++k)
    if ((*this)[k] < o[k]) return false;
  return true;
}

ParamMonomial operator*(const ParamMonomial& x, const ParamMonomial& y) {
  if (x.len_ != y.len_) throw std::invalid_argument("mismatched parameter context");
  ParamMonomial r(x.len_);
  for (int k = 0; k < x.len_; ++k) r.e_[k] = x.e_[k] + y.e_[k];
  return r;
}

ParamMonomial operator/(const ParamMonomial& x, const ParamMonomial& y) {
  if (x.len_ != y.len_) throw std::invalid_argument("mismatched parameter context");
  ParamMonomial r(x.len_);
  for (int k = 0; k < x.len_; ++k) r.e_[k] = x.e_[k] - y.e_[k];
  return r;
}

std::string ParamMonomial::str(const char* letter) const {
  std::string s;
  for (int k = 1; k <= len_; ++k) {
    int e = (*this)[k];
    if (e == 0) continue;
    if (!s.empty()) s += " ";
    s += letter + std::to_string(k);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

ExpScalar::ExpScalar(int nparams, const Coefficient& c) : np_(nparams) {
  if (!c.is_zero()) terms_.emplace(ScalarMonomial{0, 0, ParamMonomial(nparams)}, c);
}

ExpScalar ExpScalar::monomial(int nparams, int m, int p, const ParamMonomial& beta,
                              const Coefficient& c) {
  if (beta.size() != nparams) throw std::invalid_argument("mismatched parameter context");
  ExpScalar x(nparams);
  x.add_term({m, p, beta}, c);
  return x;
}

bool ExpScalar::is_constant() const {
  if (terms_.size() != 1) return terms_.empty();
  const auto& mono = terms_.begin()->first;
  return mono.m == 0 && mono.p == 0 && mono.beta.is_one();
}

Coefficient ExpScalar::constant_term() const {
  auto it = terms_.find(ScalarMonomial{0, 0, ParamMonomial(np_)});
  return it == terms_.end() ? Coefficient() : it->second;
}

void ExpScalar::add_term(const ScalarMonomial& mono, const Coefficient& c) {
  if (c.is_zero()) return;
  if (mono.beta.size() != np_) {
    if (!terms_.empty()) throw std::invalid_argument("mismatched parameter context");
    np_ = mono.beta.size();
  }
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ExpScalar::adopt_context(const ExpScalar& y) {
  if (np_ == y.np_) return;
  if (terms_.empty()) {
    np_ = y.np_;
  } else if (!y.terms_.empty()) {
    throw std::invalid_argument("mismatched parameter context");
  }
}

ExpScalar& ExpScalar::operator+=(const ExpScalar& y) {
  adopt_context(y);
  for (const auto& [mono, c] : y.terms_) add_term(mono, c);
  return *this;
}

ExpScalar& ExpScalar::operator-=(const ExpScalar& y) {
  adopt_context(y);
  for (const auto& [mono, c] : y.terms_) add_term(mono, -c);
  return *this;
}

ExpScalar operator-(const ExpScalar& x) {
  ExpScalar r(x.np_);
  for (const auto& [mono, c] : x.terms_) r.terms_.emplace(mono, -c);
  return r;
}

ExpScalar operator*(const ExpScalar& x, const ExpScalar& y) { return scalar_mul(x, y, 0); }

ExpScalar operator*(const Coefficient& c, const ExpScalar& x) {
  ExpScalar r(x.np_);
  if (c.is_zero()) return r;
  for (const auto& [mono, d] : x.terms_) r.terms_.emplace(mono, c * d);
  return r;
}

namespace {

bool killed(const ParamMonomial& beta, IndexSet s) {
  if (s == 0) return false;
  for (int k = 1; k <= beta.size(); ++k)
    if (contains(s, k) && beta[k] >= 2) return true;
  return false;
}

std::string mono_str(const ScalarMonomial& mono) {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " ";
    s += part;
  };
  if (mono.m != 0) append(mono.m == 1 ? "t" : "t^" + std::to_string(mono.m));
  if (mono.p != 0) append(mono.p == 1 ? "v" : "v^" + std::to_string(mono.p));
  if (!mono.beta.is_one()) append(mono.beta.str());
  return s;
}

}  // namespace

ExpScalar scalar_add(const ExpScalar& x, const ExpScalar& y) { return x + y; }

ExpScalar scalar_mul(const ExpScalar& x, const ExpScalar& y, IndexSet s) {
  int np = x.nparams();
  if (x.is_zero() || y.is_zero()) return ExpScalar(x.is_zero() ? y.nparams() : np);
  if (np != y.nparams()) throw std::invalid_argument("mismatched parameter context");
  ExpScalar r(np);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      ParamMonomial beta = mx.beta * my.beta;
      if (killed(beta, s)) continue;
      r.add_term({mx.m + my.m, mx.p + my.p, beta}, cx * cy);
    }
  return r;
}

ExpScalar truncate(const ExpScalar& x, IndexSet s) {
  ExpScalar r(x.nparams());
  for (const auto& [mono, c] : x.terms())
    if (!killed(mono.beta, s)) r.add_term(mono, c);
  return r;
}

ExpScalar principal_part(const ExpScalar& x, IndexSet s) {
  ExpScalar r(x.nparams());
  for (const auto& [mono, c] : x.terms())
    if ((mono.beta.support() & s) == 0) r.add_term(mono, c);
  return r;
}

ExpScalar divide_param(const ExpScalar& x, const ParamMonomial& m) {
  return divide_param(x, m, ~IndexSet{0});
}

ExpScalar divide_param(const ExpScalar& x, const ParamMonomial& m, IndexSet strict) {
  ExpScalar r(x.nparams());
  for (const auto& [mono, c] : x.terms()) {
    if (!mono.beta.restrict(strict).divisible_by(m.restrict(strict)))
      throw NonDivisible("term " + mono_str(mono) + " is not divisible by " + m.str());
    r.add_term({mono.m, mono.p, mono.beta / m}, c);
  }
  return r;
}

ParamMonomial common_param_divisor(const std::vector<ScalarMonomial>& terms, IndexSet restrict_to) {
  if (terms.empty()) throw std::invalid_argument("empty term list");
  ParamMonomial d = terms.front().beta.restrict(restrict_to);
  for (const auto& t : terms)
    for (int k = 1; k <= d.size(); ++k)
      if (contains(restrict_to, k)) d.set(k, std::min(d[k], t.beta[k]));
  return d;
}

IndexSet CKAssignment::of(Param p) const {
  IndexSet s = 0;
  for (int k = 1; k <= size(); ++k)
    if (values[k - 1] == p) s = with(s, k);
  return s;
}

IndexSet CKAssignment::nilpotent() const { return of(Param::Nilpotent); }

bool CKAssignment::mixed() const { return of(Param::Imaginary) != 0 && of(Param::Nilpotent) != 0; }

ExpScalar substitute_values(const ExpScalar& x, const CKAssignment& a) {
  if (a.size() != x.nparams() && !x.is_zero())
    throw std::invalid_argument("assignment length does not match parameter context");
  ExpScalar r(x.nparams());
  for (const auto& [mono, c] : x.terms()) {
    ScalarMonomial out = mono;
    int ipow = 0;
    for (int k = 1; k <= a.size(); ++k) {
      switch (a[k]) {
        case Param::Unit: out.beta.set(k, 0); break;
        case Param::Imaginary:
          ipow += mono.beta[k];
          out.beta.set(k, 0);
          break;
        default: break;
      }
    }
    r.add_term(out, Coefficient::i_pow(ipow) * c);
  }
  return r;
}

ExpScalar substitute_params(const ExpScalar& x, const CKAssignment& a, const ParamMonomial& J) {
  IndexSet s = a.nilpotent();
  ExpScalar r = truncate(substitute_values(x, a), s);
  ExpScalar jsub = substitute_values(ExpScalar::param(J), a);
  if ((J.support() & s) == 0) return r;
  return truncate(expand_exponentials(r, jsub, 1), s);
}

ExpScalar expand_exponentials(const ExpScalar& x, const ExpScalar& Jsub, int order) {
  if (Jsub.size() != 1) throw std::invalid_argument("J must be a single term");
  int np = x.nparams();
  ExpScalar jv = Jsub * ExpScalar::v(Jsub.nparams());
  // powers (J v)^k / k!
  std::vector<ExpScalar> pw{ExpScalar(jv.nparams(), 1)};
  for (int k = 1; k <= order; ++k)
    pw.push_back(Coefficient(frac(1, k)) * (pw.back() * jv));
  ExpScalar r(np);
  for (const auto& [mono, c] : x.terms()) {
    ExpScalar b = ExpScalar::monomial(np, 0, mono.p, mono.beta, c);
    if (mono.m == 0) {
      r += b;
      continue;
    }
    Rational half_m = frac(mono.m, 2);
    Rational f = 1;
    for (int k = 0; k <= order; ++k) {
      r += Coefficient(f) * (b * pw[k]);
      f *= half_m;
    }
  }
  return r;
}

namespace {

Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

}  // namespace

Coefficient evaluate(const ExpScalar& x, const Point& pt) {
  if (sgn(pt.t) == 0) throw std::domain_error("degenerate evaluation point t = 0");
  Coefficient r;
  for (const auto& [mono, c] : x.terms()) {
    Rational f = rpow(pt.t, mono.m) * rpow(pt.v, mono.p);
    for (int k = 1; k <= mono.beta.size(); ++k) {
      if (mono.beta[k] == 0) continue;
      if (k > static_cast<int>(pt.j.size())) throw std::out_of_range("point lacks parameter value");
      f *= rpow(pt.j[k - 1], mono.beta[k]);
    }
    r += Coefficient(f) * c;
  }
  return r;
}

ExpScalar cosh_t(int nparams, int r) {
  return Coefficient(frac(1, 2)) * (ExpScalar::t(nparams, r) + ExpScalar::t(nparams, -r));
}

ExpScalar sinh_t(int nparams, int r) {
  return Coefficient(frac(1, 2)) * (ExpScalar::t(nparams, r) - ExpScalar::t(nparams, -r));
}

std::string ExpScalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    std::string cs = c.str();
    std::string ms = mono_str(mono);
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (neg) cs = cs.substr(1);
    if (ms.empty()) s += cs;
    else if (cs == "1") s += ms;
    else s += cs + " " + ms;
    first = false;
  }
  return s;
}

}  // namespace ckq
