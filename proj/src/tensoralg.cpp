#include "ckq/tensoralg.hpp"

#include <algorithm>
#include <set>

namespace ckq {

std::string gen_str(Gen g) { return "u" + std::to_string(gen_row(g)) + std::to_string(gen_col(g)); }

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += gen_str(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

NCPoly::NCPoly(const ExpScalar& c) { add_term({}, c); }

NCPoly NCPoly::generator(Gen g, const ExpScalar& c) { return word({g}, c); }

NCPoly NCPoly::word(const Word& w, const ExpScalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

int NCPoly::nparams() const { return terms_.empty() ? 0 : terms_.begin()->second.nparams(); }

ExpScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ExpScalar(nparams()) : it->second;
}

void NCPoly::add_term(const Word& w, const ExpScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator-(const NCPoly& x) {
  NCPoly r;
  for (const auto& [w, c] : x.terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) { return ncp_mul(x, y, 0); }

NCPoly operator*(const ExpScalar& c, const NCPoly& x) {
  NCPoly r;
  for (const auto& [w, d] : x.terms_) r.add_term(w, c * d);
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<ExpScalar(const ExpScalar&)>& f) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

std::vector<Gen> NCPoly::generators() const {
  std::set<Gen> gs;
  for (const auto& [w, c] : terms_) gs.insert(w.begin(), w.end());
  return {gs.begin(), gs.end()};
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool simple = c.size() == 1;
    bool neg = simple && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (w.empty()) s += cs;
    else if (cs == "1") s += word_str(w);
    else s += cs + " " + word_str(w);
    first = false;
  }
  return s;
}

NCPoly ncp_add(const NCPoly& x, const NCPoly& y) { return x + y; }

NCPoly ncp_mul(const NCPoly& x, const NCPoly& y, IndexSet s) {
  NCPoly r;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      ExpScalar c = scalar_mul(cx, cy, s);
      if (c.is_zero()) continue;
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      r.add_term(w, c);
    }
  return r;
}

NCPoly ncp_commutator(const NCPoly& x, const NCPoly& y, IndexSet s) {
  return ncp_mul(x, y, s) - ncp_mul(y, x, s);
}

NCPoly substitute_generators(const NCPoly& p, const GenMap& map) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc(c);
    for (Gen g : w) {
      auto it = map.find(g);
      if (it == map.end()) {
        NCPoly next;
        for (const auto& [aw, ac] : acc.terms()) {
          Word nw = aw;
          nw.push_back(g);
          next.add_term(nw, ac);
        }
        acc = std::move(next);
      } else {
        acc = acc * it->second;
      }
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

Tensor Tensor::pure(const std::vector<NCPoly>& factors) {
  Tensor t(static_cast<int>(factors.size()));
  std::vector<std::pair<Key, ExpScalar>> acc{{Key{}, ExpScalar()}};
  bool first = true;
  for (const auto& f : factors) {
    std::vector<std::pair<Key, ExpScalar>> next;
    for (const auto& [k, c] : acc)
      for (const auto& [w, d] : f.terms()) {
        Key nk = k;
        nk.push_back(w);
        next.emplace_back(std::move(nk), first ? d : c * d);
      }
    acc = std::move(next);
    first = false;
  }
  for (const auto& [k, c] : acc) t.add_term(k, c);
  return t;
}

void Tensor::add_term(const Key& k, const ExpScalar& c) {
  if (static_cast<int>(k.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& y) {
  if (terms_.empty()) arity_ = y.arity_;
  for (const auto& [k, c] : y.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& y) {
  if (terms_.empty()) arity_ = y.arity_;
  for (const auto& [k, c] : y.terms_) add_term(k, -c);
  return *this;
}

Tensor operator*(const ExpScalar& c, const Tensor& x) {
  Tensor r(x.arity_);
  for (const auto& [k, d] : x.terms_) r.add_term(k, c * d);
  return r;
}

Tensor operator*(const Tensor& x, const Tensor& y) {
  if (x.arity_ != y.arity_) throw std::invalid_argument("tensor arity mismatch");
  Tensor r(x.arity_);
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) {
      Tensor::Key k = kx;
      for (std::size_t i = 0; i < k.size(); ++i) k[i].insert(k[i].end(), ky[i].begin(), ky[i].end());
      r.add_term(k, cx * cy);
    }
  return r;
}

Tensor Tensor::map_coefficients(const std::function<ExpScalar(const ExpScalar&)>& f) const {
  Tensor r(arity_);
  for (const auto& [k, c] : terms_) r.add_term(k, f(c));
  return r;
}

Tensor Tensor::map_factor(int slot, const std::function<Tensor(const Word&)>& f) const {
  Tensor r;
  bool init = false;
  for (const auto& [k, c] : terms_) {
    Tensor img = f(k.at(slot));
    int out_arity = arity_ - 1 + img.arity();
    if (!init) {
      r = Tensor(out_arity);
      init = true;
    }
    for (const auto& [ik, ic] : img.terms()) {
      Key nk(k.begin(), k.begin() + slot);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + slot + 1, k.end());
      r.add_term(nk, c * ic);
    }
  }
  return r;
}

NCPoly Tensor::multiply_out() const {
  NCPoly r;
  for (const auto& [k, c] : terms_) {
    Word w;
    for (const auto& f : k) w.insert(w.end(), f.begin(), f.end());
    r.add_term(w, c);
  }
  return r;
}

std::string Tensor::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.str();
    bool simple = c.size() == 1;
    bool neg = simple && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (cs != "1") s += cs + " ";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += "⊗";
      s += word_str(k[i]);
    }
    first = false;
  }
  return s;
}

ScalarMatrix identity_matrix(int n, int nparams) {
  ScalarMatrix m(n, n, ExpScalar(nparams));
  for (int i = 1; i <= n; ++i) m(i, i) = ExpScalar(nparams, 1);
  return m;
}

NumMatrix identity_num(int n) {
  NumMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix permutation_matrix(const std::vector<int>& sigma, int nparams) {
  int n = static_cast<int>(sigma.size());
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i + 1) throw std::invalid_argument("invalid permutation");
  ScalarMatrix m(n, n, ExpScalar(nparams));
  for (int i = 1; i <= n; ++i) m(i, sigma[i - 1]) = ExpScalar(nparams, 1);
  return m;
}

PolyMatrix to_poly(const ScalarMatrix& m) {
  return m.map([](const ExpScalar& x) { return NCPoly(x); });
}

NumMatrix evaluate(const ScalarMatrix& m, const Point& pt) {
  return m.map([&pt](const ExpScalar& x) { return evaluate(x, pt); });
}

std::map<Word, Coefficient, WordLess> evaluate(const NCPoly& p, const Point& pt) {
  std::map<Word, Coefficient, WordLess> out;
  for (const auto& [w, c] : p.terms()) {
    Coefficient x = evaluate(c, pt);
    if (!x.is_zero()) out.emplace(w, x);
  }
  return out;
}

std::vector<Point> random_points(std::uint64_t seed, int count, int nparams) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-997, 997);
  std::uniform_int_distribution<long> den(1, 89);
  auto draw = [&]() {
    long n = 0;
    while (n == 0) n = num(rng);
    return frac(n, den(rng));
  };
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) {
    Point p;
    p.t = draw();
    p.v = draw();
    for (int k = 0; k < nparams; ++k) p.j.push_back(draw());
    pts.push_back(std::move(p));
  }
  return pts;
}

EchelonBasis::Vec EchelonBasis::reduce(Vec v) const {
  // Pivots are the smallest word of each stored row; eliminate in word order.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Coefficient f = it->second;
    Word key = it->first;
    for (const auto& [w, c] : row->second) {
      auto [pos, inserted] = v.emplace(w, -(f * c));
      if (!inserted) {
        pos->second -= f * c;
        if (pos->second.is_zero()) v.erase(pos);
      }
    }
    it = v.upper_bound(key);
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Coefficient inv = v.begin()->second.inverse();
  for (auto& [w, c] : v) c = c * inv;
  Word pivot = v.begin()->first;
  // keep rows reduced against the new pivot so pivots stay unique
  for (auto& [pw, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    Coefficient f = hit->second;
    for (const auto& [w, c] : v) {
      auto [pos, inserted] = row.emplace(w, -(f * c));
      if (!inserted) {
        pos->second -= f * c;
        if (pos->second.is_zero()) row.erase(pos);
      }
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::contains(Vec v) const { return reduce(std::move(v)).empty(); }

bool span_membership(const std::vector<NCPoly>& candidates, const NCPoly& target,
                     const std::vector<Point>& points) {
  if (target.is_zero()) return true;
  for (const auto& pt : points) {
    EchelonBasis basis;
    for (const auto& c : candidates) basis.insert(evaluate(c, pt));
    if (!basis.contains(evaluate(target, pt))) return false;
  }
  return true;
}

int span_rank(const std::vector<NCPoly>& polys, const Point& pt) {
  EchelonBasis basis;
  for (const auto& p : polys) basis.insert(evaluate(p, pt));
  return basis.rank();
}

}  // namespace ckq
