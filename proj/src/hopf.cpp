#include "ckq/hopf.hpp"

#include <stdexcept>

namespace ckq {

std::vector<NCPoly> polys(const RelationSet& rs) {
  std::vector<NCPoly> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r.poly);
  return out;
}

namespace {

std::string tag(const char* kind, int i, int k) {
  return std::string(kind) + "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

PolyMatrix relation_matrix(const RelationSet& rs, int N) {
  PolyMatrix m(N, N);
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) m(i, k) = rs[(i - 1) * N + (k - 1)].poly;
  return m;
}

}  // namespace

RelationSet ruu_relations(const GroupSpec& spec) { return ruu_relations(spec, r_tilde(spec)); }

RelationSet ruu_relations(const GroupSpec& spec, const ScalarMatrix& rt) {
  int N = spec.N, N2 = N * N;
  PolyMatrix U = generating_matrix(spec);
  // pair(a,b,k,l) = U_ak U_bl
  std::vector<NCPoly> pair(N2 * N2);
  auto idx = [N, N2](int a, int b, int k, int l) { return ((a - 1) * N + (b - 1)) * N2 + (k - 1) * N + (l - 1); };
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) pair[idx(a, b, k, l)] = U(a, k) * U(b, l);

  RelationSet out;
  out.reserve(N2 * N2);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          int row = (i - 1) * N + j, col = (k - 1) * N + l;
          NCPoly e;
          for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
              const ExpScalar& left = rt(row, (a - 1) * N + b);
              if (!left.is_zero()) e += left * pair[idx(a, b, k, l)];
              const ExpScalar& right = rt((a - 1) * N + b, col);
              if (!right.is_zero()) e -= right * pair[idx(j, i, b, a)];
            }
          out.push_back({tag("RUU", row, col), std::move(e)});
        }
  return out;
}

std::pair<RelationSet, RelationSet> orthogonality_relations(const GroupSpec& spec) {
  int N = spec.N;
  PolyMatrix U = generating_matrix(spec);
  CMatrices c = c_matrices(spec);
  RelationSet first, second;
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      NCPoly e1 = NCPoly(-c.ctilde(i, k));
      NCPoly e2 = NCPoly(-c.ctilde_inv(i, k));
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          if (!c.ctilde(a, b).is_zero()) e1 += U(i, a) * (c.ctilde(a, b) * U(k, b));
          if (!c.ctilde_inv(a, b).is_zero()) e2 += U(a, i) * (c.ctilde_inv(a, b) * U(b, k));
        }
      first.push_back({tag("ORTH1", i, k), std::move(e1)});
      second.push_back({tag("ORTH2", i, k), std::move(e2)});
    }
  return {first, second};
}

ParamMonomial coproduct_factor(const GroupSpec& spec, int i, int k, int r) {
  int N = spec.N;
  int a = spec.sig(i), b = spec.sig(k), m = spec.sig(r);
  ParamMonomial num = range_product(a, m, N) * range_product(m, b, N);
  ParamMonomial den = range_product(a, b, N);
  if (!num.divisible_by(den)) throw std::logic_error("coproduct factor is not polynomial");
  return num / den;
}

Matrix<Tensor> coproduct(const GroupSpec& spec) {
  int N = spec.N;
  Matrix<Tensor> d(N, N, Tensor(2));
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      for (int r = 1; r <= N; ++r) {
        Word left{gen(spec.sig(i), spec.sig(r))}, right{gen(spec.sig(r), spec.sig(k))};
        d(i, k).add_term({left, right}, ExpScalar::param(coproduct_factor(spec, i, k, r)));
      }
  return d;
}

GenTensorMap coproduct_map(const GroupSpec& spec) {
  Matrix<Tensor> d = coproduct(spec);
  GenTensorMap out;
  for (int i = 1; i <= spec.N; ++i)
    for (int k = 1; k <= spec.N; ++k) out[gen(spec.sig(i), spec.sig(k))] = d(i, k);
  return out;
}

std::map<Gen, int> counit(const GroupSpec& spec) {
  std::map<Gen, int> e;
  for (int a = 1; a <= spec.N; ++a)
    for (int b = 1; b <= spec.N; ++b) e[gen(a, b)] = a == b ? 1 : 0;
  return e;
}

PolyMatrix antipode_matrix(const GroupSpec& spec) {
  CMatrices c = c_matrices(spec);
  PolyMatrix U = generating_matrix(spec);
  return to_poly(c.ctilde) * U.transpose() * to_poly(c.ctilde_inv);
}

GenPolyMap antipode_generators(const GroupSpec& spec) {
  PolyMatrix s = antipode_matrix(spec);
  GenPolyMap out;
  for (int a = 1; a <= spec.N; ++a)
    for (int b = 1; b <= spec.N; ++b) {
      ParamMonomial m = range_product(spec.sig(a), spec.sig(b), spec.N);
      out[gen(spec.sig(a), spec.sig(b))] =
          s(a, b).map_coefficients([&m](const ExpScalar& x) { return divide_param(x, m, 0); });
    }
  return out;
}

namespace {

// One term of a closed-form antipode entry: coef * u_{s_x s_y} * (s_n1, s_n2) / (s_d1, s_d2).
struct ClosedTerm {
  int x, y;
  int n1, n2;
  int d1, d2;
  ExpScalar coef;
};

}  // namespace

GenPolyMap antipode_closed_form(const GroupSpec& spec) {
  int N = spec.N, n = spec.n(), np = spec.nparams();
  bool odd = N % 2 == 1;
  std::vector<int> r2 = rho2(N);
  auto P = [N](int k) { return N + 1 - k; };
  // n+1+k for odd N, n+k for even N; in both cases the partner of n+1-k
  auto L = [&](int k) { return P(n + 1 - k); };
  auto ch = [&](int a) { return cosh_t(np, r2[a - 1]); };
  auto sh = [&](int a) { return sinh_t(np, r2[a - 1]); };
  const Coefficient I = Coefficient::i();

  std::map<std::pair<int, int>, std::vector<ClosedTerm>> table;
  auto put = [&](int a, int b, std::vector<ClosedTerm> terms) { table[{a, b}] = std::move(terms); };

  if (odd) {
    int m = n + 1;
    put(m, m, {{m, m, m, m, m, m, ExpScalar(np, 1)}});
    for (int k = 1; k <= n; ++k) {
      int K = L(k), kk = n + 1 - k;
      put(k, m, {{m, k, k, m, k, m, ch(k)}, {m, P(k), P(k), m, k, m, I * sh(k)}});
      put(m, k, {{k, m, k, m, k, m, ch(k)}, {P(k), m, P(k), m, k, m, I * sh(k)}});
      put(K, m, {{m, K, K, m, K, m, ch(kk)}, {m, kk, kk, m, K, m, -(I * sh(kk))}});
      put(m, K, {{K, m, K, m, K, m, ch(kk)}, {kk, m, kk, m, K, m, -(I * sh(kk))}});
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int p = 1; p <= n; ++p) {
      int K = L(k), Pp = L(p), kk = n + 1 - k, qq = n + 1 - p;
      put(k, p, {{p, k, k, p, k, p, ch(k) * ch(p)},
                 {P(p), P(k), P(k), P(p), k, p, -(sh(k) * sh(p))},
                 {p, P(k), P(k), p, k, p, I * (sh(k) * ch(p))},
                 {P(p), k, k, P(p), k, p, I * (ch(k) * sh(p))}});
      put(k, Pp, {{Pp, k, k, Pp, k, Pp, ch(k) * ch(qq)},
                  {qq, P(k), P(k), qq, k, Pp, sh(k) * sh(qq)},
                  {Pp, P(k), P(k), Pp, k, Pp, I * (sh(k) * ch(qq))},
                  {qq, k, k, qq, k, Pp, -(I * (ch(k) * sh(qq)))}});
      put(K, p, {{p, K, K, p, K, p, ch(kk) * ch(p)},
                 {P(p), kk, kk, P(p), K, p, sh(kk) * sh(p)},
                 {P(p), K, K, P(p), K, p, I * (ch(kk) * sh(p))},
                 {p, kk, kk, p, K, p, -(I * (sh(kk) * ch(p)))}});
      put(K, Pp, {{Pp, K, K, Pp, K, Pp, ch(kk) * ch(qq)},
                  {qq, kk, kk, qq, K, Pp, -(sh(kk) * sh(qq))},
                  {qq, K, K, qq, K, Pp, -(I * (ch(kk) * sh(qq)))},
                  {Pp, kk, kk, Pp, K, Pp, -(I * (sh(kk) * ch(qq)))}});
    }

  GenPolyMap out;
  for (const auto& [pos, terms] : table) {
    auto [a, b] = pos;
    NCPoly s;
    for (const auto& t : terms) {
      ParamMonomial num = range_product(spec.sig(t.n1), spec.sig(t.n2), N);
      ParamMonomial den = range_product(spec.sig(t.d1), spec.sig(t.d2), N);
      s += NCPoly::generator(gen(spec.sig(t.x), spec.sig(t.y)), t.coef * ExpScalar::param(num / den));
    }
    out[gen(spec.sig(a), spec.sig(b))] = std::move(s);
  }
  if (static_cast<int>(out.size()) != N * N) throw std::logic_error("closed-form antipode table incomplete");
  return out;
}

PolyMatrix antipode_closed_form_matrix(const GroupSpec& spec) {
  GenPolyMap s = antipode_closed_form(spec);
  int N = spec.N;
  PolyMatrix m(N, N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      m(a, b) = ExpScalar::param(range_product(spec.sig(a), spec.sig(b), N)) * s.at(gen(spec.sig(a), spec.sig(b)));
  return m;
}

Tensor delta_word(const Word& w, const GenTensorMap& delta, int nparams) {
  Tensor r = Tensor::pure({NCPoly(ExpScalar(nparams, 1)), NCPoly(ExpScalar(nparams, 1))});
  for (Gen g : w) r = r * delta.at(g);
  return r;
}

NCPoly antipode_word(const Word& w, const GenPolyMap& s, int nparams) {
  NCPoly r(ExpScalar(nparams, 1));
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * s.at(*it);
  return r;
}

bool HopfReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

AxiomCheck check_coassociativity(const GenTensorMap& delta, int nparams) {
  AxiomCheck c{"coassociativity", true, ""};
  auto dw = [&](const Word& w) { return delta_word(w, delta, nparams); };
  for (const auto& [g, d] : delta) {
    if (d.map_factor(0, dw) != d.map_factor(1, dw)) {
      c.ok = false;
      c.detail = "fails on " + gen_str(g);
      return c;
    }
  }
  return c;
}

namespace {

int eps_word(const Word& w, const std::map<Gen, int>& eps) {
  int e = 1;
  for (Gen g : w) e *= eps.at(g);
  return e;
}

}  // namespace

AxiomCheck check_counit(const GenTensorMap& delta, const std::map<Gen, int>& eps, int nparams) {
  AxiomCheck c{"counit", true, ""};
  for (const auto& [g, d] : delta) {
    NCPoly left, right;
    for (const auto& [key, coef] : d.terms()) {
      if (int e = eps_word(key[0], eps)) left.add_term(key[1], Coefficient(e) * coef);
      if (int e = eps_word(key[1], eps)) right.add_term(key[0], Coefficient(e) * coef);
    }
    NCPoly self = NCPoly::generator(g, ExpScalar(nparams, 1));
    if (left != self || right != self) {
      c.ok = false;
      c.detail = "fails on " + gen_str(g);
      return c;
    }
  }
  return c;
}

std::vector<std::pair<Gen, NCPoly>> antipode_residuals(const GenTensorMap& delta, const GenPolyMap& s,
                                                       const std::map<Gen, int>& eps, int nparams) {
  std::vector<std::pair<Gen, NCPoly>> out;
  for (const auto& [g, d] : delta) {
    NCPoly left(ExpScalar(nparams, Coefficient(-eps.at(g))));
    NCPoly right = left;
    for (const auto& [key, coef] : d.terms()) {
      left += coef * (antipode_word(key[0], s, nparams) * NCPoly::word(key[1], ExpScalar(nparams, 1)));
      right += coef * (NCPoly::word(key[0], ExpScalar(nparams, 1)) * antipode_word(key[1], s, nparams));
    }
    out.emplace_back(g, std::move(left));
    out.emplace_back(g, std::move(right));
  }
  return out;
}

HopfReport verify_hopf_axioms(const GroupSpec& spec) {
  int N = spec.N, np = spec.nparams();
  HopfReport rep;
  GenTensorMap delta = coproduct_map(spec);
  rep.checks.push_back(check_coassociativity(delta, np));
  rep.checks.push_back(check_counit(delta, counit(spec), np));

  AxiomCheck closed{"antipode closed form", true, ""};
  GenPolyMap sm = antipode_generators(spec), sc = antipode_closed_form(spec);
  for (const auto& [g, p] : sm)
    if (sc.at(g) != p) {
      closed.ok = false;
      closed.detail = "S(" + gen_str(g) + ") differs";
      break;
    }
  rep.checks.push_back(closed);

  CMatrices c = c_matrices(spec);
  PolyMatrix U = generating_matrix(spec);
  PolyMatrix S = antipode_closed_form_matrix(spec);
  PolyMatrix I = to_poly(identity_matrix(N, np));
  auto [o1, o2] = orthogonality_relations(spec);
  PolyMatrix lhs_left = S * U - I;
  PolyMatrix rhs_left = to_poly(c.ctilde) * relation_matrix(o2, N);
  PolyMatrix lhs_right = U * S - I;
  PolyMatrix rhs_right = relation_matrix(o1, N) * to_poly(c.ctilde_inv);
  AxiomCheck left{"antipode S(U)U = I", true, ""}, right{"antipode U S(U) = I", true, ""};
  for (int i = 1; i <= N && left.ok; ++i)
    for (int k = 1; k <= N; ++k)
      if (lhs_left(i, k) != rhs_left(i, k)) {
        left.ok = false;
        left.detail = "entry (" + std::to_string(i) + "," + std::to_string(k) + ")";
        break;
      }
  for (int i = 1; i <= N && right.ok; ++i)
    for (int k = 1; k <= N; ++k)
      if (lhs_right(i, k) != rhs_right(i, k)) {
        right.ok = false;
        right.detail = "entry (" + std::to_string(i) + "," + std::to_string(k) + ")";
        break;
      }
  rep.checks.push_back(left);
  rep.checks.push_back(right);
  return rep;
}

}  // namespace ckq
