#include "ckq/ckcore.hpp"

#include <algorithm>
#include <json.hpp>

namespace ckq {

void GroupSpec::validate() const {
  if (N < 2) throw InvalidSpec("N must be at least 2");
  if (N > 15) throw InvalidSpec("N must be at most 15");
  if (N - 1 > kMaxParams) throw InvalidSpec("too many parameters");
  if (static_cast<int>(sigma.size()) != N)
    throw InvalidSpec("sigma must have exactly N entries");
  std::vector<int> s = sigma;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < N; ++i)
    if (s[i] != i + 1) throw InvalidSpec("sigma is not a permutation of 1..N");
  if (j.size() != N - 1) throw InvalidSpec("assignment must have N-1 entries");
}

GroupSpec GroupSpec::make(int N, std::vector<int> sigma, CKAssignment j) {
  GroupSpec g{N, std::move(sigma), std::move(j)};
  g.validate();
  return g;
}

GroupSpec GroupSpec::formal(int N, std::vector<int> sigma) {
  return make(N, std::move(sigma), CKAssignment::all(N - 1, Param::Formal));
}

GroupSpec GroupSpec::contracted(int N, std::vector<int> sigma, IndexSet S) {
  CKAssignment a = CKAssignment::all(N - 1, Param::Unit);
  for (int k = 1; k < N; ++k)
    if (contains(S, k)) a.values[k - 1] = Param::Nilpotent;
  return make(N, std::move(sigma), a);
}

std::vector<int> identity_perm(int N) {
  std::vector<int> s(N);
  for (int i = 0; i < N; ++i) s[i] = i + 1;
  return s;
}

int sigma_inverse(const GroupSpec& spec, int x) {
  for (int i = 1; i <= spec.N; ++i)
    if (spec.sig(i) == x) return i;
  throw std::out_of_range("value not in permutation");
}

std::vector<int> rho2(int N) {
  if (N < 2) throw std::invalid_argument("N must be at least 2");
  int n = N / 2;
  std::vector<int> r;
  if (N % 2) {
    for (int i = 0; i < n; ++i) r.push_back(2 * n - 1 - 2 * i);
    r.push_back(0);
    for (int i = 0; i < n; ++i) r.push_back(-1 - 2 * i);
  } else {
    for (int i = 0; i < n; ++i) r.push_back(2 * (n - 1 - i));
    for (int i = 0; i < n; ++i) r.push_back(-2 * i);
  }
  return r;
}

std::vector<Rational> rho(int N) {
  std::vector<Rational> r;
  for (int x : rho2(N)) r.push_back(frac(x, 2));
  return r;
}

ParamMonomial range_product(int k, int p, int N) {
  if (k < 1 || p < 1 || k > N || p > N) throw std::out_of_range("range product index");
  ParamMonomial m(N - 1);
  for (int l = std::min(k, p); l < std::max(k, p); ++l) m.set(l, 1);
  return m;
}

ParamMonomial J_of(const GroupSpec& spec) {
  ParamMonomial J(spec.nparams());
  for (int k = 1; k <= spec.n(); ++k)
    J = J.unite(range_product(spec.sig(k), spec.sig(spec.prime(k)), spec.N));
  return J;
}

PolyMatrix generating_matrix(const GroupSpec& spec) {
  int N = spec.N;
  PolyMatrix u(N, N);
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      int a = spec.sig(i), b = spec.sig(k);
      u(i, k) = NCPoly::generator(gen(a, b), ExpScalar::param(range_product(a, b, N)));
    }
  return u;
}

std::pair<NumMatrix, NumMatrix> d_matrix(int N) {
  int n = N / 2;
  Coefficient h(Gaussian(0), Gaussian(frac(1, 2)));  // 1/sqrt 2
  Coefficient ih = Coefficient::i() * h;
  NumMatrix dinv(N, N);
  for (int k = 1; k <= n; ++k) {
    int kp = N + 1 - k;
    dinv(k, k) = h;
    dinv(k, kp) = h;
    dinv(kp, k) = ih;
    dinv(kp, kp) = -ih;
  }
  if (N % 2) dinv(n + 1, n + 1) = 1;
  NumMatrix d(N, N);
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k) {
      const Coefficient& x = dinv(k, i);
      d(i, k) = Coefficient(x.a().conj(), x.b().conj());
    }
  return {d, dinv};
}

ScalarMatrix to_scalar(const NumMatrix& m, int nparams) {
  return m.map([nparams](const Coefficient& c) { return ExpScalar(nparams, c); });
}

CMatrices c_matrices(const GroupSpec& spec) {
  int N = spec.N, np = spec.nparams();
  std::vector<int> r2 = rho2(N);
  CMatrices out;
  out.c0 = ScalarMatrix(N, N, ExpScalar(np));
  out.c = out.c0;
  out.c_inv = out.c0;
  for (int i = 1; i <= N; ++i) {
    int ip = N + 1 - i;
    out.c0(i, ip) = ExpScalar(np, 1);
    out.c(i, ip) = ExpScalar::t(np, r2[ip - 1]);
    out.c_inv(i, ip) = ExpScalar::t(np, -r2[i - 1]);
  }
  auto [d, dinv] = d_matrix(N);
  ScalarMatrix D = to_scalar(d, np), Dinv = to_scalar(dinv, np);
  out.ctilde = Dinv * out.c * Dinv.transpose();
  out.ctilde_inv = D.transpose() * out.c_inv * D;
  return out;
}

namespace {

class RBuilder {
 public:
  RBuilder(int N, int np) : N_(N), r_(identity_matrix(N * N, np)) {}

  /// Adds c * e_{ab} (x) e_{cd}.
  void add(const ExpScalar& c, int a, int b, int cc, int d) {
    r_((a - 1) * N_ + cc, (b - 1) * N_ + d) += c;
  }

  ScalarMatrix take() { return std::move(r_); }

 private:
  int N_;
  ScalarMatrix r_;
};

}  // namespace

ScalarMatrix r_tilde(const GroupSpec& spec) {
  int N = spec.N, np = spec.nparams(), n = spec.n();
  if (N < 3) throw std::invalid_argument("R-matrix requires N >= 3");
  bool odd = N % 2 == 1;
  std::vector<int> r2 = rho2(N);
  auto P = [N](int k) { return N + 1 - k; };
  const Coefficient I = Coefficient::i();

  ExpScalar lam = ExpScalar::t(np, 2) - ExpScalar::t(np, -2);
  ExpScalar half_lam = Coefficient(frac(1, 2)) * lam;
  ExpScalar quarter_lam = Coefficient(frac(1, 4)) * lam;
  ExpScalar diag = Coefficient(frac(1, 2)) * (ExpScalar::t(np, 2) - ExpScalar(np, 2) + ExpScalar::t(np, -2));

  RBuilder R(N, np);
  for (int k = 1; k <= N; ++k) {
    int kp = P(k);
    if (k == kp) continue;
    R.add(diag, k, k, k, k);
    R.add(diag, k, k, kp, kp);
    R.add(half_lam, kp, k, k, kp);
    R.add(-half_lam, kp, k, kp, k);
  }

  if (odd) {
    int m = n + 1;
    for (int k = 1; k <= n; ++k) {
      int kp = P(k);
      ExpScalar a = half_lam;
      ExpScalar ai = I * half_lam;
      R.add(a, kp, m, m, kp);
      R.add(-ai, kp, m, m, k);
      R.add(ai, k, m, m, kp);
      R.add(a, k, m, m, k);
      R.add(a, m, k, k, m);
      R.add(ai, m, k, kp, m);
      R.add(-ai, m, kp, k, m);
      R.add(a, m, kp, kp, m);

      ExpScalar b = -(half_lam * ExpScalar::t(np, -r2[k - 1]));
      ExpScalar bi = I * b;
      R.add(-bi, kp, m, k, m);
      R.add(b, kp, m, kp, m);
      R.add(b, k, m, k, m);
      R.add(bi, k, m, kp, m);
      R.add(bi, m, k, m, kp);
      R.add(b, m, k, m, k);
      R.add(b, m, kp, m, kp);
      R.add(-bi, m, kp, m, k);
    }
  }

  int mid = odd ? n + 1 : 0;
  for (int k = 1; k <= N; ++k)
    for (int p = 1; p < k; ++p) {
      if (k == mid || p == mid) continue;
      int kp = P(k), pp = P(p);
      ExpScalar a = quarter_lam;
      ExpScalar ai = I * a;
      R.add(a, k, p, p, k);
      R.add(a, k, p, pp, kp);
      R.add(ai, k, p, pp, k);
      R.add(-ai, k, p, p, kp);
      R.add(a, kp, pp, p, k);
      R.add(a, kp, pp, pp, kp);
      R.add(ai, kp, pp, pp, k);
      R.add(-ai, kp, pp, p, kp);
      R.add(ai, kp, p, p, k);
      R.add(ai, kp, p, pp, kp);
      R.add(-a, kp, p, pp, k);
      R.add(a, kp, p, p, kp);
      R.add(-ai, k, pp, p, k);
      R.add(-ai, k, pp, pp, kp);
      R.add(a, k, pp, pp, k);
      R.add(-a, k, pp, p, kp);

      ExpScalar b = -(quarter_lam * ExpScalar::t(np, r2[k - 1] - r2[p - 1]));
      ExpScalar bi = I * b;
      R.add(b, k, p, kp, pp);
      R.add(b, k, p, k, p);
      R.add(bi, k, p, k, pp);
      R.add(-bi, k, p, kp, p);
      R.add(b, kp, pp, kp, pp);
      R.add(b, kp, pp, k, p);
      R.add(bi, kp, pp, k, pp);
      R.add(-bi, kp, pp, kp, p);
      R.add(bi, kp, p, kp, pp);
      R.add(bi, kp, p, k, p);
      R.add(-b, kp, p, k, pp);
      R.add(b, kp, p, kp, p);
      R.add(-bi, k, pp, kp, pp);
      R.add(-bi, k, pp, k, p);
      R.add(b, k, pp, k, pp);
      R.add(-b, k, pp, kp, p);
    }
  return R.take();
}

ScalarMatrix r_symplectic(int N, int np) {
  std::vector<int> r2 = rho2(N);
  auto P = [N](int k) { return N + 1 - k; };
  ScalarMatrix R(N * N, N * N, ExpScalar(np));
  auto at = [&](int a, int b, int c, int d) -> ExpScalar& { return R((a - 1) * N + c, (b - 1) * N + d); };
  ExpScalar lam = ExpScalar::t(np, 2) - ExpScalar::t(np, -2);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) at(i, i, i, i) = i == P(i) ? ExpScalar(np, 1) : ExpScalar::t(np, 2);
      else if (j == P(i)) at(i, i, j, j) = ExpScalar::t(np, -2);
      else at(i, i, j, j) = ExpScalar(np, 1);
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < i; ++j) {
      at(i, j, j, i) += lam;
      at(i, j, P(i), P(j)) -= lam * ExpScalar::t(np, r2[i - 1] - r2[j - 1]);
    }
  return R;
}

ScalarMatrix r_tilde_conjugated(const GroupSpec& spec) {
  int np = spec.nparams();
  auto [d, dinv] = d_matrix(spec.N);
  ScalarMatrix DD = to_scalar(kron(d, d), np);
  ScalarMatrix DDinv = to_scalar(kron(dinv, dinv), np);
  return DDinv * r_symplectic(spec.N, np) * DD;
}

YbeResult check_yang_baxter(const ScalarMatrix& r, int N, const std::vector<Point>& points) {
  NumMatrix I = identity_num(N);
  NumMatrix P(N * N, N * N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) P((a - 1) * N + b, (b - 1) * N + a) = 1;
  NumMatrix P23 = kron(I, P);
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    NumMatrix R = evaluate(r, points[pi]);
    NumMatrix R12 = kron(R, I), R23 = kron(I, R);
    NumMatrix R13 = P23 * R12 * P23;
    NumMatrix lhs = R12 * R13 * R23, rhs = R23 * R13 * R12;
    for (int x = 1; x <= lhs.rows(); ++x)
      for (int y = 1; y <= lhs.cols(); ++y) {
        if (lhs(x, y) == rhs(x, y)) continue;
        auto triple = [N](int z) {
          int a = (z - 1) / (N * N) + 1, b = (z - 1) / N % N + 1, c = (z - 1) % N + 1;
          return std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c);
        };
        return {false, "(" + triple(x) + " | " + triple(y) + ") at point " + std::to_string(pi)};
      }
  }
  return {};
}

ScalarMatrix flip_matrix(int N, int np) {
  ScalarMatrix P(N * N, N * N, ExpScalar(np));
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) P((a - 1) * N + b, (b - 1) * N + a) = ExpScalar(np, 1);
  return P;
}

std::string param_name(Param p) {
  switch (p) {
    case Param::Unit: return "unit";
    case Param::Nilpotent: return "nil";
    case Param::Imaginary: return "im";
    case Param::Formal: return "formal";
  }
  return "formal";
}

Param parse_param(const std::string& s) {
  if (s == "unit" || s == "1") return Param::Unit;
  if (s == "nil" || s == "iota") return Param::Nilpotent;
  if (s == "im" || s == "i") return Param::Imaginary;
  if (s == "formal") return Param::Formal;
  throw InvalidSpec("unknown parameter value '" + s + "'");
}

std::string spec_to_json(const GroupSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.N;
  j["sigma"] = spec.sigma;
  std::vector<std::string> vals;
  for (Param p : spec.j.values) vals.push_back(param_name(p));
  j["j"] = vals;
  return j.dump();
}

GroupSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpec(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InvalidSpec("spec needs an integer field \"n\"");
  int N = j["n"].get<int>();
  if (N < 2 || N > 9) throw InvalidSpec("n must lie in 2..9");
  std::vector<int> sigma = identity_perm(N);
  if (j.contains("sigma")) {
    if (!j["sigma"].is_array()) throw InvalidSpec("\"sigma\" must be an array");
    sigma.clear();
    for (const auto& x : j["sigma"]) {
      if (!x.is_number_integer()) throw InvalidSpec("\"sigma\" entries must be integers");
      sigma.push_back(x.get<int>());
    }
  }
  CKAssignment a = CKAssignment::all(N - 1, Param::Formal);
  if (j.contains("j")) {
    if (!j["j"].is_array()) throw InvalidSpec("\"j\" must be an array");
    a.values.clear();
    for (const auto& x : j["j"]) {
      if (!x.is_string()) throw InvalidSpec("\"j\" entries must be strings");
      a.values.push_back(parse_param(x.get<std::string>()));
    }
  }
  return GroupSpec::make(N, std::move(sigma), std::move(a));
}

}  // namespace ckq
