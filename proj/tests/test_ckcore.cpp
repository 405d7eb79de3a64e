#include <doctest.h>

#include "ckq/ckcore.hpp"

using namespace ckq;

namespace {

NumMatrix kron_num(const NumMatrix& a, const NumMatrix& b) { return kron(a, b); }

// Yang-Baxter defect at one point, computed with plain numeric matrices.
bool ybe_holds(const ScalarMatrix& r, int N, const Point& pt) {
  NumMatrix R = evaluate(r, pt);
  NumMatrix I = identity_num(N);
  NumMatrix P(N * N, N * N);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) P((a - 1) * N + b, (b - 1) * N + a) = 1;
  NumMatrix R12 = kron_num(R, I), R23 = kron_num(I, R);
  NumMatrix P23 = kron_num(I, P);
  NumMatrix R13 = P23 * R12 * P23;
  return R12 * R13 * R23 == R23 * R13 * R12;
}

}  // namespace

TEST_CASE("rho vectors") {
  CHECK(rho(3) == std::vector<Rational>{frac(1, 2), 0, frac(-1, 2)});
  CHECK(rho(4) == std::vector<Rational>{1, 0, 0, -1});
  CHECK(rho(5) == std::vector<Rational>{frac(3, 2), frac(1, 2), 0, frac(-1, 2), frac(-3, 2)});
  for (int N = 2; N <= 6; ++N) {
    auto r = rho2(N);
    for (int k = 1; k <= N; ++k) CHECK(r[k - 1] + r[N - k] == 0);
  }
}

TEST_CASE("range products") {
  CHECK(range_product(1, 3, 3).str() == "j1 j2");
  CHECK(range_product(2, 2, 3).is_one());
  CHECK(range_product(2, 5, 5).str() == "j2 j3 j4");
  for (int k = 1; k <= 5; ++k)
    for (int p = 1; p <= 5; ++p) {
      CHECK(range_product(k, p, 5) == range_product(p, k, 5));
      for (int r = 1; r <= 5; ++r)
        if ((k <= p && p <= r) || (r <= p && p <= k))
          CHECK(range_product(k, p, 5) * range_product(p, r, 5) == range_product(k, r, 5));
    }
}

TEST_CASE("J values") {
  CHECK(J_of(GroupSpec::formal(3, {1, 2, 3})).str() == "j1 j2");
  CHECK(J_of(GroupSpec::formal(3, {2, 1, 3})).str() == "j2");
  CHECK(J_of(GroupSpec::formal(5, {2, 4, 1, 5, 3})).str() == "j2 j4");
  // swapping sigma_k and sigma_k' leaves J unchanged
  GroupSpec g = GroupSpec::formal(5, {3, 1, 5, 2, 4});
  GroupSpec h = g;
  std::swap(h.sigma[0], h.sigma[4]);
  CHECK(J_of(g) == J_of(h));
}

TEST_CASE("generating matrix") {
  PolyMatrix u = generating_matrix(GroupSpec::formal(3, {1, 2, 3}));
  CHECK(u(1, 2).str() == "j1 u12");
  CHECK(u(1, 3).str() == "j1 j2 u13");
  CHECK(u(2, 2).str() == "u22");
  PolyMatrix w = generating_matrix(GroupSpec::formal(3, {2, 1, 3}));
  CHECK(w(1, 1).str() == "u22");
  CHECK(w(1, 2).str() == "j1 u21");
  CHECK(w(1, 3).str() == "j2 u23");
  GroupSpec unit = GroupSpec::make(4, {2, 4, 1, 3}, CKAssignment::all(3, Param::Unit));
  PolyMatrix x = generating_matrix(unit);
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= 4; ++k) CHECK(x(i, k).terms().begin()->first == Word{gen(unit.sig(i), unit.sig(k))});
}

TEST_CASE("D matrix solves Dt C0 D = I") {
  for (int N = 2; N <= 6; ++N) {
    auto [d, dinv] = d_matrix(N);
    NumMatrix c0(N, N);
    for (int i = 1; i <= N; ++i) c0(i, N + 1 - i) = 1;
    CHECK(d.transpose() * c0 * d == identity_num(N));
    CHECK(d * dinv == identity_num(N));
  }
  auto [d, dinv] = d_matrix(3);
  Coefficient h(Gaussian(0), Gaussian(frac(1, 2)));
  CHECK(dinv(1, 1) == h);
  CHECK(dinv(1, 3) == h);
  CHECK(dinv(2, 2) == Coefficient(1));
  CHECK(dinv(3, 1) == Coefficient::i() * h);
  CHECK(dinv(3, 3) == -(Coefficient::i() * h));
}

TEST_CASE("C matrices") {
  for (int N = 3; N <= 5; ++N) {
    GroupSpec g = GroupSpec::formal(N, identity_perm(N));
    CMatrices c = c_matrices(g);
    CHECK(c.ctilde * c.ctilde_inv == identity_matrix(N, N - 1));
    CHECK(c.c * c.c_inv == identity_matrix(N, N - 1));
    Point one{1, 1, std::vector<Rational>(N - 1, 1)};
    CHECK(evaluate(c.c, one) == evaluate(c.c0, one));
    CHECK(evaluate(c.ctilde, one) == identity_num(N));
  }
}

TEST_CASE("R tilde") {
  for (int N = 3; N <= 5; ++N) {
    GroupSpec g = GroupSpec::formal(N, identity_perm(N));
    ScalarMatrix r = r_tilde(g);
    CHECK(r.rows() == N * N);
    Point one{1, 1, std::vector<Rational>(N - 1, 1)};
    CHECK(evaluate(r, one) == identity_num(N * N));
    CHECK(r == r_tilde_conjugated(g));
  }
  for (int N = 3; N <= 4; ++N) {
    GroupSpec g = GroupSpec::formal(N, identity_perm(N));
    ScalarMatrix r = r_tilde(g);
    for (const Point& pt : random_points(7, 3, N - 1)) CHECK(ybe_holds(r, N, pt));
    ScalarMatrix bad = r;
    bad(2, 4) += ExpScalar::t(N - 1, 2);
    CHECK_FALSE(ybe_holds(bad, N, random_points(7, 1, N - 1)[0]));
  }
  CHECK_THROWS(r_tilde(GroupSpec::formal(2, {1, 2})));
}

TEST_CASE("spec JSON round trip") {
  GroupSpec g = GroupSpec::make(4, {1, 3, 4, 2}, {{Param::Nilpotent, Param::Unit, Param::Formal}});
  CHECK(spec_from_json(spec_to_json(g)) == g);
  CHECK_THROWS_AS(spec_from_json(R"({"n":3,"sigma":[1,1,3]})"), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(R"({"n":3,"j":["nil"]})"), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json("not json"), InvalidSpec);
}
