#include <doctest.h>

#include "ckq/tensoralg.hpp"

using namespace ckq;

namespace {

NCPoly g(int a, int b) { return NCPoly::generator(gen(a, b), ExpScalar(2, 1)); }
ExpScalar c(long v) { return ExpScalar(2, Coefficient(v)); }

}  // namespace

TEST_CASE("noncommutative products") {
  NCPoly x = g(1, 2), y = g(2, 3);
  CHECK_FALSE(x * y == y * x);
  CHECK(ncp_commutator(x, y).str() == "u12 u23 - u23 u12");
  CHECK((x * x).str() == "u12^2");
  CHECK(((x + y) * (x - y)).size() == 4);
  CHECK((x - x).is_zero());
  NCPoly jx = NCPoly::generator(gen(1, 2), ExpScalar::j(2, 1));
  CHECK(ncp_mul(jx, jx, index_set({1})).is_zero());
  CHECK_FALSE(ncp_mul(jx, jx, 0).is_zero());
}

TEST_CASE("generator substitution is a homomorphism") {
  GenMap m{{gen(1, 1), NCPoly(c(1))}, {gen(3, 1), -g(1, 3) + g(1, 2) * g(2, 3)}};
  NCPoly p = g(1, 1) * g(3, 1) + g(2, 2);
  NCPoly q = substitute_generators(p, m);
  CHECK(q == -g(1, 3) + g(1, 2) * g(2, 3) + g(2, 2));
  NCPoly a = g(3, 1) + g(1, 1), b = g(3, 1) * g(2, 2);
  CHECK(substitute_generators(a * b, m) == substitute_generators(a, m) * substitute_generators(b, m));
}

TEST_CASE("tensors") {
  Tensor t = Tensor::pure({g(1, 1), g(1, 3)}) + Tensor::pure({g(1, 3), g(3, 3)});
  CHECK(t.arity() == 2);
  CHECK(t.str() == "u11⊗u13 + u13⊗u33");
  Tensor sq = t * t;
  CHECK(sq.terms().size() == 4);
  NCPoly flat = t.multiply_out();
  CHECK(flat == g(1, 1) * g(1, 3) + g(1, 3) * g(3, 3));
  // expand the second slot into a 2-fold tensor
  Tensor three = t.map_factor(1, [](const Word& w) { return Tensor::pure({NCPoly::word(w, c(1)), NCPoly(c(1))}); });
  CHECK(three.arity() == 3);
  CHECK(three.terms().size() == 2);
  CHECK_THROWS(t.add_term({Word{}}, c(1)));
}

TEST_CASE("matrices") {
  ScalarMatrix a(2, 2, ExpScalar(2));
  a(1, 1) = c(1);
  a(1, 2) = ExpScalar::t(2, 1);
  a(2, 2) = c(1);
  ScalarMatrix b = a;
  b(1, 2) = -ExpScalar::t(2, 1);
  CHECK(a * b == identity_matrix(2, 2));
  CHECK(kron(a, identity_matrix(2, 2))(1, 3) == ExpScalar::t(2, 1));
  CHECK(permutation_matrix({2, 3, 1}, 2)(1, 2) == c(1));
  CHECK_THROWS(permutation_matrix({1, 1, 2}, 2));
  CHECK_THROWS(a * ScalarMatrix(3, 3));
}

TEST_CASE("span membership") {
  NCPoly x = g(1, 2), y = g(2, 1);
  NCPoly tx = NCPoly::generator(gen(1, 2), ExpScalar::t(2, 1));
  auto pts = random_points(11, 3, 2);
  CHECK(span_membership({x + y, x - y}, x, pts));
  CHECK(span_membership({tx}, x, pts));
  CHECK_FALSE(span_membership({x + y}, x, pts));
  CHECK(span_rank({x + y, x - y, x}, pts[0]) == 2);
  EchelonBasis e;
  CHECK(e.insert(evaluate(x + y, pts[0])));
  CHECK_FALSE(e.insert(evaluate(Coefficient(3) * ExpScalar(2, 1) * (x + y), pts[0])));
  CHECK(random_points(5, 2, 2)[1].t == random_points(5, 2, 2)[1].t);
}
