#include "doctest.h"

#include "mackey/field.hpp"
#include "mackey/linalg.hpp"
#include "mackey/poly.hpp"

using namespace mackey;

TEST_CASE("finite field axioms") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 3}, {61, 1}}) {
    GF f(p, m);
    int q = f.size();
    CHECK(f.characteristic() == p);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q) == a);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        int c = (a * 7 + b * 3) % q;
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    // the fixed primitive element has order q-1
    int w = f.primitive(), k = 1;
    for (int x = w; x != 1; x = f.mul(x, w)) ++k;
    CHECK(k == q - 1);
  }
  CHECK(GF(3, 2).format(0) == "0");
  CHECK_THROWS(GF(4, 1));
  CHECK_THROWS(GF(2, 11));
}

TEST_CASE("field is fixed per (p, m)") {
  GF a(3, 2), b(3, 2);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.primitive() == b.primitive());
  CHECK(GF(2, 2).modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("splitting degree") {
  CHECK(splitting_degree(2, 12) == 2);
  CHECK(splitting_degree(3, 12) == 2);
  CHECK(splitting_degree(2, 2) == 1);
  CHECK(splitting_degree(3, 6) == 1);
  CHECK(splitting_degree(2, 6) == 2);
}

TEST_CASE("linear algebra over GF(3)") {
  GF f(3);
  Mat<GF> m(2, 3, f);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 0;
  m(1, 0) = 2, m(1, 1) = 1, m(1, 2) = 0;
  CHECK(rank(f, m) == 1);
  auto ns = nullspace(f, m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero_vec(f, apply(f, m, v)));
  Mat<GF> a(2, 2, f);
  a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 0, a(1, 1) = 2;
  auto inv = inverse(f, a);
  REQUIRE(inv);
  CHECK(matmul(f, a, *inv) == Mat<GF>::identity(2, f));
  Mat<GF> sing(2, 2, f);
  CHECK_FALSE(inverse(f, sing));
}

TEST_CASE("subspace coordinates") {
  GF f(5);
  Subspace<GF> s(f, 3);
  CHECK(s.add({1, 2, 3}));
  CHECK(s.add({0, 1, 4}));
  CHECK_FALSE(s.add({1, 3, 2}));
  auto c = s.coordinates({2, 2, 3});
  REQUIRE(c);
  Vec<GF> back(3, 0);
  axpy(f, back, (*c)[0], s.basis()[0]);
  axpy(f, back, (*c)[1], s.basis()[1]);
  CHECK(back == Vec<GF>{2, 2, 3});
  CHECK_FALSE(s.coordinates({0, 0, 1}));
}

TEST_CASE("rational linear algebra") {
  Rationals q;
  Mat<Rationals> m(2, 2, q);
  m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 4, m(1, 1) = 2;
  CHECK(rank(q, m) == 1);
  auto ns = nullspace(q, m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == Rational(-1, 2));
}

TEST_CASE("polynomials") {
  GF f(3);
  Poly<GF> a{2, 0, 1};  // x^2 - 1
  auto roots = finite_field_roots(f, a);
  CHECK(roots.size() == 2);
  Poly<GF> b{1, 1};  // x + 1
  auto [q, r] = poly_divmod(f, a, b);
  CHECK(r.empty());
  CHECK(q == Poly<GF>{2, 1});
  auto [g, s, t] = poly_xgcd(f, Poly<GF>{1, 0, 1}, Poly<GF>{0, 1});
  CHECK(g == Poly<GF>{1});
  CHECK(poly_add(f, poly_mul(f, s, Poly<GF>{1, 0, 1}), poly_mul(f, t, Poly<GF>{0, 1})) == Poly<GF>{1});
  CHECK(finite_field_roots(f, Poly<GF>{1, 0, 1}).empty());
  auto sq = finite_field_roots(f, poly_mul(f, b, b));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
}
