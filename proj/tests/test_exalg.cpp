#include "doctest.h"

#include "mackey/exalg.hpp"

using namespace mackey;

namespace {

// Number of blocks by brute force: a commutative algebra with r blocks has 2^r idempotents.
int blocks_by_enumeration(const Algebra<GF>& a) {
  auto z = center(a);
  const GF& f = a.field();
  long long total = 1;
  for (std::size_t i = 0; i < z.size(); ++i) total *= f.size();
  long long idems = 0;
  for (long long code = 0; code < total; ++code) {
    Vec<GF> v = a.zero_vector();
    long long r = code;
    for (const auto& b : z) {
      axpy(f, v, static_cast<int>(r % f.size()), b);
      r /= f.size();
    }
    if (a.mul(v, v) == v) ++idems;
  }
  int blocks = 0;
  while ((1LL << blocks) < idems) ++blocks;
  return blocks;
}

Algebra<GF> local_two_dim(const GF& f) {
  // k[e]/(e^2): basis 1, e
  return Algebra<GF>(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0});
}

}  // namespace

TEST_CASE("center of a group algebra") {
  auto s3 = build_group("S3");
  auto a = group_algebra(*s3, GF(2));
  CHECK(center(a).size() == 3);
  auto loc = local_two_dim(GF(3));
  CHECK(center(loc).size() == 2);
  auto c = center(group_algebra(*build_group("C4"), GF(2)));
  CHECK(c.size() == 4);
}

TEST_CASE("block idempotents of group algebras") {
  auto a = group_algebra(*build_group("S3"), GF(2));
  auto b = block_idempotents(a);
  CHECK(b.size() == 2);
  CHECK(block_idempotents(group_algebra(*build_group("C2"), GF(2))).size() == 1);
  auto unit = block_idempotents(group_algebra(*build_group("C2"), GF(2)));
  CHECK(unit[0] == Vec<GF>{1, 0});
}

TEST_CASE("block counts agree with brute-force idempotent enumeration") {
  for (const char* name : {"S3", "C6", "D4", "A4", "Q8"})
    for (int p : {2, 3}) {
      auto a = group_algebra(*build_group(name), GF(p));
      CHECK(static_cast<int>(block_idempotents(a).size()) == blocks_by_enumeration(a));
    }
  auto sl = group_algebra(*build_group("SL(2,3)"), GF(3));
  CHECK(static_cast<int>(block_idempotents(sl).size()) == blocks_by_enumeration(sl));
}

TEST_CASE("radicals") {
  auto c2 = group_algebra(*build_group("C2"), GF(2));
  auto d = primitive_idempotents(c2);
  CHECK(d.idempotents.size() == 1);
  CHECK(d.class_count() == 1);
  CHECK(radical(c2, d).basis.size() == 1);
  auto q3 = group_algebra(*build_group("C3"), Rationals());
  CHECK(radical(q3).basis.empty());
  auto qloc = Algebra<Rationals>(Rationals(), 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0});
  CHECK(radical(qloc).basis.size() == 1);
  auto s3 = group_algebra(*build_group("S3"), GF(2, 2));
  auto ds = primitive_idempotents(s3);
  auto rs = radical(s3, ds);
  CHECK(rs.semisimple_dim == 5);  // simples of dims 1 and 2
}

TEST_CASE("primitive idempotents and Cartan matrices of group algebras") {
  auto s3 = group_algebra(*build_group("S3"), GF(2, 2));
  auto d = primitive_idempotents(s3);
  CHECK(d.idempotents.size() == 3);  // 1 + 2
  CHECK(d.class_count() == 2);
  auto c = cartan_matrix(s3, d);
  CHECK(match_up_to_permutation(c, IntMatrix{{2, 0}, {0, 1}}));
  auto sl = group_algebra(*build_group("SL(2,3)"), GF(3, 2));
  auto dsl = primitive_idempotents(sl);
  long long total = 0;
  auto csl = cartan_matrix(sl, dsl);
  for (int i = 0; i < dsl.class_count(); ++i)
    for (int j = 0; j < dsl.class_count(); ++j) total += dsl.multiplicity[i] * csl[i][j] * dsl.multiplicity[j];
  CHECK(total == 24);
  CHECK(dsl.class_count() == 3);  // 3-regular classes of SL(2,3)
}

TEST_CASE("a non-split algebra is reported") {
  // GF(4) as a 2-dimensional GF(2)-algebra with w^2 = w + 1
  GF f(2);
  Algebra<GF> k4(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}}, {1, 0});
  CHECK_THROWS_AS(primitive_idempotents(k4), FieldTooSmall);
  CHECK(block_idempotents(k4).size() == 1);
}

TEST_CASE("symmetric algebras") {
  for (const char* name : {"C2", "S3", "C4"}) {
    auto a = group_algebra(*build_group(name), GF(2));
    CHECK(is_symmetric_algebra(a).verdict == Verdict::yes);
  }
  // upper triangular 2x2 matrices are not symmetric
  GF f(3);
  // basis E11, E12, E22
  Algebra<GF> tri(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {1, 0, 1});
  CHECK(is_symmetric_algebra(tri).verdict == Verdict::no);
}

TEST_CASE("permutation matching") {
  IntMatrix a{{2, 1}, {1, 3}}, b{{3, 1}, {1, 2}};
  auto p = match_up_to_permutation(a, b);
  REQUIRE(p);
  CHECK(*p == std::vector<int>{1, 0});
  CHECK_FALSE(match_up_to_permutation(a, IntMatrix{{2, 2}, {2, 3}}));
}
