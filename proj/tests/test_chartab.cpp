#include "doctest.h"

#include <algorithm>
#include <memory>

#include "mackey/chartab.hpp"

using namespace mackey;

namespace {

LatticePtr lattice(const char* name) { return std::make_shared<SubgroupLattice>(build_group(name)); }

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CyclotomicField k(3);
  CHECK(k.degree() == 2);
  auto z = k.root(1);
  // 1 + z + z^2 = 0
  CHECK(k.add(k.add(k.from_int(1), z), k.mul(z, z)) == k.zero());
  CHECK(k.mul(z, k.conj(z)) == k.from_int(1));
  CHECK(k.format(k.add(z, k.root(2))) == "-1");
  CyclotomicField k12(12);
  CHECK(k12.degree() == 4);
  CHECK(k12.mul(k12.root(5), k12.root(7)) == k12.from_int(1));
  CHECK(k12.root(6) == k12.from_int(-1));
  CHECK_THROWS_AS(k12.to_rational(k12.root(1)), CertificateError);
  CHECK(CyclotomicField(1).degree() == 1);
  CHECK(character_table(build_group("C1")).degrees() == std::vector<long long>{1});
  CHECK(CyclotomicField(2).root(1) == CyclotomicField(2).from_int(-1));
}

TEST_CASE("conjugacy classes and p-parts") {
  auto g = build_group("SL(2,3)");
  auto c = conjugacy_classes(*g);
  CHECK(c.count() == 7);
  CHECK(c.reps[0] == g->identity);
  int total = 0;
  for (int s : c.sizes) total += s;
  CHECK(total == 24);
  for (int x = 0; x < g->order; ++x) {
    auto [u, s] = p_decomposition(*g, x, 3);
    CHECK(g->mul(u, s) == x);
    CHECK(g->mul(s, u) == x);
    CHECK(is_p_power(g->element_order(u), 3));
    CHECK(g->element_order(s) % 3 != 0);
  }
}

TEST_CASE("character tables") {
  auto c2 = character_table(build_group("C2"));
  REQUIRE(c2.characters.size() == 2);
  CHECK(c2.characters[0].values == std::vector<Cyclotomic>{c2.field.from_int(1), c2.field.from_int(1)});
  CHECK(c2.characters[1].values == std::vector<Cyclotomic>{c2.field.from_int(1), c2.field.from_int(-1)});
  CHECK(character_table(build_group("S3")).degrees() == std::vector<long long>{1, 1, 2});
  auto sl = character_table(build_group("SL(2,3)"));
  CHECK(sl.degrees() == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sl.field.conductor() == 12);
  for (const char* name : {"C6", "D4", "Q8", "A4", "C3xC3", "S4", "C4xC2"}) {
    CAPTURE(name);
    auto g = build_group(name);
    auto t = character_table(g);
    long long sq = 0;
    for (long long d : t.degrees()) sq += d * d;
    CHECK(sq == g->order);
    CHECK(static_cast<int>(t.characters.size()) == t.classes.count());
  }
  CHECK(sl.format().find("# conductor: 12") != std::string::npos);
}

TEST_CASE("lifted Brauer characters") {
  auto s3 = lattice("S3");
  GF f(2, 2);
  CyclotomicField k(6);
  auto reg = permutation_module(regular_gset(s3->group_ptr()), f);
  auto parts = decompose(reg);
  const ModuleRep* simple = nullptr;
  for (const auto& p : parts)
    if (p.multiplicity == 2) simple = &p.module;
  REQUIRE(simple != nullptr);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->group().element_order(x) == 3) three_cycle = x;
  CHECK(lift_brauer_character(*simple, three_cycle, k) == k.from_int(-1));
  CHECK(lift_brauer_character(*simple, s3->group().identity, k) == k.from_int(2));
  auto triv = trivial_module(s3->group_ptr(), f);
  CHECK(lift_brauer_character(triv, three_cycle, k) == k.from_int(1));
  int involution = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->group().element_order(x) == 2) involution = x;
  CHECK_THROWS_AS(lift_brauer_character(triv, involution, k), InputError);
}

TEST_CASE("characters of lifted p-permutation modules") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"S3", 2}, {"S3", 3}, {"A4", 2}, {"SL(2,3)", 3}, {"D4", 2}}) {
    CAPTURE(name);
    auto lat = lattice(name);
    const GroupTable& g = lat->group();
    auto t = character_table(lat->group_ptr());
    GF f(p, splitting_degree(p, g.exponent()));
    // permutation modules: the fixed-point count oracle
    for (int h = 0; h < lat->size(); ++h) {
      auto x = coset_gset(*lat, h);
      auto chi = character_of_lift(permutation_module(x, f), *lat, t);
      for (int k = 0; k < t.classes.count(); ++k) {
        int fixed = 0;
        for (int pt = 0; pt < x.size; ++pt) fixed += x.act(t.classes.reps[k], pt) == pt;
        CHECK(chi.values[k] == t.field.from_int(fixed));
      }
    }
    auto triv = character_of_lift(trivial_module(lat->group_ptr(), f), *lat, t);
    CHECK(decompose_character(t, triv)[0] == 1);
    // additivity over the summands of the regular module
    auto reg = permutation_module(regular_gset(lat->group_ptr()), f);
    auto whole = character_of_lift(reg, *lat, t);
    ClassFunction sum{std::vector<Cyclotomic>(t.classes.count(), t.field.zero())};
    for (const auto& s : decompose(reg)) {
      auto c = character_of_lift(s.module, *lat, t);
      for (int k = 0; k < t.classes.count(); ++k)
        sum.values[k] = t.field.add(sum.values[k], t.field.scale(c.values[k], Rational(s.multiplicity)));
    }
    CHECK(sum.values == whole.values);
    CHECK(whole.values[0] == t.field.from_int(g.order));
    for (int k = 1; k < t.classes.count(); ++k) CHECK(whole.values[k] == t.field.zero());
  }
}

TEST_CASE("non-characters are rejected") {
  auto t = character_table(build_group("C2"));
  ClassFunction half{{t.field.from_int(1), t.field.from_int(0)}};
  CHECK_THROWS_AS(decompose_character(t, half), CertificateError);
  CHECK(sorted(decompose_character(t, ClassFunction{{t.field.from_int(2), t.field.from_int(0)}})) ==
        std::vector<long long>{1, 1});
}
