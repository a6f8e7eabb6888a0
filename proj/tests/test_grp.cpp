#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "mackey/error.hpp"
#include "mackey/grp.hpp"

using namespace mackey;

TEST_CASE("builtin groups") {
  CHECK(build_group("C2")->order == 2);
  auto s3 = build_group("S3");
  CHECK(s3->order == 6);
  CHECK(s3->generators.size() == 2);
  CHECK(build_group("SL(2,3)")->order == 24);
  CHECK(build_group("Q8")->order == 8);
  CHECK(build_group("D4")->order == 8);
  CHECK(build_group("A4")->order == 12);
  CHECK(build_group("C2xC3")->order == 6);
  CHECK(build_group("C3:C2[2]")->order == 6);
  CHECK(build_group("C1")->order == 1);
  CHECK_THROWS_AS(build_group("Z7"), InputError);
  CHECK_THROWS_AS(build_group("C65"), LimitError);
}

TEST_CASE("Q8 and SL(2,3) have the right structure") {
  auto q8 = build_group("Q8");
  int involutions = 0;
  for (int g = 0; g < 8; ++g) involutions += q8->element_order(g) == 2;
  CHECK(involutions == 1);
  auto sl = build_group("SL(2,3)");
  CHECK(sl->exponent() == 12);
}

TEST_CASE("subgroup lattices") {
  SubgroupLattice c2(build_group("C2"));
  CHECK(c2.size() == 2);
  CHECK(c2.class_count() == 2);
  SubgroupLattice s3(build_group("S3"));
  CHECK(s3.size() == 6);
  CHECK(s3.class_count() == 4);
  SubgroupLattice sl(build_group("SL(2,3)"));
  CHECK(sl.size() == 15);
  CHECK(sl.class_count() == 7);
  CHECK(SubgroupLattice(build_group("D4")).size() == 10);
  CHECK(SubgroupLattice(build_group("A4")).size() == 10);
  CHECK_THROWS_AS(SubgroupLattice(build_group("S3"), 4), LimitError);
}

TEST_CASE("lattice is exhaustive on small groups") {
  for (const char* name : {"C4", "S3", "D4", "Q8"}) {
    auto g = build_group(name);
    SubgroupLattice lat(g);
    int count = 0;
    for (Mask m = 1; m < (Mask{1} << g->order); ++m)
      if (is_subgroup(*g, m)) ++count;
    CHECK(count == lat.size());
  }
}

TEST_CASE("conjugation preserves classes") {
  SubgroupLattice lat(build_group("SL(2,3)"));
  for (int x = 0; x < 24; ++x)
    for (int h = 0; h < lat.size(); ++h) CHECK(lat.class_of(lat.conjugate(x, h)) == lat.class_of(h));
}

TEST_CASE("double cosets") {
  auto s3 = build_group("S3");
  SubgroupLattice lat(s3);
  int c2 = 1, c3 = 4;
  REQUIRE(lat.order(c2) == 2);
  REQUIRE(lat.order(c3) == 3);
  CHECK(double_cosets(*s3, lat.mask(c2), lat.mask(c2)).size() == 2);
  CHECK(double_cosets(*s3, lat.mask(c2), lat.mask(c3)).size() == 1);
  auto c2g = build_group("C2");
  CHECK(double_cosets(*c2g, c2g->all(), c2g->all()) == std::vector<int>{0});
  for (int h = 0; h < lat.size(); ++h)
    for (int l = 0; l < lat.size(); ++l) {
      int total = 0;
      for (int x : double_cosets(*s3, lat.mask(h), lat.mask(l))) {
        Mask dc = double_coset(*s3, lat.mask(h), x, lat.mask(l));
        CHECK(members(dc).front() == x);
        total += popcount(dc);
      }
      CHECK(total == 6);
    }
}

TEST_CASE("quotients") {
  auto c2 = build_group("C2");
  CHECK(quotient_group(*c2, c2->all()).group->order == 1);
  auto s3 = build_group("S3");
  SubgroupLattice lat(s3);
  CHECK(quotient_group(*s3, lat.mask(4)).group->order == 2);
  CHECK_THROWS_AS(quotient_group(*s3, lat.mask(1)), InputError);
  auto sl = build_group("SL(2,3)");
  SubgroupLattice sll(sl);
  int q8 = -1;
  for (int h = 0; h < sll.size(); ++h)
    if (sll.order(h) == 8) q8 = h;
  auto q = quotient_group(*sl, sll.mask(q8));
  CHECK(q.group->order == 3);
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      CHECK(q.projection[sl->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  int kernel = 0;
  for (int a = 0; a < 24; ++a) kernel += q.projection[a] == q.group->identity;
  CHECK(kernel == 8);
}

TEST_CASE("p-subgroup classes and Sylow counts") {
  SubgroupLattice c2(build_group("C2"));
  CHECK(p_subgroup_classes(c2, 2).size() == 2);
  SubgroupLattice s3(build_group("S3"));
  auto cls = p_subgroup_classes(s3, 2);
  REQUIRE(cls.size() == 2);
  CHECK(s3.order(cls[1].rep) == 2);
  CHECK(cls[1].sylow);
  SubgroupLattice sl(build_group("SL(2,3)"));
  auto c3 = p_subgroup_classes(sl, 3);
  REQUIRE(c3.size() == 2);
  CHECK(sl.order(c3[1].rep) == 3);
  for (const char* name : {"S3", "D4", "A4", "SL(2,3)", "C6", "Q8"}) {
    SubgroupLattice lat(build_group(name));
    for (int p : {2, 3}) {
      int sylow = p_part(lat.group().order, p);
      int count = 0;
      for (int h = 0; h < lat.size(); ++h) count += lat.order(h) == sylow;
      CHECK(count % p == 1 % p);
    }
  }
  CHECK(normal_p_complement(s3, 2) >= 0);
  CHECK(normal_p_complement(sl, 3) >= 0);
  CHECK(normal_p_complement(SubgroupLattice(build_group("A4")), 2) < 0);
}

TEST_CASE("group files") {
  auto dir = std::filesystem::temp_directory_path();
  auto table = dir / "mackey_c3.txt";
  {
    std::ofstream f(table);
    f << "# name: Z3\n3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  auto g = build_group(table.string());
  CHECK(g->order == 3);
  CHECK(g->name == "Z3");
  auto perms = dir / "mackey_s3.txt";
  {
    std::ofstream f(perms);
    f << "(1 2)\n(1 2 3)\n";
  }
  CHECK(build_group("file:" + perms.string())->order == 6);
  auto bad = dir / "mackey_bad.txt";
  {
    std::ofstream f(bad);
    f << "2\n0 0\n1 1\n";
  }
  CHECK_THROWS_AS(build_group(bad.string()), InputError);
}
