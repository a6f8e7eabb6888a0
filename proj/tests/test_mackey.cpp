#include "doctest.h"

#include <filesystem>

#include "mackey/mackey.hpp"

using namespace mackey;

namespace {

LatticePtr lattice(const char* name) { return std::make_shared<SubgroupLattice>(build_group(name)); }

}  // namespace

TEST_CASE("basis dimensions") {
  struct Row {
    const char* group;
    int full, local2, local3;
  };
  for (auto r : std::vector<Row>{{"C2", 6, 6, 5},
                                 {"C3", 7, 6, 7},
                                 {"C4", 21, 21, 15},
                                 {"C6", 42, 36, 35},
                                 {"S3", 87, 81, 70},
                                 {"D4", 306, 306, 195},
                                 {"Q8", 120, 120, 67},
                                 {"A4", 340, 314, 275}}) {
    auto lat = lattice(r.group);
    CAPTURE(r.group);
    CHECK(enumerate_basis(lat).dim() == r.full);
    CHECK(enumerate_basis(lat, 2).dim() == r.local2);
    CHECK(enumerate_basis(lat, 3).dim() == r.local3);
  }
  auto sl = lattice("SL(2,3)");
  CHECK(enumerate_basis(sl).dim() == 1099);
  CHECK(enumerate_basis(sl, 3).dim() == 759);
}

TEST_CASE("C2 products") {
  auto lat = lattice("C2");
  auto s = integer_structure(lat);
  auto m = build_algebra(s, Integers{});
  const auto& a = m.algebra;
  int one = lat->trivial(), c2 = lat->whole();
  auto at = [&](GeneratorKind k, int u, int v) { return a.basis_vector(s.basis.find(generator(*lat, k, u, v))); };
  auto r = at(GeneratorKind::restriction, one, c2);
  auto t = at(GeneratorKind::transfer, one, c2);
  Vec<Integers> want = a.zero_vector();
  for (int x = 0; x < 2; ++x) want[s.basis.find(canonical_label(*lat, one, lat->mask(one), 0, x, one))] = 1;
  CHECK(a.mul(r, t) == want);
  // t r is a basis element in its own right
  auto tr = a.mul(t, r);
  CHECK(std::count(tr.begin(), tr.end(), 1LL) == 1);
  a.check(all_triples(s.basis));
}

TEST_CASE("defining relations hold") {
  for (const char* name : {"C2", "C3", "C4", "S3", "V4", "D4", "Q8"}) {
    CAPTURE(name);
    auto s = integer_structure(lattice(name));
    auto rep = verify_relations(s);
    CHECK(rep.instances.at("mackey-formula") > 0);
    CHECK(rep.instances.at("basis-words") == s.basis.dim());
  }
}

TEST_CASE("associativity and units") {
  for (const char* name : {"S3", "C4", "V4"}) {
    CAPTURE(name);
    auto lat = lattice(name);
    auto s = integer_structure(lat);
    build_algebra(s, Integers{}).algebra.check(all_triples(s.basis));
    for (int p : {2, 3}) {
      auto sl = integer_structure(lat, p);
      auto m = build_algebra(sl, default_field(lat->group(), p));
      m.algebra.check(all_triples(sl.basis));
    }
  }
  auto lat = lattice("A4");
  auto s = integer_structure(lat, 2);
  auto m = build_algebra(s, GF(2, 2));
  m.algebra.check(sample_triples(s.basis, 3000, 7));
}

TEST_CASE("the t^1_1 corner is the group algebra") {
  for (const char* name : {"C3", "S3", "Q8"}) {
    auto s = integer_structure(lattice(name));
    auto idx = corner_group_algebra(s);
    CHECK(static_cast<int>(idx.size()) == s.basis.lattice->group().order);
  }
}

TEST_CASE("automorphism of the C2 Mackey algebra in characteristic 2") {
  CHECK(phi_automorphism_check(GF(2)).automorphism());
  CHECK(phi_automorphism_check(GF(2, 2)).automorphism());
  CHECK(phi_automorphism_check(GF(2)).square_fixes_transfer);
  CHECK_THROWS_AS(phi_automorphism_check(GF(3)), InputError);
}

TEST_CASE("Cartan matrix and radical of the C3 Mackey algebra in characteristic 3") {
  auto s = integer_structure(lattice("C3"));
  auto m = build_algebra(s, GF(3));
  auto d = primitive_idempotents(m.algebra, m.peirce_units);
  CHECK(d.class_count() == 2);
  CHECK(match_up_to_permutation(cartan_matrix(m.algebra, d), IntMatrix{{2, 1}, {1, 3}}));
  CHECK(radical(m.algebra, d).basis.size() == 5);
}

TEST_CASE("symmetric Mackey algebras") {
  auto c2 = build_algebra(integer_structure(lattice("C2")), GF(2));
  CHECK(is_symmetric_algebra(c2.algebra).verdict == Verdict::yes);
  auto c3 = build_algebra(integer_structure(lattice("C3")), GF(3));
  CHECK(is_symmetric_algebra(c3.algebra).verdict == Verdict::yes);
  auto c4 = build_algebra(integer_structure(lattice("C4")), GF(2));
  CHECK(is_symmetric_algebra(c4.algebra).verdict == Verdict::no);
}

TEST_CASE("structure cache round trip and dump") {
  auto dir = std::filesystem::temp_directory_path() / "mackey_cache_test";
  std::filesystem::remove_all(dir);
  auto lat = lattice("S3");
  auto first = integer_structure(lat, 2, dir.string());
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  auto second = integer_structure(lat, 2, dir.string());
  REQUIRE(first.constants.size() == second.constants.size());
  for (std::size_t i = 0; i < first.constants.size(); ++i) {
    CHECK(first.constants[i].k == second.constants[i].k);
    CHECK(first.constants[i].c == second.constants[i].c);
  }
  std::filesystem::remove_all(dir);
  auto text = dump(integer_structure(lattice("C2")), "GF(2)", 2);
  CHECK(text.find("# dim: 6") != std::string::npos);
  CHECK(text.find("# p_local: none") != std::string::npos);
}
