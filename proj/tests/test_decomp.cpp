#include "doctest.h"

#include <algorithm>

#include "mackey/decomp.hpp"
#include "mackey/report.hpp"

using namespace mackey;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Group block whose simple modules have the given dimension.
int block_with_simple_dim(Pipeline& pl, int dim) {
  const auto& d = pl.group_primitives();
  for (int c = 0; c < d.class_count(); ++c)
    if (d.multiplicity[c] == dim) return pl.group_class_blocks()[c];
  return -1;
}

IntMatrix block_cartan(Pipeline& pl, int group_block) {
  auto classes = pl.mu_classes_in(pl.mu_block_of_group_block(group_block));
  return submatrix(pl.mu_cartan(), classes, classes);
}

}  // namespace

TEST_CASE("block matching") {
  Pipeline c2(build_group("C2"), 2);
  CHECK(c2.block_pairs().size() == 1);

  Pipeline s3(build_group("S3"), 2);
  REQUIRE(s3.block_pairs().size() == 2);
  CHECK(sorted(s3.mu_block_dims()) == std::vector<int>{25, 56});
  CHECK(s3.mu_block_dims()[s3.mu_block_of_group_block(s3.principal_group_block())] == 56);

  Pipeline sl(build_group("SL(2,3)"), 3);
  CHECK(sl.block_pairs().size() == sl.group_blocks().size());
  CHECK(sl.block_pairs().size() == 3);
  int total = 0;
  for (int d : sl.mu_block_dims()) total += d;
  CHECK(total == sl.structure().basis.dim());
}

TEST_CASE("matching rejects a non-bijection") {
  Pipeline s3(build_group("S3"), 2);
  const auto& mu = s3.mu();
  auto corner = corner_group_algebra(s3.structure());
  auto doubled = s3.group_blocks();
  doubled[1] = doubled[0];
  CHECK_THROWS_AS(match_blocks(mu.algebra, corner, s3.mu_blocks(), doubled), CertificateError);
  auto fewer = s3.group_blocks();
  fewer.pop_back();
  CHECK_THROWS_AS(match_blocks(mu.algebra, corner, s3.mu_blocks(), fewer), CertificateError);
}

TEST_CASE("decomposition matrix of C2") {
  Pipeline c2(build_group("C2"), 2);
  const auto& d = c2.decomposition();
  REQUIRE(d.rows.size() == 2);
  REQUIRE(d.columns.size() == 3);
  // rows: regular (vertex 1), trivial (vertex C2); columns (1,triv), (1,sign), (C2,triv)
  CHECK(d.rows[0].module.dim == 2);
  CHECK(d.rows[1].module.dim == 1);
  CHECK(d.entries == IntMatrix{{1, 1, 0}, {1, 0, 1}});
  CHECK(gram(d.entries) == IntMatrix{{2, 1}, {1, 2}});
}

TEST_CASE("decomposition matrix of the trivial group") {
  Pipeline one(build_group("C1"), 3);
  CHECK(one.decomposition().entries == IntMatrix{{1}});
}

TEST_CASE("projective rows restricted to ordinary characters give the group decomposition matrix") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"S3", 2}, {"S3", 3}, {"A4", 2}}) {
    CAPTURE(name);
    Pipeline pl(build_group(name), p);
    const auto& d = pl.decomposition();
    std::vector<int> rows, cols;
    for (int r = 0; r < static_cast<int>(d.rows.size()); ++r)
      if (d.rows[r].vertex == pl.lattice().trivial()) rows.push_back(r);
    for (int c = 0; c < static_cast<int>(d.columns.size()); ++c)
      if (d.columns[c].subgroup == pl.lattice().trivial()) cols.push_back(c);
    CHECK(match_up_to_permutation(pl.group_cartan(), gram(submatrix(d.entries, rows, cols))).has_value());
  }
}

TEST_CASE("Cartan reciprocity") {
  Pipeline c3(build_group("C3"), 3);
  CHECK(verify_cartan_reciprocity(c3).status == "pass");
  CHECK(match_up_to_permutation(gram(c3.decomposition().entries), IntMatrix{{2, 1}, {1, 3}}).has_value());

  Pipeline sl(build_group("SL(2,3)"), 3);
  CHECK(verify_cartan_reciprocity(sl).status == "pass");
  int b = block_with_simple_dim(sl, 2);
  REQUIRE(b >= 0);
  CHECK(match_up_to_permutation(block_cartan(sl, b), IntMatrix{{3, 2}, {2, 3}}).has_value());
  auto dd = gram(submatrix(sl.decomposition().entries, sl.rows_in(b), sl.columns_in(b)));
  CHECK(match_up_to_permutation(dd, IntMatrix{{3, 2}, {2, 3}}).has_value());

  Pipeline s3(build_group("S3"), 2);
  auto r = verify_cartan_reciprocity(s3);
  CHECK(r.status == "pass");
  CHECK(r.details.find("block 1") != std::string::npos);
}

TEST_CASE("defect one") {
  Pipeline s3(build_group("S3"), 3);
  auto r = defect_one_structure_check(s3, s3.principal_group_block());
  CHECK(r.status == "pass");
  CHECK(r.details.find("e=2, Mackey simples=4") != std::string::npos);

  Pipeline sl(build_group("SL(2,3)"), 3);
  int b = block_with_simple_dim(sl, 2);
  auto rb = defect_one_structure_check(sl, b);
  CHECK(rb.status == "pass");
  CHECK(rb.details.find("e=1, Mackey simples=2") != std::string::npos);
  CHECK(defect_one_structure_check(sl, block_with_simple_dim(sl, 3)).status == "n/a");

  Pipeline c3(build_group("C3"), 3);
  CHECK(defect_one_structure_check(c3, 0).status == "pass");
  CHECK(c3.decomposition().entries.size() == 2);
  CHECK(c3.decomposition().columns.size() == 4);

  Pipeline c4(build_group("C4"), 2);
  auto bad = defect_one_structure_check(c4, 0);
  CHECK(bad.status == "fail");
  CHECK(bad.details.find("hypothesis") != std::string::npos);
}

TEST_CASE("Burnside algebra dimension of X^2") {
  auto lat = std::make_shared<SubgroupLattice>(build_group("S3"));
  int n = normal_p_complement(*lat, 2);
  REQUIRE(n >= 0);
  int p = -1;
  for (const auto& c : p_subgroup_classes(*lat, 2))
    if (c.sylow) p = c.rep;
  CHECK(burnside_square_dimension(*lat, n, p) == 56);
  // for a p-group the count is the dimension of the whole Mackey algebra
  auto c4 = std::make_shared<SubgroupLattice>(build_group("C4"));
  CHECK(burnside_square_dimension(*c4, c4->trivial(), c4->whole()) == 21);
}

TEST_CASE("p-nilpotent checks") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"S3", 2}, {"SL(2,3)", 3}, {"C4", 2}}) {
    CAPTURE(name);
    Pipeline pl(build_group(name), p);
    auto r = p_nilpotent_checks(pl);
    CHECK(r.status == "pass");
  }
  Pipeline a4(build_group("A4"), 2);
  CHECK(p_nilpotent_checks(a4).status == "fail");
}

TEST_CASE("reports are deterministic") {
  Pipeline a(build_group("S3"), 2), b(build_group("S3"), 2);
  std::vector<CheckResult> checks{verify_cartan_reciprocity(a)};
  auto ja = full_report(a, checks).dump(2);
  auto jb = full_report(b, {verify_cartan_reciprocity(b)}).dump(2);
  CHECK(ja == jb);
  auto j = full_report(a, checks, parse_block(a, "principal"));
  CHECK(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["dim"] == 56);
  CHECK(j["decomposition_matrix"]["entries"].size() == 2);
  CHECK_THROWS_AS(parse_block(a, "7"), InputError);
  CHECK(blocks_text(a, std::nullopt, false).find("dim 25") != std::string::npos);
}
