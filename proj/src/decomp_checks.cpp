#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "mackey/decomp.hpp"

namespace mackey {

DecompositionMatrix decomposition_matrix(LatticePtr lat, int p, const GF& f) {
  DecompositionMatrix out;
  out.rows = p_permutation_indecomposables(lat, p, f);
  const GroupTable& g = lat->group();
  int nrows = static_cast<int>(out.rows.size());
  out.entries.assign(nrows, {});
  for (const auto& c : p_subgroup_classes(*lat, p)) {
    int l = c.rep;
    auto nq = normalizer_quotient(g, lat->mask(l));
    SubgroupLattice nlat(nq.group);
    auto table = character_table(nq.group);
    int first = static_cast<int>(out.columns.size());
    for (int k = 0; k < static_cast<int>(table.characters.size()); ++k) {
      auto d = table.field.to_rational(table.characters[k].values[0]);
      out.columns.push_back({l, k, static_cast<long long>(boost::multiprecision::numerator(d)), -1});
    }
    for (int r = 0; r < nrows; ++r) {
      std::vector<long long> mult(table.characters.size(), 0);
      auto bq = brauer_quotient(out.rows[r].module, *lat, l);
      if (bq.dim() > 0) {
        if (bq.module.group->table != nq.group->table)
          throw CertificateError("Brauer quotient and normalizer quotient numbered differently");
        bq.module.group = nq.group;
        mult = decompose_character(table, character_of_lift(bq.module, nlat, table));
      }
      out.entries[r].insert(out.entries[r].end(), mult.begin(), mult.end());
    }
    for (int col = first; col < static_cast<int>(out.columns.size()); ++col) {
      for (int r = 0; r < nrows; ++r) {
        if (out.entries[r][col] == 0) continue;
        int b = out.rows[r].block;
        if (out.columns[col].block >= 0 && out.columns[col].block != b)
          throw CertificateError("decomposition column meets two blocks");
        out.columns[col].block = b;
      }
    }
  }
  for (int r = 0; r < nrows; ++r) {
    bool nonzero = false;
    for (long long v : out.entries[r]) {
      if (v < 0) throw CertificateError("negative decomposition number");
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) throw CertificateError("zero row in the decomposition matrix");
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult finish(CheckResult r, Clock::time_point start) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

bool symmetric(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

// Square 0/1 matrix with exactly one 1 in each row and column.
bool is_permutation_matrix(const IntMatrix& m) {
  std::size_t n = m.size();
  std::vector<int> col_hits(n ? m[0].size() : 0, 0);
  for (const auto& row : m) {
    if (row.size() != n) return false;
    int ones = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 1) {
        ++ones;
        ++col_hits[j];
      } else if (row[j] != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

bool all_zero(const IntMatrix& m) {
  for (const auto& row : m)
    for (long long v : row)
      if (v) return false;
  return true;
}

}  // namespace

CheckResult verify_cartan_reciprocity(Pipeline& pl) {
  auto start = Clock::now();
  CheckResult r{"reciprocity", "pass", "", 0};
  const auto& d = pl.decomposition();
  std::ostringstream os;
  for (const auto& pair : pl.block_pairs()) {
    auto rows = pl.rows_in(pair.group_block);
    auto cols = pl.columns_in(pair.group_block);
    auto classes = pl.mu_classes_in(pair.mu_block);
    auto dd = gram(submatrix(d.entries, rows, cols));
    auto c = submatrix(pl.mu_cartan(), classes, classes);
    bool ok = rows.size() == classes.size() && match_up_to_permutation(c, dd).has_value();
    os << "block " << pair.group_block << ": " << rows.size() << " modules, " << classes.size() << " simples, "
       << (ok ? "DD^T matches" : "DD^T " + format_matrix(dd) + " vs Cartan " + format_matrix(c)) << "; ";
    if (!ok) r.status = "fail";
  }
  for (const auto& col : d.columns)
    if (col.block < 0) {
      r.status = "fail";
      os << "column without block; ";
    }
  r.details = os.str();
  if (!r.details.empty()) r.details.resize(r.details.size() - 2);
  return finish(r, start);
}

CheckResult defect_one_structure_check(Pipeline& pl, int group_block, bool assume_defect_one) {
  auto start = Clock::now();
  const SubgroupLattice& lat = pl.lattice();
  int p = pl.prime();
  CheckResult r{"defect-one", "pass", "", 0};
  int sylow = p_part(lat.group().order, p);
  if (sylow != p && !assume_defect_one) {
    r.status = "fail";
    r.details = "hypothesis not met: Sylow " + std::to_string(p) + "-subgroup has order " + std::to_string(sylow);
    return finish(r, start);
  }
  std::vector<int> group_classes;
  for (int c = 0; c < static_cast<int>(pl.group_class_blocks().size()); ++c)
    if (pl.group_class_blocks()[c] == group_block) group_classes.push_back(c);
  auto group_c = submatrix(pl.group_cartan(), group_classes, group_classes);
  if (group_c == IntMatrix{{1}}) {
    r.status = "n/a";
    r.details = "block " + std::to_string(group_block) + " has defect zero";
    return finish(r, start);
  }
  int e = static_cast<int>(group_classes.size());
  int mu_block = pl.mu_block_of_group_block(group_block);
  auto classes = pl.mu_classes_in(mu_block);
  auto mu_c = submatrix(pl.mu_cartan(), classes, classes);
  const auto& d = pl.decomposition();
  std::vector<int> r0, r1, c0, c1;
  for (int row : pl.rows_in(group_block)) {
    int v = lat.order(d.rows[row].vertex);
    if (v == 1) r0.push_back(row);
    if (v == p) r1.push_back(row);
  }
  for (int col : pl.columns_in(group_block)) (lat.order(d.columns[col].subgroup) == 1 ? c0 : c1).push_back(col);
  std::ostringstream os;
  os << "e=" << e << ", Mackey simples=" << classes.size() << ", columns " << c0.size() << "+" << c1.size();
  auto fail = [&](const std::string& why) {
    r.status = "fail";
    os << "; " << why;
  };
  if (static_cast<int>(classes.size()) != 2 * e) fail("simple count is not 2e");
  if (static_cast<int>(r0.size()) != e || static_cast<int>(r1.size()) != e ||
      r0.size() + r1.size() != pl.rows_in(group_block).size())
    fail("row split is not e+e");
  if (static_cast<int>(c1.size()) != e) fail("vertex-p columns are not e");
  if (r.status == "pass") {
    if (!all_zero(submatrix(d.entries, r0, c1))) fail("projective rows meet vertex-p columns");
    if (!is_permutation_matrix(submatrix(d.entries, r1, c1))) fail("vertex-p square is not a permutation");
    auto d0 = submatrix(d.entries, r0, c0);
    if (!match_up_to_permutation(group_c, gram(d0))) fail("D0 D0^T differs from the group block Cartan matrix");
  }
  if (!symmetric(mu_c)) fail("Mackey block Cartan matrix is not symmetric");
  if (r.status == "pass") os << "; shape [D0|0; *|Id] holds, Cartan " << format_matrix(mu_c) << " symmetric";
  r.details = os.str();
  return finish(r, start);
}

long long burnside_square_dimension(const SubgroupLattice& lat, int n, int p_sylow) {
  const GroupTable& g = lat.group();
  const auto& pel = lat[p_sylow].members;
  // X = disjoint union over H of G/NH, restricted to P
  std::vector<int> comp_of, coset_of, offset;  // point -> component, coset of NH; component -> first point
  std::vector<int> nh_of;
  for (int h = 0; h < lat.size(); ++h) {
    int nh = lat.id_of(generate(g, lat.mask(n) | lat.mask(h)));
    offset.push_back(static_cast<int>(comp_of.size()));
    nh_of.push_back(nh);
    for (int c = 0; c < lat.coset_count(nh); ++c) {
      comp_of.push_back(h);
      coset_of.push_back(c);
    }
  }
  int xs = static_cast<int>(comp_of.size());
  auto act = [&](int y, int i) {
    int h = comp_of[i], s = nh_of[h];
    return offset[h] + lat.coset_index(s, g.mul(y, lat.coset_rep(s, coset_of[i])));
  };
  std::vector<char> seen(static_cast<std::size_t>(xs) * xs, 0);
  long long total = 0;
  for (int a = 0; a < xs; ++a)
    for (int b = 0; b < xs; ++b) {
      if (seen[a * xs + b]) continue;
      Mask stab = 0;
      for (int y : pel) {
        int ya = act(y, a), yb = act(y, b);
        seen[ya * xs + yb] = 1;
        if (ya == a && yb == b) stab |= bit(y);
      }
      // subgroups of the stabilizer up to conjugacy inside it
      std::set<Mask> done;
      for (Mask s : subgroups_of(g, stab)) {
        if (done.count(s)) continue;
        ++total;
        for (int y : members(stab)) done.insert(conjugate(g, y, s));
      }
    }
  return total;
}

CheckResult p_nilpotent_checks(Pipeline& pl) {
  auto start = Clock::now();
  const SubgroupLattice& lat = pl.lattice();
  int p = pl.prime();
  CheckResult r{"p-nilpotent", "pass", "", 0};
  int n = normal_p_complement(lat, p);
  if (n < 0) {
    r.status = "fail";
    r.details = lat.group().name + " is not " + std::to_string(p) + "-nilpotent";
    return finish(r, start);
  }
  int sylow = -1;
  for (const auto& c : p_subgroup_classes(lat, p))
    if (c.sylow) sylow = c.rep;
  int b0 = pl.principal_group_block();
  int m0 = pl.mu_block_of_group_block(b0);
  auto classes = pl.mu_classes_in(m0);
  auto principal = submatrix(pl.mu_cartan(), classes, classes);

  auto pq = subgroup_as_group(lat.group(), lat.mask(sylow), "P");
  Pipeline sub(pq.group, p, pl.field().degree());
  const auto& pc = sub.mu_cartan();
  bool cartan_ok = match_up_to_permutation(principal, pc).has_value();
  long long expected = burnside_square_dimension(lat, n, sylow);
  long long dim = pl.mu_block_dims()[m0];
  std::ostringstream os;
  os << "P of order " << lat.order(sylow) << "; principal Cartan "
     << (cartan_ok ? "matches Cartan of the Mackey algebra of P" : format_matrix(principal) + " vs " + format_matrix(pc))
     << "; principal dim " << dim << (dim == expected ? " = " : " != ") << "dim kB(X^2) " << expected;
  if (!cartan_ok || dim != expected) r.status = "fail";
  r.details = os.str();
  return finish(r, start);
}

}  // namespace mackey
