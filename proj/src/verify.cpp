#include "mackey/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "mackey/chartab.hpp"

namespace mackey {

std::vector<SuiteMember> standard_suite() {
  std::vector<SuiteMember> out;
  for (const char* g : {"C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "SL(2,3)"})
    for (int p : {2, 3}) out.push_back({g, p});
  return out;
}

Pipeline& VerifyContext::pipeline(const std::string& group, int p) {
  auto& slot = pipelines_[{group, p}];
  if (!slot) slot = std::make_unique<Pipeline>(build_group(group), p, 0, cache_dir_);
  return *slot;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream details;
  void note(bool good, const std::string& what) {
    ok = ok && good;
    if (details.tellp() > 0) details << "; ";
    details << what;
  }
};

std::string tag(const SuiteMember& m) { return m.group + "/p=" + std::to_string(m.p); }

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

void dim_six(VerifyContext&, Outcome& o) {
  auto lat = std::make_shared<SubgroupLattice>(build_group("C2"));
  auto s = integer_structure(lat);
  auto triples = all_triples(s.basis);
  build_algebra(s, GF(2)).algebra.check(triples);
  build_algebra(s, GF(3)).algebra.check(triples);
  build_algebra(s, Rationals{}).algebra.check(triples);
  o.note(s.basis.dim() == 6, "dim " + std::to_string(s.basis.dim()) + " over GF(2), GF(3) and Q, each unital and associative");
}

void phi(VerifyContext&, Outcome& o) {
  auto r = phi_automorphism_check(GF(2));
  o.note(r.automorphism(), std::string(r.unital ? "unital" : "not unital") + ", " +
                               (r.bijective ? "bijective" : "not bijective") + ", multiplicative on " +
                               std::to_string(r.multiplicative_pairs) + "/36 pairs");
}

void dim_56(VerifyContext& ctx, Outcome& o) {
  Pipeline& pl = ctx.pipeline("S3", 2);
  int d = pl.mu_block_dims()[pl.mu_block_of_group_block(pl.principal_group_block())];
  o.note(d == 56, "principal block dim " + std::to_string(d));
}

void cartan_c3(VerifyContext& ctx, Outcome& o) {
  Pipeline& pl = ctx.pipeline("C3", 3);
  // for a p-group the p-local basis is the full one
  auto full = enumerate_basis(pl.lattice_ptr());
  o.note(full.dim() == pl.structure().basis.dim(), "full and p-local bases agree, dim " + std::to_string(full.dim()));
  const auto& c = pl.mu_cartan();
  o.note(match_up_to_permutation(c, IntMatrix{{2, 1}, {1, 3}}).has_value(), "Cartan " + format_matrix(c));
}

void cartan_sl23(VerifyContext& ctx, Outcome& o) {
  Pipeline& pl = ctx.pipeline("SL(2,3)", 3);
  int b = block_with_simple_dim(pl, 2);
  if (b < 0) return o.note(false, "no block with a 2-dimensional simple module");
  auto c = block_cartan(pl, b);
  o.note(match_up_to_permutation(c, IntMatrix{{3, 2}, {2, 3}}).has_value(),
         "block " + std::to_string(b) + " Cartan " + format_matrix(c));
}

template <class Body>
void over_suite(VerifyContext& ctx, Outcome& o, Body body) {
  int passed = 0, total = 0;
  for (const auto& m : standard_suite()) {
    ++total;
    try {
      std::string why = body(ctx.pipeline(m.group, m.p));
      if (why.empty()) {
        ++passed;
        continue;
      }
      o.note(false, tag(m) + ": " + why);
    } catch (const Error& e) {
      o.note(false, tag(m) + ": " + e.what());
    }
  }
  o.note(passed == total, std::to_string(passed) + "/" + std::to_string(total) + " suite members");
}

void bijection(VerifyContext& ctx, Outcome& o) {
  std::ostringstream counts;
  over_suite(ctx, o, [&](Pipeline& pl) -> std::string {
    auto n = pl.block_pairs().size();
    counts << (counts.tellp() > 0 ? " " : "") << pl.group().name << "/" << pl.prime() << ":" << n;
    return n == pl.group_blocks().size() ? "" : "counts differ";
  });
  o.note(true, "blocks " + counts.str());
}

void reciprocity(VerifyContext& ctx, Outcome& o) {
  over_suite(ctx, o, [](Pipeline& pl) -> std::string {
    auto r = verify_cartan_reciprocity(pl);
    return r.status == "pass" ? "" : r.details;
  });
}

void symmetric_criterion(VerifyContext&, Outcome& o) {
  struct Case {
    const char* group;
    int p;
    Verdict want;
  };
  for (auto c : {Case{"C2", 2, Verdict::yes}, Case{"C3", 3, Verdict::yes}, Case{"C4", 2, Verdict::no}}) {
    auto lat = std::make_shared<SubgroupLattice>(build_group(c.group));
    auto m = build_algebra(integer_structure(lat), GF(c.p));
    auto r = is_symmetric_algebra(m.algebra);
    o.note(r.verdict == c.want, std::string(c.group) + " over GF(" + std::to_string(c.p) + "): " + to_string(r.verdict));
  }
}

void defect_one(VerifyContext& ctx, Outcome& o) {
  Pipeline& s3 = ctx.pipeline("S3", 3);
  auto a = defect_one_structure_check(s3, s3.principal_group_block());
  o.note(a.status == "pass", "S3/p=3 principal: " + a.details);
  Pipeline& sl = ctx.pipeline("SL(2,3)", 3);
  int b = block_with_simple_dim(sl, 2);
  if (b < 0) return o.note(false, "SL(2,3): no block with a 2-dimensional simple module");
  auto r = defect_one_structure_check(sl, b);
  o.note(r.status == "pass", "SL(2,3)/p=3 block " + std::to_string(b) + ": " + r.details);
}

void p_nilpotent(VerifyContext& ctx, Outcome& o) {
  for (auto [g, p] : {std::pair<const char*, int>{"S3", 2}, {"SL(2,3)", 3}}) {
    auto r = p_nilpotent_checks(ctx.pipeline(g, p));
    o.note(r.status == "pass", std::string(g) + "/p=" + std::to_string(p) + ": " + r.details);
  }
}

std::string oracle_member(Pipeline& pl, const std::string& cache_dir) {
  const SubgroupLattice& lat = pl.lattice();
  const GroupTable& g = lat.group();
  const GF& f = pl.field();
  auto table = character_table(lat.group_ptr());
  auto qs = p_subgroup_classes(lat, pl.prime());
  for (int h = 0; h < lat.size(); ++h) {
    auto x = coset_gset(lat, h);
    auto v = permutation_module(x, f);
    for (const auto& q : qs) {
      int fixed = 0;
      for (int pt = 0; pt < x.size; ++pt) {
        bool all = true;
        for (int y : lat[q.rep].members) all = all && x.act(y, pt) == pt;
        fixed += all;
      }
      if (brauer_quotient_dim(v, lat, q.rep) != fixed) return "Brauer quotient dimension of k[G/H] differs from |X^Q|";
    }
    auto chi = character_of_lift(v, lat, table);
    for (int k = 0; k < table.classes.count(); ++k) {
      int fixed = 0;
      for (int pt = 0; pt < x.size; ++pt) fixed += x.act(table.classes.reps[k], pt) == pt;
      if (chi.values[k] != table.field.from_int(fixed)) return "lifted character of k[G/H] is not the permutation character";
    }
  }
  long long sum = 0;
  for (int d : pl.mu_block_dims()) sum += d;
  if (sum != pl.structure().basis.dim()) return "block dims do not sum to the dimension";
  for (const auto& row : pl.decomposition().entries)
    for (long long e : row)
      if (e < 0) return "negative decomposition number";
  bool small = g.order <= 8;
  auto full = integer_structure(pl.lattice_ptr(), std::nullopt, cache_dir);
  build_algebra(full, Integers{}).algebra.check(small ? all_triples(full.basis) : sample_triples(full.basis, 10000, 1));
  const auto& local = pl.structure().basis;
  pl.mu().algebra.check(small ? all_triples(local) : sample_triples(local, 10000, 2));
  return "";
}

void oracle(VerifyContext& ctx, Outcome& o) {
  over_suite(ctx, o, [&](Pipeline& pl) { return oracle_member(pl, ctx.cache_dir()); });
}

const std::vector<std::pair<std::string, std::function<void(VerifyContext&, Outcome&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(VerifyContext&, Outcome&)>>> r{
      {"dim-6", dim_six},
      {"phi-automorphism", phi},
      {"dim-56", dim_56},
      {"cartan-c3", cartan_c3},
      {"cartan-sl23-block", cartan_sl23},
      {"block-bijection", bijection},
      {"reciprocity", reciprocity},
      {"symmetric-criterion", symmetric_criterion},
      {"defect-one", defect_one},
      {"p-nilpotent", p_nilpotent},
      {"oracle-invariants", oracle},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, VerifyContext& ctx) {
  for (const auto& [n, body] : registry()) {
    if (n != name) continue;
    auto start = Clock::now();
    Outcome o;
    try {
      body(ctx, o);
    } catch (const Error& e) {
      o.note(false, std::string("error: ") + e.what());
    }
    CheckResult r{name, o.ok ? "pass" : "fail", o.details.str(), 0};
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }
  throw InputError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& only, VerifyContext& ctx) {
  for (const auto& n : only)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw InputError("unknown check '" + n + "'");
  std::vector<CheckResult> out;
  for (const auto& n : check_names())
    if (only.empty() || std::find(only.begin(), only.end(), n) != only.end()) out.push_back(run_check(n, ctx));
  return out;
}

}  // namespace mackey
