#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mackey/report.hpp"
#include "mackey/verify.hpp"

using namespace mackey;

namespace {

struct Options {
  std::string group;
  int p = 0;
  bool p_local = false;
  std::string block;
  int field_degree = 0;
  bool json = false;
  std::vector<std::string> only;
  std::string cache_dir = default_cache_dir();
};

int smallest_prime_divisor(int n) {
  for (int p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) return p;
  return 2;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(const Options& o) {
  auto lat = std::make_shared<SubgroupLattice>(build_group(o.group));
  const GroupTable& g = lat->group();
  int p = o.p ? o.p : smallest_prime_divisor(g.order);
  if (!is_prime(p)) throw InputError("p must be prime");
  std::optional<int> local;
  if (o.p_local) local = p;
  auto s = integer_structure(lat, local, o.cache_dir);
  // the same integer constants, reduced into each coefficient field
  int dim_q = build_algebra(s, Rationals{}).algebra.dim();
  GF f(p, o.field_degree > 0 ? o.field_degree : 1);
  int dim_p = build_algebra(s, f).algebra.dim();

  Json j;
  j["group"] = g.name;
  j["order"] = g.order;
  j["prime"] = p;
  j["p_local"] = o.p_local;
  j["dim_gf"] = dim_p;
  j["dim_q"] = dim_q;
  j["subgroups"] = lat->size();
  Json classes = Json::array();
  for (int c = 0; c < lat->class_count(); ++c) {
    int rep = lat->class_rep(c);
    classes.push_back({{"rep", rep},
                       {"order", lat->order(rep)},
                       {"size", lat->class_members(c).size()},
                       {"normal", lat->normalizer(rep) == lat->whole()}});
  }
  j["subgroup_classes"] = classes;
  std::map<std::pair<int, int>, int> per_tag;
  for (const auto& q : s.basis.quads) ++per_tag[{q.h, q.l}];
  Json tags = Json::array();
  for (const auto& [hl, n] : per_tag) tags.push_back({{"H", hl.first}, {"L", hl.second}, {"count", n}});
  j["basis_counts"] = tags;

  std::ostringstream os;
  os << "group " << g.name << " of order " << g.order << ", " << lat->size() << " subgroups in "
     << lat->class_count() << " classes\n";
  for (const auto& c : classes)
    os << "  class of #" << c["rep"].get<int>() << ": order " << c["order"].get<int>() << ", "
       << c["size"].get<std::size_t>() << " conjugates" << (c["normal"].get<bool>() ? ", normal" : "") << "\n";
  std::string what = o.p_local ? "p-local Mackey algebra" : "Mackey algebra";
  os << what << " dim over " << f.name() << ": " << dim_p << "\n";
  os << what << " dim over Q: " << dim_q << "\n";
  os << "basis elements per (H,L):";
  int k = 0;
  for (const auto& t : tags)
    os << (k++ % 8 ? " " : "\n  ") << "(" << t["H"].get<int>() << "," << t["L"].get<int>() << "):"
       << t["count"].get<int>();
  os << "\n";
  emit(o, j, os.str());
  return 0;
}

Pipeline make_pipeline(const Options& o, int degree) {
  if (o.p == 0) throw InputError("--p is required");
  return Pipeline(build_group(o.group), o.p, degree, o.cache_dir);
}

std::optional<int> selected_block(Pipeline& pl, const Options& o) {
  if (o.block.empty()) return std::nullopt;
  return parse_block(pl, o.block);
}

// Runs a pipeline command, doubling the field degree when an eigenvalue is missing.
template <class Body>
int with_pipeline(const Options& o, Body body) {
  int degree = o.field_degree;
  for (int attempt = 0;; ++attempt) {
    Pipeline pl = make_pipeline(o, degree);
    try {
      return body(pl);
    } catch (const FieldTooSmall& e) {
      if (attempt >= 3) throw;
      degree = 2 * pl.field().degree();
      std::cerr << "field too small (" << e.what() << "), retrying over degree " << degree << "\n";
    }
  }
}

int cmd_blocks(const Options& o, bool with_cartan) {
  return with_pipeline(o, [&](Pipeline& pl) {
    auto b = selected_block(pl, o);
    Json j = header_json(pl);
    j["blocks"] = blocks_json(pl, b);
    std::ostringstream os;
    os << pl.group().name << " at p=" << pl.prime() << " over " << pl.field().name() << ", p-local dim "
       << pl.structure().basis.dim() << ", " << pl.block_pairs().size() << " block pairs\n"
       << blocks_text(pl, b, with_cartan);
    emit(o, j, os.str());
    return 0;
  });
}

int cmd_decomp(const Options& o) {
  return with_pipeline(o, [&](Pipeline& pl) {
    auto b = selected_block(pl, o);
    Json j = header_json(pl);
    j["decomposition_matrix"] = decomposition_json(pl, b);
    std::ostringstream os;
    os << pl.group().name << " at p=" << pl.prime() << " over " << pl.field().name() << "\n"
       << decomposition_text(pl, b);
    emit(o, j, os.str());
    return 0;
  });
}

int cmd_verify(const Options& o) {
  VerifyContext ctx(o.cache_dir);
  auto results = run_checks(o.only, ctx);
  bool ok = true;
  double total = 0;
  for (const auto& r : results) {
    ok = ok && r.ok();
    total += r.seconds;
  }
  if (o.json) {
    Json j;
    j["checks"] = checks_json(results);
    j["passed"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << checks_text(results) << (ok ? "all checks passed" : "some checks FAILED") << " ("
              << std::fixed << std::setprecision(2) << total << "s)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mackey algebras of finite groups: blocks, Cartan and decomposition matrices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "structure-constant cache directory (env MACKEY_CACHE_DIR)");
  app.add_flag("--json", o.json, "machine-readable output");

  auto group_opts = [&](CLI::App* c, bool needs_p) {
    c->add_option("--group", o.group, "group name, product AxB, Cn:Cm[k], or table/generator file")->required();
    auto* p = c->add_option("--p", o.p, "prime");
    if (needs_p) p->required();
    c->add_option("--field-degree", o.field_degree, "degree m of the field GF(p^m)")->check(CLI::Range(1, 12));
    c->add_option("--cache-dir", o.cache_dir, "structure-constant cache directory");
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto* info = app.add_subcommand("info", "dimensions, basis counts and the subgroup lattice");
  group_opts(info, false);
  info->add_flag("--p-local", o.p_local, "restrict to the p-local subalgebra");
  auto* blocks = app.add_subcommand("blocks", "blocks of the p-local Mackey algebra matched with blocks of kG");
  group_opts(blocks, true);
  blocks->add_option("--block", o.block, "'principal' or a group block index");
  auto* cartan = app.add_subcommand("cartan", "Cartan matrices of the p-local Mackey algebra per block");
  group_opts(cartan, true);
  cartan->add_option("--block", o.block, "'principal' or a group block index");
  auto* decomp = app.add_subcommand("decomp", "decomposition matrix of p-permutation modules");
  group_opts(decomp, true);
  decomp->add_option("--block", o.block, "'principal' or a group block index");
  auto* verify = app.add_subcommand("verify-paper", "run the verification checks");
  verify->add_option("--only", o.only, "comma-separated check names")->delimiter(',');
  verify->add_option("--cache-dir", o.cache_dir, "structure-constant cache directory");
  verify->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(o);
    if (*blocks) return cmd_blocks(o, false);
    if (*cartan) return cmd_blocks(o, true);
    if (*decomp) return cmd_decomp(o);
    if (*verify) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
