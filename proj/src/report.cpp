#include "mackey/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace mackey {

namespace {

std::vector<long long> simple_dims(Pipeline& pl, int group_block) {
  std::vector<long long> out;
  const auto& d = pl.group_primitives();
  for (int c = 0; c < d.class_count(); ++c)
    if (pl.group_class_blocks()[c] == group_block) out.push_back(d.multiplicity[c]);
  std::sort(out.begin(), out.end());
  return out;
}

bool selected(std::optional<int> want, int b) { return !want || *want == b; }

std::string subgroup_label(const SubgroupLattice& lat, int h) {
  return "#" + std::to_string(h) + "(order " + std::to_string(lat.order(h)) + ")";
}

}  // namespace

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json header_json(Pipeline& pl) {
  Json out;
  out["group"] = pl.group().name;
  out["order"] = pl.group().order;
  out["prime"] = pl.prime();
  out["field"] = pl.field().name();
  out["dim"] = pl.structure().basis.dim();
  return out;
}

Json blocks_json(Pipeline& pl, std::optional<int> group_block) {
  Json out = Json::array();
  int principal = pl.principal_group_block();
  for (const auto& pair : pl.block_pairs()) {
    if (!selected(group_block, pair.group_block)) continue;
    auto classes = pl.mu_classes_in(pair.mu_block);
    Json b;
    b["group_block"] = pair.group_block;
    b["mu_block"] = pair.mu_block;
    b["principal"] = pair.group_block == principal;
    b["dim"] = pl.mu_block_dims()[pair.mu_block];
    b["group_simples"] = pl.group_block_simples()[pair.group_block];
    b["group_simple_dims"] = simple_dims(pl, pair.group_block);
    b["mu_simples"] = classes.size();
    b["cartan"] = matrix_json(submatrix(pl.mu_cartan(), classes, classes));
    b["evidence"] = pair.evidence;
    out.push_back(std::move(b));
  }
  return out;
}

Json decomposition_json(Pipeline& pl, std::optional<int> group_block) {
  const auto& d = pl.decomposition();
  const SubgroupLattice& lat = pl.lattice();
  std::vector<int> rows, cols;
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r)
    if (selected(group_block, d.rows[r].block)) rows.push_back(r);
  for (int c = 0; c < static_cast<int>(d.columns.size()); ++c)
    if (selected(group_block, d.columns[c].block)) cols.push_back(c);
  Json out;
  out["rows"] = Json::array();
  for (int r : rows) {
    const auto& m = d.rows[r];
    out["rows"].push_back({{"dim", m.module.dim},
                           {"vertex", m.vertex},
                           {"vertex_order", lat.order(m.vertex)},
                           {"block", m.block}});
  }
  out["columns"] = Json::array();
  for (int c : cols) {
    const auto& l = d.columns[c];
    out["columns"].push_back({{"subgroup", l.subgroup},
                              {"subgroup_order", lat.order(l.subgroup)},
                              {"character", l.character},
                              {"degree", l.degree},
                              {"block", l.block}});
  }
  out["entries"] = matrix_json(submatrix(d.entries, rows, cols));
  return out;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
  return out;
}

Json full_report(Pipeline& pl, const std::vector<CheckResult>& checks, std::optional<int> group_block) {
  Json out = header_json(pl);
  out["blocks"] = blocks_json(pl, group_block);
  out["decomposition_matrix"] = decomposition_json(pl, group_block);
  out["checks"] = checks_json(checks);
  return out;
}

std::string blocks_text(Pipeline& pl, std::optional<int> group_block, bool with_cartan) {
  std::ostringstream os;
  for (const auto& b : blocks_json(pl, group_block)) {
    os << "block " << b["group_block"].get<int>() << (b["principal"].get<bool>() ? " (principal)" : "")
       << " <-> Mackey block " << b["mu_block"].get<int>() << ": dim " << b["dim"].get<int>() << ", group simples "
       << b["group_simples"].get<int>() << " of dims " << b["group_simple_dims"].dump() << ", Mackey simples "
       << b["mu_simples"].get<int>() << "\n";
    if (with_cartan)
      for (const auto& row : b["cartan"]) {
        os << " ";
        for (const auto& v : row) os << " " << std::setw(2) << v.get<long long>();
        os << "\n";
      }
  }
  return os.str();
}

std::string decomposition_text(Pipeline& pl, std::optional<int> group_block) {
  const SubgroupLattice& lat = pl.lattice();
  Json d = decomposition_json(pl, group_block);
  std::ostringstream os;
  os << "columns:";
  int k = 0;
  for (const auto& c : d["columns"])
    os << "\n  c" << k++ << " L=" << subgroup_label(lat, c["subgroup"].get<int>()) << " chi"
       << c["character"].get<int>() << " degree " << c["degree"].get<long long>() << " block "
       << c["block"].get<int>();
  os << "\nrows:\n";
  int r = 0;
  for (const auto& row : d["rows"]) {
    os << "  W" << r << " dim " << std::setw(2) << row["dim"].get<int>() << " vertex "
       << std::setw(12) << std::left << subgroup_label(lat, row["vertex"].get<int>()) << std::right << " block "
       << row["block"].get<int>() << " |";
    for (const auto& v : d["entries"][r]) os << " " << v.get<long long>();
    os << "\n";
    ++r;
  }
  return os.str();
}

std::string checks_text(const std::vector<CheckResult>& checks, bool with_timing) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "N/A ") << " " << c.name;
    if (with_timing) os << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)";
    os << ": " << c.details << "\n";
  }
  return os.str();
}

int parse_block(Pipeline& pl, const std::string& spec) {
  if (spec == "principal") return pl.principal_group_block();
  int b = -1;
  try {
    std::size_t used = 0;
    b = std::stoi(spec, &used);
    if (used != spec.size()) b = -1;
  } catch (const std::exception&) {
    b = -1;
  }
  if (b < 0 || b >= static_cast<int>(pl.group_blocks().size()))
    throw InputError("block must be 'principal' or an index below " + std::to_string(pl.group_blocks().size()));
  return b;
}

}  // namespace mackey
