#include "mackey/mackey.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

namespace mackey {

std::string MackeyBasis::label(int i) const { return to_string(quads.at(i)); }

MackeyBasis enumerate_basis(LatticePtr lat, std::optional<int> p_local) {
  const GroupTable& g = lat->group();
  MackeyBasis b;
  b.lattice = lat;
  b.p_local = p_local;
  for (int h = 0; h < lat->size(); ++h)
    for (int l = 0; l < lat->size(); ++l)
      for (int x : double_cosets(g, lat->mask(h), lat->mask(l))) {
        Mask both = lat->mask(h) & conjugate(g, x, lat->mask(l));
        for (int k = 0; k < lat->size(); ++k) {
          if ((lat->mask(k) & ~both) != 0) continue;
          if (p_local && !is_p_power(lat->order(k), *p_local)) continue;
          // K is taken up to conjugation by H ∩ xLx^-1; keep the minimal id
          bool minimal = true;
          for (int n : members(both))
            if (lat->conjugate(n, k) < k) {
              minimal = false;
              break;
            }
          if (minimal) b.quads.push_back({h, k, x, l});
        }
      }
  std::sort(b.quads.begin(), b.quads.end(), [](const Quad& a, const Quad& c) {
    return std::tie(a.h, a.l, a.x, a.k) < std::tie(c.h, c.l, c.x, c.k);
  });
  for (int i = 0; i < b.dim(); ++i) b.index[b.quads[i]] = i;
  return b;
}

namespace {

std::vector<IntegerConstant> compute_constants(const MackeyBasis& b) {
  CosetActions ca(b.lattice);
  int n = b.dim();
  std::vector<std::vector<int>> by_h(b.lattice->size());
  for (int j = 0; j < n; ++j) by_h[b.quads[j].h].push_back(j);
  auto rows = [&](int lo, int hi) {
    std::vector<IntegerConstant> out;
    for (int i = lo; i < hi; ++i)
      for (int j : by_h[b.quads[i].l])
        for (const auto& [q, c] : compose_quads(ca, b.quads[i], b.quads[j])) {
          int k = b.find(q);
          if (k < 0) throw CertificateError("product leaves the basis: " + to_string(q));
          out.push_back({i, j, k, c});
        }
    return out;
  };
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || n < 64) return rows(0, n);
  std::vector<std::future<std::vector<IntegerConstant>>> parts;
  for (unsigned t = 0; t < threads; ++t) {
    int lo = static_cast<int>(static_cast<long long>(n) * t / threads);
    int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    parts.push_back(std::async(std::launch::async, rows, lo, hi));
  }
  std::vector<IntegerConstant> all;
  for (auto& p : parts) {
    auto part = p.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::string cache_key(const MackeyBasis& b) {
  const GroupTable& g = b.lattice->group();
  std::ostringstream s;
  s << g.order << ':';
  for (int v : g.table) s << v << ',';
  s << ':' << b.p_local.value_or(0) << ':' << b.dim();
  std::ostringstream name;
  name << "mackey-" << std::hex << std::hash<std::string>{}(s.str()) << std::dec << "-" << g.order << "-"
       << b.p_local.value_or(0) << ".txt";
  return name.str();
}

std::optional<std::vector<IntegerConstant>> read_cache(const std::filesystem::path& file, const MackeyBasis& b) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string magic;
  int dim = 0;
  std::size_t count = 0;
  if (!(in >> magic >> dim >> count) || magic != "mackey-constants-v1" || dim != b.dim()) return std::nullopt;
  for (int i = 0; i < dim; ++i) {
    Quad q;
    if (!(in >> q.h >> q.k >> q.x >> q.l) || q != b.quads[i]) return std::nullopt;
  }
  std::vector<IntegerConstant> out(count);
  for (auto& c : out)
    if (!(in >> c.i >> c.j >> c.k >> c.c) || c.i < 0 || c.j < 0 || c.k < 0 || c.i >= dim || c.j >= dim ||
        c.k >= dim)
      return std::nullopt;
  return out;
}

void write_cache(const std::filesystem::path& file, const MackeyBasis& b, const std::vector<IntegerConstant>& cs) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "mackey-constants-v1 " << b.dim() << ' ' << cs.size() << '\n';
    for (const auto& q : b.quads) out << q.h << ' ' << q.k << ' ' << q.x << ' ' << q.l << '\n';
    for (const auto& c : cs) out << c.i << ' ' << c.j << ' ' << c.k << ' ' << c.c << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::string default_cache_dir() {
  const char* v = std::getenv("MACKEY_CACHE_DIR");
  return v ? v : "";
}

IntegerStructure integer_structure(LatticePtr lat, std::optional<int> p_local, const std::string& cache_dir) {
  IntegerStructure s;
  s.basis = enumerate_basis(std::move(lat), p_local);
  std::filesystem::path file;
  if (!cache_dir.empty()) {
    file = std::filesystem::path(cache_dir) / cache_key(s.basis);
    if (auto cached = read_cache(file, s.basis)) {
      s.constants = std::move(*cached);
      return s;
    }
  }
  s.constants = compute_constants(s.basis);
  if (!file.empty()) write_cache(file, s.basis, s.constants);
  return s;
}

GF default_field(const GroupTable& g, int p) { return GF(p, splitting_degree(p, g.exponent())); }

Quad generator(const SubgroupLattice& lat, GeneratorKind kind, int a, int b) {
  int e = lat.group().identity;
  switch (kind) {
    case GeneratorKind::transfer:
      return canonical_label(lat, b, lat.mask(a), e, e, a);
    case GeneratorKind::restriction:
      return canonical_label(lat, a, lat.mask(a), e, e, b);
    case GeneratorKind::conjugation: {
      int gh = lat.conjugate(a, b);
      return canonical_label(lat, gh, lat.mask(gh), e, a, b);
    }
  }
  throw InputError("unknown generator kind");
}

std::string dump(const IntegerStructure& s, const std::string& field, int characteristic) {
  std::ostringstream out;
  out << "# group: " << s.basis.lattice->group().name << '\n';
  out << "# field: " << field << '\n';
  out << "# p_local: " << (s.basis.p_local ? std::to_string(*s.basis.p_local) : "none") << '\n';
  out << "# dim: " << s.basis.dim() << '\n';
  for (const auto& c : s.constants) {
    long long v = c.c;
    if (characteristic > 0) v = ((v % characteristic) + characteristic) % characteristic;
    if (v != 0) out << c.i << ' ' << c.j << ' ' << c.k << ' ' << v << '\n';
  }
  return out.str();
}

std::vector<std::tuple<int, int, int>> all_triples(const MackeyBasis& b) {
  std::vector<std::vector<int>> by_h(b.lattice->size());
  for (int j = 0; j < b.dim(); ++j) by_h[b.quads[j].h].push_back(j);
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 0; i < b.dim(); ++i)
    for (int j : by_h[b.quads[i].l])
      for (int k : by_h[b.quads[j].l]) out.emplace_back(i, j, k);
  return out;
}

std::vector<std::tuple<int, int, int>> sample_triples(const MackeyBasis& b, long long count, std::uint64_t seed) {
  std::vector<std::vector<int>> by_h(b.lattice->size());
  for (int j = 0; j < b.dim(); ++j) by_h[b.quads[j].h].push_back(j);
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<int>& v) { return v[rng() % v.size()]; };
  std::vector<std::tuple<int, int, int>> out;
  if (b.dim() == 0) return out;
  out.reserve(count);
  for (long long t = 0; t < count; ++t) {
    int i = static_cast<int>(rng() % b.dim());
    int j = pick(by_h[b.quads[i].l]);
    int k = pick(by_h[b.quads[j].l]);
    out.emplace_back(i, j, k);
  }
  return out;
}

}  // namespace mackey
