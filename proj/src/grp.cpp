#include "mackey/grp.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "mackey/error.hpp"

namespace mackey {

std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

int GroupTable::power(int g, long long k) const {
  int n = element_order(g);
  k %= n;
  if (k < 0) k += n;
  int r = identity;
  for (long long i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

int GroupTable::element_order(int g) const {
  int n = 1;
  for (int x = g; x != identity; x = mul(x, g)) ++n;
  return n;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int g = 0; g < order; ++g) e = std::lcm(e, element_order(g));
  return e;
}

void GroupTable::validate() const {
  if (order < 1 || order > kMaxGroupOrder)
    throw LimitError("group order " + std::to_string(order) + " outside 1.." +
                     std::to_string(kMaxGroupOrder));
  if (static_cast<int>(table.size()) != order * order) throw InputError("table has wrong size");
  for (int v : table)
    if (v < 0 || v >= order) throw InputError("table entry out of range");
  for (int a = 0; a < order; ++a)
    if (mul(identity, a) != a || mul(a, identity) != a)
      throw InputError("element " + std::to_string(identity) + " is not a two-sided identity");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < order; ++a)
    if (mul(a, inverses[a]) != identity || mul(inverses[a], a) != identity)
      throw InputError("bad inverse");
  Mask gens = 0;
  for (int g : generators) gens |= bit(g);
  if (generate(*this, gens) != all()) throw InputError("generators do not generate the group");
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // apply b first
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> inverse_column(const std::vector<int>& table, int order, int identity) {
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (table[a * order + b] == identity) inv[a] = b;
  for (int v : inv)
    if (v < 0) throw InputError("table has an element without inverse");
  return inv;
}

std::vector<int> greedy_generators(const GroupTable& g) {
  std::vector<int> gens;
  Mask cur = bit(g.identity);
  for (int x = 0; x < g.order; ++x) {
    if (has(cur, x)) continue;
    gens.push_back(x);
    Mask gm = 0;
    for (int y : gens) gm |= bit(y);
    cur = generate(g, gm);
  }
  return gens;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Perm matrix_perm_f3(int a, int b, int c, int d) {
  // action of [[a,b],[c,d]] on the 8 nonzero vectors of F_3^2
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  Perm p(8);
  for (int i = 0; i < 8; ++i) {
    auto [x, y] = vecs[i];
    std::pair<int, int> img{(a * x + b * y) % 3, (c * x + d * y) % 3};
    p[i] = static_cast<int>(std::find(vecs.begin(), vecs.end(), img) - vecs.begin());
  }
  return p;
}

Perm cycle_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

GroupPtr builtin(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::smatch m;
  if (s == "Q8") {
    return group_from_permutations("Q8", {matrix_perm_f3(0, 2, 1, 0), matrix_perm_f3(1, 1, 1, 2)});
  }
  if (s == "SL(2,3)" || s == "SL23") {
    return group_from_permutations("SL(2,3)",
                                   {matrix_perm_f3(1, 1, 0, 1), matrix_perm_f3(0, 2, 1, 0)});
  }
  if (s == "V4" || s == "K4") {
    auto g = group_from_permutations("V4", {{1, 0, 3, 2}, {2, 3, 0, 1}});
    return g;
  }
  static const std::regex re_named(R"(([CDSA])(\d+))");
  if (std::regex_match(s, m, re_named)) {
    char kind = m[1].str()[0];
    int n = std::stoi(m[2].str());
    std::string name = std::string(1, kind) + std::to_string(n);
    if (n < 1) throw InputError("bad group size in '" + raw + "'");
    switch (kind) {
      case 'C':
        if (n > kMaxGroupOrder) throw LimitError("C" + std::to_string(n) + " exceeds order bound");
        return group_from_permutations(name, n == 1 ? std::vector<Perm>{} : std::vector<Perm>{cycle_perm(n)});
      case 'D': {
        if (n == 1) return group_from_permutations(name, {{1, 0}});
        if (n == 2) return group_from_permutations(name, {{1, 0, 3, 2}, {2, 3, 0, 1}});
        if (2 * n > kMaxGroupOrder) throw LimitError(name + " exceeds order bound");
        Perm refl(n);
        for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
        return group_from_permutations(name, {cycle_perm(n), refl});
      }
      case 'S': {
        if (n > 5) throw LimitError(name + " exceeds order bound");
        if (n == 1) return group_from_permutations(name, {});
        Perm t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        return group_from_permutations(name, {t, cycle_perm(n)});
      }
      case 'A': {
        if (n > 5) throw LimitError(name + " exceeds order bound");
        if (n < 3) return group_from_permutations(name, {});
        Perm a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        a[0] = 1, a[1] = 2, a[2] = 0;
        std::iota(b.begin(), b.end(), 0);
        if (n % 2 == 1) {
          b = cycle_perm(n);
        } else {
          for (int i = 1; i < n; ++i) b[i] = (i == n - 1) ? 1 : i + 1;
        }
        return group_from_permutations(name, {a, b});
      }
    }
  }
  static const std::regex re_meta(R"(C(\d+):C(\d+)\[(\d+)\])");
  if (std::regex_match(s, m, re_meta)) {
    return metacyclic(std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str()));
  }
  throw InputError("unknown group '" + raw + "'");
}

}  // namespace

GroupPtr group_from_permutations(std::string name, const std::vector<std::vector<int>>& gens) {
  int degree = 1;
  for (const auto& g : gens) degree = std::max<int>(degree, static_cast<int>(g.size()));
  if (degree > 64) throw LimitError("permutation degree " + std::to_string(degree) + " exceeds 64");
  std::vector<Perm> padded;
  for (const auto& g : gens) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || g[i] >= degree || seen[g[i]]) throw InputError("not a permutation");
      seen[g[i]] = true;
      p[i] = g[i];
    }
    padded.push_back(std::move(p));
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> elements{id};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : padded) {
      Perm c = compose(elements[head], s);
      if (!index.count(c)) {
        if (static_cast<int>(elements.size()) >= kMaxGroupOrder)
          throw LimitError("group generated by permutations exceeds order " +
                           std::to_string(kMaxGroupOrder));
        index.emplace(c, static_cast<int>(elements.size()));
        elements.push_back(std::move(c));
      }
    }
  }
  auto g = std::make_shared<GroupTable>();
  g->name = std::move(name);
  g->order = static_cast<int>(elements.size());
  g->table.resize(static_cast<std::size_t>(g->order) * g->order);
  for (int a = 0; a < g->order; ++a)
    for (int b = 0; b < g->order; ++b)
      g->table[a * g->order + b] = index.at(compose(elements[a], elements[b]));
  g->identity = 0;
  g->inverses = inverse_column(g->table, g->order, 0);
  for (const auto& s : padded) {
    int i = index.at(s);
    if (i != 0 && std::find(g->generators.begin(), g->generators.end(), i) == g->generators.end())
      g->generators.push_back(i);
  }
  g->validate();
  return g;
}

GroupPtr group_from_table(std::string name, int order, std::vector<int> table) {
  if (order < 1 || order > kMaxGroupOrder)
    throw LimitError("group order " + std::to_string(order) + " outside 1.." +
                     std::to_string(kMaxGroupOrder));
  if (static_cast<int>(table.size()) != order * order) throw InputError("table has wrong size");
  for (int v : table)
    if (v < 0 || v >= order) throw InputError("table entry out of range");
  auto g = std::make_shared<GroupTable>();
  g->name = std::move(name);
  g->order = order;
  g->table = std::move(table);
  g->identity = -1;
  for (int e = 0; e < order && g->identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = g->mul(e, a) == a && g->mul(a, e) == a;
    if (ok) g->identity = e;
  }
  if (g->identity < 0) throw InputError("table has no identity");
  g->inverses = inverse_column(g->table, order, g->identity);
  g->generators = greedy_generators(*g);
  g->validate();
  return g;
}

GroupPtr direct_product(const GroupTable& a, const GroupTable& b) {
  int n = a.order * b.order;
  if (n > kMaxGroupOrder) throw LimitError("direct product exceeds order bound");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
  auto g = std::make_shared<GroupTable>();
  g->name = a.name + "x" + b.name;
  g->order = n;
  g->table = std::move(t);
  g->identity = a.identity * b.order + b.identity;
  g->inverses = inverse_column(g->table, n, g->identity);
  for (int s : a.generators) g->generators.push_back(s * b.order + b.identity);
  for (int s : b.generators) g->generators.push_back(a.identity * b.order + s);
  g->validate();
  return g;
}

GroupPtr metacyclic(int n, int m, int k) {
  if (n < 1 || m < 1) throw InputError("bad metacyclic parameters");
  if (n * m > kMaxGroupOrder) throw LimitError("metacyclic group exceeds order bound");
  long long km = 1;
  for (int i = 0; i < m; ++i) km = km * k % n;
  if (n > 1 && km % n != 1 % n) throw InputError("k^m must be 1 mod n for C_n:C_m[k]");
  if (std::gcd(k, n) != 1 && n > 1) throw InputError("k must be a unit mod n");
  // element (a,b) -> a*m+b ; (a1,b1)(a2,b2) = (a1 + k^b1 a2, b1+b2)
  std::vector<long long> kp(m, 1);
  for (int i = 1; i < m; ++i) kp[i] = kp[i - 1] * k % n;
  int order = n * m;
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int a1 = x / m, b1 = x % m, a2 = y / m, b2 = y % m;
      int a = static_cast<int>((a1 + kp[b1] * a2) % n);
      t[x * order + y] = a * m + (b1 + b2) % m;
    }
  auto g = std::make_shared<GroupTable>();
  g->name = "C" + std::to_string(n) + ":C" + std::to_string(m) + "[" + std::to_string(k) + "]";
  g->order = order;
  g->table = std::move(t);
  g->identity = 0;
  g->inverses = inverse_column(g->table, order, 0);
  if (n > 1) g->generators.push_back(1 * m);
  if (m > 1) g->generators.push_back(1);
  g->validate();
  return g;
}

GroupPtr parse_cayley_table(const std::string& text, const std::string& fallback_name) {
  std::istringstream in(text);
  std::string line, name = fallback_name;
  std::vector<int> nums;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto pos = t.find("name:");
      if (pos != std::string::npos) name = trim(t.substr(pos + 5));
      continue;
    }
    std::istringstream ls(t);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw InputError("bad token '" + tok + "'");
        nums.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("bad token '" + tok + "' in Cayley table");
      }
    }
  }
  if (nums.empty()) throw InputError("empty Cayley table");
  int n = nums[0];
  if (n < 1 || n > kMaxGroupOrder) throw LimitError("Cayley table order out of range");
  if (static_cast<int>(nums.size()) != 1 + n * n)
    throw InputError("Cayley table expects " + std::to_string(n * n) + " entries");
  return group_from_table(name, n, std::vector<int>(nums.begin() + 1, nums.end()));
}

GroupPtr parse_permutation_generators(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::vector<int>>> cycles_per_line;
  int maxpt = -1, minpt = 1 << 30;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] == ' ') {
        ++i;
        continue;
      }
      if (t[i] != '(') throw InputError("expected '(' in permutation line: " + t);
      auto j = t.find(')', i);
      if (j == std::string::npos) throw InputError("unterminated cycle: " + t);
      std::string body = t.substr(i + 1, j - i - 1);
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream cs(body);
      std::vector<int> cyc;
      int v;
      while (cs >> v) {
        cyc.push_back(v);
        maxpt = std::max(maxpt, v);
        minpt = std::min(minpt, v);
      }
      if (!cs.eof()) throw InputError("bad cycle: " + t);
      cycles.push_back(std::move(cyc));
      i = j + 1;
    }
    cycles_per_line.push_back(std::move(cycles));
  }
  int shift = (minpt >= 1) ? 1 : 0;
  int degree = std::max(1, maxpt + 1 - shift);
  if (degree > 64) throw LimitError("permutation degree " + std::to_string(degree) + " exceeds 64");
  std::vector<std::vector<int>> gens;
  for (const auto& cycles : cycles_per_line) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> touched(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k] - shift, b = c[(k + 1) % c.size()] - shift;
        if (a < 0 || touched[a]) throw InputError("cycles are not disjoint");
        touched[a] = true;
        p[a] = b;
      }
    }
    gens.push_back(std::move(p));
  }
  return group_from_permutations(name, gens);
}

GroupPtr build_group(const std::string& spec_raw) {
  std::string spec = trim(spec_raw);
  if (spec.empty()) throw InputError("empty group specifier");
  std::string path;
  if (spec.rfind("file:", 0) == 0) path = spec.substr(5);
  else if (std::filesystem::is_regular_file(spec)) path = spec;
  if (!path.empty()) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read group file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    std::string stem = std::filesystem::path(path).stem().string();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      if (t[0] == '(') return parse_permutation_generators(text, stem);
      return parse_cayley_table(text, stem);
    }
    throw InputError("group file '" + path + "' is empty");
  }
  // direct products at paren depth zero
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : spec) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if ((ch == 'x' || ch == 'X' || ch == '*') && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  GroupPtr g = builtin(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(*g, *builtin(parts[i]));
  return g;
}

// ---- subsets ---------------------------------------------------------------

Mask generate(const GroupTable& g, Mask gens) {
  std::vector<int> gl = members(gens);
  std::vector<int> elems{g.identity};
  Mask seen = bit(g.identity);
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (int s : gl) {
      int c = g.mul(elems[h], s);
      if (!has(seen, c)) {
        seen |= bit(c);
        elems.push_back(c);
      }
    }
  return seen;
}

bool is_subgroup(const GroupTable& g, Mask h) {
  if (!has(h, g.identity)) return false;
  for (int a : members(h))
    for (int b : members(h))
      if (!has(h, g.mul(a, g.inv(b)))) return false;
  return true;
}

Mask conjugate(const GroupTable& g, int x, Mask h) {
  Mask out = 0;
  for (int a : members(h)) out |= bit(g.conj(x, a));
  return out;
}

Mask normalizer(const GroupTable& g, Mask h) {
  Mask out = 0;
  for (int x = 0; x < g.order; ++x)
    if (conjugate(g, x, h) == h) out |= bit(x);
  return out;
}

bool is_normal(const GroupTable& g, Mask n, Mask in) {
  for (int x : members(in))
    if (conjugate(g, x, n) != n) return false;
  return true;
}

std::vector<Mask> subgroups_of(const GroupTable& g, Mask within) {
  std::set<Mask> cyclic;
  for (int x : members(within)) cyclic.insert(generate(g, bit(x)));
  std::set<Mask> all(cyclic.begin(), cyclic.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(all.begin(), all.end());
    for (Mask a : snapshot)
      for (Mask c : cyclic) {
        if ((c & ~a) == 0) continue;
        Mask j = generate(g, a | c);
        if (all.insert(j).second) grew = true;
      }
  }
  return {all.begin(), all.end()};
}

std::vector<Mask> maximal_subgroups(const GroupTable& g, Mask h) {
  auto subs = subgroups_of(g, h);
  std::vector<Mask> out;
  for (Mask a : subs) {
    if (a == h) continue;
    bool maximal = true;
    for (Mask b : subs)
      if (b != h && b != a && (a & ~b) == 0) maximal = false;
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

Mask double_coset(const GroupTable& g, Mask h, int x, Mask l) {
  Mask out = 0;
  for (int a : members(h)) {
    int ax = g.mul(a, x);
    for (int b : members(l)) out |= bit(g.mul(ax, b));
  }
  return out;
}

std::vector<int> double_cosets(const GroupTable& g, Mask h, Mask l) {
  std::vector<int> reps;
  Mask covered = 0;
  for (int x = 0; x < g.order; ++x) {
    if (has(covered, x)) continue;
    reps.push_back(x);
    covered |= double_coset(g, h, x, l);
  }
  return reps;
}

namespace {

Quotient make_quotient(const GroupTable& g, Mask domain, Mask n, const std::string& name) {
  // cosets xN of N inside `domain`, ordered by minimal representative
  Quotient q;
  q.projection.assign(g.order, -1);
  for (int x : members(domain)) {
    if (q.projection[x] >= 0) continue;
    int c = static_cast<int>(q.lift.size());
    q.lift.push_back(x);
    for (int a : members(n)) q.projection[g.mul(x, a)] = c;
  }
  int order = static_cast<int>(q.lift.size());
  auto t = std::make_shared<GroupTable>();
  t->name = name;
  t->order = order;
  t->table.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int c = q.projection[g.mul(q.lift[a], q.lift[b])];
      if (c < 0) throw InputError("domain is not closed under multiplication");
      t->table[a * order + b] = c;
    }
  t->identity = q.projection[g.identity];
  t->inverses.assign(order, 0);
  for (int a = 0; a < order; ++a) t->inverses[a] = q.projection[g.inv(q.lift[a])];
  t->generators = greedy_generators(*t);
  t->validate();
  q.group = t;
  return q;
}

}  // namespace

Quotient quotient_group(const GroupTable& g, Mask n) {
  if (!is_subgroup(g, n)) throw InputError("not a subgroup");
  if (!is_normal(g, n, g.all())) throw InputError("subgroup is not normal");
  Quotient q = make_quotient(g, g.all(), n, g.name + "/N" + std::to_string(popcount(n)));
  // images of the parent's generators make a more natural generating set
  std::vector<int> gens;
  for (int s : g.generators) {
    int c = q.projection[s];
    if (c != q.group->identity && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  auto t = std::make_shared<GroupTable>(*q.group);
  t->generators = gens;
  t->validate();
  q.group = t;
  return q;
}

Quotient subgroup_as_group(const GroupTable& g, Mask h, const std::string& name) {
  if (!is_subgroup(g, h)) throw InputError("not a subgroup");
  return make_quotient(g, h, bit(g.identity), name);
}

Quotient normalizer_quotient(const GroupTable& g, Mask q) {
  Mask n = normalizer(g, q);
  return make_quotient(g, n, q, "N(" + std::to_string(popcount(q)) + ")/" + std::to_string(popcount(q)));
}

// ---- lattice ---------------------------------------------------------------

SubgroupLattice::SubgroupLattice(GroupPtr g, int bound) : group_(std::move(g)) {
  const GroupTable& G = *group_;
  if (G.order > bound)
    throw LimitError("group order " + std::to_string(G.order) + " exceeds lattice bound " +
                     std::to_string(bound));
  auto masks = subgroups_of(G, G.all());
  for (Mask m : masks) {
    Subgroup s;
    s.mask = m;
    s.order = popcount(m);
    s.members = members(m);
    subgroups_.push_back(std::move(s));
  }
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  for (int i = 0; i < size(); ++i) {
    subgroups_[i].id = i;
    index_.emplace(subgroups_[i].mask, i);
  }
  int n = size();
  conj_.resize(static_cast<std::size_t>(G.order) * n);
  for (int x = 0; x < G.order; ++x)
    for (int h = 0; h < n; ++h) conj_[x * n + h] = id_of(mackey::conjugate(G, x, subgroups_[h].mask));
  normalizers_.resize(n);
  for (int h = 0; h < n; ++h) {
    Mask nm = 0;
    for (int x = 0; x < G.order; ++x)
      if (conjugate(x, h) == h) nm |= bit(x);
    normalizers_[h] = id_of(nm);
  }
  class_of_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (class_of_[h] >= 0) continue;
    int c = static_cast<int>(class_reps_.size());
    class_reps_.push_back(h);
    for (int x = 0; x < G.order; ++x) class_of_[conjugate(x, h)] = c;
  }
  coset_index_.resize(n);
  coset_reps_.resize(n);
  for (int h = 0; h < n; ++h) {
    coset_index_[h].assign(G.order, -1);
    for (int x = 0; x < G.order; ++x) {
      if (coset_index_[h][x] >= 0) continue;
      int c = static_cast<int>(coset_reps_[h].size());
      coset_reps_[h].push_back(x);
      for (int a : subgroups_[h].members) coset_index_[h][G.mul(x, a)] = c;
    }
  }
}

int SubgroupLattice::id_of(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw CertificateError("mask is not a subgroup in the lattice");
  return it->second;
}

std::vector<int> SubgroupLattice::class_members(int c) const {
  std::vector<int> out;
  for (int h = 0; h < size(); ++h)
    if (class_of_[h] == c) out.push_back(h);
  return out;
}

std::vector<PSubgroupClass> p_subgroup_classes(const SubgroupLattice& lat, int p) {
  int sylow = p_part(lat.group().order, p);
  std::vector<PSubgroupClass> out;
  for (int rep : lat.class_reps())
    if (is_p_power(lat.order(rep), p)) out.push_back({rep, lat.order(rep) == sylow});
  return out;
}

int normal_p_complement(const SubgroupLattice& lat, int p) {
  int target = lat.group().order / p_part(lat.group().order, p);
  for (int h = 0; h < lat.size(); ++h)
    if (lat.order(h) == target && lat.normalizer(h) == lat.whole()) return h;
  return -1;
}

}  // namespace mackey
