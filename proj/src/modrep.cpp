#include "mackey/modrep.hpp"

#include <deque>
#include <sstream>

namespace mackey {

namespace {

Vec<GF> flatten(const Mat<GF>& m) { return m.a; }

Mat<GF> unflatten(const Vec<GF>& v, int rows, int cols, const GF& f) {
  Mat<GF> m(rows, cols, f);
  m.a = v;
  return m;
}

Vec<GF> column(const Mat<GF>& m, int j) {
  Vec<GF> c(m.rows);
  for (int i = 0; i < m.rows; ++i) c[i] = m(i, j);
  return c;
}

// Matrices of rho restricted to the invariant subspace spanned by `basis`.
std::vector<Mat<GF>> restrict_action(const ModuleRep& v, const std::vector<Vec<GF>>& basis) {
  const GF& f = v.field;
  int m = static_cast<int>(basis.size());
  Subspace<GF> sub(f, v.dim);
  for (const auto& b : basis) sub.add(b);
  std::vector<Mat<GF>> out;
  for (const auto& g : v.action) {
    Mat<GF> r(m, m, f);
    for (int j = 0; j < m; ++j) {
      auto c = sub.coordinates(apply(f, g, basis[j]));
      if (!c) throw CertificateError("subspace is not a submodule");
      for (int i = 0; i < m; ++i) r(i, j) = (*c)[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

Mat<GF> subtract_identity(const GF& f, Mat<GF> m) {
  for (int i = 0; i < m.rows; ++i) m(i, i) = f.sub(m(i, i), f.one());
  return m;
}

}  // namespace

void ModuleRep::validate() const {
  const GroupTable& g = *group;
  if (static_cast<int>(elements.size()) != g.order) throw CertificateError("module lacks element matrices");
  if (elements[g.identity] != Mat<GF>::identity(dim, field)) throw CertificateError("identity acts nontrivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (matmul(field, elements[a], elements[b]) != elements[g.mul(a, b)])
        throw CertificateError("module action is not a homomorphism");
}

ModuleRep make_module(GroupPtr g, const GF& f, int dim, std::vector<Mat<GF>> gens) {
  if (gens.size() != g->generators.size()) throw InputError("one matrix per group generator is required");
  for (const auto& m : gens)
    if (m.rows != dim || m.cols != dim) throw InputError("generator matrix has the wrong size");
  ModuleRep v;
  v.group = g;
  v.field = f;
  v.dim = dim;
  v.action = std::move(gens);
  v.elements.assign(g->order, Mat<GF>());
  std::vector<char> seen(g->order, 0);
  v.elements[g->identity] = Mat<GF>::identity(v.dim, f);
  seen[g->identity] = 1;
  std::deque<int> queue{g->identity};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < g->generators.size(); ++s) {
      int y = g->mul(x, g->generators[s]);
      if (seen[y]) continue;
      seen[y] = 1;
      v.elements[y] = matmul(f, v.elements[x], v.action[s]);
      queue.push_back(y);
    }
  }
  for (char s : seen)
    if (!s) throw InputError("group generators do not generate the group");
  return v;
}

ModuleRep permutation_module(const GSet& x, const GF& f) {
  if (x.size > kModuleDimCap) throw LimitError("permutation module above the dimension cap");
  std::vector<Mat<GF>> gens;
  for (int s : x.group->generators) {
    Mat<GF> m(x.size, x.size, f);
    for (int p = 0; p < x.size; ++p) m(x.act(s, p), p) = f.one();
    gens.push_back(std::move(m));
  }
  return make_module(x.group, f, x.size, std::move(gens));
}

ModuleRep trivial_module(GroupPtr g, const GF& f) { return permutation_module(trivial_gset(std::move(g), 1), f); }

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  const GF& f = a.field;
  ModuleRep v;
  v.group = a.group;
  v.field = f;
  v.dim = a.dim + b.dim;
  auto block = [&](const Mat<GF>& x, const Mat<GF>& y) {
    Mat<GF> m(v.dim, v.dim, f);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m(i, j) = x(i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = y(i, j);
    return m;
  };
  for (std::size_t s = 0; s < a.action.size(); ++s) v.action.push_back(block(a.action[s], b.action[s]));
  for (std::size_t g = 0; g < a.elements.size(); ++g) v.elements.push_back(block(a.elements[g], b.elements[g]));
  return v;
}

std::vector<Vec<GF>> fixed_points(const ModuleRep& v, Mask h) {
  const GF& f = v.field;
  std::vector<Vec<GF>> rows;
  for (int x : members(h)) {
    auto d = subtract_identity(f, v.of(x));
    for (int i = 0; i < d.rows; ++i) rows.push_back(d.row(i));
  }
  return nullspace(f, from_rows<GF>(rows, v.dim, f));
}

Mat<GF> transfer_map(const ModuleRep& v, Mask h, Mask k) {
  if ((h & ~k) != 0) throw InputError("transfer needs H contained in K");
  const GroupTable& g = *v.group;
  const GF& f = v.field;
  Mat<GF> t(v.dim, v.dim, f);
  Mask covered = 0;
  for (int x : members(k)) {
    if (has(covered, x)) continue;
    for (int y : members(h)) covered |= bit(g.mul(x, y));
    const auto& m = v.of(x);
    for (std::size_t i = 0; i < t.a.size(); ++i) t.a[i] = f.add(t.a[i], m.a[i]);
  }
  return t;
}

std::string dump_module(const ModuleRep& v) {
  std::ostringstream out;
  out << "field " << v.field.name() << '\n' << "dim " << v.dim << '\n';
  for (const auto& m : v.action) {
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m(i, j);
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct BrauerData {
  std::vector<Vec<GF>> fixed;
  Subspace<GF> fixed_space;
  std::vector<Vec<GF>> complement;  // in V^Q coordinates
  Mat<GF> projection;
};

BrauerData brauer_data(const ModuleRep& v, const SubgroupLattice& lat, int q) {
  const GF& f = v.field;
  if (!is_p_power(lat.order(q), f.characteristic()))
    throw InputError("Brauer quotient needs a p-subgroup for p the characteristic");
  const GroupTable& g = lat.group();
  BrauerData d{fixed_points(v, lat.mask(q)), Subspace<GF>(f, v.dim), {}, {}};
  for (const auto& b : d.fixed) d.fixed_space.add(b);
  int a = static_cast<int>(d.fixed.size());
  Subspace<GF> span(f, a);
  for (Mask r : maximal_subgroups(g, lat.mask(q))) {
    auto t = transfer_map(v, r, lat.mask(q));
    for (const auto& u : fixed_points(v, r)) {
      auto c = d.fixed_space.coordinates(apply(f, t, u));
      if (!c) throw CertificateError("transfer image leaves the fixed points");
      span.add(*c);
    }
  }
  int b = span.dim();
  for (int i = 0; i < a; ++i) {
    Vec<GF> e(a, f.zero());
    e[i] = f.one();
    if (span.add(e)) d.complement.push_back(std::move(e));
  }
  d.projection = Mat<GF>(a - b, a, f);
  for (int i = 0; i < a; ++i) {
    Vec<GF> e(a, f.zero());
    e[i] = f.one();
    auto c = *span.coordinates(e);
    for (int j = 0; j < a - b; ++j) d.projection(j, i) = c[b + j];
  }
  return d;
}

}  // namespace

int brauer_quotient_dim(const ModuleRep& v, const SubgroupLattice& lat, int q) {
  return static_cast<int>(brauer_data(v, lat, q).complement.size());
}

BrauerQuotient brauer_quotient(const ModuleRep& v, const SubgroupLattice& lat, int q) {
  const GF& f = v.field;
  auto d = brauer_data(v, lat, q);
  BrauerQuotient out;
  out.normalizer = normalizer_quotient(lat.group(), lat.mask(q));
  int m = static_cast<int>(d.complement.size());
  std::vector<Mat<GF>> gens;
  for (int s : out.normalizer.group->generators) {
    const auto& rho = v.of(out.normalizer.lift[s]);
    Mat<GF> r(m, m, f);
    for (int j = 0; j < m; ++j) {
      Vec<GF> amb(v.dim, f.zero());
      for (std::size_t i = 0; i < d.fixed.size(); ++i) axpy(f, amb, d.complement[j][i], d.fixed[i]);
      auto c = d.fixed_space.coordinates(apply(f, rho, amb));
      if (!c) throw CertificateError("normalizer does not preserve the fixed points");
      auto pc = apply(f, d.projection, *c);
      for (int i = 0; i < m; ++i) r(i, j) = pc[i];
    }
    gens.push_back(std::move(r));
  }
  out.module = make_module(out.normalizer.group, f, m, std::move(gens));
  out.fixed_basis = std::move(d.fixed);
  out.projection = std::move(d.projection);
  return out;
}

std::vector<Mat<GF>> hom_space(const ModuleRep& v, const ModuleRep& w) {
  const GF& f = v.field;
  int n = v.dim, m = w.dim;
  if (n > kModuleDimCap || m > kModuleDimCap) throw LimitError("module above the dimension cap");
  std::vector<Vec<GF>> rows;
  for (std::size_t s = 0; s < v.action.size(); ++s) {
    const auto& a = v.action[s];
    const auto& b = w.action[s];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<GF> row(static_cast<std::size_t>(m) * n, f.zero());
        for (int k = 0; k < n; ++k) row[i * n + k] = f.add(row[i * n + k], a(k, j));
        for (int k = 0; k < m; ++k) row[k * n + j] = f.sub(row[k * n + j], b(i, k));
        if (!is_zero_vec(f, row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Mat<GF>> out;
  for (auto& x : nullspace(f, from_rows<GF>(rows, m * n, f))) out.push_back(unflatten(x, m, n, f));
  return out;
}

std::vector<Mat<GF>> orbital_endomorphisms(const GSet& x, const GF& f) {
  std::vector<Mat<GF>> out;
  for (const auto& o : orbits(product_gset(x, x))) {
    Mat<GF> a(x.size, x.size, f);
    for (int pt : o.points) a(pt / x.size, pt % x.size) = f.one();
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Summand> decompose(const ModuleRep& v, std::vector<Mat<GF>> endos) {
  const GF& f = v.field;
  if (v.dim == 0) return {};
  if (v.dim > kModuleDimCap) throw LimitError("module above the dimension cap");
  if (endos.empty()) endos = hom_space(v, v);
  int r = static_cast<int>(endos.size());
  Subspace<GF> sub(f, v.dim * v.dim);
  for (const auto& e : endos)
    if (!sub.add(flatten(e))) throw InputError("endomorphism basis is linearly dependent");
  std::vector<Algebra<GF>::Constant> consts;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto c = sub.coordinates(flatten(matmul(f, endos[i], endos[j])));
      if (!c) throw CertificateError("endomorphisms are not closed under composition");
      for (int k = 0; k < r; ++k)
        if (!f.is_zero((*c)[k])) consts.push_back({i, j, k, (*c)[k]});
    }
  auto unit = sub.coordinates(flatten(Mat<GF>::identity(v.dim, f)));
  if (!unit) throw CertificateError("identity is not an endomorphism");
  Algebra<GF> end(f, r, std::move(consts), *unit);
  auto d = primitive_idempotents(end);
  std::vector<Summand> out;
  for (int c = 0; c < d.class_count(); ++c) {
    Mat<GF> e(v.dim, v.dim, f);
    const auto& coeffs = d.idempotents[d.reps[c]];
    for (int i = 0; i < r; ++i)
      for (std::size_t k = 0; k < e.a.size(); ++k) e.a[k] = f.add(e.a[k], f.mul(coeffs[i], endos[i].a[k]));
    Subspace<GF> image(f, v.dim);
    for (int j = 0; j < v.dim; ++j) image.add(column(e, j));
    std::vector<Vec<GF>> basis = image.basis();
    Summand s;
    s.module = make_module(v.group, f, static_cast<int>(basis.size()), restrict_action(v, basis));
    s.multiplicity = d.multiplicity[c];
    out.push_back(std::move(s));
  }
  int total = 0;
  for (const auto& s : out) total += s.module.dim * s.multiplicity;
  if (total != v.dim) throw CertificateError("summand dimensions do not add up");
  return out;
}

bool indecomposables_isomorphic(const ModuleRep& a, const ModuleRep& b) {
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  const GF& f = a.field;
  auto ab = hom_space(a, b);
  if (ab.empty()) return false;
  auto ba = hom_space(b, a);
  // End(a) is local, so some product of basis maps is invertible iff a and b are isomorphic
  for (const auto& g : ba)
    for (const auto& h : ab)
      if (rank(f, matmul(f, g, h)) == a.dim) return true;
  return false;
}

bool is_isomorphic(const ModuleRep& a, const ModuleRep& b) {
  if (a.dim != b.dim) return false;
  auto da = decompose(a), db = decompose(b);
  if (da.size() != db.size()) return false;
  std::vector<char> used(db.size(), 0);
  for (const auto& s : da) {
    bool found = false;
    for (std::size_t j = 0; j < db.size() && !found; ++j)
      if (!used[j] && db[j].multiplicity == s.multiplicity && indecomposables_isomorphic(s.module, db[j].module)) {
        used[j] = 1;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

int block_of_module(const ModuleRep& v, const std::vector<Vec<GF>>& blocks) {
  const GF& f = v.field;
  auto id = Mat<GF>::identity(v.dim, f);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Mat<GF> m(v.dim, v.dim, f);
    for (int g = 0; g < v.group->order; ++g) {
      if (f.is_zero(blocks[i][g])) continue;
      for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = f.add(m.a[k], f.mul(blocks[i][g], v.of(g).a[k]));
    }
    if (m == id) return static_cast<int>(i);
  }
  throw CertificateError("module does not lie in a single block");
}

int vertex_of(const ModuleRep& v, const SubgroupLattice& lat, int p) {
  const GroupTable& g = lat.group();
  std::vector<int> nonzero;
  for (const auto& c : p_subgroup_classes(lat, p))
    if (brauer_quotient_dim(v, lat, c.rep) > 0) nonzero.push_back(c.rep);
  if (nonzero.empty()) throw CertificateError("no p-subgroup has a nonzero Brauer quotient");
  int best = nonzero[0];
  for (int q : nonzero)
    if (lat.order(q) > lat.order(best)) best = q;
  for (int q : nonzero) {
    bool sub = false;
    for (int x = 0; x < g.order && !sub; ++x) sub = lat.contains(best, lat.conjugate(x, q));
    if (!sub) throw CertificateError("Brauer quotients do not determine a unique vertex");
  }
  return best;
}

std::vector<PPermModule> p_permutation_indecomposables(LatticePtr lat, int p, const GF& f) {
  if (f.characteristic() != p) throw InputError("field characteristic must be p");
  const GroupTable& g = lat->group();
  auto blocks = block_idempotents(group_algebra(g, f));
  std::vector<PPermModule> out;
  for (const auto& c : p_subgroup_classes(*lat, p)) {
    auto x = coset_gset(*lat, c.rep);
    auto v = permutation_module(x, f);
    for (auto& s : decompose(v, orbital_endomorphisms(x, f))) {
      bool seen = false;
      for (const auto& m : out)
        if (indecomposables_isomorphic(m.module, s.module)) {
          seen = true;
          break;
        }
      if (seen) continue;
      PPermModule m;
      m.vertex = vertex_of(s.module, *lat, p);
      m.block = block_of_module(s.module, blocks);
      m.source = c.rep;
      m.module = std::move(s.module);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace mackey
