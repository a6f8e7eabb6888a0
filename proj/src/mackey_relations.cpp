#include "mackey/mackey.hpp"

namespace mackey {

namespace {

using ZAlgebra = Algebra<Integers>;

struct Checker {
  const MackeyBasis& b;
  const SubgroupLattice& lat;
  const GroupTable& g;
  ZAlgebra a;
  RelationReport report;

  Vec<Integers> gen(GeneratorKind kind, int x, int y) const {
    int i = b.find(generator(lat, kind, x, y));
    if (i < 0) throw CertificateError("generator outside the basis");
    return a.basis_vector(i);
  }
  Vec<Integers> t(int h, int k) const { return gen(GeneratorKind::transfer, h, k); }
  Vec<Integers> r(int h, int k) const { return gen(GeneratorKind::restriction, h, k); }
  Vec<Integers> c(int x, int h) const { return gen(GeneratorKind::conjugation, x, h); }
  Vec<Integers> mul(const Vec<Integers>& x, const Vec<Integers>& y) const { return a.mul(x, y); }

  void expect(const std::string& family, const Vec<Integers>& lhs, const Vec<Integers>& rhs,
              const std::string& where) {
    ++report.instances[family];
    if (lhs != rhs) throw CertificateError("relation " + family + " fails at " + where);
  }

  static std::string at(std::initializer_list<int> v) {
    std::string s = "(";
    for (int x : v) s += std::to_string(x) + ",";
    s.back() = ')';
    return s;
  }
};

}  // namespace

RelationReport verify_relations(const IntegerStructure& s) {
  if (s.basis.p_local) throw InputError("relations are checked on the full Mackey algebra over Z");
  auto built = build_algebra(s, Integers{});
  const SubgroupLattice& lat = *s.basis.lattice;
  Checker ck{s.basis, lat, lat.group(), std::move(built.algebra), {}};
  const GroupTable& g = ck.g;
  int n = lat.size();

  Vec<Integers> sum = ck.a.zero_vector();
  for (int h = 0; h < n; ++h) axpy(Integers{}, sum, 1LL, ck.t(h, h));
  ck.expect("unit", sum, ck.a.unit(), "sum of t^H_H");

  for (int h = 0; h < n; ++h) {
    auto th = ck.t(h, h);
    ck.expect("identity", ck.r(h, h), th, Checker::at({h}));
    for (int x : lat[h].members) ck.expect("identity", ck.c(x, h), th, Checker::at({x, h}));
  }

  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(k, h)) continue;
      for (int l = 0; l < n; ++l) {
        if (!lat.contains(l, k)) continue;
        ck.expect("transitivity", ck.mul(ck.t(k, l), ck.t(h, k)), ck.t(h, l), Checker::at({h, k, l}));
        ck.expect("transitivity", ck.mul(ck.r(h, k), ck.r(k, l)), ck.r(h, l), Checker::at({h, k, l}));
      }
    }

  for (int h = 0; h < n; ++h)
    for (int x = 0; x < g.order; ++x) {
      int xh = lat.conjugate(x, h);
      auto cx = ck.c(x, h);
      for (int y = 0; y < g.order; ++y)
        ck.expect("conjugation", ck.mul(ck.c(y, xh), cx), ck.c(g.mul(y, x), h), Checker::at({y, x, h}));
    }

  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(k, h)) continue;
      for (int x = 0; x < g.order; ++x) {
        int xh = lat.conjugate(x, h), xk = lat.conjugate(x, k);
        ck.expect("equivariance", ck.mul(ck.t(xh, xk), ck.c(x, h)), ck.mul(ck.c(x, k), ck.t(h, k)),
                  Checker::at({h, k, x}));
        ck.expect("equivariance", ck.mul(ck.r(xh, xk), ck.c(x, k)), ck.mul(ck.c(x, h), ck.r(h, k)),
                  Checker::at({h, k, x}));
      }
    }

  // r^H_L t^H_K = sum over x in [L\H/K] of t^L_{L∩xK} c_{x, L^x∩K} r^K_{L^x∩K}
  for (int h = 0; h < n; ++h)
    for (int l = 0; l < n; ++l) {
      if (!lat.contains(h, l)) continue;
      for (int k = 0; k < n; ++k) {
        if (!lat.contains(h, k)) continue;
        Vec<Integers> rhs = ck.a.zero_vector();
        Mask covered = 0;
        for (int x : lat[h].members) {
          if (has(covered, x)) continue;
          covered |= double_coset(g, lat.mask(l), x, lat.mask(k));
          int lx = lat.conjugate(g.inv(x), l);  // x^-1 L x
          int src = lat.intersect(lx, k);
          int dst = lat.conjugate(x, src);  // L ∩ xKx^-1
          auto term = ck.mul(ck.mul(ck.t(dst, l), ck.c(x, src)), ck.r(src, k));
          axpy(Integers{}, rhs, 1LL, term);
        }
        ck.expect("mackey-formula", ck.mul(ck.r(l, h), ck.t(k, h)), rhs, Checker::at({h, l, k}));
      }
    }

  // products of generators with mismatched Peirce tags vanish
  auto gens = detail::generating_indices<Integers>(s.basis);
  for (int i : gens)
    for (int j : gens) {
      if (s.basis.quads[i].l == s.basis.quads[j].h) continue;
      ++ck.report.instances["orthogonality"];
      auto [lo, hi] = ck.a.product(i, j);
      if (lo != hi) throw CertificateError("relation orthogonality fails at " + Checker::at({i, j}));
    }

  // every basis element is a word t c r
  for (int i = 0; i < s.basis.dim(); ++i) {
    const Quad& q = s.basis.quads[i];
    int kx = lat.conjugate(g.inv(q.x), q.k);
    auto word = ck.mul(ck.mul(ck.t(q.k, q.h), ck.c(q.x, kx)), ck.r(kx, q.l));
    ck.expect("basis-words", word, ck.a.basis_vector(i), s.basis.label(i));
  }
  return ck.report;
}

std::vector<int> corner_group_algebra(const IntegerStructure& s) {
  const SubgroupLattice& lat = *s.basis.lattice;
  const GroupTable& g = lat.group();
  int one = lat.trivial();
  std::vector<int> idx(g.order);
  for (int x = 0; x < g.order; ++x) {
    idx[x] = s.basis.find(canonical_label(lat, one, lat.mask(one), g.identity, x, one));
    if (idx[x] < 0) throw CertificateError("t^1_1 x is not a basis element");
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> prod;
  std::vector<char> in_corner(s.basis.dim(), 0);
  for (int i : idx) in_corner[i] = 1;
  for (const auto& c : s.constants)
    if (in_corner[c.i] && in_corner[c.j]) prod[{c.i, c.j}].emplace_back(c.k, c.c);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      auto it = prod.find({idx[x], idx[y]});
      std::vector<std::pair<int, long long>> want{{idx[g.mul(x, y)], 1}};
      if (it == prod.end() || it->second != want)
        throw CertificateError("t^1_1 corner is not the group algebra at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
    }
  return idx;
}

PhiReport phi_automorphism_check(const GF& f) {
  if (f.characteristic() != 2) throw InputError("the C2 automorphism check needs characteristic 2");
  auto lat = std::make_shared<SubgroupLattice>(build_group("C2"));
  auto s = integer_structure(lat);
  auto m = build_algebra(s, f);
  const Algebra<GF>& a = m.algebra;
  const GroupTable& g = lat->group();
  int one = lat->trivial(), c2 = lat->whole(), e = g.identity, x = 1 - e;
  auto idx = [&](GeneratorKind k, int u, int v) { return s.basis.find(generator(*lat, k, u, v)); };
  int tcc = idx(GeneratorKind::transfer, c2, c2);
  int t1c = idx(GeneratorKind::transfer, one, c2);
  int r1c = idx(GeneratorKind::restriction, one, c2);
  int t11 = idx(GeneratorKind::transfer, one, one);
  int t11x = s.basis.find(canonical_label(*lat, one, lat->mask(one), e, x, one));
  int tr = s.basis.find(canonical_label(*lat, c2, lat->mask(one), e, e, c2));
  PhiReport rep;
  std::vector<int> all{tcc, t1c, r1c, t11, t11x, tr};
  if (a.dim() != 6 || std::count(all.begin(), all.end(), -1) > 0) return rep;
  // sanity: tr is the product t^{C2}_1 r^{C2}_1
  if (a.mul(a.basis_vector(t1c), a.basis_vector(r1c)) != a.basis_vector(tr)) return rep;

  Mat<GF> phi(6, 6, f);
  auto set = [&](int src, std::initializer_list<std::pair<int, int>> image) {
    for (auto [dst, c] : image) phi(dst, src) = f.add(phi(dst, src), f.from_int(c));
  };
  set(tcc, {{t11, 1}});
  set(tr, {{t11, 1}, {t11x, 1}});
  set(t1c, {{r1c, 1}});
  set(r1c, {{t1c, 1}});
  set(t11, {{tcc, 1}});
  set(t11x, {{tr, 1}, {tcc, -1}});

  auto tv = a.basis_vector(t1c);
  rep.square_fixes_transfer = apply(f, phi, apply(f, phi, tv)) == tv;
  rep.unital = apply(f, phi, a.unit()) == a.unit();
  rep.bijective = rank(f, phi) == 6;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto bi = a.basis_vector(i), bj = a.basis_vector(j);
      if (apply(f, phi, a.mul(bi, bj)) == a.mul(apply(f, phi, bi), apply(f, phi, bj))) ++rep.multiplicative_pairs;
    }
  return rep;
}

}  // namespace mackey
