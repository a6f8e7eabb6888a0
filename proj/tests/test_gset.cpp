#include "doctest.h"

#include <memory>

#include "mackey/gset.hpp"

using namespace mackey;

namespace {

LatticePtr lattice(const char* name) { return std::make_shared<SubgroupLattice>(build_group(name)); }

std::vector<Quad> all_quads(const SubgroupLattice& lat) {
  const GroupTable& g = lat.group();
  std::vector<Quad> out;
  for (int h = 0; h < lat.size(); ++h)
    for (int l = 0; l < lat.size(); ++l)
      for (int x : double_cosets(g, lat.mask(h), lat.mask(l))) {
        Mask both = lat.mask(h) & conjugate(g, x, lat.mask(l));
        for (int k = 0; k < lat.size(); ++k) {
          if ((lat.mask(k) & ~both) != 0) continue;
          bool minimal = true;
          for (int n : members(both)) minimal = minimal && lat.conjugate(n, k) >= k;
          if (minimal) out.push_back({h, k, x, l});
        }
      }
  return out;
}

// Double-coset formula for the product of two basis spans, independent of pullbacks.
BurnsideElt closed_form(const SubgroupLattice& lat, const Quad& a, const Quad& b) {
  BurnsideElt out;
  if (a.l != b.h) return out;
  const GroupTable& g = lat.group();
  Mask k1x = conjugate(g, g.inv(a.x), lat.mask(a.k));
  Mask covered = 0;
  for (int y : lat[a.l].members) {
    if (has(covered, y)) continue;
    covered |= double_coset(g, k1x, y, lat.mask(b.k));
    int xy = g.mul(a.x, y);
    Mask stab = lat.mask(a.k) & conjugate(g, xy, lat.mask(b.k));
    add_term(out, canonical_label(lat, a.h, stab, g.identity, g.mul(xy, b.x), b.l), 1);
  }
  return out;
}

}  // namespace

TEST_CASE("orbits") {
  auto g = build_group("S3");
  CHECK(orbits(regular_gset(g)).size() == 1);
  CHECK(orbits(regular_gset(g))[0].stabilizer == bit(g->identity));
  CHECK(orbits(trivial_gset(build_group("C2"), 3)).size() == 3);
  SubgroupLattice lat(g);
  auto x = coset_gset(lat, 1);
  CHECK(orbits(product_gset(x, x)).size() == 2);
  product_gset(x, x).validate();
}

TEST_CASE("pullbacks") {
  auto g = build_group("S3");
  SubgroupLattice lat(g);
  GSet x = coset_gset(lat, 1);
  GMap id{{0, 1, 2}};
  auto diag = pullback(x, id, x, id);
  CHECK(diag.apex.size == 3);
  GSet pt = trivial_gset(g, 1);
  GMap to_pt{{0, 0, 0}};
  to_pt.validate(x, pt);
  auto prod = pullback(x, to_pt, x, to_pt);
  CHECK(prod.apex.size == 9);
  auto orb = orbits(prod.apex);
  REQUIRE(orb.size() == 2);
  std::vector<std::size_t> sizes{orb[0].points.size(), orb[1].points.size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3, 6});
  prod.to_first.validate(prod.apex, x);

  GSet reg = regular_gset(g);
  GMap reg_pt{std::vector<int>(6, 0)};
  auto rr = pullback(reg, reg_pt, reg, reg_pt);
  CHECK(rr.apex.size == 36);
  CHECK(orbits(rr.apex).size() == 6);
}

TEST_CASE("C2 spans") {
  auto lat = lattice("C2");
  auto om = make_omega(lat);
  const int one = 0, c2 = 1, x = 1, e = 0;
  Quad t{c2, one, e, one}, r{one, one, e, c2};
  CHECK(canonical_span_label(om, beta(om, t)) == t);
  CHECK(canonical_span_label(om, beta(om, Quad{c2, c2, e, c2})) == Quad{c2, c2, e, c2});
  BurnsideElt tr = compose_spans(om, beta(om, t), beta(om, r));
  CHECK(tr == BurnsideElt{{Quad{c2, one, e, c2}, 1}});
  BurnsideElt rt = compose_spans(om, beta(om, r), beta(om, t));
  CHECK(rt == BurnsideElt{{Quad{one, one, e, one}, 1}, {Quad{one, one, x, one}, 1}});
  CHECK(identity_span(om).size() == 2);
  for (const Quad& q : all_quads(*lat)) {
    BurnsideElt lhs;
    for (auto [u, c] : identity_span(om))
      for (auto [w, d] : compose_spans(om, beta(om, u), beta(om, q))) add_term(lhs, w, c * d);
    CHECK(lhs == BurnsideElt{{q, 1}});
  }
}

TEST_CASE("identity span sizes") {
  CHECK(identity_span(make_omega(lattice("S3"))).size() == 6);
  CHECK(identity_span(make_omega(lattice("C1"))).size() == 1);
}

TEST_CASE("labels are invariant under relabeling the apex") {
  auto lat = lattice("S3");
  auto om = make_omega(lat);
  for (const Quad& q : all_quads(*lat)) {
    Span s = beta(om, q);
    CHECK(canonical_span_label(om, s) == q);
    // reverse the point order of the apex
    int n = s.apex.size;
    Span rev = s;
    for (int g = 0; g < 6; ++g)
      for (int p = 0; p < n; ++p) rev.apex.action[g * n + (n - 1 - p)] = n - 1 - s.apex.act(g, p);
    for (int p = 0; p < n; ++p) {
      rev.left.map[n - 1 - p] = s.left.map[p];
      rev.right.map[n - 1 - p] = s.right.map[p];
    }
    CHECK(canonical_span_label(om, rev) == q);
  }
}

TEST_CASE("conjugate C2's in S3") {
  auto lat = lattice("S3");
  auto om = make_omega(lat);
  // G/1 mapping onto G/C2 and G/C2' for two distinct conjugate C2's
  Span s;
  s.apex = coset_gset(*lat, 0);
  for (int g = 0; g < 6; ++g) {
    s.left.map.push_back(om.point(1, lat->coset_index(1, g)));
    s.right.map.push_back(om.point(2, lat->coset_index(2, g)));
  }
  Quad q = canonical_span_label(om, s);
  CHECK(q.h == 1);
  CHECK(q.k == 0);
  CHECK(q.l == 2);
  CHECK(q.x == members(double_coset(lat->group(), lat->mask(1), lat->group().identity, lat->mask(2))).front());
}

TEST_CASE("three composition routes agree") {
  for (const char* name : {"C2", "C4", "S3", "D4", "Q8"}) {
    auto lat = lattice(name);
    auto om = make_omega(lat);
    CosetActions ca(lat);
    auto quads = all_quads(*lat);
    for (const Quad& a : quads)
      for (const Quad& b : quads) {
        if (a.l != b.h) {
          CHECK(compose_quads(ca, a, b).empty());
          continue;
        }
        auto fast = compose_quads(ca, a, b);
        CHECK(fast == closed_form(*lat, a, b));
        if (lat->group().order <= 6) CHECK(fast == compose_spans(om, beta(om, a), beta(om, b)));
      }
  }
}

TEST_CASE("composition is associative on S3") {
  auto lat = lattice("S3");
  CosetActions ca(lat);
  auto quads = all_quads(*lat);
  auto mul = [&](const BurnsideElt& x, const BurnsideElt& y) {
    BurnsideElt out;
    for (auto [p, c] : x)
      for (auto [q, d] : y)
        for (auto [r, e] : compose_quads(ca, p, q)) add_term(out, r, c * d * e);
    return out;
  };
  for (const Quad& a : quads)
    for (const Quad& b : quads) {
      if (a.l != b.h) continue;
      BurnsideElt ab = compose_quads(ca, a, b);
      for (const Quad& c : quads) {
        if (b.l != c.h) continue;
        CHECK(mul(ab, {{c, 1}}) == mul({{a, 1}}, compose_quads(ca, b, c)));
      }
    }
}
