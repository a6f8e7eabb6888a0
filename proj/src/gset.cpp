#include "mackey/gset.hpp"

#include <algorithm>

#include "mackey/error.hpp"

namespace mackey {

void GSet::validate() const {
  const GroupTable& g = *group;
  if (static_cast<int>(action.size()) != g.order * size) throw InputError("action table has wrong size");
  for (int x = 0; x < size; ++x)
    if (act(g.identity, x) != x) throw InputError("identity acts nontrivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int x = 0; x < size; ++x)
        if (act(a, act(b, x)) != act(g.mul(a, b), x)) throw InputError("action is not compatible");
}

GSet trivial_gset(GroupPtr g, int points) {
  GSet s{g, points, {}};
  s.action.resize(static_cast<std::size_t>(g->order) * points);
  for (int a = 0; a < g->order; ++a)
    for (int x = 0; x < points; ++x) s.action[a * points + x] = x;
  return s;
}

GSet regular_gset(GroupPtr g) {
  GSet s{g, g->order, g->table};
  return s;
}

GSet coset_gset(const SubgroupLattice& lat, int h) {
  const GroupTable& g = lat.group();
  int n = lat.coset_count(h);
  GSet s{lat.group_ptr(), n, {}};
  s.action.resize(static_cast<std::size_t>(g.order) * n);
  for (int a = 0; a < g.order; ++a)
    for (int c = 0; c < n; ++c) s.action[a * n + c] = lat.coset_index(h, g.mul(a, lat.coset_rep(h, c)));
  return s;
}

GSet product_gset(const GSet& a, const GSet& b) {
  int n = a.size * b.size;
  GSet s{a.group, n, {}};
  s.action.resize(static_cast<std::size_t>(a.group->order) * n);
  for (int g = 0; g < a.group->order; ++g)
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < b.size; ++y) s.action[g * n + x * b.size + y] = a.act(g, x) * b.size + b.act(g, y);
  return s;
}

void GMap::validate(const GSet& source, const GSet& target) const {
  if (static_cast<int>(map.size()) != source.size) throw InputError("map has wrong size");
  for (int g = 0; g < source.group->order; ++g)
    for (int x = 0; x < source.size; ++x)
      if (map[source.act(g, x)] != target.act(g, map[x])) throw InputError("map is not equivariant");
}

std::vector<Orbit> orbits(const GSet& x) {
  const GroupTable& g = *x.group;
  std::vector<bool> seen(x.size, false);
  std::vector<Orbit> out;
  for (int p = 0; p < x.size; ++p) {
    if (seen[p]) continue;
    Orbit o;
    o.base = p;
    o.points.push_back(p);
    seen[p] = true;
    for (std::size_t i = 0; i < o.points.size(); ++i)
      for (int s : g.generators) {
        int q = x.act(s, o.points[i]);
        if (!seen[q]) {
          seen[q] = true;
          o.points.push_back(q);
        }
      }
    std::sort(o.points.begin(), o.points.end());
    for (int a = 0; a < g.order; ++a)
      if (x.act(a, p) == p) o.stabilizer |= bit(a);
    out.push_back(std::move(o));
  }
  return out;
}

Pullback pullback(const GSet& y, const GMap& f, const GSet& z, const GMap& g) {
  Pullback pb;
  std::vector<int> index(static_cast<std::size_t>(y.size) * z.size, -1);
  for (int a = 0; a < y.size; ++a)
    for (int b = 0; b < z.size; ++b)
      if (f.map[a] == g.map[b]) {
        index[a * z.size + b] = static_cast<int>(pb.pairs.size());
        pb.pairs.emplace_back(a, b);
      }
  int n = static_cast<int>(pb.pairs.size());
  pb.apex = GSet{y.group, n, {}};
  pb.apex.action.resize(static_cast<std::size_t>(y.group->order) * n);
  for (int s = 0; s < y.group->order; ++s)
    for (int i = 0; i < n; ++i) {
      auto [a, b] = pb.pairs[i];
      pb.apex.action[s * n + i] = index[y.act(s, a) * z.size + z.act(s, b)];
    }
  for (auto [a, b] : pb.pairs) {
    pb.to_first.map.push_back(a);
    pb.to_second.map.push_back(b);
  }
  return pb;
}

int OmegaComponents::component_of(int point) const {
  auto it = std::upper_bound(offset.begin(), offset.end(), point);
  return static_cast<int>(it - offset.begin()) - 1;
}

OmegaComponents make_omega(LatticePtr lat) {
  OmegaComponents om;
  om.lattice = lat;
  const GroupTable& g = lat->group();
  int total = 0;
  for (int l = 0; l < lat->size(); ++l) {
    om.offset.push_back(total);
    total += lat->coset_count(l);
  }
  om.gset = GSet{lat->group_ptr(), total, {}};
  om.gset.action.resize(static_cast<std::size_t>(g.order) * total);
  for (int a = 0; a < g.order; ++a)
    for (int l = 0; l < lat->size(); ++l)
      for (int c = 0; c < lat->coset_count(l); ++c)
        om.gset.action[a * total + om.offset[l] + c] =
            om.offset[l] + lat->coset_index(l, g.mul(a, lat->coset_rep(l, c)));
  return om;
}

std::string to_string(const Quad& q) {
  return "(" + std::to_string(q.h) + "," + std::to_string(q.k) + "," + std::to_string(q.x) + "," +
         std::to_string(q.l) + ")";
}

void add_term(BurnsideElt& e, const Quad& q, long long c) {
  if (c == 0) return;
  auto [it, inserted] = e.emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

Span beta(const OmegaComponents& omega, const Quad& q) {
  const SubgroupLattice& lat = *omega.lattice;
  const GroupTable& g = lat.group();
  Span s;
  s.apex = coset_gset(lat, q.k);
  for (int c = 0; c < lat.coset_count(q.k); ++c) {
    int r = lat.coset_rep(q.k, c);
    s.left.map.push_back(omega.point(q.h, lat.coset_index(q.h, r)));
    s.right.map.push_back(omega.point(q.l, lat.coset_index(q.l, g.mul(r, q.x))));
  }
  return s;
}

Quad canonical_label(const SubgroupLattice& lat, int h, Mask stab, int u, int v, int l) {
  const GroupTable& g = lat.group();
  int w = g.mul(g.inv(u), v);
  int x = members(double_coset(g, lat.mask(h), w, lat.mask(l))).front();
  int target = lat.coset_index(l, x);
  int h0 = -1;
  for (int a : lat[h].members)
    if (lat.coset_index(l, g.mul(g.inv(a), w)) == target) {
      h0 = a;
      break;
    }
  if (h0 < 0) throw CertificateError("double coset representative not reachable");
  int shift = g.mul(u, h0);
  int k = lat.id_of(conjugate(g, g.inv(shift), stab));
  Mask both = lat.mask(h) & conjugate(g, x, lat.mask(l));
  if ((lat.mask(k) & ~both) != 0) throw CertificateError("stabilizer not inside H and xL");
  int best = k;
  for (int n : members(both)) best = std::min(best, lat.conjugate(n, k));
  return Quad{h, best, x, l};
}

namespace {

Quad label_orbit(const OmegaComponents& omega, int left_point, int right_point, Mask stab) {
  const SubgroupLattice& lat = *omega.lattice;
  int h = omega.component_of(left_point);
  int l = omega.component_of(right_point);
  int u = lat.coset_rep(h, left_point - omega.offset[h]);
  int v = lat.coset_rep(l, right_point - omega.offset[l]);
  return canonical_label(lat, h, stab, u, v, l);
}

}  // namespace

Quad canonical_span_label(const OmegaComponents& omega, const Span& s) {
  auto orb = orbits(s.apex);
  if (orb.size() != 1) throw InputError("span apex is not transitive");
  s.left.validate(s.apex, omega.gset);
  s.right.validate(s.apex, omega.gset);
  int b = orb[0].base;
  return label_orbit(omega, s.left.map[b], s.right.map[b], orb[0].stabilizer);
}

BurnsideElt compose_spans(const OmegaComponents& omega, const Span& s, const Span& t) {
  Pullback pb = pullback(s.apex, s.right, t.apex, t.left);
  BurnsideElt out;
  for (const Orbit& o : orbits(pb.apex)) {
    auto [a, b] = pb.pairs[o.base];
    add_term(out, label_orbit(omega, s.left.map[a], t.right.map[b], o.stabilizer), 1);
  }
  return out;
}

BurnsideElt identity_span(const OmegaComponents& omega) {
  const SubgroupLattice& lat = *omega.lattice;
  int e = lat.group().identity;
  BurnsideElt out;
  for (int h = 0; h < lat.size(); ++h) add_term(out, canonical_label(lat, h, lat.mask(h), e, e, h), 1);
  return out;
}

CosetActions::CosetActions(LatticePtr lat) : lat_(std::move(lat)) {
  const GroupTable& g = lat_->group();
  tables_.resize(lat_->size());
  for (int k = 0; k < lat_->size(); ++k) {
    int n = lat_->coset_count(k);
    tables_[k].resize(static_cast<std::size_t>(g.order) * n);
    for (int a = 0; a < g.order; ++a)
      for (int c = 0; c < n; ++c) tables_[k][a * n + c] = lat_->coset_index(k, g.mul(a, lat_->coset_rep(k, c)));
  }
}

BurnsideElt compose_quads(const CosetActions& ca, const Quad& a, const Quad& b) {
  BurnsideElt out;
  if (a.l != b.h) return out;
  const SubgroupLattice& lat = ca.lattice();
  const GroupTable& g = lat.group();
  int m = a.l;
  int n1 = lat.coset_count(a.k), n2 = lat.coset_count(b.k);
  std::vector<std::vector<int>> over(lat.coset_count(m));
  for (int j = 0; j < n2; ++j) over[lat.coset_index(m, lat.coset_rep(b.k, j))].push_back(j);
  std::vector<int> index(static_cast<std::size_t>(n1) * n2, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n1; ++i)
    for (int j : over[lat.coset_index(m, g.mul(lat.coset_rep(a.k, i), a.x))]) {
      index[i * n2 + j] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  std::vector<bool> seen(pairs.size(), false);
  std::vector<int> queue;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (seen[p]) continue;
    seen[p] = true;
    queue.assign(1, static_cast<int>(p));
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [i, j] = pairs[queue[q]];
      for (int s : g.generators) {
        int r = index[ca.act(a.k, s, i) * n2 + ca.act(b.k, s, j)];
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
    auto [i, j] = pairs[p];
    Mask stab = 0;
    for (int s = 0; s < g.order; ++s)
      if (ca.act(a.k, s, i) == i && ca.act(b.k, s, j) == j) stab |= bit(s);
    int u = lat.coset_rep(a.k, i);
    int v = g.mul(lat.coset_rep(b.k, j), b.x);
    add_term(out, canonical_label(lat, a.h, stab, u, v, b.l), 1);
  }
  return out;
}

}  // namespace mackey
