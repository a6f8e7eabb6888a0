#pragma once

// Finite G-sets, the object Omega_G, and composition of spans over it.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mackey/grp.hpp"

namespace mackey {

struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> action;  // action[g*size + x] = g.x

  int act(int g, int x) const { return action[static_cast<std::size_t>(g) * size + x]; }
  void validate() const;
};

GSet trivial_gset(GroupPtr g, int points);
GSet regular_gset(GroupPtr g);
/// Left translation on the cosets G/H, numbered as in the lattice.
GSet coset_gset(const SubgroupLattice& lat, int h);
GSet product_gset(const GSet& a, const GSet& b);

struct GMap {
  std::vector<int> map;
  void validate(const GSet& source, const GSet& target) const;
};

struct Orbit {
  std::vector<int> points;  // sorted
  int base = 0;             // minimal point
  Mask stabilizer = 0;      // of the base point
};

std::vector<Orbit> orbits(const GSet& x);

struct Pullback {
  GSet apex;
  std::vector<std::pair<int, int>> pairs;
  GMap to_first, to_second;
};

/// {(y,z) : f(y) = g(z)} with the diagonal action; pairs listed lexicographically.
Pullback pullback(const GSet& y, const GMap& f, const GSet& z, const GMap& g);

/// Disjoint union of G/L over every subgroup L, components ordered by lattice id.
struct OmegaComponents {
  LatticePtr lattice;
  std::vector<int> offset;  // first point of component L
  GSet gset;

  int component_of(int point) const;
  int point(int l, int coset) const { return offset[l] + coset; }
};

OmegaComponents make_omega(LatticePtr lat);

struct Span {
  GSet apex;
  GMap left, right;  // into Omega
};

/// Normalized label (H, K, x, L) of a transitive span.
struct Quad {
  int h = 0, k = 0, x = 0, l = 0;
  auto operator<=>(const Quad&) const = default;
};

std::string to_string(const Quad& q);

using BurnsideElt = std::map<Quad, long long>;

void add_term(BurnsideElt& e, const Quad& q, long long c);

/// Left leg gK -> gH, right leg gK -> gxL.
Span beta(const OmegaComponents& omega, const Quad& q);

/// Label of a transitive span. Throws if the apex is not transitive.
Quad canonical_span_label(const OmegaComponents& omega, const Span& s);

/// Label of the orbit of a point whose stabilizer is `stab`, with left image uH and right image vL.
Quad canonical_label(const SubgroupLattice& lat, int h, Mask stab, int u, int v, int l);

/// Orbit-decomposed pullback composite of s.right against t.left.
BurnsideElt compose_spans(const OmegaComponents& omega, const Span& s, const Span& t);

BurnsideElt identity_span(const OmegaComponents& omega);

/// Left multiplication tables on every coset space G/K, for fast transitive composition.
class CosetActions {
 public:
  explicit CosetActions(LatticePtr lat);
  const SubgroupLattice& lattice() const { return *lat_; }
  int act(int k, int g, int c) const { return tables_[k][static_cast<std::size_t>(g) * lat_->coset_count(k) + c]; }

 private:
  LatticePtr lat_;
  std::vector<std::vector<int>> tables_;
};

/// The composite beta(a) o beta(b) computed directly on coset spaces; zero unless a.l == b.h.
BurnsideElt compose_quads(const CosetActions& ca, const Quad& a, const Quad& b);

}  // namespace mackey
