#pragma once

// Finite-dimensional modules over group algebras kG, k = GF(q).

#include <string>
#include <vector>

#include "mackey/exalg.hpp"
#include "mackey/field.hpp"
#include "mackey/grp.hpp"
#include "mackey/gset.hpp"
#include "mackey/linalg.hpp"

namespace mackey {

constexpr int kModuleDimCap = 64;

struct ModuleRep {
  GroupPtr group;
  GF field;
  int dim = 0;
  std::vector<Mat<GF>> action;    // one per group generator
  std::vector<Mat<GF>> elements;  // one per group element, derived from `action`

  const Mat<GF>& of(int g) const { return elements[g]; }
  /// rho(a) rho(b) = rho(ab) for every pair of elements.
  void validate() const;
};

/// Module from generator matrices; the element matrices are generated by words.
ModuleRep make_module(GroupPtr g, const GF& f, int dim, std::vector<Mat<GF>> generator_matrices);
ModuleRep permutation_module(const GSet& x, const GF& f);
ModuleRep trivial_module(GroupPtr g, const GF& f);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

/// Simultaneous fixed space of H (as a member mask of V.group).
std::vector<Vec<GF>> fixed_points(const ModuleRep& v, Mask h);

/// Sum over [K/H] of rho(k), as a matrix on V; it is meant to be applied to V^H.
Mat<GF> transfer_map(const ModuleRep& v, Mask h, Mask k);

struct BrauerQuotient {
  ModuleRep module;  // over N_G(Q)/Q
  Quotient normalizer;
  std::vector<Vec<GF>> fixed_basis;  // basis of V^Q
  Mat<GF> projection;                // coordinates on V^Q -> quotient coordinates
  int dim() const { return module.dim; }
};

BrauerQuotient brauer_quotient(const ModuleRep& v, const SubgroupLattice& lat, int q);
int brauer_quotient_dim(const ModuleRep& v, const SubgroupLattice& lat, int q);

/// Basis of Hom_kG(V, W) as W.dim x V.dim matrices.
std::vector<Mat<GF>> hom_space(const ModuleRep& v, const ModuleRep& w);

/// Endomorphisms of a permutation module: one orbital matrix per G-orbit on X x X.
std::vector<Mat<GF>> orbital_endomorphisms(const GSet& x, const GF& f);

struct Summand {
  ModuleRep module;
  int multiplicity = 0;
};

/// Krull-Schmidt decomposition; `endomorphisms` is a basis of End_kG(V), computed when empty.
std::vector<Summand> decompose(const ModuleRep& v, std::vector<Mat<GF>> endomorphisms = {});

bool indecomposables_isomorphic(const ModuleRep& a, const ModuleRep& b);
bool is_isomorphic(const ModuleRep& a, const ModuleRep& b);

/// Index of the block idempotent acting as the identity on V.
int block_of_module(const ModuleRep& v, const std::vector<Vec<GF>>& group_blocks);

struct PPermModule {
  ModuleRep module;
  int vertex = 0;  // lattice id of the p-subgroup class representative
  int block = 0;   // index into block_idempotents(group_algebra(G, k))
  int source = 0;  // lattice id of the Q with the module a summand of k[G/Q]
};

/// One module per isomorphism class of indecomposable summands of the k[G/Q], Q a p-subgroup.
std::vector<PPermModule> p_permutation_indecomposables(LatticePtr lat, int p, const GF& f);

/// Vertex of an indecomposable p-permutation module.
int vertex_of(const ModuleRep& v, const SubgroupLattice& lat, int p);

/// "field", "dim", then one row-major matrix per generator.
std::string dump_module(const ModuleRep& v);

}  // namespace mackey
