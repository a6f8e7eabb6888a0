#pragma once

// Blocks of the p-local Mackey algebra matched with blocks of kG, decomposition
// matrices of p-permutation data, and the structural checks built on them.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/chartab.hpp"
#include "mackey/mackey.hpp"
#include "mackey/modrep.hpp"

namespace mackey {

struct BlockPair {
  int group_block = 0;
  int mu_block = 0;
  std::string evidence;  // how the corner compression identified the pair
};

struct ColumnLabel {
  int subgroup = 0;  // lattice id of the p-subgroup class representative L
  int character = 0;  // index in the character table of N_G(L)/L
  long long degree = 0;
  int block = -1;     // group block, from the rows meeting the column
};

struct DecompositionMatrix {
  std::vector<PPermModule> rows;
  std::vector<ColumnLabel> columns;
  IntMatrix entries;
};

/// D D^T.
IntMatrix gram(const IntMatrix& d);
IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "n/a"
  std::string details;
  double seconds = 0;
  bool ok() const { return status != "fail"; }
};

/// Lazily computed data for one (G, p): the p-local Mackey algebra over GF(p^m),
/// the group algebra, blocks on both sides and the decomposition matrix.
class Pipeline {
 public:
  Pipeline(GroupPtr g, int p, int field_degree = 0, std::string cache_dir = default_cache_dir());

  const SubgroupLattice& lattice() const { return *lat_; }
  LatticePtr lattice_ptr() const { return lat_; }
  const GroupTable& group() const { return lat_->group(); }
  int prime() const { return p_; }
  const GF& field() const { return field_; }

  const IntegerStructure& structure();
  const MackeyAlgebra<GF>& mu();
  const std::vector<Vec<GF>>& mu_blocks();
  const std::vector<int>& mu_block_dims();
  const PrimitiveDecomposition<GF>& mu_primitives();
  const IntMatrix& mu_cartan();                 // indexed by classes of primitive idempotents
  const std::vector<int>& mu_class_blocks();    // mu block of each class

  const Algebra<GF>& group_algebra();
  const std::vector<Vec<GF>>& group_blocks();
  const PrimitiveDecomposition<GF>& group_primitives();
  const std::vector<int>& group_class_blocks();
  IntMatrix group_cartan();
  int principal_group_block();

  /// Corner matching of blocks; throws CertificateError unless it is a bijection.
  const std::vector<BlockPair>& block_pairs();
  /// Simple count of each group block.
  std::vector<int> group_block_simples();
  int mu_block_of_group_block(int b);

  const DecompositionMatrix& decomposition();

  /// Classes of the mu block, rows of D in the matching group block.
  std::vector<int> mu_classes_in(int mu_block);
  std::vector<int> rows_in(int group_block);
  std::vector<int> columns_in(int group_block);

 private:
  LatticePtr lat_;
  int p_;
  GF field_;
  std::string cache_dir_;
  std::optional<IntegerStructure> structure_;
  std::optional<MackeyAlgebra<GF>> mu_;
  std::optional<std::vector<Vec<GF>>> mu_blocks_;
  std::optional<std::vector<int>> mu_block_dims_;
  std::optional<PrimitiveDecomposition<GF>> mu_prim_;
  std::optional<IntMatrix> mu_cartan_;
  std::optional<std::vector<int>> mu_class_blocks_;
  std::optional<Algebra<GF>> group_algebra_;
  std::optional<std::vector<Vec<GF>>> group_blocks_;
  std::optional<PrimitiveDecomposition<GF>> group_prim_;
  std::optional<std::vector<int>> group_class_blocks_;
  std::optional<std::vector<int>> corner_;
  std::optional<std::vector<BlockPair>> pairs_;
  std::optional<DecompositionMatrix> decomposition_;
};

/// Dimension of the two-sided ideal eA for a central idempotent e.
int ideal_dimension(const Algebra<GF>& a, const Vec<GF>& e);

/// Pairs each mu block e with the group block read off from t^1_1 e t^1_1;
/// `corner[x]` is the basis index of t^1_1 x.
std::vector<BlockPair> match_blocks(const Algebra<GF>& mu, const std::vector<int>& corner,
                                    const std::vector<Vec<GF>>& mu_blocks, const std::vector<Vec<GF>>& group_blocks);

DecompositionMatrix decomposition_matrix(LatticePtr lat, int p, const GF& f);

/// D D^T against the algebra-side Cartan matrix, block by block.
CheckResult verify_cartan_reciprocity(Pipeline& pl);

/// Cyclic defect of order p: doubling of simple counts, [D0|0; *|Id] shape, symmetric Cartan.
CheckResult defect_one_structure_check(Pipeline& pl, int group_block, bool assume_defect_one = false);

/// Principal block against mu_k(P), and its dimension against dim kB(X^2).
CheckResult p_nilpotent_checks(Pipeline& pl);

/// dim kB(X^2) for X = disjoint union over H <= G of Res_P(G/NH).
long long burnside_square_dimension(const SubgroupLattice& lat, int n, int p_sylow);
std::string format_matrix(const IntMatrix& m);

}  // namespace mackey
