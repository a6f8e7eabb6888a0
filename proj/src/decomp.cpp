#include "mackey/decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mackey {

IntMatrix gram(const IntMatrix& d) {
  std::size_t n = d.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d[i].size(); ++k) out[i][j] += d[i][k] * d[j][k];
  return out;
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  IntMatrix out;
  for (int r : rows) {
    std::vector<long long> row;
    for (int c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

int ideal_dimension(const Algebra<GF>& a, const Vec<GF>& e) {
  // eb stays in the Peirce block of b because e is central and diagonal
  const GF& f = a.field();
  int total = 0;
  for (int h = 0; h < a.tag_count(); ++h) {
    std::map<int, std::vector<int>> by_right;
    for (int i : a.with_left_tag(h)) by_right[a.right_tag(i)].push_back(i);
    for (const auto& [l, idx] : by_right) {
      Subspace<GF> s(f, static_cast<int>(idx.size()));
      for (int i : idx) s.add(detail::restrict_to<GF>(a.mul(e, a.basis_vector(i)), idx));
      total += s.dim();
    }
  }
  return total;
}

std::vector<BlockPair> match_blocks(const Algebra<GF>& mu, const std::vector<int>& corner,
                                    const std::vector<Vec<GF>>& mu_blocks, const std::vector<Vec<GF>>& group_blocks) {
  const GF& f = mu.field();
  if (mu_blocks.size() != group_blocks.size())
    throw CertificateError("block counts differ: " + std::to_string(mu_blocks.size()) + " Mackey blocks, " +
                           std::to_string(group_blocks.size()) + " group blocks");
  std::vector<BlockPair> out;
  std::vector<char> used(group_blocks.size(), 0);
  for (std::size_t m = 0; m < mu_blocks.size(); ++m) {
    Vec<GF> b(corner.size(), f.zero());
    for (std::size_t x = 0; x < corner.size(); ++x) b[x] = mu_blocks[m][corner[x]];
    int hit = -1;
    for (std::size_t g = 0; g < group_blocks.size(); ++g)
      if (group_blocks[g] == b) hit = static_cast<int>(g);
    if (hit < 0) throw CertificateError("Mackey block " + std::to_string(m) + " compresses to no group block");
    if (used[hit]) throw CertificateError("group block " + std::to_string(hit) + " matched twice");
    used[hit] = 1;
    int support = 0;
    for (const auto& v : b) support += !f.is_zero(v);
    out.push_back({hit, static_cast<int>(m),
                   "t11 e t11 equals group block " + std::to_string(hit) + " (" + std::to_string(support) +
                       " nonzero coefficients)"});
  }
  std::sort(out.begin(), out.end(), [](const BlockPair& a, const BlockPair& b) { return a.group_block < b.group_block; });
  return out;
}

// ---- pipeline --------------------------------------------------------------

Pipeline::Pipeline(GroupPtr g, int p, int field_degree, std::string cache_dir)
    : lat_(std::make_shared<SubgroupLattice>(std::move(g))), p_(p), cache_dir_(std::move(cache_dir)) {
  if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
  field_ = field_degree > 0 ? GF(p, field_degree) : default_field(lat_->group(), p);
}

const IntegerStructure& Pipeline::structure() {
  if (!structure_) structure_ = integer_structure(lat_, p_, cache_dir_);
  return *structure_;
}

const MackeyAlgebra<GF>& Pipeline::mu() {
  if (!mu_) mu_ = build_algebra(structure(), field_);
  return *mu_;
}

const std::vector<Vec<GF>>& Pipeline::mu_blocks() {
  if (!mu_blocks_) mu_blocks_ = block_idempotents(mu().algebra, center(mu().algebra, mu().generators));
  return *mu_blocks_;
}

const std::vector<int>& Pipeline::mu_block_dims() {
  if (!mu_block_dims_) {
    std::vector<int> d;
    for (const auto& e : mu_blocks()) d.push_back(ideal_dimension(mu().algebra, e));
    mu_block_dims_ = std::move(d);
  }
  return *mu_block_dims_;
}

const PrimitiveDecomposition<GF>& Pipeline::mu_primitives() {
  if (!mu_prim_) mu_prim_ = primitive_idempotents(mu().algebra, mu().peirce_units);
  return *mu_prim_;
}

const IntMatrix& Pipeline::mu_cartan() {
  if (!mu_cartan_) mu_cartan_ = cartan_matrix(mu().algebra, mu_primitives());
  return *mu_cartan_;
}

const std::vector<int>& Pipeline::mu_class_blocks() {
  if (!mu_class_blocks_) {
    std::vector<int> out;
    const auto& d = mu_primitives();
    for (int r : d.reps) out.push_back(block_of(mu().algebra, mu_blocks(), d.idempotents[r]));
    mu_class_blocks_ = std::move(out);
  }
  return *mu_class_blocks_;
}

const Algebra<GF>& Pipeline::group_algebra() {
  if (!group_algebra_) group_algebra_ = mackey::group_algebra(lat_->group(), field_);
  return *group_algebra_;
}

const std::vector<Vec<GF>>& Pipeline::group_blocks() {
  if (!group_blocks_) group_blocks_ = block_idempotents(group_algebra());
  return *group_blocks_;
}

const PrimitiveDecomposition<GF>& Pipeline::group_primitives() {
  if (!group_prim_) group_prim_ = primitive_idempotents(group_algebra());
  return *group_prim_;
}

const std::vector<int>& Pipeline::group_class_blocks() {
  if (!group_class_blocks_) {
    std::vector<int> out;
    const auto& d = group_primitives();
    for (int r : d.reps) out.push_back(block_of(group_algebra(), group_blocks(), d.idempotents[r]));
    group_class_blocks_ = std::move(out);
  }
  return *group_class_blocks_;
}

IntMatrix Pipeline::group_cartan() { return cartan_matrix(group_algebra(), group_primitives()); }

std::vector<int> Pipeline::group_block_simples() {
  std::vector<int> out(group_blocks().size(), 0);
  for (int b : group_class_blocks()) ++out[b];
  return out;
}

int Pipeline::principal_group_block() {
  return block_of_module(trivial_module(lat_->group_ptr(), field_), group_blocks());
}

const std::vector<BlockPair>& Pipeline::block_pairs() {
  if (!pairs_) {
    if (!corner_) corner_ = corner_group_algebra(structure());
    pairs_ = match_blocks(mu().algebra, *corner_, mu_blocks(), group_blocks());
  }
  return *pairs_;
}

int Pipeline::mu_block_of_group_block(int b) {
  for (const auto& p : block_pairs())
    if (p.group_block == b) return p.mu_block;
  throw InputError("no group block " + std::to_string(b));
}

const DecompositionMatrix& Pipeline::decomposition() {
  if (!decomposition_) decomposition_ = decomposition_matrix(lat_, p_, field_);
  return *decomposition_;
}

std::vector<int> Pipeline::mu_classes_in(int mu_block) {
  std::vector<int> out;
  const auto& cb = mu_class_blocks();
  for (int c = 0; c < static_cast<int>(cb.size()); ++c)
    if (cb[c] == mu_block) out.push_back(c);
  return out;
}

std::vector<int> Pipeline::rows_in(int group_block) {
  std::vector<int> out;
  const auto& d = decomposition();
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r)
    if (d.rows[r].block == group_block) out.push_back(r);
  return out;
}

std::vector<int> Pipeline::columns_in(int group_block) {
  std::vector<int> out;
  const auto& d = decomposition();
  for (int c = 0; c < static_cast<int>(d.columns.size()); ++c)
    if (d.columns[c].block == group_block) out.push_back(c);
  return out;
}

}  // namespace mackey
