#pragma once

// Finite groups as Cayley tables, subgroup lattices and p-local subgroup data.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace mackey {

/// Subsets of a group of order <= 64, one bit per element index.
using Mask = std::uint64_t;

constexpr int kMaxGroupOrder = 64;
constexpr int kDefaultLatticeBound = 48;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }
std::vector<int> members(Mask m);

/// A finite group given by its full multiplication table. Element 0 need not
/// be the identity for tables read from files; builders always put it first.
struct GroupTable {
  std::string name;
  int order = 0;
  std::vector<int> table;  // row-major, table[a*order+b] = a*b
  std::vector<int> inverses;
  int identity = 0;
  std::vector<int> generators;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverses[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inverses[g]); }
  int power(int g, long long k) const;
  int element_order(int g) const;
  int exponent() const;
  Mask all() const { return order == 64 ? ~Mask{0} : (bit(order) - 1); }

  /// Full check of associativity, identity, inverses and generation.
  void validate() const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Closure of a set of permutations (images of 0..n-1). Elements are numbered
/// in breadth-first order from the identity.
GroupPtr group_from_permutations(std::string name, const std::vector<std::vector<int>>& gens);
/// Wraps an explicit table, validating it; generators are chosen greedily.
GroupPtr group_from_table(std::string name, int order, std::vector<int> table);
GroupPtr direct_product(const GroupTable& a, const GroupTable& b);
/// C_n : C_m where the generator of C_m acts on C_n by x -> x^k.
GroupPtr metacyclic(int n, int m, int k);

/// Builds a group from a specifier: builtin names (Cn, Dn of order 2n, Sn, An,
/// Q8, SL(2,3), V4), direct products "AxB", metacyclic "Cn:Cm[k]", or a path
/// to a Cayley-table or permutation-generator file (optionally "file:" prefixed).
GroupPtr build_group(const std::string& spec);
GroupPtr parse_cayley_table(const std::string& text, const std::string& fallback_name);
GroupPtr parse_permutation_generators(const std::string& text, const std::string& name);

// ---- subsets and subgroups -------------------------------------------------

Mask generate(const GroupTable& g, Mask gens);
bool is_subgroup(const GroupTable& g, Mask h);
Mask conjugate(const GroupTable& g, int x, Mask h);
Mask normalizer(const GroupTable& g, Mask h);
bool is_normal(const GroupTable& g, Mask n, Mask in);
/// All subgroups of `within` (itself a subgroup), by closure of cyclic subgroups under joins.
std::vector<Mask> subgroups_of(const GroupTable& g, Mask within);
std::vector<Mask> maximal_subgroups(const GroupTable& g, Mask h);
bool is_p_power(int n, int p);
bool is_prime(int n);
/// p-part of n.
int p_part(int n, int p);

/// One representative per double coset H x L: the minimal element index in it.
std::vector<int> double_cosets(const GroupTable& g, Mask h, Mask l);
Mask double_coset(const GroupTable& g, Mask h, int x, Mask l);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // parent element -> quotient element, -1 outside the domain
  std::vector<int> lift;        // quotient element -> minimal parent representative
};

/// G/N for N normal in G. Quotient elements are cosets ordered by minimal representative.
Quotient quotient_group(const GroupTable& g, Mask n);
/// H as a group in its own right; projection restricts parent indices, lift embeds.
Quotient subgroup_as_group(const GroupTable& g, Mask h, const std::string& name);
/// N_G(Q)/Q with projection defined on N_G(Q).
Quotient normalizer_quotient(const GroupTable& g, Mask q);

// ---- lattice ---------------------------------------------------------------

struct Subgroup {
  Mask mask = 0;
  int order = 0;
  std::vector<int> members;  // sorted
  int id = -1;
};

/// Every subgroup of a group, sorted by (order, member list). Conjugacy class
/// representatives are the minimal members of their class in that order.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr g, int bound = kDefaultLatticeBound);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(subgroups_.size()); }
  const Subgroup& operator[](int i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  int id_of(Mask m) const;
  int trivial() const { return 0; }
  int whole() const { return size() - 1; }
  int order(int h) const { return subgroups_[h].order; }
  Mask mask(int h) const { return subgroups_[h].mask; }
  bool contains(int big, int small) const {
    return (subgroups_[small].mask & ~subgroups_[big].mask) == 0;
  }
  int intersect(int a, int b) const { return id_of(mask(a) & mask(b)); }
  /// id of x H x^-1
  int conjugate(int x, int h) const { return conj_[static_cast<std::size_t>(x) * size() + h]; }
  int normalizer(int h) const { return normalizers_[h]; }
  int class_of(int h) const { return class_of_[h]; }
  /// Representative (minimal id) of the conjugacy class with index c.
  int class_rep(int c) const { return class_reps_[c]; }
  int class_count() const { return static_cast<int>(class_reps_.size()); }
  const std::vector<int>& class_reps() const { return class_reps_; }
  std::vector<int> class_members(int c) const;

  int coset_count(int h) const { return group_->order / subgroups_[h].order; }
  /// Index of the left coset gH; cosets are numbered by increasing minimal element.
  int coset_index(int h, int g) const { return coset_index_[h][g]; }
  int coset_rep(int h, int c) const { return coset_reps_[h][c]; }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<Mask, int> index_;
  std::vector<int> conj_;
  std::vector<int> normalizers_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> coset_index_;
  std::vector<std::vector<int>> coset_reps_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

struct PSubgroupClass {
  int rep = 0;  // lattice id
  bool sylow = false;
};

/// One representative per conjugacy class of p-subgroups, trivial first.
std::vector<PSubgroupClass> p_subgroup_classes(const SubgroupLattice& lat, int p);

/// A normal p-complement if G is p-nilpotent, else nullopt-like -1.
int normal_p_complement(const SubgroupLattice& lat, int p);

}  // namespace mackey
