#pragma once

// Mackey algebras as Burnside algebras of spans over Omega_G, with integer
// structure constants reduced into any coefficient ring.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "mackey/exalg.hpp"
#include "mackey/gset.hpp"

namespace mackey {

/// The integers, enough of a ring for structure constants and relation checks.
struct Integers {
  using value_type = long long;
  int characteristic() const { return 0; }
  std::string name() const { return "Z"; }
  long long zero() const { return 0; }
  long long one() const { return 1; }
  bool is_zero(long long a) const { return a == 0; }
  long long from_int(long long n) const { return n; }
  long long add(long long a, long long b) const { return a + b; }
  long long sub(long long a, long long b) const { return a - b; }
  long long neg(long long a) const { return -a; }
  long long mul(long long a, long long b) const { return a * b; }
  bool operator==(const Integers&) const { return true; }
};

struct MackeyBasis {
  LatticePtr lattice;
  std::optional<int> p_local;
  std::vector<Quad> quads;
  std::map<Quad, int> index;

  int dim() const { return static_cast<int>(quads.size()); }
  int find(const Quad& q) const {
    auto it = index.find(q);
    return it == index.end() ? -1 : it->second;
  }
  std::string label(int i) const;
};

/// Every normalized quadruple, ordered by (H, L, x, K); with p_local, only K a p-group.
MackeyBasis enumerate_basis(LatticePtr lat, std::optional<int> p_local = std::nullopt);

struct IntegerConstant {
  int i, j, k;
  long long c;
};

struct IntegerStructure {
  MackeyBasis basis;
  std::vector<IntegerConstant> constants;
};

/// Structure constants over Z from span composition. When `cache_dir` is
/// nonempty the result is read from / written to a cache file there.
IntegerStructure integer_structure(LatticePtr lat, std::optional<int> p_local = std::nullopt,
                                   const std::string& cache_dir = "");

/// Cache directory from the MACKEY_CACHE_DIR environment variable, or empty.
std::string default_cache_dir();

template <class F>
struct MackeyAlgebra {
  std::shared_ptr<const MackeyBasis> basis;
  Algebra<F> algebra;
  std::vector<PeirceUnit<F>> peirce_units;  // one per subgroup, possibly zero
  std::vector<int> generators;              // basis indices generating the algebra
};

/// Field GF(p^m) with m the multiplicative order of p modulo the p'-part of exp(G).
GF default_field(const GroupTable& g, int p);

enum class GeneratorKind { transfer, restriction, conjugation };

/// t^K_H for (a,b) = (H,K); r^K_H for (a,b) = (H,K); c_{g,H} for (a,b) = (g,H).
Quad generator(const SubgroupLattice& lat, GeneratorKind kind, int a, int b);

namespace detail {

template <class F>
std::vector<int> generating_indices(const MackeyBasis& b) {
  const SubgroupLattice& lat = *b.lattice;
  std::vector<int> out;
  auto push = [&](const Quad& q) {
    int i = b.find(q);
    if (i >= 0) out.push_back(i);
  };
  for (int h = 0; h < lat.size(); ++h) {
    if (b.p_local && !is_p_power(lat.order(h), *b.p_local)) continue;
    for (int k = 0; k < lat.size(); ++k) {
      if (!lat.contains(k, h)) continue;
      push(generator(lat, GeneratorKind::transfer, h, k));
      push(generator(lat, GeneratorKind::restriction, h, k));
    }
    for (int s : lat.group().generators) push(generator(lat, GeneratorKind::conjugation, s, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Unit of the diagonal Peirce block (H,H): x with xc = cx = c for every c in the block.
template <class F>
Vec<F> block_unit(const Algebra<F>& a, const std::vector<int>& block) {
  const F& f = a.field();
  int d = static_cast<int>(block.size());
  std::vector<Vec<F>> rows;
  for (int c : block) {
    auto bc = a.basis_vector(c);
    std::vector<Vec<F>> left(d), right(d);
    for (int s = 0; s < d; ++s) {
      auto bs = a.basis_vector(block[s]);
      left[s] = a.mul(bs, bc);
      right[s] = a.mul(bc, bs);
    }
    for (int k : block) {
      Vec<F> l(d + 1, f.zero()), r(d + 1, f.zero());
      for (int s = 0; s < d; ++s) {
        l[s] = left[s][k];
        r[s] = right[s][k];
      }
      l[d] = r[d] = (k == c) ? f.one() : f.zero();
      rows.push_back(std::move(l));
      rows.push_back(std::move(r));
    }
  }
  Mat<F> m = from_rows<F>(rows, d + 1, f);
  auto piv = rref(f, m);
  if (!piv.empty() && piv.back() == d) throw CertificateError("diagonal Peirce block has no unit");
  if (static_cast<int>(piv.size()) != d) throw CertificateError("diagonal Peirce block unit is not unique");
  Vec<F> x = a.zero_vector();
  for (int r = 0; r < d; ++r) x[block[piv[r]]] = m(r, d);
  return x;
}

}  // namespace detail

template <class F>
MackeyAlgebra<F> build_algebra(const IntegerStructure& s, const F& f) {
  MackeyAlgebra<F> out;
  auto basis = std::make_shared<MackeyBasis>(s.basis);
  const SubgroupLattice& lat = *basis->lattice;
  int n = basis->dim();
  std::vector<typename Algebra<F>::Constant> consts;
  consts.reserve(s.constants.size());
  for (const auto& c : s.constants) consts.push_back({c.i, c.j, c.k, f.from_int(c.c)});
  std::vector<int> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = basis->quads[i].h;
    right[i] = basis->quads[i].l;
  }
  // provisional unit; replaced below for the p-local algebra
  Vec<F> unit(n, f.zero());
  int e = lat.group().identity;
  for (int h = 0; h < lat.size(); ++h) {
    int i = basis->find(canonical_label(lat, h, lat.mask(h), e, e, h));
    if (i >= 0) unit[i] = f.one();
  }
  Algebra<F> a(f, n, consts, unit, left, right);
  if (basis->p_local) {
    if constexpr (std::is_same_v<F, Integers>) {
      throw InputError("the p-local Mackey algebra needs a field of coefficients");
    } else {
      Vec<F> u(n, f.zero());
      for (int h = 0; h < lat.size(); ++h) {
        auto block = tag_block(a, h, h);
        if (block.empty()) continue;
        axpy(f, u, f.one(), detail::block_unit(a, block));
      }
      a = Algebra<F>(f, n, std::move(consts), u, left, right);
    }
  }
  for (int h = 0; h < lat.size(); ++h) {
    Vec<F> fh(n, f.zero());
    for (int i : tag_block(a, h, h)) fh[i] = a.unit()[i];
    out.peirce_units.push_back({std::move(fh), h});
  }
  out.generators = detail::generating_indices<F>(*basis);
  out.basis = basis;
  out.algebra = std::move(a);
  return out;
}

struct RelationReport {
  std::map<std::string, long long> instances;  // family -> number of instances checked
  long long total() const {
    long long t = 0;
    for (auto& [k, v] : instances) t += v;
    return t;
  }
};

/// Checks every instance of the defining relations of the Mackey algebra in the
/// span-built structure over Z. Throws CertificateError naming the first failure.
RelationReport verify_relations(const IntegerStructure& s);

/// Basis indices of t^1_1 x for each group element x, after checking that
/// t^1_1 x -> x is multiplicative on all pairs.
std::vector<int> corner_group_algebra(const IntegerStructure& s);

struct PhiReport {
  bool unital = false;
  bool bijective = false;
  int multiplicative_pairs = 0;  // out of 36
  bool square_fixes_transfer = false;  // phi(phi(t^{C2}_1)) = t^{C2}_1
  bool automorphism() const { return unital && bijective && multiplicative_pairs == 36; }
};

/// The explicit automorphism of the Mackey algebra of C2; the field must have characteristic 2.
PhiReport phi_automorphism_check(const GF& f);

/// Header, then one `i j k c` line per nonzero structure constant, reduced
/// modulo `characteristic` when it is positive.
std::string dump(const IntegerStructure& s, const std::string& field = "Z", int characteristic = 0);

/// Deterministically sampled basis triples (i,j,k) with matching Peirce tags.
std::vector<std::tuple<int, int, int>> sample_triples(const MackeyBasis& b, long long count, std::uint64_t seed);
std::vector<std::tuple<int, int, int>> all_triples(const MackeyBasis& b);

}  // namespace mackey
