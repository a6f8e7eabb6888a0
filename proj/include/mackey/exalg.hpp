#pragma once

// Center, blocks, primitive idempotents, Cartan matrices, radicals and the
// symmetric-algebra test for structure-constant algebras.

#include <functional>
#include <map>
#include <optional>
#include <random>

#include "mackey/algebra.hpp"
#include "mackey/field.hpp"
#include "mackey/grp.hpp"

namespace mackey {

using IntMatrix = std::vector<std::vector<long long>>;

/// Minimal polynomial of x inside the corner with unit e (x must satisfy exe = x).
template <class F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Vec<F>& x, const Vec<F>& e) {
  const F& f = a.field();
  Subspace<F> powers(f, a.dim());
  Vec<F> cur = e;
  while (powers.add(cur)) cur = a.mul(cur, x);
  auto c = *powers.coordinates(cur);
  Poly<F> m(c.size() + 1, f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) m[i] = f.neg(c[i]);
  m.back() = f.one();
  return m;
}

/// p(x) computed inside the corner with unit e.
template <class F>
Vec<F> evaluate(const Algebra<F>& a, const Poly<F>& p, const Vec<F>& x, const Vec<F>& e) {
  const F& f = a.field();
  Vec<F> r = a.zero_vector();
  for (int i = degree<F>(p); i >= 0; --i) {
    r = a.mul(r, x);
    axpy(f, r, p[i], e);
  }
  return r;
}

/// x^k for k >= 1 without reference to a unit.
template <class F>
Vec<F> power(const Algebra<F>& a, Vec<F> x, long long k) {
  std::optional<Vec<F>> r;
  while (k > 0) {
    if (k & 1) r = r ? a.mul(*r, x) : x;
    k >>= 1;
    if (k) x = a.mul(x, x);
  }
  return *r;
}

template <class F>
std::vector<int> diagonal_indices(const Algebra<F>& a) {
  std::vector<int> out;
  for (int i = 0; i < a.dim(); ++i)
    if (a.left_tag(i) == a.right_tag(i)) out.push_back(i);
  return out;
}

template <class F>
std::vector<int> tag_block(const Algebra<F>& a, int left, int right) {
  std::vector<int> out;
  for (int i : a.with_left_tag(left))
    if (a.right_tag(i) == right) out.push_back(i);
  return out;
}

/// Basis of the center. Unknowns are restricted to Peirce-diagonal basis
/// elements; commutation is imposed against `generators` (all basis elements
/// when empty) and then certified against every basis element.
template <class F>
std::vector<Vec<F>> center(const Algebra<F>& a, std::vector<int> generators = {}) {
  const F& f = a.field();
  int n = a.dim();
  std::vector<int> unknowns = diagonal_indices(a);
  int u = static_cast<int>(unknowns.size());
  auto solve = [&](const std::vector<int>& gens) {
    Subspace<F> constraints(f, u);
    for (int g : gens) {
      // column s of the commutator matrix is [b_{unknowns[s]}, b_g]
      std::map<int, Vec<F>> rows;
      auto bg = a.basis_vector(g);
      int lt = a.left_tag(g), rt = a.right_tag(g);
      for (int s = 0; s < u; ++s) {
        int ts = a.left_tag(unknowns[s]);
        if (ts != lt && ts != rt) continue;
        auto bs = a.basis_vector(unknowns[s]);
        auto c = a.mul(bs, bg);
        auto d = a.mul(bg, bs);
        for (int k = 0; k < n; ++k) {
          auto v = f.sub(c[k], d[k]);
          if (f.is_zero(v)) continue;
          auto [it, fresh] = rows.try_emplace(k, Vec<F>(u, f.zero()));
          it->second[s] = v;
        }
      }
      for (auto& [k, row] : rows) constraints.add(row);
      if (constraints.dim() == u) break;
    }
    Mat<F> m = from_rows<F>(constraints.basis(), u, f);
    if (m.rows == 0) m = Mat<F>(0, u, f);
    std::vector<Vec<F>> out;
    for (const auto& v : nullspace(f, m)) {
      Vec<F> z = a.zero_vector();
      for (int s = 0; s < u; ++s) z[unknowns[s]] = v[s];
      out.push_back(std::move(z));
    }
    return out;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto z = solve(generators.empty() ? all : generators);
  for (const auto& v : z)
    for (int i = 0; i < n; ++i) {
      auto b = a.basis_vector(i);
      if (a.mul(v, b) != a.mul(b, v)) return solve(all);
    }
  return z;
}

namespace detail {

// Splits idempotents of a commutative split semisimple algebra E along the
// eigenvalues of x; `e` ranges over the current idempotents.
template <class F>
std::vector<Vec<F>> split_by(const Algebra<F>& z, const std::vector<Vec<F>>& idems, const Vec<F>& x) {
  const F& f = z.field();
  std::vector<Vec<F>> out;
  for (const auto& e : idems) {
    Vec<F> xe = z.mul(x, e);
    Poly<F> m = minimal_polynomial(z, xe, e);
    auto roots = finite_field_roots(f, m);
    int total = 0;
    for (auto [r, k] : roots) total += k;
    if (total != degree<F>(m)) throw FieldTooSmall("central element does not split over " + f.name());
    if (roots.size() < 2) {
      out.push_back(e);
      continue;
    }
    for (auto [lam, k] : roots) {
      Vec<F> prod = e;
      for (auto [mu, k2] : roots) {
        if (mu == lam) continue;
        Vec<F> factor = xe;
        axpy(f, factor, f.neg(mu), e);
        prod = scaled(f, f.inv(f.sub(lam, mu)), z.mul(prod, factor));
      }
      out.push_back(std::move(prod));
    }
  }
  return out;
}

}  // namespace detail

/// Central primitive idempotents of an algebra over GF(q), sorted by coefficient vector.
template <class F>
std::vector<Vec<F>> block_idempotents(const Algebra<F>& a, const std::vector<Vec<F>>& center_basis) {
  const F& f = a.field();
  Corner<F> zc = make_corner(a, a.unit(), center_basis);
  const Algebra<F>& z = zc.algebra;
  int c = z.dim();
  // Frobenius x -> x^q is GF(q)-linear on a commutative algebra; its fixed space is k^r.
  Mat<F> frob(c, c, f);
  for (int i = 0; i < c; ++i) {
    auto y = z.pow(z.basis_vector(i), f.size());
    for (int k = 0; k < c; ++k) frob(k, i) = f.sub(y[k], k == i ? f.one() : f.zero());
  }
  auto fixed = nullspace(f, frob);
  std::vector<Vec<F>> idems{z.unit()};
  for (const auto& x : fixed) {
    if (idems.size() == fixed.size()) break;
    idems = detail::split_by(z, idems, x);
  }
  if (idems.size() != fixed.size()) throw CertificateError("block sweep did not reach the expected count");
  std::vector<Vec<F>> out;
  for (const auto& e : idems) out.push_back(zc.embed(e));
  std::sort(out.begin(), out.end());
  // exact certificate
  Vec<F> sum = a.zero_vector();
  for (std::size_t i = 0; i < out.size(); ++i) {
    axpy(f, sum, f.one(), out[i]);
    if (a.mul(out[i], out[i]) != out[i]) throw CertificateError("block idempotent is not idempotent");
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!is_zero_vec(f, a.mul(out[i], out[j]))) throw CertificateError("block idempotents not orthogonal");
  }
  if (sum != a.unit()) throw CertificateError("block idempotents do not sum to the unit");
  return out;
}

template <class F>
std::vector<Vec<F>> block_idempotents(const Algebra<F>& a) {
  return block_idempotents(a, center(a));
}

/// Algebra spanned by e A e' for the Peirce tags of e and e'.
template <class F>
std::vector<Vec<F>> peirce_span(const Algebra<F>& a, const Vec<F>& e, int left_tag, const Vec<F>& e2,
                                int right_tag) {
  std::vector<int> idx;
  if (left_tag < 0)
    for (int i = 0; i < a.dim(); ++i) idx.push_back(i);
  else
    idx = tag_block(a, left_tag, right_tag);
  const F& f = a.field();
  std::vector<int> support = idx;
  Subspace<F> sub(f, static_cast<int>(support.size()));
  std::vector<Vec<F>> out;
  for (int i : idx) {
    auto v = a.mul(a.mul(e, a.basis_vector(i)), e2);
    if (is_zero_vec(f, v)) continue;
    if (sub.add(detail::restrict_to<F>(v, support))) out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::vector<int> support_of_block(const Algebra<F>& a, int left_tag, int right_tag) {
  if (left_tag < 0) {
    std::vector<int> all(a.dim());
    for (int i = 0; i < a.dim(); ++i) all[i] = i;
    return all;
  }
  return tag_block(a, left_tag, right_tag);
}

}  // namespace mackey

#include "mackey/exalg_idempotents.hpp"
