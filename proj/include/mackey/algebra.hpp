#pragma once

// Finite-dimensional algebras given by sparse structure constants.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mackey/error.hpp"
#include "mackey/linalg.hpp"
#include "mackey/poly.hpp"

namespace mackey {

/// Basis elements may carry Peirce tags (left, right): the product b_i b_j is
/// zero unless right_tag(i) == left_tag(j). Untagged algebras use tag 0 throughout.
template <class F>
class Algebra {
 public:
  using T = typename F::value_type;
  struct Term {
    int k;
    T c;
  };
  struct Constant {
    int i, j, k;
    T c;
  };

  Algebra() = default;
  Algebra(F f, int dim, std::vector<Constant> constants, Vec<F> unit, std::vector<int> left_tags = {},
          std::vector<int> right_tags = {})
      : f_(std::move(f)), n_(dim), unit_(std::move(unit)), left_(std::move(left_tags)), right_(std::move(right_tags)) {
    if (left_.empty()) left_.assign(n_, 0);
    if (right_.empty()) right_.assign(n_, 0);
    if (static_cast<int>(unit_.size()) != n_) throw InputError("unit has wrong length");
    std::sort(constants.begin(), constants.end(), [](const Constant& a, const Constant& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    offsets_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
    int last_i = -1, last_j = -1;
    for (const auto& c : constants) {
      if (f_.is_zero(c.c)) continue;
      if (!terms_.empty() && last_i == c.i && last_j == c.j && terms_.back().k == c.k) {
        terms_.back().c = f_.add(terms_.back().c, c.c);
        continue;
      }
      terms_.push_back({c.k, c.c});
      ++offsets_[static_cast<std::size_t>(c.i) * n_ + c.j + 1];
      last_i = c.i;
      last_j = c.j;
    }
    for (std::size_t s = 1; s < offsets_.size(); ++s) offsets_[s] += offsets_[s - 1];
    int tags = 0;
    for (int i = 0; i < n_; ++i) tags = std::max({tags, left_[i] + 1, right_[i] + 1});
    by_left_.assign(tags, {});
    for (int i = 0; i < n_; ++i) by_left_[left_[i]].push_back(i);
  }

  const F& field() const { return f_; }
  int dim() const { return n_; }
  const Vec<F>& unit() const { return unit_; }
  int left_tag(int i) const { return left_[i]; }
  int right_tag(int i) const { return right_[i]; }
  int tag_count() const { return static_cast<int>(by_left_.size()); }
  const std::vector<int>& with_left_tag(int t) const { return by_left_[t]; }

  std::pair<const Term*, const Term*> product(int i, int j) const {
    std::size_t s = static_cast<std::size_t>(i) * n_ + j;
    return {terms_.data() + offsets_[s], terms_.data() + offsets_[s + 1]};
  }
  std::size_t nonzero_constants() const { return terms_.size(); }

  Vec<F> zero_vector() const { return Vec<F>(n_, f_.zero()); }
  Vec<F> basis_vector(int i) const {
    Vec<F> v = zero_vector();
    v[i] = f_.one();
    return v;
  }

  Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out = zero_vector();
    std::vector<std::vector<int>> ysupp(by_left_.size());
    for (int j = 0; j < n_; ++j)
      if (!f_.is_zero(y[j])) ysupp[left_[j]].push_back(j);
    for (int i = 0; i < n_; ++i) {
      if (f_.is_zero(x[i])) continue;
      int t = right_[i];
      if (t >= static_cast<int>(ysupp.size())) continue;
      for (int j : ysupp[t]) {
        auto s = f_.mul(x[i], y[j]);
        auto [b, e] = product(i, j);
        for (auto p = b; p != e; ++p) out[p->k] = f_.add(out[p->k], f_.mul(s, p->c));
      }
    }
    return out;
  }

  Vec<F> mul_basis(int i, const Vec<F>& y) const { return mul(basis_vector(i), y); }

  Vec<F> pow(Vec<F> x, long long e) const {
    Vec<F> r = unit_;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      e >>= 1;
      if (e) x = mul(x, x);
    }
    return r;
  }

  /// Checks the unit law on every basis element and associativity on the given triples.
  void check(const std::vector<std::tuple<int, int, int>>& triples) const {
    for (int i = 0; i < n_; ++i) {
      auto b = basis_vector(i);
      if (mul(unit_, b) != b || mul(b, unit_) != b)
        throw CertificateError("unit law fails at basis element " + std::to_string(i));
    }
    for (auto [i, j, k] : triples) {
      auto bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
      if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk)))
        throw CertificateError("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
    }
  }

 private:
  F f_;
  int n_ = 0;
  Vec<F> unit_;
  std::vector<int> left_, right_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Term> terms_;
  std::vector<std::vector<int>> by_left_;
};

/// e A e (or any subalgebra spanned by given vectors) as an algebra in its own right.
template <class F>
struct Corner {
  Algebra<F> algebra;
  std::vector<Vec<F>> basis;  // in the coordinates of the parent
  std::vector<int> support;   // parent coordinates where basis vectors may be nonzero

  Vec<F> embed(const Vec<F>& local) const {
    const F& f = algebra.field();
    Vec<F> out(basis.empty() ? 0 : basis[0].size(), f.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(f, out, local[i], basis[i]);
    return out;
  }
};

namespace detail {

template <class F>
Vec<F> restrict_to(const Vec<F>& v, const std::vector<int>& support) {
  Vec<F> out;
  out.reserve(support.size());
  for (int s : support) out.push_back(v[s]);
  return out;
}

}  // namespace detail

/// Builds the subalgebra spanned by `spanning` (which must be closed under
/// multiplication) with unit `e`. Vectors are assumed to vanish off `support`.
template <class F>
Corner<F> make_corner(const Algebra<F>& a, const Vec<F>& e, const std::vector<Vec<F>>& spanning,
                      std::vector<int> support = {}) {
  const F& f = a.field();
  if (support.empty())
    for (int i = 0; i < a.dim(); ++i) support.push_back(i);
  Subspace<F> sub(f, static_cast<int>(support.size()));
  Corner<F> c;
  c.support = support;
  for (const auto& v : spanning)
    if (sub.add(detail::restrict_to<F>(v, support))) c.basis.push_back(v);
  int d = sub.dim();
  auto coords = [&](const Vec<F>& v) {
    auto r = sub.coordinates(detail::restrict_to<F>(v, support));
    if (!r) throw CertificateError("corner is not closed under multiplication");
    return *r;
  };
  std::vector<typename Algebra<F>::Constant> consts;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto p = coords(a.mul(c.basis[i], c.basis[j]));
      for (int k = 0; k < d; ++k)
        if (!f.is_zero(p[k])) consts.push_back({i, j, k, p[k]});
    }
  Vec<F> unit = d ? coords(e) : Vec<F>{};
  c.algebra = Algebra<F>(f, d, std::move(consts), std::move(unit));
  return c;
}

/// Minimal polynomial of x over the subalgebra generated by x and the unit of `a`.
template <class F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Vec<F>& x) {
  const F& f = a.field();
  Subspace<F> powers(f, a.dim());
  Vec<F> cur = a.unit();
  while (powers.add(cur)) cur = a.mul(cur, x);
  auto c = *powers.coordinates(cur);
  Poly<F> m(c.size() + 1, f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) m[i] = f.neg(c[i]);
  m.back() = f.one();
  return m;
}

template <class F>
Vec<F> evaluate(const Algebra<F>& a, const Poly<F>& p, const Vec<F>& x) {
  const F& f = a.field();
  Vec<F> r = a.zero_vector();
  for (int i = degree<F>(p); i >= 0; --i) {
    r = a.mul(r, x);
    axpy(f, r, p[i], a.unit());
  }
  return r;
}

/// Inverse of an invertible x, from its minimal polynomial.
template <class F>
std::optional<Vec<F>> invert(const Algebra<F>& a, const Vec<F>& x) {
  const F& f = a.field();
  Poly<F> m = minimal_polynomial(a, x);
  if (f.is_zero(m[0])) return std::nullopt;
  Poly<F> q(m.begin() + 1, m.end());
  return scaled(f, f.neg(f.inv(m[0])), evaluate(a, q, x));
}

}  // namespace mackey
