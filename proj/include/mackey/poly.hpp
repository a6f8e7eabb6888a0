#pragma once

// Univariate polynomials over a field, coefficients stored low degree first.

#include <tuple>
#include <utility>
#include <vector>

#include "mackey/linalg.hpp"

namespace mackey {

template <class F>
using Poly = std::vector<typename F::value_type>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
int degree(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> c(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  trim(f, c);
  return c;
}

template <class F>
Poly<F> poly_add(const F& f, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(f, a);
  return a;
}

template <class F>
Poly<F> poly_scale(const F& f, const typename F::value_type& s, Poly<F> a) {
  for (auto& x : a) x = f.mul(s, x);
  trim(f, a);
  return a;
}

/// (quotient, remainder)
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(f, a);
  int db = degree<F>(b);
  if (degree<F>(a) < db) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  auto lead = f.inv(b.back());
  for (int i = degree<F>(a); i >= db; --i) {
    auto c = f.mul(a[i], lead);
    q[i - db] = c;
    if (f.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  trim(f, a);
  trim(f, q);
  return {q, a};
}

template <class F>
Poly<F> monic(const F& f, Poly<F> a) {
  trim(f, a);
  if (a.empty()) return a;
  return poly_scale(f, f.inv(a.back()), a);
}

/// (g, s, t) with s a + t b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  Poly<F> s0{f.one()}, s1{}, t0{}, t1{f.one()};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(f, a, b);
    Poly<F> s2 = poly_add(f, s0, poly_scale(f, f.neg(f.one()), poly_mul(f, q, s1)));
    Poly<F> t2 = poly_add(f, t0, poly_scale(f, f.neg(f.one()), poly_mul(f, q, t1)));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  auto li = f.inv(a.back());
  return {poly_scale(f, li, a), poly_scale(f, li, s0), poly_scale(f, li, t0)};
}

template <class F>
typename F::value_type poly_eval(const F& f, const Poly<F>& a, const typename F::value_type& x) {
  auto r = f.zero();
  for (int i = degree<F>(a); i >= 0; --i) r = f.add(f.mul(r, x), a[i]);
  return r;
}

/// Roots of a in a finite field by exhaustive evaluation, with multiplicities.
template <class F>
std::vector<std::pair<int, int>> finite_field_roots(const F& f, Poly<F> a) {
  std::vector<std::pair<int, int>> out;
  trim(f, a);
  for (int x = 0; x < f.size() && degree<F>(a) > 0; ++x) {
    int mult = 0;
    Poly<F> lin{f.neg(x), f.one()};
    while (degree<F>(a) > 0) {
      auto [q, r] = poly_divmod(f, a, lin);
      if (!r.empty()) break;
      a = std::move(q);
      ++mult;
    }
    if (mult) out.emplace_back(x, mult);
  }
  return out;
}

}  // namespace mackey
