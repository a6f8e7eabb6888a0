#pragma once

// Primitive idempotents and everything built on them. Included from exalg.hpp.

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace mackey {

/// An idempotent together with the Peirce tag whose diagonal block contains it
/// (-1 when the algebra is untagged).
template <class F>
struct PeirceUnit {
  Vec<F> e;
  int tag = -1;
};

template <class F>
struct PrimitiveDecomposition {
  std::vector<Vec<F>> idempotents;
  std::vector<int> tag;       // Peirce tag of each idempotent
  std::vector<int> class_of;  // isomorphism class of each idempotent
  std::vector<int> reps;      // one idempotent index per class
  std::vector<int> multiplicity;
  int class_count() const { return static_cast<int>(reps.size()); }
};

namespace detail {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return s_ >> 33;
  }

 private:
  std::uint64_t s_;
};

enum class MinPolyShape { local, splits, rootless };

// Classifies x in an algebra with unit; on a split, returns the CRT idempotent.
template <class F>
MinPolyShape classify(const Algebra<F>& d, const Vec<F>& x, int& lambda, Vec<F>& idem) {
  const F& f = d.field();
  Poly<F> m = minimal_polynomial(d, x);
  auto roots = finite_field_roots(f, m);
  int total = 0;
  for (auto [r, k] : roots) total += k;
  if (roots.empty()) return MinPolyShape::rootless;
  if (roots.size() == 1 && total == degree<F>(m)) {
    lambda = roots[0].first;
    return MinPolyShape::local;
  }
  // (X - lambda)^k against the coprime rest
  auto [lam, k] = roots[0];
  Poly<F> f1{f.one()};
  for (int i = 0; i < k; ++i) f1 = poly_mul(f, f1, Poly<F>{f.neg(lam), f.one()});
  Poly<F> g = poly_divmod(f, m, f1).first;
  auto [one, s, t] = poly_xgcd(f, f1, g);
  if (degree<F>(one) != 0) throw CertificateError("CRT factors are not coprime");
  idem = evaluate(d, poly_mul(f, t, g), x);
  return MinPolyShape::splits;
}

template <class F>
bool is_nilpotent_span(const Algebra<F>& d, const std::vector<Vec<F>>& j) {
  const F& f = d.field();
  std::vector<Vec<F>> cur = j;
  int prev = static_cast<int>(cur.size()) + 1;
  while (!cur.empty()) {
    if (static_cast<int>(cur.size()) >= prev) return false;
    prev = static_cast<int>(cur.size());
    Subspace<F> next(f, d.dim());
    for (const auto& x : cur)
      for (const auto& y : j) next.add(d.mul(x, y));
    cur = next.basis();
  }
  return true;
}

// A nontrivial idempotent of d, or nullopt if d is local with residue field k.
template <class F>
std::optional<Vec<F>> find_split(const Algebra<F>& d) {
  const F& f = d.field();
  int n = d.dim();
  if (n <= 1) return std::nullopt;
  bool rootless = false, all_local = true;
  std::vector<Vec<F>> radical_candidate;
  Vec<F> idem;
  for (int i = 0; i < n; ++i) {
    int lam = 0;
    auto b = d.basis_vector(i);
    switch (classify(d, b, lam, idem)) {
      case MinPolyShape::splits:
        return idem;
      case MinPolyShape::rootless:
        rootless = true;
        all_local = false;
        break;
      case MinPolyShape::local:
        axpy(f, b, f.neg(lam), d.unit());
        if (!is_zero_vec(f, b)) radical_candidate.push_back(b);
        break;
    }
  }
  if (all_local) {
    Subspace<F> jspan(f, n);
    for (const auto& v : radical_candidate) jspan.add(v);
    if (jspan.dim() == n - 1 && is_nilpotent_span(d, jspan.basis())) return std::nullopt;
  }
  Lcg rng(0x5eed + static_cast<std::uint64_t>(n));
  for (int attempt = 0; attempt < 50; ++attempt) {
    Vec<F> x = d.zero_vector();
    for (int i = 0; i < n; ++i) x[i] = static_cast<typename F::value_type>(rng.next() % f.size());
    int lam = 0;
    auto shape = classify(d, x, lam, idem);
    if (shape == MinPolyShape::splits) return idem;
    if (shape == MinPolyShape::rootless) rootless = true;
  }
  for (const auto& x : radical_candidate)
    for (const auto& y : radical_candidate) {
      int lam = 0;
      if (classify(d, d.mul(x, y), lam, idem) == MinPolyShape::splits) return idem;
    }
  if (rootless) throw FieldTooSmall("a local quotient has residue field larger than " + f.name());
  throw CertificateError("no splitting element found in a non-local corner");
}

// Primitive idempotents of a corner algebra, in its own coordinates.
template <class F>
std::vector<Vec<F>> split_corner(const Algebra<F>& c) {
  std::vector<Vec<F>> done, work{c.unit()};
  const F& f = c.field();
  while (!work.empty()) {
    Vec<F> e = work.back();
    work.pop_back();
    std::vector<Vec<F>> span;
    for (int i = 0; i < c.dim(); ++i) span.push_back(c.mul(c.mul(e, c.basis_vector(i)), e));
    Corner<F> d = make_corner(c, e, span);
    auto s = find_split(d.algebra);
    if (!s) {
      done.push_back(e);
      continue;
    }
    Vec<F> e1 = d.embed(*s);
    Vec<F> e2 = e;
    axpy(f, e2, f.neg(f.one()), e1);
    work.push_back(e2);
    work.push_back(e1);
  }
  return done;
}

// The scalar lambda with x = lambda e + nilpotent in a local corner with unit e.
template <class F>
typename F::value_type residue(const Algebra<F>& a, const Vec<F>& x, const Vec<F>& e, long long qpow) {
  const F& f = a.field();
  Vec<F> y = power(a, x, qpow);
  for (int i = 0; i < a.dim(); ++i)
    if (!f.is_zero(e[i])) return f.div(y[i], e[i]);
  throw CertificateError("zero idempotent");
}

// Smallest q^N that is at least `bound`.
template <class F>
long long frobenius_exponent(const F& f, int bound) {
  long long q = f.size(), r = q;
  while (r < bound) r *= q;
  return r;
}

}  // namespace detail

/// Complete set of orthogonal primitive idempotents refining the given Peirce
/// units, grouped into isomorphism classes certified by ab = e, ba = f.
template <class F>
PrimitiveDecomposition<F> primitive_idempotents(const Algebra<F>& a, std::vector<PeirceUnit<F>> units = {}) {
  const F& f = a.field();
  if (units.empty()) units.push_back({a.unit(), -1});
  PrimitiveDecomposition<F> out;
  for (const auto& pu : units) {
    if (is_zero_vec(f, pu.e)) continue;
    auto span = peirce_span(a, pu.e, pu.tag, pu.e, pu.tag);
    Corner<F> c = make_corner(a, pu.e, span, support_of_block(a, pu.tag, pu.tag));
    for (const auto& e : detail::split_corner(c.algebra)) {
      out.idempotents.push_back(c.embed(e));
      out.tag.push_back(pu.tag);
    }
  }
  int count = static_cast<int>(out.idempotents.size());
  out.class_of.assign(count, -1);
  std::vector<long long> qpow(count);
  for (int i = 0; i < count; ++i) {
    int local_dim = static_cast<int>(peirce_span(a, out.idempotents[i], out.tag[i], out.idempotents[i], out.tag[i]).size());
    qpow[i] = detail::frobenius_exponent(f, std::max(local_dim, 2));
  }
  for (int j = 0; j < count; ++j) {
    const Vec<F>& ej = out.idempotents[j];
    for (int c = 0; c < out.class_count() && out.class_of[j] < 0; ++c) {
      int r = out.reps[c];
      const Vec<F>& er = out.idempotents[r];
      auto rj = peirce_span(a, er, out.tag[r], ej, out.tag[j]);
      if (rj.empty()) continue;
      auto jr = peirce_span(a, ej, out.tag[j], er, out.tag[r]);
      for (std::size_t s = 0; s < rj.size() && out.class_of[j] < 0; ++s)
        for (std::size_t t = 0; t < jr.size(); ++t) {
          Vec<F> u = a.mul(rj[s], jr[t]);
          auto lam = detail::residue(a, u, er, qpow[r]);
          if (f.is_zero(lam)) continue;
          // u^{-1} = lambda^{-1} u^{q^N - 1} in the local corner e_r A e_r
          Vec<F> uinv = qpow[r] > 1 ? scaled(f, f.inv(lam), power(a, u, qpow[r] - 1)) : er;
          Vec<F> b = a.mul(jr[t], uinv);
          if (a.mul(rj[s], b) != er || a.mul(b, rj[s]) != ej)
            throw CertificateError("isomorphism witness failed verification");
          out.class_of[j] = c;
          break;
        }
    }
    if (out.class_of[j] < 0) {
      out.class_of[j] = out.class_count();
      out.reps.push_back(j);
    }
  }
  out.multiplicity.assign(out.class_count(), 0);
  for (int c : out.class_of) ++out.multiplicity[c];
  // exact certificate: orthogonal idempotents summing to the unit
  Vec<F> sum = a.zero_vector();
  for (int i = 0; i < count; ++i) {
    axpy(f, sum, f.one(), out.idempotents[i]);
    if (a.mul(out.idempotents[i], out.idempotents[i]) != out.idempotents[i])
      throw CertificateError("primitive idempotent is not idempotent");
  }
  if (sum != a.unit()) throw CertificateError("primitive idempotents do not sum to the unit");
  return out;
}

/// c_ij = dim e_i A e_j over class representatives.
template <class F>
IntMatrix cartan_matrix(const Algebra<F>& a, const PrimitiveDecomposition<F>& d) {
  int n = d.class_count();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ri = d.reps[i], rj = d.reps[j];
      c[i][j] = static_cast<long long>(
          peirce_span(a, d.idempotents[ri], d.tag[ri], d.idempotents[rj], d.tag[rj]).size());
    }
  return c;
}

/// Simultaneous row/column permutation p with a[p[i]][p[j]] == b[i][j], if any.
std::optional<std::vector<int>> match_up_to_permutation(const IntMatrix& a, const IntMatrix& b);

/// The block that contains idempotent e: index of the block idempotent acting as identity on it.
template <class F>
int block_of(const Algebra<F>& a, const std::vector<Vec<F>>& blocks, const Vec<F>& e) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (a.mul(blocks[i], e) == e) return static_cast<int>(i);
  throw CertificateError("idempotent is not contained in a single block");
}

template <class F>
struct RadicalResult {
  std::vector<Vec<F>> basis;
  int semisimple_dim = 0;  // dim A/J
};

namespace detail {

template <class F>
void certify_radical(const Algebra<F>& a, const std::vector<Vec<F>>& j) {
  const F& f = a.field();
  Subspace<F> span(f, a.dim());
  for (const auto& v : j) span.add(v);
  for (const auto& v : span.basis())
    for (int i = 0; i < a.dim(); ++i) {
      auto b = a.basis_vector(i);
      if (!span.contains(a.mul(b, v)) || !span.contains(a.mul(v, b)))
        throw CertificateError("radical candidate is not an ideal");
    }
  if (!is_nilpotent_span(a, span.basis())) throw CertificateError("radical candidate is not nilpotent");
}

}  // namespace detail

/// Jacobson radical over GF(q), assembled from the Peirce pieces e_i A e_j.
/// Certified: nilpotent two-sided ideal with dim A/J = sum of squared simple dims.
template <class F>
RadicalResult<F> radical(const Algebra<F>& a, const PrimitiveDecomposition<F>& d) {
  const F& f = a.field();
  int count = static_cast<int>(d.idempotents.size());
  RadicalResult<F> out;
  for (int i = 0; i < count; ++i) {
    const Vec<F>& ei = d.idempotents[i];
    int local_dim = static_cast<int>(peirce_span(a, ei, d.tag[i], ei, d.tag[i]).size());
    long long qpow = detail::frobenius_exponent(f, std::max(local_dim, 2));
    for (int j = 0; j < count; ++j) {
      const Vec<F>& ej = d.idempotents[j];
      auto ij = peirce_span(a, ei, d.tag[i], ej, d.tag[j]);
      if (d.class_of[i] != d.class_of[j]) {
        out.basis.insert(out.basis.end(), ij.begin(), ij.end());
        continue;
      }
      auto ji = peirce_span(a, ej, d.tag[j], ei, d.tag[i]);
      Mat<F> phi(static_cast<int>(ji.size()), static_cast<int>(ij.size()), f);
      for (std::size_t s = 0; s < ij.size(); ++s)
        for (std::size_t t = 0; t < ji.size(); ++t)
          phi(static_cast<int>(t), static_cast<int>(s)) = detail::residue(a, a.mul(ij[s], ji[t]), ei, qpow);
      for (const auto& coeffs : nullspace(f, phi)) {
        Vec<F> v = a.zero_vector();
        for (std::size_t s = 0; s < ij.size(); ++s) axpy(f, v, coeffs[s], ij[s]);
        out.basis.push_back(std::move(v));
      }
    }
  }
  out.semisimple_dim = a.dim() - static_cast<int>(out.basis.size());
  long long squares = 0;
  for (int m : d.multiplicity) squares += static_cast<long long>(m) * m;
  if (squares != out.semisimple_dim) throw CertificateError("dim A/J differs from the sum of squared simple dims");
  detail::certify_radical(a, out.basis);
  return out;
}

/// Radical in characteristic 0: kernel of the trace form tr(L_{xy}).
inline RadicalResult<Rationals> radical(const Algebra<Rationals>& a) {
  const Rationals& f = a.field();
  int n = a.dim();
  std::vector<Rational> tr(n, 0);
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k) {
      auto [b, e] = a.product(x, k);
      for (auto p = b; p != e; ++p)
        if (p->k == k) tr[x] += p->c;
    }
  Mat<Rationals> form(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [b, e] = a.product(i, j);
      for (auto p = b; p != e; ++p) form(i, j) += p->c * tr[p->k];
    }
  RadicalResult<Rationals> out;
  out.basis = nullspace(f, form);
  out.semisimple_dim = n - static_cast<int>(out.basis.size());
  detail::certify_radical(a, out.basis);
  return out;
}

enum class Verdict { yes, no, undecided };
std::string to_string(Verdict v);

template <class F>
struct SymmetricResult {
  Verdict verdict = Verdict::undecided;
  std::vector<Vec<F>> witness;  // one trace functional per block when yes
  std::string detail;
};

namespace detail {

template <class F>
SymmetricResult<F> symmetric_search(const Algebra<F>& b, long long cap) {
  const F& f = b.field();
  int n = b.dim();
  SymmetricResult<F> res;
  std::vector<Vec<F>> prods(static_cast<std::size_t>(n) * n);
  Subspace<F> comm(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prods[i * n + j] = b.mul(b.basis_vector(i), b.basis_vector(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<F> c = prods[i * n + j];
      axpy(f, c, f.neg(f.one()), prods[j * n + i]);
      comm.add(c);
    }
  Mat<F> m = from_rows<F>(comm.basis(), n, f);
  if (m.rows == 0) m = Mat<F>(0, n, f);
  auto taus = nullspace(f, m);
  int c = static_cast<int>(taus.size());
  std::vector<Mat<F>> grams;
  for (const auto& t : taus) {
    Mat<F> g(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto s = f.zero();
        const auto& p = prods[i * n + j];
        for (int k = 0; k < n; ++k)
          if (!f.is_zero(p[k])) s = f.add(s, f.mul(t[k], p[k]));
        g(i, j) = s;
      }
    grams.push_back(std::move(g));
  }
  auto attempt = [&](const std::vector<typename F::value_type>& alpha) -> bool {
    Mat<F> g(n, n, f);
    for (int s = 0; s < c; ++s) {
      if (f.is_zero(alpha[s])) continue;
      for (std::size_t k = 0; k < g.a.size(); ++k) g.a[k] = f.add(g.a[k], f.mul(alpha[s], grams[s].a[k]));
    }
    if (rank(f, g) < n) return false;
    Vec<F> tau(n, f.zero());
    for (int s = 0; s < c; ++s) axpy(f, tau, alpha[s], taus[s]);
    res.witness.push_back(tau);
    return true;
  };
  // projective points of GF(q)^c: first nonzero coordinate is 1
  double total = 0;
  for (int s = 0; s < c; ++s) total += std::pow(static_cast<double>(f.size()), s);
  if (c == 0) {
    res.verdict = n == 0 ? Verdict::yes : Verdict::no;
    res.detail = "no functional vanishes on [A,A]";
    return res;
  }
  if (total <= static_cast<double>(cap)) {
    for (int lead = 0; lead < c; ++lead) {
      long long tail = 1;
      for (int s = lead + 1; s < c; ++s) tail *= f.size();
      for (long long code = 0; code < tail; ++code) {
        std::vector<typename F::value_type> alpha(c, f.zero());
        alpha[lead] = f.one();
        long long r = code;
        for (int s = lead + 1; s < c; ++s, r /= f.size()) alpha[s] = static_cast<typename F::value_type>(r % f.size());
        if (attempt(alpha)) {
          res.verdict = Verdict::yes;
          res.detail = "nondegenerate trace form found";
          return res;
        }
      }
    }
    res.verdict = Verdict::no;
    res.detail = "exhaustive search over " + std::to_string(static_cast<long long>(total)) +
                 " forms found none nondegenerate";
    return res;
  }
  Lcg rng(0xC0FFEE);
  for (long long it = 0; it < cap; ++it) {
    std::vector<typename F::value_type> alpha(c);
    for (auto& v : alpha) v = static_cast<typename F::value_type>(rng.next() % f.size());
    if (attempt(alpha)) {
      res.verdict = Verdict::yes;
      res.detail = "nondegenerate trace form found by sampling";
      return res;
    }
  }
  res.verdict = Verdict::undecided;
  res.detail = "search space of dimension " + std::to_string(c) + " exceeds cap";
  return res;
}

}  // namespace detail

/// Decides whether a nondegenerate symmetric associative form exists, block by block.
template <class F>
SymmetricResult<F> is_symmetric_algebra(const Algebra<F>& a, long long cap = 1 << 16) {
  auto blocks = block_idempotents(a);
  SymmetricResult<F> out;
  out.verdict = Verdict::yes;
  for (const auto& eps : blocks) {
    std::vector<Vec<F>> span;
    for (int i = 0; i < a.dim(); ++i) span.push_back(a.mul(eps, a.basis_vector(i)));
    Corner<F> blk = make_corner(a, eps, span);
    auto r = detail::symmetric_search(blk.algebra, cap);
    if (r.verdict == Verdict::yes) {
      out.witness.push_back(r.witness.front());
      continue;
    }
    out.detail = r.detail;
    out.witness.clear();
    if (r.verdict == Verdict::no) {
      out.verdict = Verdict::no;
      return out;
    }
    out.verdict = Verdict::undecided;
  }
  if (out.verdict == Verdict::yes) out.detail = "every block carries a nondegenerate trace form";
  return out;
}

template <class F>
Algebra<F> group_algebra(const GroupTable& g, const F& f) {
  std::vector<typename Algebra<F>::Constant> c;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) c.push_back({a, b, g.mul(a, b), f.one()});
  Vec<F> unit(g.order, f.zero());
  unit[g.identity] = f.one();
  return Algebra<F>(f, g.order, std::move(c), std::move(unit));
}

}  // namespace mackey
