#include "mackey/chartab.hpp"

#include <numeric>
#include <sstream>

namespace mackey {

namespace {

using IntPoly = std::vector<long long>;  // low to high

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  IntPoly q(std::max(da - db + 1, 1), 0);
  for (int i = da; i >= db; --i) {
    long long c = a[i];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0) throw CertificateError("cyclotomic polynomial division is not exact");
  return q;
}

IntPoly cyclotomic_polynomial(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  int d = degree();
  powers_.assign(n, zero());
  Elt cur = zero();
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    powers_[k] = cur;
    // multiply by zeta, replacing zeta^d by -(phi_0 + ... + phi_{d-1} zeta^{d-1})
    Rational top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) cur[i] -= top * phi_[i];
  }
}

CyclotomicField::Elt CyclotomicField::from_rational(const Rational& r) const {
  Elt e = zero();
  e[0] = r;
  return e;
}

CyclotomicField::Elt CyclotomicField::root(long long k) const { return powers_[((k % n_) + n_) % n_]; }

CyclotomicField::Elt CyclotomicField::add(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicField::Elt CyclotomicField::sub(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

CyclotomicField::Elt CyclotomicField::neg(const Elt& a) const { return scale(a, Rational(-1)); }

CyclotomicField::Elt CyclotomicField::scale(const Elt& a, const Rational& s) const {
  Elt r = a;
  for (auto& x : r) x *= s;
  return r;
}

CyclotomicField::Elt CyclotomicField::mul(const Elt& a, const Elt& b) const {
  int d = degree();
  std::vector<Rational> raw(2 * d, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b[j] != 0) raw[i + j] += a[i] * b[j];
  }
  Elt r = zero();
  for (int k = 0; k < 2 * d; ++k) {
    if (raw[k] == 0) continue;
    const Elt& zk = powers_[k % n_];
    for (int i = 0; i < d; ++i)
      if (zk[i] != 0) r[i] += raw[k] * zk[i];
  }
  return r;
}

CyclotomicField::Elt CyclotomicField::conj(const Elt& a) const {
  Elt r = zero();
  for (int i = 0; i < degree(); ++i)
    if (a[i] != 0) r = add(r, scale(root(-i), a[i]));
  return r;
}

bool CyclotomicField::is_rational(const Elt& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

Rational CyclotomicField::to_rational(const Elt& a) const {
  if (!is_rational(a)) throw CertificateError("cyclotomic value is not rational: " + format(a));
  return a[0];
}

std::string CyclotomicField::format(const Elt& a) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (i == 0)
      out << c.str();
    else {
      if (c != 1) out << c.str() << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  ConjugacyClasses c;
  c.class_of.assign(g.order, -1);
  std::vector<int> order_first{g.identity};
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity) order_first.push_back(x);
  for (int x : order_first) {
    if (c.class_of[x] >= 0) continue;
    int id = c.count();
    int size = 0;
    for (int y = 0; y < g.order; ++y) {
      int z = g.conj(y, x);
      if (c.class_of[z] < 0) {
        c.class_of[z] = id;
        ++size;
      }
    }
    c.reps.push_back(x);
    c.sizes.push_back(size);
    c.orders.push_back(g.element_order(x));
  }
  for (int p = 2; p <= g.order; ++p) {
    if (!is_prime(p) || g.order % p != 0) continue;
    auto& m = c.power_map[p];
    for (int r : c.reps) m.push_back(c.class_of[g.power(r, p)]);
  }
  return c;
}

std::pair<int, int> p_decomposition(const GroupTable& g, int x, int p) {
  int o = g.element_order(x);
  int pa = p_part(o, p), m = o / pa;
  // alpha = 1 mod pa, 0 mod m
  int alpha = 0;
  for (int t = 0; t < o; t += m)
    if (t % pa == 1 % pa) {
      alpha = t;
      break;
    }
  int u = g.power(x, alpha);
  int s = g.power(x, (1 - alpha + o) % o);
  return {u, s};
}

Rational CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
  Cyclotomic sum = field.zero();
  for (int k = 0; k < classes.count(); ++k)
    sum = field.add(sum, field.scale(field.mul(a.values[k], field.conj(b.values[k])), Rational(classes.sizes[k])));
  return field.to_rational(sum) / group->order;
}

std::vector<long long> CharacterTable::degrees() const {
  std::vector<long long> out;
  for (const auto& c : characters) out.push_back(static_cast<long long>(field.to_rational(c.values[0])));
  return out;
}

std::string CharacterTable::format() const {
  std::ostringstream out;
  out << "# group: " << group->name << "\n# conductor: " << field.conductor() << "\n# classes:";
  for (int k = 0; k < classes.count(); ++k) out << ' ' << classes.orders[k] << '/' << classes.sizes[k];
  out << '\n';
  for (std::size_t i = 0; i < characters.size(); ++i) {
    out << "chi" << i + 1 << ':';
    for (const auto& v : characters[i].values) out << " [" << field.format(v) << ']';
    out << '\n';
  }
  return out.str();
}

namespace {

int dixon_prime(const GroupTable& g) {
  int e = g.exponent();
  for (int l = 2 * g.order + 1; l <= 1021; ++l)
    if (is_prime(l) && (l - 1) % e == 0) return l;
  throw LimitError("no usable prime for the character table");
}

// Common eigenvectors of the class matrices, one per irreducible character.
std::vector<Vec<GF>> common_eigenvectors(const GF& f, const std::vector<Mat<GF>>& mats, int r) {
  std::vector<std::vector<Vec<GF>>> spaces(1);
  for (int i = 0; i < r; ++i) {
    Vec<GF> e(r, 0);
    e[i] = 1;
    spaces[0].push_back(e);
  }
  for (const auto& a : mats) {
    if (static_cast<int>(spaces.size()) == r) break;
    std::vector<std::vector<Vec<GF>>> next;
    for (const auto& w : spaces) {
      if (w.size() == 1) {
        next.push_back(w);
        continue;
      }
      int d = static_cast<int>(w.size()), found = 0;
      std::vector<Vec<GF>> aw;
      for (const auto& v : w) aw.push_back(apply(f, a, v));
      for (int lam = 0; lam < f.size() && found < d; ++lam) {
        Mat<GF> m(r, d, f);
        for (int j = 0; j < d; ++j)
          for (int i = 0; i < r; ++i) m(i, j) = f.sub(aw[j][i], f.mul(lam, w[j][i]));
        auto ker = nullspace(f, m);
        if (ker.empty()) continue;
        std::vector<Vec<GF>> piece;
        for (const auto& c : ker) {
          Vec<GF> v(r, 0);
          for (int j = 0; j < d; ++j) axpy(f, v, c[j], w[j]);
          piece.push_back(std::move(v));
        }
        found += static_cast<int>(piece.size());
        next.push_back(std::move(piece));
      }
      if (found != d) throw CertificateError("class matrices are not simultaneously diagonalizable");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) throw CertificateError("common eigenspaces are not one-dimensional");
  std::vector<Vec<GF>> out;
  for (auto& w : spaces) out.push_back(w[0]);
  return out;
}

}  // namespace

CharacterTable character_table(GroupPtr gp) {
  const GroupTable& g = *gp;
  CharacterTable t{gp, conjugacy_classes(g), CyclotomicField(g.exponent()), {}};
  const auto& cl = t.classes;
  int r = cl.count();
  int l = dixon_prime(g);
  GF f(l);
  // (A_j)_{ik} = #{x in C_j : x^-1 g_k in C_i}
  std::vector<std::vector<int>> members(r);
  for (int x = 0; x < g.order; ++x) members[cl.class_of[x]].push_back(x);
  std::vector<Mat<GF>> mats;
  for (int j = 0; j < r; ++j) {
    Mat<GF> a(r, r, f);
    for (int k = 0; k < r; ++k)
      for (int x : members[j]) {
        int i = cl.class_of[g.mul(g.inv(x), cl.reps[k])];
        a(i, k) = f.add(a(i, k), 1);
      }
    mats.push_back(std::move(a));
  }
  std::vector<int> inverse_class(r);
  for (int k = 0; k < r; ++k) inverse_class[k] = cl.class_of[g.inv(cl.reps[k])];
  int e = g.exponent();
  int w = f.primitive();
  std::vector<std::pair<std::vector<int>, ClassFunction>> rows;
  for (auto v : common_eigenvectors(f, mats, r)) {
    if (v[0] == 0) throw CertificateError("central character vanishes at the identity");
    v = scaled(f, f.inv(v[0]), v);
    int norm = 0;
    for (int k = 0; k < r; ++k)
      norm = f.add(norm, f.div(f.mul(v[k], v[inverse_class[k]]), f.from_int(cl.sizes[k])));
    int target = f.div(f.from_int(g.order), norm);
    int deg = 0;
    for (int d = 1; d * d <= g.order; ++d)
      if (f.from_int(static_cast<long long>(d) * d) == target) deg = d;
    if (deg == 0) throw CertificateError("no integer degree for a character");
    std::vector<int> modl(r);
    for (int k = 0; k < r; ++k) modl[k] = f.div(f.mul(v[k], f.from_int(deg)), f.from_int(cl.sizes[k]));
    ClassFunction chi;
    for (int k = 0; k < r; ++k) {
      int o = cl.orders[k];
      int eps = f.pow(w, (l - 1) / o);
      Cyclotomic val = t.field.zero();
      for (int j = 0; j < o; ++j) {
        int m = 0;
        for (int s = 0; s < o; ++s) {
          int cs = cl.class_of[g.power(cl.reps[k], s)];
          m = f.add(m, f.mul(modl[cs], f.pow(eps, static_cast<long long>(o - j) * s % o)));
        }
        m = f.div(m, f.from_int(o));
        if (m > deg) throw CertificateError("eigenvalue multiplicity out of range");
        if (m) val = t.field.add(val, t.field.scale(t.field.root(static_cast<long long>(j) * (e / o)), Rational(m)));
      }
      chi.values.push_back(std::move(val));
    }
    rows.emplace_back(std::vector<int>{deg}, std::move(chi));
    rows.back().first.insert(rows.back().first.end(), modl.begin(), modl.end());
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, chi] : rows) t.characters.push_back(std::move(chi));
  // exact certificates
  long long sq = 0;
  for (long long d : t.degrees()) sq += d * d;
  if (sq != g.order) throw CertificateError("squared degrees do not sum to the group order");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (t.inner_product(t.characters[i], t.characters[j]) != (i == j ? 1 : 0))
        throw CertificateError("character table fails row orthogonality");
  return t;
}

Cyclotomic lift_brauer_character(const ModuleRep& m, int x, const CyclotomicField& k) {
  const GroupTable& g = *m.group;
  const GF& f = m.field;
  int p = f.characteristic();
  int o = g.element_order(x);
  if (o % p == 0) throw InputError("Brauer character needs a p-regular element");
  int n = k.conductor();
  int np = n;
  while (np % p == 0) np /= p;
  if (np % o != 0) throw InputError("element order does not divide the conductor");
  if ((f.size() - 1) % np != 0) throw FieldTooSmall("module field lacks the roots of unity of order " + std::to_string(np));
  int step = (f.size() - 1) / np;  // epsilon = primitive^step has order np
  Cyclotomic val = k.zero();
  int total = 0;
  for (int j = 0; j < np; j += np / o) {
    int lam = f.exp(static_cast<long long>(step) * j);
    Mat<GF> a = m.of(x);
    for (int i = 0; i < a.rows; ++i) a(i, i) = f.sub(a(i, i), lam);
    int mult = m.dim - rank(f, a);
    total += mult;
    if (mult) val = k.add(val, k.scale(k.root(static_cast<long long>(j) * (n / np)), Rational(mult)));
  }
  if (total != m.dim) throw CertificateError("p-regular element does not act semisimply");
  return val;
}

ClassFunction character_of_lift(const ModuleRep& w, const SubgroupLattice& lat, const CharacterTable& t) {
  const GroupTable& g = lat.group();
  int p = w.field.characteristic();
  ClassFunction out;
  for (int x : t.classes.reps) {
    auto [u, s] = p_decomposition(g, x, p);
    int q = lat.id_of(generate(g, bit(u)));
    auto bq = brauer_quotient(w, lat, q);
    if (bq.dim() == 0) {
      out.values.push_back(t.field.zero());
      continue;
    }
    int sbar = bq.normalizer.projection[s];
    if (sbar < 0) throw CertificateError("p'-part does not normalize the p-part");
    out.values.push_back(lift_brauer_character(bq.module, sbar, t.field));
  }
  decompose_character(t, out);
  return out;
}

std::vector<long long> decompose_character(const CharacterTable& t, const ClassFunction& f) {
  std::vector<long long> out;
  Cyclotomic rebuilt = t.field.zero();
  for (const auto& chi : t.characters) {
    Rational m = t.inner_product(f, chi);
    if (denominator(m) != 1 || m < 0)
      throw CertificateError("class function is not a character: multiplicity " + m.str());
    out.push_back(static_cast<long long>(m));
  }
  // the multiplicities must reproduce the function exactly
  for (int k = 0; k < t.classes.count(); ++k) {
    Cyclotomic v = t.field.zero();
    for (std::size_t i = 0; i < out.size(); ++i)
      v = t.field.add(v, t.field.scale(t.characters[i].values[k], Rational(out[i])));
    if (v != f.values[k]) throw CertificateError("class function is not in the span of the irreducibles");
  }
  return out;
}

}  // namespace mackey
