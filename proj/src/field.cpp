#include "mackey/field.hpp"

#include "mackey/error.hpp"
#include "mackey/grp.hpp"

namespace mackey {

namespace {

std::vector<int> digits(int a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i, a /= p) d[i] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// Multiply by X modulo the monic polynomial with low coefficients `low`.
std::vector<int> times_x(const std::vector<int>& v, const std::vector<int>& low, int p) {
  int m = static_cast<int>(v.size());
  int top = v[m - 1];
  std::vector<int> out(m);
  for (int i = m - 1; i >= 1; --i) out[i] = v[i - 1];
  out[0] = 0;
  for (int i = 0; i < m; ++i) out[i] = ((out[i] - top * low[i]) % p + p) % p;
  return out;
}

}  // namespace

GF::GF(int p, int m) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (m < 1) throw InputError("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > 1024) throw LimitError("GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 1024 elements");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<int>(q);
  int qi = t->q;
  // search monic polynomials X^m + low, low ordered as base-p integers
  bool found = false;
  for (int code = 0; code < qi && !found; ++code) {
    std::vector<int> low = digits(code, p, m);
    if (qi == 2) {
      t->exp = {1};
      t->modulus = {1, 1};
      found = true;
      break;
    }
    std::vector<int> cur(m, 0);
    cur[0] = 1;
    std::vector<int> ex;
    std::vector<bool> seen(qi, false);
    bool ok = true;
    for (int k = 0; k < qi - 1; ++k) {
      int a = undigits(cur, p);
      if (a == 0 || seen[a]) {
        ok = false;
        break;
      }
      seen[a] = true;
      ex.push_back(a);
      cur = times_x(cur, low, p);
    }
    if (ok && undigits(cur, p) == 1) {
      t->exp = ex;
      t->modulus = low;
      t->modulus.push_back(1);
      found = true;
    }
  }
  if (!found) throw CertificateError("no primitive polynomial found");
  t->log.assign(qi, -1);
  for (int k = 0; k < qi - 1; ++k) t->log[t->exp[k]] = k;
  t->add.resize(static_cast<std::size_t>(qi) * qi);
  t->neg.resize(qi);
  for (int a = 0; a < qi; ++a) {
    auto da = digits(a, p, m);
    std::vector<int> dn(m);
    for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = undigits(dn, p);
    for (int b = 0; b < qi; ++b) {
      auto db = digits(b, p, m);
      for (int i = 0; i < m; ++i) db[i] = (da[i] + db[i]) % p;
      t->add[a * qi + b] = static_cast<std::uint16_t>(undigits(db, p));
    }
  }
  t_ = t;
}

std::string GF::name() const {
  return t_->m == 1 ? "GF(" + std::to_string(t_->p) + ")"
                    : "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->m) + ")";
}

int GF::from_int(long long n) const {
  long long r = n % t_->p;
  if (r < 0) r += t_->p;
  return static_cast<int>(r);
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
}

int GF::pow(int a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  long long n = t_->q - 1;
  long long k = (static_cast<long long>(t_->log[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return t_->exp[k];
}

std::string GF::format(int a) const {
  if (t_->m == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "w^" + std::to_string(t_->log[a]);
}

Rational Rationals::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return 1 / a;
}

int splitting_degree(int p, int n) {
  while (n % p == 0) n /= p;
  if (n == 1) return 1;
  int m = 1;
  long long x = p % n;
  while (x != 1 % n) {
    x = x * p % n;
    ++m;
  }
  return m;
}

}  // namespace mackey
