#pragma once

// Exact coefficient fields: table-driven GF(p^m) and the rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mackey {

/// GF(p^m) with q <= 1024. Elements are integers 0..q-1 read as base-p digit
/// vectors of polynomials in X modulo the lexicographically smallest primitive
/// polynomial, so 1 is the unit and X is the fixed primitive element.
class GF {
 public:
  using value_type = int;

  GF() : GF(2) {}
  GF(int p, int m = 1);

  int characteristic() const { return t_->p; }
  int degree() const { return t_->m; }
  int size() const { return t_->q; }
  std::string name() const;
  /// Coefficients c_0..c_m of the defining polynomial (monic).
  const std::vector<int>& modulus() const { return t_->modulus; }

  int zero() const { return 0; }
  int one() const { return 1; }
  int primitive() const { return t_->exp[1 % (t_->q - 1)]; }
  bool is_zero(int a) const { return a == 0; }
  int from_int(long long n) const;

  int add(int a, int b) const { return t_->add[a * t_->q + b]; }
  int neg(int a) const { return t_->neg[a]; }
  int sub(int a, int b) const { return add(a, t_->neg[b]); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    int s = t_->log[a] + t_->log[b];
    return t_->exp[s >= t_->q - 1 ? s - (t_->q - 1) : s];
  }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;
  /// Discrete logarithm base primitive(); a must be nonzero.
  int log(int a) const { return t_->log[a]; }
  int exp(int k) const { return t_->exp[((k % (t_->q - 1)) + (t_->q - 1)) % (t_->q - 1)]; }
  std::string format(int a) const;

  bool operator==(const GF& o) const { return t_->p == o.t_->p && t_->m == o.t_->m; }

 private:
  struct Tables {
    int p = 0, m = 0, q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add;
    std::vector<int> neg, log, exp;
  };
  std::shared_ptr<const Tables> t_;
};

using Rational = boost::multiprecision::cpp_rational;

class Rationals {
 public:
  using value_type = Rational;

  int characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  bool is_zero(const Rational& a) const { return a == 0; }
  Rational from_int(long long n) const { return n; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return a / b; }
  std::string format(const Rational& a) const { return a.str(); }
  bool operator==(const Rationals&) const { return true; }
};

/// Smallest m such that GF(p^m) contains the |G|-th roots of unity we need:
/// the multiplicative order of p modulo the p'-part of n.
int splitting_degree(int p, int n);

}  // namespace mackey
