#pragma once

// Ordinary character tables with exact cyclotomic values, Brauer-character
// lifts, and characters of lifted p-permutation modules.

#include <map>
#include <string>
#include <vector>

#include "mackey/field.hpp"
#include "mackey/grp.hpp"
#include "mackey/modrep.hpp"

namespace mackey {

/// Q(zeta_n) with basis 1, z, ..., z^(phi(n)-1).
class CyclotomicField {
 public:
  using Elt = std::vector<Rational>;

  explicit CyclotomicField(int n = 1);
  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<long long>& minimal_polynomial() const { return phi_; }

  Elt zero() const { return Elt(degree(), Rational(0)); }
  Elt from_rational(const Rational& r) const;
  Elt from_int(long long v) const { return from_rational(Rational(v)); }
  /// zeta_n^k for any integer k
  Elt root(long long k) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt scale(const Elt& a, const Rational& r) const;
  /// Complex conjugation zeta -> zeta^-1.
  Elt conj(const Elt& a) const;
  bool is_rational(const Elt& a) const;
  Rational to_rational(const Elt& a) const;  // throws CertificateError when not rational
  std::string format(const Elt& a) const;

 private:
  int n_;
  std::vector<long long> phi_;  // monic, low to high
  std::vector<Elt> powers_;     // zeta^k reduced, k = 0..n-1
};

using Cyclotomic = CyclotomicField::Elt;

struct ConjugacyClasses {
  std::vector<int> reps;           // minimal element of each class, identity class first
  std::vector<int> sizes;
  std::vector<int> class_of;       // per element
  std::vector<int> orders;         // element order per class
  std::map<int, std::vector<int>> power_map;  // prime -> class of rep^prime
  int count() const { return static_cast<int>(reps.size()); }
};

ConjugacyClasses conjugacy_classes(const GroupTable& g);

struct ClassFunction {
  std::vector<Cyclotomic> values;  // per class
};

struct CharacterTable {
  GroupPtr group;
  ConjugacyClasses classes;
  CyclotomicField field;
  std::vector<ClassFunction> characters;  // sorted by degree, trivial first

  Rational inner_product(const ClassFunction& a, const ClassFunction& b) const;
  std::vector<long long> degrees() const;
  /// Header with the conductor, then one row per character.
  std::string format() const;
};

/// Dixon's method over GF(l), l prime, l = 1 mod exp(G), l > 2|G|; orthogonality certified exactly.
CharacterTable character_table(GroupPtr g);

/// Lifted Brauer character of m at a p-regular element g. The eigenvalues must
/// lie in m's field; epsilon = primitive^((q-1)/N') lifts to zeta_N' for N' the
/// p'-part of exp(G).
Cyclotomic lift_brauer_character(const ModuleRep& m, int g, const CyclotomicField& k);

/// Character of the lift of a p-permutation module: at g = us, the lifted Brauer
/// character of W[<u>] at the image of s. Certified to be a character of `table`.
ClassFunction character_of_lift(const ModuleRep& w, const SubgroupLattice& lat, const CharacterTable& table);

/// Multiplicities of the irreducibles in a class function, certified non-negative integers.
std::vector<long long> decompose_character(const CharacterTable& t, const ClassFunction& f);

/// p-part u and p'-part s of g, with g = us = su.
std::pair<int, int> p_decomposition(const GroupTable& g, int x, int p);

}  // namespace mackey
