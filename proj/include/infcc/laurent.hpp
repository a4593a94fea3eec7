#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "infcc/arc.hpp"

namespace infcc {

using BigInt = boost::multiprecision::cpp_int;

/// Formal integer combination of arcs. Tagged so that classes in the split
/// Grothendieck group of T and classes of finite length modules (combinations
/// of simples S_t) cannot be mixed up.
template <class Tag>
class ArcCombination {
 public:
  using Map = std::map<Arc, long long>;

  ArcCombination() = default;
  static ArcCombination of(const Arc& a, long long c = 1) {
    ArcCombination r;
    r.add(a, c);
    return r;
  }

  void add(const Arc& a, long long c) {
    if (c == 0) return;
    auto& slot = coeffs_[a];
    slot += c;
    if (slot == 0) coeffs_.erase(a);
  }

  long long operator[](const Arc& a) const {
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  ArcCombination& operator+=(const ArcCombination& o) {
    for (const auto& [a, c] : o.coeffs_) add(a, c);
    return *this;
  }
  ArcCombination& operator-=(const ArcCombination& o) {
    for (const auto& [a, c] : o.coeffs_) add(a, -c);
    return *this;
  }
  friend ArcCombination operator+(ArcCombination a, const ArcCombination& b) { return a += b; }
  friend ArcCombination operator-(ArcCombination a, const ArcCombination& b) { return a -= b; }
  friend ArcCombination operator-(const ArcCombination& a) { return ArcCombination{} - a; }
  friend ArcCombination operator*(long long k, const ArcCombination& a) {
    ArcCombination r;
    for (const auto& [arc, c] : a.coeffs_) r.add(arc, k * c);
    return r;
  }
  friend bool operator==(const ArcCombination&, const ArcCombination&) = default;
  friend auto operator<=>(const ArcCombination& a, const ArcCombination& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  Map coeffs_;
};

struct SplitTag {};
struct ModTag {};

/// Element of K_0^split(T), the free abelian group on the members of T.
using SplitK0Class = ArcCombination<SplitTag>;
/// Element of K_0(fl T): coefficients of the simple classes [S_t].
using ModClass = ArcCombination<ModTag>;

std::string to_string(const SplitK0Class& k);
std::string to_string(const ModClass& k);

/// Exponent vector of a Laurent monomial: sorted (arc, exponent) pairs with
/// no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const SplitK0Class& alpha);

  const std::vector<std::pair<Arc, int>>& exponents() const { return exps_; }
  int exponent(const Arc& a) const;
  bool is_one() const { return exps_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Arc, int>> exps_;
};

/// Sparse Laurent polynomial in variables x_a, a an arc, with arbitrary
/// precision integer coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly variable(const Arc& a);
  /// x^alpha, coefficient 1.
  static LaurentPoly monomial(const SplitK0Class& alpha);
  static LaurentPoly term(const Monomial& m, const BigInt& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by x_t^{-1}; always exact in the Laurent ring.
  LaurentPoly div_exact_variable(const Arc& t) const;
  /// Sets x_u = 1 for every u in `units` and merges terms.
  LaurentPoly substitute_unit(const std::set<Arc>& units) const;
  LaurentPoly substitute_unit_if(const std::function<bool(const Arc&)>& is_unit) const;
  /// Sum of coefficients.
  BigInt eval_all_ones() const;

  /// Variables occurring with a non-zero exponent in some term.
  std::set<Arc> variables() const;
  /// Per-variable minimum exponent over all terms, negative part only: the
  /// monomial clearing all denominators.
  Monomial denominator() const;
  bool has_positive_coefficients() const;

  /// Canonical text: "(num)/den" with variables printed as x[m,n].
  std::string to_text() const;

 private:
  Terms terms_;
};

std::string to_string(const Monomial& m);

}  // namespace infcc
