#include "infcc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace infcc {

namespace {

template <class Tag>
std::string combination_text(const ArcCombination<Tag>& k, const char* prefix) {
  if (k.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : k.coeffs()) {
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << prefix << "[" << a.m << "," << a.n << "]";
    first = false;
  }
  return os.str();
}

std::string variable_text(const Arc& a, int e) {
  std::string s = "x[" + std::to_string(a.m) + "," + std::to_string(a.n) + "]";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [a, e] : m.exponents()) d += e;
  return d;
}

}  // namespace

std::string to_string(const SplitK0Class& k) { return combination_text(k, ""); }
std::string to_string(const ModClass& k) { return combination_text(k, "S"); }

Monomial::Monomial(const SplitK0Class& alpha) {
  for (const auto& [a, c] : alpha.coeffs()) exps_.emplace_back(a, static_cast<int>(c));
}

int Monomial::exponent(const Arc& a) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), a,
                             [](const auto& p, const Arc& x) { return p.first < x; });
  return (it != exps_.end() && it->first == a) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.exps_.begin();
  auto j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      r.exps_.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      r.exps_.push_back(*j++);
    } else {
      const int e = i->second + j->second;
      if (e != 0) r.exps_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [a, e] : m.exponents()) {
    if (!s.empty()) s += "*";
    s += variable_text(a, e);
  }
  return s;
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return term(Monomial{}, c); }

LaurentPoly LaurentPoly::variable(const Arc& a) {
  return term(Monomial{SplitK0Class::of(a)}, 1);
}

LaurentPoly LaurentPoly::monomial(const SplitK0Class& alpha) { return term(Monomial{alpha}, 1); }

LaurentPoly LaurentPoly::term(const Monomial& m, const BigInt& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, BigInt(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r += LaurentPoly::term(ma * mb, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::div_exact_variable(const Arc& t) const {
  const Monomial inv{SplitK0Class::of(t, -1)};
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * inv, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_unit(const std::set<Arc>& units) const {
  return substitute_unit_if([&](const Arc& a) { return units.count(a) > 0; });
}

LaurentPoly LaurentPoly::substitute_unit_if(const std::function<bool(const Arc&)>& is_unit) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    SplitK0Class kept;
    for (const auto& [a, e] : m.exponents()) {
      if (!is_unit(a)) kept.add(a, e);
    }
    r += term(Monomial{kept}, c);
  }
  return r;
}

BigInt LaurentPoly::eval_all_ones() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::set<Arc> LaurentPoly::variables() const {
  std::set<Arc> vs;
  for (const auto& [m, c] : terms_) {
    for (const auto& [a, e] : m.exponents()) vs.insert(a);
  }
  return vs;
}

Monomial LaurentPoly::denominator() const {
  std::map<Arc, int> low;
  for (const auto& [m, c] : terms_) {
    for (const auto& [a, e] : m.exponents()) low.try_emplace(a, 0);
  }
  for (auto& [a, e] : low) {
    for (const auto& [m, c] : terms_) e = std::min(e, m.exponent(a));
  }
  SplitK0Class den;
  for (const auto& [a, e] : low) {
    if (e < 0) den.add(a, -e);
  }
  return Monomial{den};
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  const Monomial den = denominator();
  SplitK0Class den_class;
  for (const auto& [a, e] : den.exponents()) den_class.add(a, e);
  const Monomial lift{den_class};

  std::vector<std::pair<Monomial, BigInt>> num;
  for (const auto& [m, c] : terms_) num.emplace_back(m * lift, c);
  std::stable_sort(num.begin(), num.end(), [](const auto& x, const auto& y) {
    const int dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first < y.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : num) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << to_string(m);
    }
    first = false;
  }
  std::string numerator = os.str();
  if (den.is_one()) return numerator;
  if (num.size() > 1) numerator = "(" + numerator + ")";
  std::string d = to_string(den);
  if (den.exponents().size() > 1) d = "(" + d + ")";
  return numerator + "/" + d;
}

}  // namespace infcc
