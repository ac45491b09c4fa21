#include "qkz/algebra/univariate.hpp"

#include <algorithm>
#include <set>

namespace qkz::algebra {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

UPoly operator+(const UPoly &a, const UPoly &b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }

UPoly operator*(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly &d) const {
  if (d.is_zero())
    throw PreconditionError("univariate division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  if (degree() < dd)
    return {UPoly(), *this};
  std::vector<Rational> q(std::size_t(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    if (r[std::size_t(i)] == 0)
      continue;
    Rational f = r[std::size_t(i)] / d.leading();
    q[std::size_t(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[std::size_t(i - dd + j)] -= f * d.c_[std::size_t(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero())
    return *this;
  UPoly r = *this;
  Rational l = leading();
  for (auto &c : r.c_)
    c /= l;
  return r;
}

Rational UPoly::eval(const Rational &x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n)
        large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero())
    throw PreconditionError("roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (c_[low] == 0)
    ++low;
  if (low > 0)
    roots.push_back(0);
  // integer coefficients of the part without the root at zero
  Integer l = 1;
  for (std::size_t i = low; i < c_.size(); ++i)
    l = lcm(l, c_[i].get_den());
  std::vector<Integer> ic;
  for (std::size_t i = low; i < c_.size(); ++i)
    ic.push_back(Integer(c_[i] * l));
  if (ic.size() == 1)
    return roots;
  UPoly reduced(std::vector<Rational>(c_.begin() + long(low), c_.end()));
  std::set<Rational> found;
  for (const auto &p : positive_divisors(ic.front()))
    for (const auto &q : positive_divisors(ic.back()))
      for (int s : {1, -1}) {
        Rational r(p * s, q);
        r.canonicalize();
        if (!found.count(r) && reduced.eval(r) == 0)
          found.insert(r);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

URatFun::URatFun(UPoly num, UPoly den) {
  if (den.is_zero())
    throw PreconditionError("rational function with zero denominator");
  UPoly g = gcd(num, den);
  num_ = num.divmod(g).first;
  den_ = den.divmod(g).first;
  Rational l = den_.leading();
  num_ = num_ * UPoly::constant(1 / l);
  den_ = den_.monic();
  if (num_.is_zero())
    den_ = UPoly::constant(1);
}

URatFun operator+(const URatFun &a, const URatFun &b) {
  return URatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

URatFun operator-(const URatFun &a, const URatFun &b) {
  return URatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

URatFun operator*(const URatFun &a, const URatFun &b) {
  return URatFun(a.num_ * b.num_, a.den_ * b.den_);
}

URatFun operator/(const URatFun &a, const URatFun &b) {
  if (b.is_zero())
    throw PreconditionError("division by the zero rational function");
  return URatFun(a.num_ * b.den_, a.den_ * b.num_);
}

UPoly to_univariate(const Polynomial &p, std::size_t var) {
  std::vector<Rational> c(std::size_t(std::max(p.degree_in(var), 0)) + 1);
  for (const auto &t : p.terms()) {
    if (t.mono.degree() != t.mono[var])
      throw PreconditionError("polynomial is not univariate in the given variable");
    c[t.mono[var]] += t.coeff;
  }
  return UPoly(std::move(c));
}

} // namespace qkz::algebra
