#include "qkz/algebra/rational_function.hpp"

#include <algorithm>

namespace qkz::algebra {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(Polynomial num, std::vector<LinearForm> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto &f : den_) {
    if (f.is_pure() ? f.hb2 != 1 : f.i >= f.j)
      throw PreconditionError("denominator form not in canonical sign");
    if (!f.is_pure() && std::size_t(f.j) + 1 >= num_.nvars())
      throw ContextError("denominator form outside context");
  }
  std::sort(den_.begin(), den_.end());
  reduce();
}

RationalFunction RationalFunction::fraction(const Polynomial &num,
                                            const Polynomial &den) {
  require_same_context(num, den);
  auto f = factor_linear(den);
  if (!f)
    throw PreconditionError("denominator is not a product of linear forms");
  return RationalFunction(num * (1 / f->constant), std::move(f->forms));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<LinearForm> kept;
  kept.reserve(den_.size());
  for (std::size_t a = 0; a < den_.size();) {
    std::size_t b = a;
    while (b < den_.size() && den_[b] == den_[a])
      ++b;
    std::size_t mult = b - a;
    while (mult > 0) {
      auto q = try_divide(num_, den_[a]);
      if (!q)
        break;
      num_ = std::move(*q);
      --mult;
    }
    kept.insert(kept.end(), mult, den_[a]);
    a = b;
  }
  den_ = std::move(kept);
}

Polynomial RationalFunction::denominator_polynomial() const {
  Polynomial d = Polynomial::constant(nvars(), 1);
  for (const auto &f : den_)
    d *= f.to_polynomial(nvars());
  return d;
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
  if (!den_.empty())
    return std::nullopt;
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// Multiset difference big \ small (both sorted).
std::vector<LinearForm> missing(const std::vector<LinearForm> &big,
                                const std::vector<LinearForm> &small) {
  std::vector<LinearForm> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                      std::back_inserter(out));
  return out;
}

Polynomial product(const std::vector<LinearForm> &forms, std::size_t nvars) {
  Polynomial p = Polynomial::constant(nvars, 1);
  for (const auto &f : forms)
    p *= f.to_polynomial(nvars);
  return p;
}

RationalFunction combine(const RationalFunction &a, const RationalFunction &b,
                         bool subtract) {
  require_same_context(a.numerator(), b.numerator());
  std::vector<LinearForm> lcm;
  std::set_union(a.denominator().begin(), a.denominator().end(),
                 b.denominator().begin(), b.denominator().end(),
                 std::back_inserter(lcm));
  std::size_t n = a.nvars();
  Polynomial na = a.numerator() * product(missing(lcm, a.denominator()), n);
  Polynomial nb = b.numerator() * product(missing(lcm, b.denominator()), n);
  if (subtract)
    na -= nb;
  else
    na += nb;
  return RationalFunction(std::move(na), std::move(lcm));
}

} // namespace

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  return combine(a, b, false);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return -b;
  return combine(a, b, true);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
  require_same_context(a.num_, b.num_);
  if (a.is_zero() || b.is_zero())
    return RationalFunction(Polynomial(a.nvars()));
  if (a.den_.empty() && b.num_.is_constant())
    return RationalFunction(a.num_ * b.num_, b.den_);
  std::vector<LinearForm> den;
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(),
             std::back_inserter(den));
  return RationalFunction(a.num_ * b.num_, std::move(den));
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
  return a * b.inverse();
}

bool operator==(const RationalFunction &a, const RationalFunction &b) {
  if (a.nvars() != b.nvars())
    return false;
  if (a.den_ == b.den_)
    return a.num_ == b.num_;
  return a.num_ * b.denominator_polynomial() == b.num_ * a.denominator_polynomial();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero())
    throw PreconditionError("inverse of the zero rational function");
  auto f = factor_linear(num_);
  if (!f)
    throw PreconditionError("numerator is not a product of linear forms");
  return RationalFunction(denominator_polynomial() * (1 / f->constant),
                          std::move(f->forms));
}

RationalFunction RationalFunction::swap(std::size_t i, std::size_t j) const {
  std::vector<std::optional<Polynomial>> images(nvars());
  images[i] = Polynomial::variable(nvars(), j);
  images[j] = Polynomial::variable(nvars(), i);
  return substitute(images, nvars());
}

RationalFunction
RationalFunction::substitute(std::span<const std::optional<Polynomial>> images,
                             std::size_t target_nvars) const {
  Polynomial num = num_.substitute(images, target_nvars);
  std::vector<LinearForm> den;
  Rational scale = 1;
  for (const auto &f : den_) {
    Polynomial img = f.to_polynomial(nvars()).substitute(images, target_nvars);
    if (img.is_zero())
      throw PreconditionError("substitution makes a denominator vanish: " + f.str());
    if (img.is_constant()) {
      scale /= img.constant_term();
      continue;
    }
    auto sf = as_linear_form(img);
    if (!sf)
      throw PreconditionError("substituted denominator is not a linear form");
    scale /= sf->scale;
    den.push_back(sf->form);
  }
  num *= scale;
  return RationalFunction(std::move(num), std::move(den));
}

} // namespace qkz::algebra
