#include "qkz/algebra/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qkz::algebra {

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255)
    throw std::overflow_error("monomial exponent exceeds 255");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 255)
      throw std::overflow_error("monomial exponent exceeds 255");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial &other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
  if (a.degree_ != b.degree_)
    return a.degree_ <=> b.degree_;
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                b.exps_.begin(), b.exps_.end());
}

void require_same_context(const Polynomial &a, const Polynomial &b) {
  if (a.nvars() != b.nvars())
    throw ContextError("polynomials over different variable sets (" +
                       std::to_string(a.nvars()) + " vs " +
                       std::to_string(b.nvars()) + " variables)");
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational &c) {
  Polynomial p(nvars);
  if (c != 0)
    p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw ContextError("variable index out of range");
  Polynomial p(nvars);
  Monomial m(nvars);
  m.set(index, 1);
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const auto &t : terms)
    if (t.mono.size() != nvars)
      throw ContextError("term has wrong number of exponents");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term &a, const Term &b) { return a.mono > b.mono; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto &t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term &t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0)
    return terms_.back().coeff;
  return 0;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : int(terms_.front().mono.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto &t : terms_)
    d = std::max(d, int(t.mono[var]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() ||
         terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
  if (weights.size() != nvars_)
    throw ContextError("weight vector has wrong length");
  std::optional<long> w0;
  for (const auto &t : terms_) {
    long w = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      w += long(weights[i]) * t.mono[i];
    if (w0 && *w0 != w)
      return false;
    w0 = w;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto &t : out.terms_)
    t.coeff = -t.coeff;
  return out;
}

namespace {

template <class Combine>
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term> &a,
                                          const std::vector<Polynomial::Term> &b,
                                          Combine combine) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, combine(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational c = combine(a[i].coeff, b[j].coeff);
      if (c != 0)
        out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  require_same_context(*this, other);
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Rational &x, const Rational &y) { return Rational(x + y); });
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  require_same_context(*this, other);
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Rational &x, const Rational &y) { return Rational(x - y); });
  return *this;
}

namespace {

// mpq multiplication canonicalizes through gcds; integers skip that
void mul_into(Rational &out, const Rational &a, const Rational &b) {
  if (mpz_cmp_ui(a.get_den_mpz_t(), 1) == 0 && mpz_cmp_ui(b.get_den_mpz_t(), 1) == 0) {
    mpz_mul(out.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_set_ui(out.get_den_mpz_t(), 1);
  } else {
    out = a * b;
  }
}

} // namespace

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  require_same_context(a, b);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero())
    return out;
  // Multiplying by a monomial keeps graded-lex order, so each term of the
  // shorter factor contributes a sorted stream; merge them with a heap.
  const auto &s = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
  const auto &l = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
  if (s.size() == 1) {
    out.terms_.reserve(l.size());
    for (const auto &t : l) {
      out.terms_.push_back({t.mono * s[0].mono, Rational()});
      mul_into(out.terms_.back().coeff, t.coeff, s[0].coeff);
    }
    return out;
  }
  struct Head {
    Monomial mono;
    std::size_t row, col;
  };
  auto lower = [](const Head &x, const Head &y) { return x.mono < y.mono; };
  std::vector<Head> heap;
  heap.reserve(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    heap.push_back({s[r].mono * l[0].mono, r, 0});
  std::make_heap(heap.begin(), heap.end(), lower);
  out.terms_.reserve(l.size() * 2);
  Rational prod;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), lower);
    Head h = std::move(heap.back());
    heap.pop_back();
    if (!out.terms_.empty() && out.terms_.back().mono == h.mono) {
      mul_into(prod, s[h.row].coeff, l[h.col].coeff);
      out.terms_.back().coeff += prod;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0)
        out.terms_.pop_back();
      out.terms_.push_back({h.mono, Rational()});
      mul_into(out.terms_.back().coeff, s[h.row].coeff, l[h.col].coeff);
    }
    if (++h.col < l.size()) {
      h.mono = s[h.row].mono * l[h.col].mono;
      heap.push_back(std::move(h));
      std::push_heap(heap.begin(), heap.end(), lower);
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0)
    out.terms_.pop_back();
  return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
  if (other.terms_.size() == 1 && !terms_.empty()) {
    // a single term keeps the order, so multiply in place
    require_same_context(*this, other);
    const Term &u = other.terms_[0];
    for (auto &t : terms_) {
      t.mono = t.mono * u.mono;
      t.coeff *= u.coeff;
    }
    return *this;
  }
  *this = *this * other;
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    e >>= 1u;
    if (e)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::swap(std::size_t i, std::size_t j) const {
  if (i >= nvars_ || j >= nvars_)
    throw ContextError("swap index out of range");
  Polynomial out(*this);
  for (auto &t : out.terms_) {
    unsigned ei = t.mono[i], ej = t.mono[j];
    t.mono.set(i, ej);
    t.mono.set(j, ei);
  }
  out.normalize();
  return out;
}

Polynomial
Polynomial::substitute(std::span<const std::optional<Polynomial>> images,
                       std::size_t target_nvars) const {
  if (images.size() != nvars_)
    throw ContextError("substitution map has wrong length");
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (images[v] && images[v]->nvars() != target_nvars)
      throw ContextError("substitution image over the wrong context");
    if (!images[v] && target_nvars != nvars_)
      throw ContextError("identity substitution needs equal contexts");
  }
  // powers[v][e] = images[v]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial & {
    auto &cache = powers[v];
    if (cache.empty()) {
      cache.push_back(constant(target_nvars, 1));
      cache.push_back(images[v] ? *images[v] : variable(target_nvars, v));
    }
    while (cache.size() <= e)
      cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  Polynomial out(target_nvars);
  std::vector<Term> acc;
  for (const auto &t : terms_) {
    // variables kept as-is contribute a plain monomial factor
    Monomial kept(target_nvars);
    Polynomial prod = constant(target_nvars, t.coeff);
    for (std::size_t v = 0; v < nvars_; ++v) {
      unsigned e = t.mono[v];
      if (!e)
        continue;
      if (!images[v])
        kept.set(v, e);
      else
        prod *= power(v, e);
    }
    for (auto &pt : prod.terms_)
      acc.push_back({pt.mono * kept, std::move(pt.coeff)});
  }
  out.terms_ = std::move(acc);
  out.normalize();
  return out;
}

Polynomial
Polynomial::substitute(const std::map<std::size_t, Polynomial> &images) const {
  std::vector<std::optional<Polynomial>> v(nvars_);
  for (const auto &[k, p] : images) {
    if (k >= nvars_)
      throw ContextError("substitution variable out of range");
    if (p.nvars() != nvars_)
      throw ContextError("substitution image over the wrong context");
    v[k] = p;
  }
  return substitute(v, nvars_);
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(std::max(degree_in(var), 0) + 1, Polynomial(nvars_));
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto &t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  // terms sharing the exponent of var keep their relative order once it is cleared
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d].terms_ = std::move(buckets[d]);
  return out;
}

const Polynomial::Term &Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::make_primitive() {
  if (terms_.empty())
    return 1;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto &t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.front().coeff < 0)
    factor = -factor;
  *this *= factor;
  return factor;
}

std::size_t Polynomial::hash() const {
  std::size_t h = nvars_;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto &t : terms_) {
    for (auto e : t.mono.exponents())
      mix(e);
    mix(std::hash<std::string>{}(t.coeff.get_str()));
  }
  return h;
}

} // namespace qkz::algebra
