#include "qkz/algebra/io.hpp"

#include <cctype>
#include <sstream>

namespace qkz::algebra {

namespace {

bool is_hbar(const VariableSet &vars, std::size_t v) {
  return vars.has_hbar() && vars.hbar_index() == v;
}

Rational hbar_scaled(const VariableSet &vars, const Polynomial::Term &t) {
  if (!vars.has_hbar())
    return t.coeff;
  Rational c = t.coeff;
  unsigned e = t.mono[vars.hbar_index()];
  mpz_class two_e = 1;
  two_e <<= e;
  c /= two_e;
  return c;
}

} // namespace

std::string to_text(const Polynomial &p, const VariableSet &vars) {
  if (p.nvars() != vars.size())
    throw ContextError("variable set does not match polynomial");
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : p.terms()) {
    Rational c = hbar_scaled(vars, t);
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = t.mono.degree() > 0 && c == 1;
    if (!unit)
      os << c.get_str();
    bool need_star = !unit;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0)
        continue;
      if (need_star)
        os << "*";
      need_star = true;
      os << (is_hbar(vars, v) ? std::string("hb") : vars.name(v));
      if (e > 1)
        os << "^" << e;
    }
  }
  return os.str();
}

std::string to_text(const RationalFunction &f, const VariableSet &vars) {
  std::string num = to_text(f.numerator(), vars);
  if (f.is_polynomial())
    return num;
  std::ostringstream os;
  os << "(" << num << ")/(";
  for (std::size_t a = 0; a < f.denominator().size(); ++a) {
    const auto &form = f.denominator()[a];
    if (a > 0)
      os << "*";
    os << "(" << to_text(form.to_polynomial(vars.size()), vars) << ")";
  }
  os << ")";
  return os.str();
}

nlohmann::json to_json(const Polynomial &p, const VariableSet &vars) {
  if (p.nvars() != vars.size())
    throw ContextError("variable set does not match polynomial");
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &t : p.terms()) {
    Rational c = hbar_scaled(vars, t);
    nlohmann::json row = nlohmann::json::array();
    row.push_back(c.get_num().get_str());
    row.push_back(c.get_den().get_str());
    for (std::size_t v = 0; v < p.nvars(); ++v)
      row.push_back(t.mono[v]);
    terms.push_back(std::move(row));
  }
  std::size_t nz = vars.has_hbar() ? vars.spectral_count() : vars.size();
  return {{"vars", nz}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json &j, const VariableSet &vars) {
  std::size_t nz = vars.has_hbar() ? vars.spectral_count() : vars.size();
  if (j.at("vars").get<std::size_t>() != nz)
    throw ParseError("polynomial JSON has wrong variable count");
  std::vector<Polynomial::Term> terms;
  for (const auto &row : j.at("terms")) {
    if (row.size() != vars.size() + 2)
      throw ParseError("polynomial JSON term has wrong length");
    Rational c(Integer(row[0].get<std::string>()), Integer(row[1].get<std::string>()));
    c.canonicalize();
    Monomial m(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v)
      m.set(v, row[v + 2].get<unsigned>());
    if (vars.has_hbar()) {
      mpz_class two_e = 1;
      two_e <<= m[vars.hbar_index()];
      c *= two_e;
    }
    terms.push_back({std::move(m), c});
  }
  return Polynomial::from_terms(vars.size(), std::move(terms));
}

nlohmann::json to_json(const RationalFunction &f, const VariableSet &vars) {
  nlohmann::json den = nlohmann::json::array();
  for (const auto &form : f.denominator()) {
    Rational a(form.hb2, 2);
    a.canonicalize();
    nlohmann::json e = {{"hb", a.get_str()}};
    if (!form.is_pure()) {
      e["i"] = form.i + 1;
      e["j"] = form.j + 1;
    }
    den.push_back(std::move(e));
  }
  return {{"num", to_json(f.numerator(), vars)}, {"den", std::move(den)}};
}

RationalFunction rational_from_json(const nlohmann::json &j, const VariableSet &vars) {
  Polynomial num = polynomial_from_json(j.at("num"), vars);
  Polynomial den = Polynomial::constant(vars.size(), 1);
  for (const auto &e : j.at("den")) {
    Rational a(e.at("hb").get<std::string>());
    a.canonicalize();
    Polynomial f = vars.hbar() * a;
    if (e.contains("i")) {
      f += vars.z(e.at("i").get<std::size_t>());
      f -= vars.z(e.at("j").get<std::size_t>());
    }
    den *= f;
  }
  return RationalFunction::fraction(num, den);
}

namespace {

struct Fraction {
  Polynomial num, den;
};

class Parser {
public:
  Parser(std::string_view text, const VariableSet &vars, const SymbolTable &symbols)
      : s_(text), vars_(vars), symbols_(symbols) {}

  Fraction run() {
    Fraction f = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected character");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial one() const { return Polynomial::constant(vars_.size(), 1); }

  static Fraction add(const Fraction &a, const Fraction &b, bool sub) {
    if (a.den == b.den)
      return {sub ? a.num - b.num : a.num + b.num, a.den};
    Polynomial n1 = a.num * b.den, n2 = b.num * a.den;
    return {sub ? n1 - n2 : n1 + n2, a.den * b.den};
  }

  Fraction expr() {
    Fraction acc;
    if (peek() == '-') {
      ++pos_;
      Fraction t = term();
      acc = {-t.num, t.den};
    } else {
      if (peek() == '+')
        ++pos_;
      acc = term();
    }
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-')
        return acc;
      ++pos_;
      acc = add(acc, term(), c == '-');
    }
  }

  bool starts_atom(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Fraction term() {
    Fraction acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        Fraction f = power();
        acc = {acc.num * f.num, acc.den * f.den};
      } else if (c == '/') {
        ++pos_;
        Fraction f = power();
        if (f.num.is_zero())
          fail("division by zero");
        acc = {acc.num * f.den, acc.den * f.num};
      } else if (starts_atom(c)) {
        Fraction f = power();
        acc = {acc.num * f.num, acc.den * f.den};
      } else {
        return acc;
      }
    }
  }

  Fraction power() {
    Fraction base = atom();
    if (peek() != '^')
      return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected exponent");
    unsigned e = unsigned(std::stoul(std::string(s_.substr(start, pos_ - start))));
    return {base.num.pow(e), base.den.pow(e)};
  }

  Fraction atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Fraction f = expr();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      return f;
    }
    if (c == '-') {
      ++pos_;
      Fraction f = power();
      return {-f.num, f.den};
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)));
      return {Polynomial::constant(vars_.size(), Rational(n)), one()};
    }
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected a term");
    std::string_view name = s_.substr(start, pos_ - start);
    if (auto it = symbols_.find(name); it != symbols_.end())
      return {it->second, one()};
    if (name == "hb" && vars_.has_hbar())
      return {vars_.hbar(), one()};
    if (auto idx = vars_.find(std::string(name)); idx && !(vars_.has_hbar() && *idx == vars_.hbar_index()))
      return {vars_.var(*idx), one()};
    pos_ = start;
    fail("unknown symbol '" + std::string(name) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const VariableSet &vars_;
  const SymbolTable &symbols_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VariableSet &vars,
                            const SymbolTable &symbols) {
  Fraction f = Parser(text, vars, symbols).run();
  if (!f.den.is_constant())
    throw ParseError("expected a polynomial: '" + std::string(text) + "'");
  return f.num * (1 / f.den.constant_term());
}

RationalFunction parse_rational(std::string_view text, const VariableSet &vars,
                                const SymbolTable &symbols) {
  Fraction f = Parser(text, vars, symbols).run();
  try {
    return RationalFunction::fraction(f.num, f.den);
  } catch (const PreconditionError &e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

} // namespace qkz::algebra
