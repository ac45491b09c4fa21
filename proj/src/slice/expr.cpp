#include "qkz/slice/expr.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qkz/algebra/errors.hpp"

namespace qkz::slice {

namespace {

class Parser {
public:
  Parser(std::string_view text, const SliceModel &model) : s_(text), model_(model) {
    nv_ = model.vars().size();
    n_ = std::all_of(model.m().begin(), model.m().end(), [](int x) { return x == 2; })
             ? model.N()
             : model.M();
  }

  ExprValue run() {
    ExprValue v = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw PreconditionError("matrix expression: " + what + " at position " +
                            std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  // "_3", "3", "_{3}"
  int subscript_index() {
    if (eat('_')) {
      if (eat('{')) {
        int v = integer();
        expect('}');
        return v;
      }
    }
    return integer();
  }

  Polynomial scalar(long c) const { return Polynomial::constant(nv_, c); }

  ExprValue to_matrix_if(const ExprValue &a, bool matrix) const {
    if (!matrix || std::holds_alternative<PolyMatrix>(a))
      return a;
    PolyMatrix I = identity_matrix(n_, nv_);
    for (std::size_t i = 0; i < n_; ++i)
      I[i][i] = std::get<Polynomial>(a);
    return I;
  }

  ExprValue add(const ExprValue &a, const ExprValue &b, bool subtract) const {
    bool matrix = std::holds_alternative<PolyMatrix>(a) || std::holds_alternative<PolyMatrix>(b);
    ExprValue x = to_matrix_if(a, matrix), y = to_matrix_if(b, matrix);
    if (!matrix)
      return subtract ? std::get<Polynomial>(x) - std::get<Polynomial>(y)
                      : std::get<Polynomial>(x) + std::get<Polynomial>(y);
    PolyMatrix out = std::get<PolyMatrix>(x);
    const PolyMatrix &o = std::get<PolyMatrix>(y);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out[i][j] = subtract ? out[i][j] - o[i][j] : out[i][j] + o[i][j];
    return out;
  }

  ExprValue mul(const ExprValue &a, const ExprValue &b) const {
    if (std::holds_alternative<Polynomial>(a) && std::holds_alternative<Polynomial>(b))
      return std::get<Polynomial>(a) * std::get<Polynomial>(b);
    if (std::holds_alternative<PolyMatrix>(a) && std::holds_alternative<PolyMatrix>(b))
      return matmul(std::get<PolyMatrix>(a), std::get<PolyMatrix>(b));
    const Polynomial &c = std::holds_alternative<Polynomial>(a) ? std::get<Polynomial>(a)
                                                                : std::get<Polynomial>(b);
    PolyMatrix out = std::holds_alternative<PolyMatrix>(a) ? std::get<PolyMatrix>(a)
                                                           : std::get<PolyMatrix>(b);
    for (auto &row : out)
      for (auto &x : row)
        x *= c;
    return out;
  }

  ExprValue expr() {
    ExprValue v = term();
    for (;;) {
      if (eat('+'))
        v = add(v, term(), false);
      else if (eat('-'))
        v = add(v, term(), true);
      else
        return v;
    }
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  ExprValue term() {
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      if (eat('-'))
        negate = !negate;
      else
        eat('+');
    }
    ExprValue v = factor();
    while (starts_factor() || peek() == '*') {
      eat('*');
      v = mul(v, factor());
    }
    return negate ? mul(scalar(-1), v) : v;
  }

  ExprValue entry(const ExprValue &v) {
    if (!std::holds_alternative<PolyMatrix>(v))
      fail("entry of a scalar");
    expect('{');
    int i = integer();
    expect(',');
    int j = integer();
    expect('}');
    if (i < 1 || j < 1 || std::size_t(i) > n_ || std::size_t(j) > n_)
      fail("entry index out of range");
    return std::get<PolyMatrix>(v)[std::size_t(i - 1)][std::size_t(j - 1)];
  }

  ExprValue factor() {
    ExprValue v = primary();
    for (;;) {
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '_' && s_[pos_ + 1] == '{') {
        ++pos_;
        v = entry(v);
      } else if (eat('^')) {
        int e;
        if (eat('{')) {
          e = integer();
          expect('}');
        } else {
          e = integer();
        }
        if (std::holds_alternative<PolyMatrix>(v))
          v = matpow(std::get<PolyMatrix>(v), unsigned(e));
        else
          v = std::get<Polynomial>(v).pow(unsigned(e));
      } else {
        return v;
      }
    }
  }

  ExprValue primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprValue v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return scalar(integer());
    ++pos_;
    const bool pairs = n_ == model_.N() && model_.N() != model_.M();
    switch (c) {
    case 'A':
    case 'B':
      if (!pairs)
        fail("A and B need every block of size 2");
      return model_.column_matrix(c == 'A' ? 2 : 1);
    case 'X':
      return model_.matrix();
    case 't':
      return model_.t(subscript_index());
    case 'e':
      return model_.e(subscript_index());
    default:
      --pos_;
      fail("unknown symbol");
    }
  }

  std::string_view s_;
  const SliceModel &model_;
  std::size_t pos_ = 0, nv_ = 0, n_ = 0;
};

} // namespace

ExprValue parse_matrix_expression(std::string_view text, const SliceModel &model) {
  return Parser(text, model).run();
}

Polynomial parse_scalar_expression(std::string_view text, const SliceModel &model) {
  ExprValue v = parse_matrix_expression(text, model);
  if (!std::holds_alternative<Polynomial>(v))
    throw PreconditionError("expected a scalar expression: " + std::string(text));
  return std::get<Polynomial>(v);
}

PolyMatrix parse_matrix(std::string_view text, const SliceModel &model) {
  ExprValue v = parse_matrix_expression(text, model);
  if (!std::holds_alternative<PolyMatrix>(v))
    throw PreconditionError("expected a matrix expression: " + std::string(text));
  return std::get<PolyMatrix>(v);
}

} // namespace qkz::slice
