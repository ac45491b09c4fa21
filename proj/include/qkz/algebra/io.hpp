#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qkz/algebra/polynomial.hpp"
#include "qkz/algebra/rational_function.hpp"
#include "qkz/algebra/variables.hpp"

namespace qkz::algebra {

/// Canonical text: terms in graded-lex order, coefficients "num/den", the
/// unit variable shown as hb (hbar) with its coefficient rescaled.
std::string to_text(const Polynomial &p, const VariableSet &vars);
std::string to_text(const RationalFunction &f, const VariableSet &vars);

/// {"vars": N, "terms": [[num, den, e_1..e_N, e_hb], ...]} with
/// coefficients taken with respect to hbar monomials.
nlohmann::json to_json(const Polynomial &p, const VariableSet &vars);
Polynomial polynomial_from_json(const nlohmann::json &j, const VariableSet &vars);

/// {"num": <polynomial>, "den": [{"hb": "a", "i": i, "j": j}, ...]}
nlohmann::json to_json(const RationalFunction &f, const VariableSet &vars);
RationalFunction rational_from_json(const nlohmann::json &j, const VariableSet &vars);

/// Extra names bound to polynomials, e.g. "z" for z1 - z2.
using SymbolTable = std::map<std::string, Polynomial, std::less<>>;

/// Parse arithmetic over the context's variable names, "hb" (hbar), integers,
/// + - * / ^ and parentheses; juxtaposition multiplies.
Polynomial parse_polynomial(std::string_view text, const VariableSet &vars,
                            const SymbolTable &symbols = {});
/// As above; denominators must be products of linear forms.
RationalFunction parse_rational(std::string_view text, const VariableSet &vars,
                                const SymbolTable &symbols = {});

} // namespace qkz::algebra
