#include "qkz/cli/fixtures.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"
#include "qkz/rmatrix/rcheck.hpp"

#ifndef QKZ_DEFAULT_DATA_DIR
#define QKZ_DEFAULT_DATA_DIR "data"
#endif

namespace qkz::cli {

namespace fs = std::filesystem;

fs::path data_dir(const std::optional<fs::path> &override) {
  if (override)
    return *override;
  if (const char *env = std::getenv("QKZ_DATA_DIR"); env && *env)
    return env;
  return QKZ_DEFAULT_DATA_DIR;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// Content lines: comments and blanks dropped.
std::vector<std::string> read_lines(const fs::path &file) {
  std::ifstream in(file);
  if (!in)
    throw PreconditionError("cannot open fixture " + file.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] != '#')
      out.push_back(t);
  }
  return out;
}

// Text of the brace group starting at s[pos] == '{'; pos moves past it.
std::string brace_group(std::string_view s, std::size_t &pos) {
  if (pos >= s.size() || s[pos] != '{')
    throw PreconditionError("expected '{' in fixture text: " + std::string(s));
  int depth = 0;
  std::size_t start = pos + 1;
  for (; pos < s.size(); ++pos) {
    if (s[pos] == '{')
      ++depth;
    else if (s[pos] == '}' && --depth == 0)
      return std::string(s.substr(start, pos++ - start));
  }
  throw PreconditionError("unbalanced braces in fixture text: " + std::string(s));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? at : at - start)));
    if (at == std::string_view::npos)
      return out;
    start = at + sep.size();
  }
}

// "lhs = rhs = ... = 0" -> the left-hand sides.
std::vector<std::string> zero_sides(std::string_view s) {
  auto parts = split(s, "=");
  if (parts.size() < 2 || parts.back() != "0")
    throw PreconditionError("expected a relation '... = 0': " + std::string(s));
  parts.pop_back();
  return parts;
}

std::vector<std::vector<int>> integer_rows(std::string_view s) {
  std::vector<std::vector<int>> rows;
  for (const auto &r : split(s, "\\\\")) {
    if (r.empty())
      continue;
    std::vector<int> row;
    for (const auto &x : split(r, "&"))
      row.push_back(std::stoi(x));
    rows.push_back(row);
  }
  return rows;
}

} // namespace

std::string latex_to_plain(std::string_view s) {
  std::string out;
  for (std::size_t pos = 0; pos < s.size();) {
    if (s[pos] == '\\') {
      std::size_t end = pos + 1;
      while (end < s.size() && std::isalpha(static_cast<unsigned char>(s[end])))
        ++end;
      std::string cmd(s.substr(pos + 1, end - pos - 1));
      pos = end;
      if (cmd == "hbar") {
        out += " hb ";
      } else if (cmd == "frac") {
        std::string num = brace_group(s, pos), den = brace_group(s, pos);
        out += "((" + latex_to_plain(num) + ")/(" + latex_to_plain(den) + "))";
      } else if (cmd == "check" || cmd == "left" || cmd == "right") {
      } else if (cmd.empty()) {
        // "\," "\;" and similar spacing
        if (pos < s.size())
          ++pos;
        out += ' ';
      } else {
        throw PreconditionError("unsupported command \\" + cmd + " in fixture text");
      }
      continue;
    }
    if ((s[pos] == 'z' || s[pos] == 't' || s[pos] == 'e') && pos + 1 < s.size() &&
        s[pos + 1] == '_') {
      out += s[pos];
      pos += 2;
      if (pos < s.size() && s[pos] == '{') {
        out += brace_group(s, pos);
      } else {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          out += s[pos++];
      }
      out += ' ';
      continue;
    }
    out += s[pos++];
  }
  return out;
}

Tableau parse_tableau(std::string_view text) {
  std::string t = trim(text);
  if (starts_with(t, "\\tableau")) {
    std::size_t pos = std::string("\\tableau").size();
    t = brace_group(t, pos);
  }
  auto rows = integer_rows(t);
  if (rows.empty())
    throw PreconditionError("empty tableau");
  return Tableau(rows);
}

namespace {

// Leading "\tableau{...}" of a line and the rest after `sep`.
std::pair<Tableau, std::string> labelled(const std::string &line, char sep) {
  if (!starts_with(line, "\\tableau"))
    throw PreconditionError("expected a tableau label: " + line);
  std::size_t pos = std::string("\\tableau").size();
  Tableau label = parse_tableau(brace_group(line, pos));
  std::string rest = trim(std::string_view(line).substr(pos));
  if (rest.empty() || rest[0] != sep)
    throw PreconditionError(std::string("expected '") + sep + "' after the label: " + line);
  return {label, trim(rest.substr(1))};
}

rmatrix::RFMatrix parse_rows(const std::vector<std::string> &rows) {
  const auto &vs = rmatrix::spectral_context();
  algebra::SymbolTable sym{{"z", vs.z(1) - vs.z(2)}};
  rmatrix::RFMatrix r(rows.size(), rows.size(), vs.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string row = rows[i];
    if (auto at = row.rfind("\\\\"); at != std::string::npos)
      row = row.substr(0, at);
    auto cells = split(row, "&");
    if (cells.size() != rows.size())
      throw PreconditionError("R-matrix row has the wrong length: " + rows[i]);
    for (std::size_t j = 0; j < cells.size(); ++j)
      r.set(i, j, algebra::parse_rational(latex_to_plain(cells[j]), vs, sym));
  }
  return r;
}

} // namespace

std::vector<ComponentFixture> load_components(const fs::path &file) {
  std::vector<ComponentFixture> out;
  for (const auto &line : read_lines(file)) {
    auto [label, rest] = labelled(line, ':');
    out.push_back({label, zero_sides(rest)});
  }
  return out;
}

AppendixFixture load_appendix(const fs::path &dir) {
  AppendixFixture fx;
  const auto vs4 = algebra::VariableSet::spectral(4);

  for (const auto &line : read_lines(dir / "psi.txt")) {
    auto [label, rest] = labelled(line, '=');
    fx.tableaux.push_back(label);
    fx.psi.push_back(algebra::parse_polynomial(latex_to_plain(rest), vs4));
  }

  auto rlines = read_lines(dir / "rmatrix.txt");
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> heads;
  for (const auto &l : rlines) {
    if (starts_with(l, "\\check")) {
      heads.push_back(l);
      blocks.emplace_back();
    } else if (!blocks.empty()) {
      blocks.back().push_back(l);
    }
  }
  if (blocks.size() != 2 || heads[0].find("R_3") == std::string::npos)
    throw PreconditionError("rmatrix fixture must give R_1 = R_3, then R_2");
  fx.r13 = parse_rows(blocks[0]);
  fx.r2 = parse_rows(blocks[1]);

  for (const auto &l : read_lines(dir / "rho.txt")) {
    if (starts_with(l, "shift")) {
      fx.shift = algebra::parse_polynomial(latex_to_plain(split(l, "=").at(1)), vs4);
    } else {
      auto rows = integer_rows(l);
      fx.rho.insert(fx.rho.end(), rows.begin(), rows.end());
    }
  }

  for (const auto &l : read_lines(dir / "equations.txt"))
    fx.equations.push_back(zero_sides(l).at(0));
  for (const auto &l : read_lines(dir / "deformed.txt"))
    fx.deformed.push_back(latex_to_plain(zero_sides(l).at(0)));
  fx.components = load_components(dir / "components.txt");
  for (auto &c : fx.components)
    for (auto &s : c.constraints)
      s = latex_to_plain(s);

  for (const auto &l : read_lines(dir / "deformed_component.txt")) {
    if (starts_with(l, "\\alpha")) {
      std::string body = l.substr(l.find('(') + 1);
      body = body.substr(0, body.rfind(')'));
      for (const auto &part : split(body, "\\},")) {
        std::vector<int> s;
        std::string inner = part;
        for (char &c : inner)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            c = ' ';
        std::istringstream is(inner);
        for (int x; is >> x;)
          s.push_back(x);
        fx.deformed_component.alpha.push_back(s);
      }
    } else if (starts_with(l, "A_{i,i}") || starts_with(l, "B_{i,i}")) {
      // diagonal entries: sum and minus product of t_a over alpha_i
      const bool ok = l == "A_{i,i}=\\sum_{a\\in\\alpha_i} t_a" ||
                      l == "B_{i,i}=-\\prod_{a\\in\\alpha_i} t_a";
      if (!ok)
        throw PreconditionError("unrecognized diagonal constraint: " + l);
    } else if (starts_with(l, "limit:")) {
      std::string rest = l.substr(6);
      std::size_t pos = 0;
      while ((pos = rest.find("\\tableau", pos)) != std::string::npos) {
        pos += std::string("\\tableau").size();
        fx.deformed_component.limit.push_back(parse_tableau(brace_group(rest, pos)));
      }
    } else {
      fx.deformed_component.quadrics.push_back(latex_to_plain(zero_sides(l).at(0)));
    }
  }
  return fx;
}

} // namespace qkz::cli
