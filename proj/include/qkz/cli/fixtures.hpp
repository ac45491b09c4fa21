#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qkz/algebra/polynomial.hpp"
#include "qkz/algebra/variables.hpp"
#include "qkz/combinatorics/tableau.hpp"
#include "qkz/rmatrix/rf_matrix.hpp"

namespace qkz::cli {

using algebra::Polynomial;
using combinatorics::Tableau;

/// Data directory: explicit override, else $QKZ_DATA_DIR, else the source
/// tree's data/ directory.
std::filesystem::path data_dir(const std::optional<std::filesystem::path> &override = {});

/// Rewrite the LaTeX spellings used in the fixtures (\hbar, \frac{}{}, z_{1},
/// \check, spacing commands) into parser input.
std::string latex_to_plain(std::string_view text);
/// "\tableau{1&2\\1&2}" or "1&2\\1&2"
Tableau parse_tableau(std::string_view text);

struct ComponentFixture {
  Tableau label;
  std::vector<std::string> constraints; // each "= 0"
};

struct DeformedComponentFixture {
  std::vector<std::vector<int>> alpha;
  std::vector<std::string> quadrics;
  std::vector<Tableau> limit;
};

/// The worked example: k = 4, m = (2,2,2,2).
struct AppendixFixture {
  std::vector<Tableau> tableaux;
  std::vector<Polynomial> psi; // in VariableSet::spectral(4)
  rmatrix::RFMatrix r13, r2;   // in rmatrix::spectral_context()
  std::vector<std::vector<int>> rho;
  Polynomial shift; // in VariableSet::spectral(4)
  std::vector<std::string> equations, deformed;
  std::vector<ComponentFixture> components;
  DeformedComponentFixture deformed_component;
};

AppendixFixture load_appendix(const std::filesystem::path &dir);
/// Components of the k = 2, m = (1,1,1,1) slice.
std::vector<ComponentFixture> load_components(const std::filesystem::path &file);

} // namespace qkz::cli
