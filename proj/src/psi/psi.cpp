#include "qkz/psi/psi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"
#include "qkz/algebra/linear_form.hpp"

namespace qkz::psi {

using algebra::LinearForm;
using algebra::Rational;

std::string PsiVector::label(std::size_t i) const {
  if (is_component_basis())
    return tableaux.at(i).str();
  return combinatorics::to_string(basis.at(i));
}

std::size_t PsiVector::index_of(const SubsetSequence &s) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || *it != s)
    throw PreconditionError("label " + combinatorics::to_string(s) + " not in the basis");
  return std::size_t(it - basis.begin());
}

std::size_t PsiVector::nonzero_count() const {
  return std::size_t(std::count_if(entries.begin(), entries.end(),
                                   [](const Polynomial &p) { return !p.is_zero(); }));
}

int expected_degree(const std::vector<int> &lambda) {
  int d = 0;
  for (int l : lambda)
    d += l * (l - 1) / 2;
  return d;
}

namespace {

void check_lambda(int k, const std::vector<int> &lambda) {
  if (k < 2 || int(lambda.size()) != k)
    throw PreconditionError("lambda must have k >= 2 entries");
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    if (lambda[a] < 0)
      throw PreconditionError("lambda has a negative entry");
    if (a > 0 && lambda[a] > lambda[a - 1])
      throw PreconditionError("lambda is not dominant");
  }
}

std::vector<int> word_of(const SubsetSequence &s) {
  std::vector<int> w;
  for (const auto &x : s)
    w.push_back(x.at(0));
  return w;
}

SubsetSequence label_of(const std::vector<int> &w) {
  SubsetSequence s;
  for (int x : w)
    s.push_back({x});
  return s;
}

int inversions(const std::vector<int> &w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      n += w[i] > w[j];
  return n;
}

int perm_sign(const std::vector<int> &w) { return inversions(w) % 2 ? -1 : 1; }

} // namespace

std::pair<SubsetSequence, Polynomial> extreme_component(const std::vector<int> &lambda) {
  int M = std::accumulate(lambda.begin(), lambda.end(), 0);
  VariableSet vars = VariableSet::spectral(std::size_t(M));
  std::vector<int> w;
  for (std::size_t a = 0; a < lambda.size(); ++a)
    w.insert(w.end(), std::size_t(lambda[a]), int(a) + 1);
  Polynomial p = vars.constant(1);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j])
        p *= vars.hbar() + vars.z(i + 1) - vars.z(j + 1);
  return {label_of(w), p};
}

PsiVector build_psi_fundamental(int k, const std::vector<int> &lambda) {
  check_lambda(k, lambda);
  int M = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (M < 1)
    throw PreconditionError("lambda must be nonzero");
  PsiVector psi;
  psi.k = k;
  psi.lambda = lambda;
  psi.m.assign(std::size_t(M), 1);
  psi.vars = VariableSet::spectral(std::size_t(M));
  psi.basis = combinatorics::enumerate_subset_sequences(lambda, psi.m);
  const auto &vars = psi.vars;

  std::vector<std::size_t> order(psi.basis.size());
  std::vector<int> inv(psi.basis.size());
  for (std::size_t x = 0; x < order.size(); ++x) {
    order[x] = x;
    inv[x] = inversions(word_of(psi.basis[x]));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });

  auto [seed_label, seed] = extreme_component(lambda);
  std::vector<std::optional<Polynomial>> built(psi.basis.size());
  for (std::size_t x : order) {
    std::vector<int> w = word_of(psi.basis[x]);
    if (inv[x] == 0) {
      if (psi.basis[x] != seed_label)
        throw ConsistencyError("unexpected label without inversions");
      built[x] = std::move(seed);
      continue;
    }
    std::optional<Polynomial> value;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] <= w[i + 1])
        continue;
      std::vector<int> w2 = w;
      std::swap(w2[i], w2[i + 1]);
      const Polynomial &prev = *built[psi.index_of(label_of(w2))];
      Polynomial num = vars.hbar() * prev -
                       (vars.hbar() + vars.z(i + 1) - vars.z(i + 2)) * prev.swap(i, i + 1);
      Polynomial e = algebra::exact_divide(num, LinearForm{0, int(i), int(i) + 1});
      if (value && !(*value == e))
        throw ConsistencyError("propagation is path dependent at " +
                               combinatorics::to_string(psi.basis[x]));
      value = std::move(e);
    }
    built[x] = std::move(value);
  }
  for (auto &b : built)
    psi.entries.push_back(std::move(*b));

  for (std::size_t x = 0; x < psi.basis.size(); ++x) {
    std::vector<int> w = word_of(psi.basis[x]);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != w[i + 1])
        continue;
      // f | p with tau-symmetric quotient  <=>  tau(p) f = p tau(f), as f and tau(f) are
      // coprime; with f = hbar + d this reads hbar (p - tau p) = d (p + tau p)
      // statement by statement, so that large entries keep few copies alive
      const Polynomial &p = psi.entries[x];
      Polynomial tp = p.swap(i, i + 1);
      Polynomial lhs = p - tp;
      Polynomial rhs = p + tp;
      tp = Polynomial();
      lhs *= vars.hbar();
      rhs = (vars.z(i + 1) - vars.z(i + 2)) * rhs;
      if (!(lhs == rhs))
        throw ConsistencyError("adjacent equal letters fail divisibility at " +
                               combinatorics::to_string(psi.basis[x]));
    }
    if (!psi.entries[x].is_zero() &&
        (!psi.entries[x].is_homogeneous() || psi.entries[x].degree() != expected_degree(lambda)))
      throw ConsistencyError("entry of wrong degree at " + combinatorics::to_string(psi.basis[x]));
  }
  return psi;
}

PsiVector fuse_psi(const PsiVector &psi1, const std::vector<int> &m, bool normalized) {
  if (psi1.is_component_basis() ||
      std::any_of(psi1.m.begin(), psi1.m.end(), [](int x) { return x != 1; }))
    throw PreconditionError("fusion starts from a fundamental standard-basis vector");
  if (std::accumulate(m.begin(), m.end(), 0) != int(psi1.m.size()))
    throw PreconditionError("sum of m must equal the size of the fundamental vector");
  PsiVector out;
  out.k = psi1.k;
  out.lambda = psi1.lambda;
  out.m = m;
  out.vars = VariableSet::spectral(m.size());
  out.basis = combinatorics::enumerate_subset_sequences(out.lambda, m);
  const auto &vars = out.vars;

  std::vector<std::optional<Polynomial>> images(psi1.vars.size());
  std::size_t pos = 0;
  Rational norm = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int p = 1; p <= m[i]; ++p) {
      images[pos++] = vars.z(i + 1) + vars.half_hbar(2 * p - m[i] - 1);
      norm *= p;
    }
  images[psi1.vars.hbar_index()] = vars.var(vars.hbar_index());

  std::vector<std::optional<Polynomial>> special(psi1.size());
  auto specialized = [&](std::size_t idx) -> const Polynomial & {
    if (!special[idx])
      special[idx] = psi1.entries[idx].substitute(images, vars.size());
    return *special[idx];
  };

  for (const auto &label : out.basis) {
    Polynomial sum(vars.size());
    // odometer over orderings of every block
    SubsetSequence cur = label;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sign) {
      if (i == cur.size()) {
        SubsetSequence word;
        for (const auto &s : cur)
          for (int x : s)
            word.push_back({x});
        const Polynomial &v = specialized(psi1.index_of(word));
        if (!v.is_zero())
          sum += sign > 0 ? v : -v;
        return;
      }
      std::vector<int> s = label[i];
      do {
        cur[i] = s;
        rec(i + 1, sign * perm_sign(s));
      } while (std::next_permutation(s.begin(), s.end()));
      cur[i] = label[i];
    };
    rec(0, 1);
    if (normalized)
      sum *= Rational(1) / norm;
    out.entries.push_back(std::move(sum));
  }
  return out;
}

PsiVector component_psi(int k, const std::vector<int> &lambda, const std::vector<int> &m,
                        std::vector<Polynomial> entries) {
  check_lambda(k, lambda);
  PsiVector out;
  out.k = k;
  out.lambda = lambda;
  out.m = m;
  out.vars = VariableSet::spectral(m.size());
  out.tableaux = combinatorics::enumerate_tableaux(lambda, m);
  if (entries.size() != out.tableaux.size())
    throw PreconditionError("expected " + std::to_string(out.tableaux.size()) +
                            " component entries, got " + std::to_string(entries.size()));
  for (const auto &e : entries)
    if (e.nvars() != out.vars.size())
      throw ContextError("component entry lives in the wrong context");
  out.entries = std::move(entries);
  return out;
}

nlohmann::json to_json(const PsiVector &psi) {
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = psi.k;
  j["lambda"] = psi.lambda;
  j["m"] = psi.m;
  j["basis"] = psi.is_component_basis() ? "component" : "standard";
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < psi.size(); ++i) {
    nlohmann::json e;
    if (psi.is_component_basis())
      e["tableau"] = psi.tableaux[i].rows();
    else
      e["label"] = psi.basis[i];
    e["text"] = algebra::to_text(psi.entries[i], psi.vars);
    e["poly"] = algebra::to_json(psi.entries[i], psi.vars);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

PsiVector psi_from_json(const nlohmann::json &j) {
  if (j.value("schema", 0) != 1)
    throw ParseError("unsupported Psi schema");
  PsiVector psi;
  psi.k = j.at("k").get<int>();
  psi.lambda = j.at("lambda").get<std::vector<int>>();
  psi.m = j.at("m").get<std::vector<int>>();
  psi.vars = VariableSet::spectral(psi.m.size());
  bool component = j.at("basis").get<std::string>() == "component";
  for (const auto &e : j.at("entries")) {
    if (component)
      psi.tableaux.emplace_back(e.at("tableau").get<std::vector<std::vector<int>>>());
    else
      psi.basis.push_back(e.at("label").get<SubsetSequence>());
    psi.entries.push_back(algebra::polynomial_from_json(e.at("poly"), psi.vars));
  }
  if (!component && !std::is_sorted(psi.basis.begin(), psi.basis.end()))
    throw ParseError("standard labels must be in basis order");
  return psi;
}

} // namespace qkz::psi
