#include "qkz/psi/checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"

namespace qkz::psi {

using algebra::RationalFunction;
using rmatrix::ExchangeEngine;

namespace {

std::string fingerprint(const PsiVector &psi) {
  auto list = [](const std::vector<int> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "k=" + std::to_string(psi.k) + " lambda=(" + list(psi.lambda) + ") m=(" + list(psi.m) +
         ")";
}

std::vector<std::optional<Polynomial>> identity_images(const VariableSet &vars) {
  std::vector<std::optional<Polynomial>> img(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v)
    img[v] = vars.var(v);
  return img;
}

std::string mismatch(const PsiVector &psi, std::size_t i, const std::string &lhs,
                     const std::string &rhs) {
  return "label " + psi.label(i) + ": " + lhs + " vs " + rhs;
}

} // namespace

CheckResult check_exchange(const PsiVector &psi, const PsiVector &psi_swapped,
                           const RFamily &family, std::size_t slot) {
  if (slot + 1 >= psi.m.size())
    throw PreconditionError("exchange slot out of range");
  std::vector<int> m2 = psi.m;
  std::swap(m2[slot], m2[slot + 1]);
  if (psi_swapped.m != m2)
    throw PreconditionError("partner vector has the wrong m-sequence");
  const auto &vars = psi.vars;
  CheckResult r{"exchange slot " + std::to_string(slot + 1) + " " + fingerprint(psi), true, {}};
  RFMatrix R = rmatrix::evaluate_local(family.local(psi.m, slot),
                                       vars.z(slot + 1) - vars.z(slot + 2), vars);
  auto rhs = R.apply(psi.entries);
  for (std::size_t a = 0; a < psi_swapped.size(); ++a) {
    RationalFunction lhs(psi_swapped.entries[a].swap(slot, slot + 1));
    if (!(lhs == rhs[a])) {
      r.pass = false;
      r.witness = mismatch(psi_swapped, a, algebra::to_text(lhs, vars),
                           algebra::to_text(rhs[a], vars));
      break;
    }
  }
  return r;
}

CheckResult check_exchange(const PsiVector &psi, const RFamily &family, std::size_t slot) {
  return check_exchange(psi, psi, family, slot);
}

CheckResult check_wheel(const PsiVector &psi, const std::vector<std::size_t> &positions) {
  if (positions.size() < 2 || !std::is_sorted(positions.begin(), positions.end()) ||
      std::adjacent_find(positions.begin(), positions.end()) != positions.end() ||
      positions.back() >= psi.m.size())
    throw PreconditionError("wheel positions must be increasing slots");
  int total = 0;
  for (auto q : positions)
    total += psi.m[q];
  if (total <= psi.k)
    throw PreconditionError("wheel condition needs n_1 + ... + n_r > k");
  const auto &vars = psi.vars;
  auto img = identity_images(vars);
  Polynomial zeta = vars.z(positions[0] + 1);
  std::string where = "wheel at slots";
  for (std::size_t t = 0; t < positions.size(); ++t) {
    if (t > 0)
      zeta = zeta + vars.half_hbar(psi.m[positions[t - 1]] + psi.m[positions[t]]);
    img[positions[t]] = zeta;
    where += " " + std::to_string(positions[t] + 1);
  }
  CheckResult r{where + " " + fingerprint(psi), true, {}};
  for (std::size_t a = 0; a < psi.size(); ++a) {
    Polynomial v = psi.entries[a].substitute(img, vars.size());
    if (!v.is_zero()) {
      r.pass = false;
      r.witness = mismatch(psi, a, algebra::to_text(v, vars), "0");
      break;
    }
  }
  return r;
}

std::vector<CheckResult> check_wheel_all(const PsiVector &psi, std::size_t r) {
  std::vector<CheckResult> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == r) {
      int total = 0;
      for (auto q : cur)
        total += psi.m[q];
      if (total > psi.k)
        out.push_back(check_wheel(psi, cur));
      return;
    }
    for (std::size_t q = start; q < psi.m.size(); ++q) {
      cur.push_back(q);
      rec(q + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

CheckResult check_recurrence(const PsiVector &big, const PsiVector &small, std::size_t p) {
  if (!big.is_component_basis() || !small.is_component_basis())
    throw PreconditionError("recurrence is checked in the component basis");
  if (big.m.size() <= small.m.size() || big.k != small.k)
    throw PreconditionError("big vector must have more slots than the small one");
  const std::size_t r = big.m.size() - small.m.size();
  if (p + r > big.m.size())
    throw PreconditionError("insertion point out of range");
  std::vector<int> n(big.m.begin() + long(p), big.m.begin() + long(p + r));
  if (std::accumulate(n.begin(), n.end(), 0) != big.k)
    throw PreconditionError("inserted sizes must add up to k");
  std::vector<int> rest = big.m;
  rest.erase(rest.begin() + long(p), rest.begin() + long(p + r));
  if (rest != small.m)
    throw PreconditionError("small vector does not match the remaining slots");
  for (std::size_t a = 0; a < big.lambda.size(); ++a)
    if (big.lambda[a] != small.lambda[a] + 1)
      throw PreconditionError("lambda must drop by one full column");

  const auto &bv = big.vars;
  auto img = identity_images(bv);
  std::vector<Polynomial> zeta{bv.z(p + 1)};
  for (std::size_t t = 1; t < r; ++t)
    zeta.push_back(zeta.back() + bv.half_hbar(n[t - 1] + n[t]));
  for (std::size_t t = 0; t < r; ++t)
    img[p + t] = zeta[t];
  std::vector<std::optional<Polynomial>> small_img(small.vars.size());
  Polynomial factor = bv.constant(1);
  for (std::size_t i = 0; i < small.m.size(); ++i) {
    std::size_t bi = i < p ? i : i + r;
    small_img[i] = bv.z(bi + 1);
    for (int a = 0; a < small.m[i]; ++a) {
      if (i < p)
        factor *= bv.half_hbar(small.m[i] + n.front() - 2 * a) + bv.z(bi + 1) - zeta.front();
      else
        factor *= bv.half_hbar(small.m[i] + n.back() - 2 * a) + zeta.back() - bv.z(bi + 1);
    }
  }
  small_img[small.vars.hbar_index()] = bv.var(bv.hbar_index());

  CheckResult res{"recurrence at slot " + std::to_string(p + 1) + " " + fingerprint(big), true,
                  {}};
  const int first = int(p) + 1, last = int(p + r);
  std::size_t survivors = 0, vanishing = 0;
  for (std::size_t x = 0; x < big.size(); ++x) {
    const Tableau &t = big.tableaux[x];
    bool survive = true;
    for (int a = first; a <= last && survive; ++a)
      for (int b = a + 1; b <= last && survive; ++b) {
        auto ra = t.rows_of(a), rb = t.rows_of(b);
        if (*std::max_element(ra.begin(), ra.end()) >= *std::min_element(rb.begin(), rb.end()))
          survive = false;
      }
    Polynomial lhs = big.entries[x].substitute(img, bv.size());
    Polynomial rhs(bv.size());
    if (survive) {
      std::vector<std::vector<int>> rows;
      for (const auto &row : t.rows()) {
        std::vector<int> kept;
        for (int letter : row)
          if (letter < first)
            kept.push_back(letter);
          else if (letter > last)
            kept.push_back(letter - int(r));
        rows.push_back(kept);
      }
      Tableau reduced(rows);
      auto it = std::find(small.tableaux.begin(), small.tableaux.end(), reduced);
      if (it == small.tableaux.end()) {
        res.pass = false;
        res.witness = "label " + t.str() + ": removing the inserted letters gives " +
                      reduced.str() + ", not a small tableau";
        return res;
      }
      rhs = small.entries[std::size_t(it - small.tableaux.begin())].substitute(small_img,
                                                                             bv.size()) *
            factor;
      ++survivors;
    } else {
      ++vanishing;
    }
    if (!(lhs == rhs)) {
      res.pass = false;
      res.witness = mismatch(big, x, algebra::to_text(lhs, bv), algebra::to_text(rhs, bv));
      return res;
    }
  }
  res.witness = std::to_string(survivors) + " surviving, " + std::to_string(vanishing) +
                " vanishing entries";
  return res;
}

int standard_rotation_sign(const SubsetSequence &label) {
  int M = 0;
  for (const auto &s : label)
    M += int(s.size());
  int moved = int(label.back().size());
  return (moved * (M - moved)) % 2 ? -1 : 1;
}

RFMatrix rho_for(const PsiVector &psi, const PsiVector &psi_rotated) {
  std::vector<int> m2 = psi.m;
  std::rotate(m2.begin(), m2.begin() + 1, m2.end());
  if (psi_rotated.m != m2 || psi_rotated.lambda != psi.lambda)
    throw PreconditionError("rotated vector has the wrong m-sequence");
  const std::size_t nv = psi.vars.size();
  if (psi.is_component_basis()) {
    if (std::adjacent_find(psi.lambda.begin(), psi.lambda.end(), std::not_equal_to<>()) !=
        psi.lambda.end())
      throw PreconditionError("rotation operator on components needs lambda = 0");
    int M = std::accumulate(psi.m.begin(), psi.m.end(), 0);
    return RFMatrix::from_integers(
        combinatorics::rho_matrix(psi.tableaux, psi_rotated.tableaux, psi.m[0], M, psi.k), nv);
  }
  RFMatrix rho(psi_rotated.size(), psi.size(), nv);
  for (std::size_t g = 0; g < psi_rotated.size(); ++g) {
    SubsetSequence beta = psi_rotated.basis[g];
    std::rotate(beta.rbegin(), beta.rbegin() + 1, beta.rend());
    rho.set(g, psi.index_of(beta),
            RationalFunction::constant(nv, standard_rotation_sign(psi_rotated.basis[g])));
  }
  return rho;
}

CheckResult check_cyclicity(const PsiVector &psi, const PsiVector &psi_rotated,
                            const RFMatrix &rho) {
  const auto &vars = psi.vars;
  const std::size_t N = psi.m.size();
  std::vector<std::optional<Polynomial>> img(vars.size());
  for (std::size_t j = 0; j + 1 < N; ++j)
    img[j] = vars.z(j + 2);
  img[N - 1] = vars.z(1) + vars.hbar() * algebra::Rational(psi.k + 1);
  img[vars.hbar_index()] = vars.var(vars.hbar_index());
  CheckResult r{"cyclicity " + fingerprint(psi), true, {}};
  auto rhs = rho.apply(psi.entries);
  for (std::size_t a = 0; a < psi_rotated.size(); ++a) {
    RationalFunction lhs(psi_rotated.entries[a].substitute(img, vars.size()));
    if (!(lhs == rhs[a])) {
      r.pass = false;
      r.witness = mismatch(psi_rotated, a, algebra::to_text(lhs, vars),
                           algebra::to_text(rhs[a], vars));
      break;
    }
  }
  return r;
}

namespace {

void require_homogeneous(const PsiVector &psi) {
  if (std::adjacent_find(psi.m.begin(), psi.m.end(), std::not_equal_to<>()) != psi.m.end())
    throw PreconditionError("qKZ step is implemented for homogeneous m");
}

Polynomial step_shift(const PsiVector &psi) {
  return psi.vars.hbar() * algebra::Rational(psi.k + 1);
}

} // namespace

RFMatrix qkz_composite(const PsiVector &psi, const RFamily &family, const RFMatrix &rho,
                       std::size_t i) {
  require_homogeneous(psi);
  const std::size_t N = psi.m.size();
  if (i >= N)
    throw PreconditionError("qKZ slot out of range");
  ExchangeEngine e(family, psi.m, psi.vars);
  for (std::size_t j = i; j-- > 0;)
    e.swap(j);
  e.rotate(rho, step_shift(psi));
  for (std::size_t j = N - 1; j-- > i;)
    e.swap(j);
  return e.acc();
}

CheckResult qkz_step(const PsiVector &psi, const RFamily &family, const RFMatrix &rho,
                     std::size_t i) {
  require_homogeneous(psi);
  const auto &vars = psi.vars;
  const std::size_t N = psi.m.size();
  const Polynomial s = step_shift(psi);
  CheckResult r{"qkz step slot " + std::to_string(i + 1) + " " + fingerprint(psi), true, {}};

  RFMatrix S = qkz_composite(psi, family, rho, i);
  auto img = identity_images(vars);
  img[i] = vars.z(i + 1) + s;
  auto rhs = S.apply(psi.entries);
  for (std::size_t a = 0; a < psi.size(); ++a) {
    RationalFunction lhs(psi.entries[a].substitute(img, vars.size()));
    if (!(lhs == rhs[a])) {
      r.pass = false;
      r.witness = mismatch(psi, a, algebra::to_text(lhs, vars), algebra::to_text(rhs[a], vars));
      return r;
    }
  }

  RFMatrix rho_inv = rho.transpose();
  if (!(rho * rho_inv).is_identity())
    throw PreconditionError("rotation operator is not a signed permutation");
  std::vector<Polynomial> w;
  for (std::size_t j = 0; j < N; ++j)
    w.push_back(j == i ? vars.z(j + 1) + s : vars.z(j + 1));
  ExchangeEngine back(family, psi.m, vars, w);
  for (std::size_t j = i; j + 1 < N; ++j)
    back.swap(j);
  back.rotate_inverse(rho_inv, s);
  for (std::size_t j = 0; j < i; ++j)
    back.swap(j);
  if (!(S * back.acc()).is_identity()) {
    r.pass = false;
    r.witness = "routes through slot 1 and slot N disagree";
  }
  return r;
}

CheckResult check_degree(const PsiVector &psi) {
  CheckResult r{"degree " + fingerprint(psi), true, {}};
  const int d = expected_degree(psi.lambda);
  for (std::size_t a = 0; a < psi.size(); ++a) {
    const auto &e = psi.entries[a];
    if (e.is_zero())
      continue;
    if (!e.is_homogeneous() || e.degree() != d) {
      r.pass = false;
      r.witness = "label " + psi.label(a) + " has degree " + std::to_string(e.degree()) +
                  ", expected " + std::to_string(d);
      break;
    }
  }
  return r;
}

} // namespace qkz::psi
