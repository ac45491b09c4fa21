#include "qkz/rmatrix/exchange.hpp"

#include <algorithm>
#include <functional>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"

namespace qkz::rmatrix {

using algebra::VariableSet;

StandardFamily::StandardFamily(int k, std::optional<std::vector<int>> lambda)
    : k_(k), lambda_(std::move(lambda)) {
  if (k < 2)
    throw PreconditionError("k must be at least 2");
  if (lambda_ && int(lambda_->size()) != k)
    throw PreconditionError("lambda must have k entries");
}

const std::vector<SubsetSequence> &StandardFamily::basis(const std::vector<int> &m) const {
  std::lock_guard lock(mu_);
  auto it = bases_.find(m);
  if (it != bases_.end())
    return *it->second;
  for (int mi : m)
    if (mi < 1 || mi > k_)
      throw PreconditionError("m entries must lie in 1..k");
  auto out = std::make_unique<std::vector<SubsetSequence>>();
  if (lambda_) {
    *out = combinatorics::enumerate_subset_sequences(*lambda_, m);
  } else {
    SubsetSequence cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == m.size()) {
        out->push_back(cur);
        return;
      }
      for (const auto &s : subsets(k_, m[i])) {
        cur.push_back(s);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return *bases_.emplace(m, std::move(out)).first->second;
}

std::string StandardFamily::label(const std::vector<int> &m, std::size_t index) const {
  return combinatorics::to_string(basis(m).at(index));
}

const RFMatrix &StandardFamily::local(const std::vector<int> &m, std::size_t slot) const {
  if (slot + 1 >= m.size())
    throw PreconditionError("slot out of range");
  const auto &src = basis(m);
  std::vector<int> m2 = m;
  std::swap(m2[slot], m2[slot + 1]);
  const auto &dst = basis(m2);
  {
    std::lock_guard lock(mu_);
    auto it = locals_.find({m, slot});
    if (it != locals_.end())
      return *it->second;
  }
  ROperator op = fused_rcheck(k_, m[slot], m[slot + 1]);
  RFMatrix by_source = op.matrix.transpose();
  auto out = std::make_unique<RFMatrix>(dst.size(), src.size(), spectral_context().size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto &alpha = src[s];
    std::size_t si = op.source_index({alpha[slot], alpha[slot + 1]});
    for (const auto &[t, v] : by_source.row(si)) {
      SubsetSequence beta = alpha;
      beta[slot] = op.target[t].first;
      beta[slot + 1] = op.target[t].second;
      auto pos = std::lower_bound(dst.begin(), dst.end(), beta);
      if (pos == dst.end() || *pos != beta)
        throw ConsistencyError("R-matrix leaves the weight space");
      out->set(std::size_t(pos - dst.begin()), s, v);
    }
  }
  std::lock_guard lock(mu_);
  return *locals_.emplace(std::make_pair(m, slot), std::move(out)).first->second;
}

FixedFamily::FixedFamily(std::vector<std::string> labels, std::vector<RFMatrix> per_slot)
    : labels_(std::move(labels)), per_slot_(std::move(per_slot)) {
  for (const auto &r : per_slot_)
    if (r.rows() != labels_.size() || r.cols() != labels_.size())
      throw PreconditionError("fixed R-matrix has the wrong size");
}

const RFMatrix &FixedFamily::local(const std::vector<int> &m, std::size_t slot) const {
  if (slot >= per_slot_.size() || m.size() != per_slot_.size() + 1)
    throw PreconditionError("slot out of range for the fixed family");
  if (std::adjacent_find(m.begin(), m.end(), std::not_equal_to<>()) != m.end())
    throw PreconditionError("fixed family needs homogeneous m");
  return per_slot_[slot];
}

RFMatrix evaluate_local(const RFMatrix &local, const Polynomial &arg, const VariableSet &vars) {
  std::vector<std::optional<Polynomial>> images{arg, vars.constant(0),
                                                vars.var(vars.hbar_index())};
  return local.substitute(images, vars.size());
}

ExchangeEngine::ExchangeEngine(const RFamily &family, std::vector<int> m, const VariableSet &vars)
    : ExchangeEngine(family, m, vars, [&] {
        std::vector<Polynomial> a;
        for (std::size_t i = 1; i <= m.size(); ++i)
          a.push_back(vars.z(i));
        return a;
      }()) {}

ExchangeEngine::ExchangeEngine(const RFamily &family, std::vector<int> m, const VariableSet &vars,
                               std::vector<Polynomial> args)
    : family_(family), vars_(vars), m_(std::move(m)), args_(std::move(args)) {
  if (args_.size() != m_.size())
    throw PreconditionError("one argument per tensor factor expected");
  acc_ = RFMatrix::identity(family_.dim(m_), vars_.size());
}

void ExchangeEngine::swap(std::size_t j) {
  if (j + 1 >= m_.size())
    throw PreconditionError("swap slot out of range");
  acc_ = evaluate_local(family_.local(m_, j), args_[j] - args_[j + 1], vars_) * acc_;
  std::swap(args_[j], args_[j + 1]);
  std::swap(m_[j], m_[j + 1]);
}

void ExchangeEngine::rotate(const RFMatrix &rho, const Polynomial &shift) {
  acc_ = rho * acc_;
  std::rotate(m_.begin(), m_.begin() + 1, m_.end());
  std::rotate(args_.begin(), args_.begin() + 1, args_.end());
  args_.back() = args_.back() + shift;
}

void ExchangeEngine::rotate_inverse(const RFMatrix &rho_inv, const Polynomial &shift) {
  acc_ = rho_inv * acc_;
  std::rotate(m_.rbegin(), m_.rbegin() + 1, m_.rend());
  std::rotate(args_.rbegin(), args_.rbegin() + 1, args_.rend());
  args_.front() = args_.front() - shift;
}

namespace {

std::string instance(const std::string &what, const std::vector<int> &m) {
  std::string out = what + " m=(";
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

CheckResult compare(std::string check, const RFamily &family, const std::vector<int> &m_row,
                    const std::vector<int> &m_col, const RFMatrix &a, const RFMatrix &b,
                    const VariableSet &vars) {
  CheckResult r{std::move(check), true, {}};
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.pass = false;
    r.witness = "shape mismatch";
    return r;
  }
  if (auto d = a.first_difference(b)) {
    r.pass = false;
    r.witness = "entry " + family.label(m_row, d->first) + " <- " +
                family.label(m_col, d->second) + ": " +
                algebra::to_text(a.get(d->first, d->second), vars) + " vs " +
                algebra::to_text(b.get(d->first, d->second), vars);
  }
  return r;
}

} // namespace

CheckResult verify_ybe(const RFamily &family, const std::vector<int> &m, std::size_t i) {
  if (i + 2 >= m.size())
    throw PreconditionError("YBE needs three consecutive slots");
  VariableSet vars = VariableSet::spectral(m.size());
  ExchangeEngine lhs(family, m, vars), rhs(family, m, vars);
  lhs.swap(i), lhs.swap(i + 1), lhs.swap(i);
  rhs.swap(i + 1), rhs.swap(i), rhs.swap(i + 1);
  return compare(instance("ybe slot " + std::to_string(i + 1), m), family, lhs.m(), m,
                 lhs.acc(), rhs.acc(), vars);
}

CheckResult verify_unitarity(const RFamily &family, const std::vector<int> &m, std::size_t j) {
  VariableSet vars = VariableSet::spectral(m.size());
  ExchangeEngine e(family, m, vars);
  e.swap(j), e.swap(j);
  return compare(instance("unitarity slot " + std::to_string(j + 1), m), family, m, m, e.acc(),
                 RFMatrix::identity(e.acc().rows(), vars.size()), vars);
}

CheckResult verify_comm(const RFamily &family, const std::vector<int> &m, std::size_t i,
                        std::size_t j) {
  if ((i > j ? i - j : j - i) < 2)
    throw PreconditionError("far commutation needs slots at distance >= 2");
  VariableSet vars = VariableSet::spectral(m.size());
  ExchangeEngine lhs(family, m, vars), rhs(family, m, vars);
  lhs.swap(i), lhs.swap(j);
  rhs.swap(j), rhs.swap(i);
  return compare(instance("comm slots " + std::to_string(i + 1) + "," + std::to_string(j + 1), m),
                 family, lhs.m(), m, lhs.acc(), rhs.acc(), vars);
}

std::vector<CheckResult> verify_relations(const RFamily &family, const std::vector<int> &m) {
  std::vector<CheckResult> out;
  for (std::size_t j = 0; j + 1 < m.size(); ++j)
    out.push_back(verify_unitarity(family, m, j));
  for (std::size_t i = 0; i + 2 < m.size(); ++i)
    out.push_back(verify_ybe(family, m, i));
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    for (std::size_t j = i + 2; j + 1 < m.size(); ++j)
      out.push_back(verify_comm(family, m, i, j));
  return out;
}

} // namespace qkz::rmatrix
