#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qkz/algebra/variables.hpp"
#include "qkz/combinatorics/tableau.hpp"
#include "qkz/rmatrix/rcheck.hpp"

namespace qkz::rmatrix {

using combinatorics::SubsetSequence;

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string witness;
};

/// A family of R-matrices: for every m-sequence a weight basis, and for every
/// slot j a local operator basis(m) -> basis(m with m_j, m_{j+1} swapped)
/// whose entries live in the spectral context (z1, z2, h).
class RFamily {
public:
  virtual ~RFamily() = default;
  virtual std::size_t dim(const std::vector<int> &m) const = 0;
  virtual std::string label(const std::vector<int> &m, std::size_t index) const = 0;
  virtual const RFMatrix &local(const std::vector<int> &m, std::size_t slot) const = 0;
};

/// Fused operators acting on the standard basis of tensor products of
/// Lambda^{m_i} C^k. Without lambda the basis spans all contents.
class StandardFamily : public RFamily {
public:
  StandardFamily(int k, std::optional<std::vector<int>> lambda);

  int k() const { return k_; }
  const std::vector<SubsetSequence> &basis(const std::vector<int> &m) const;
  std::size_t dim(const std::vector<int> &m) const override { return basis(m).size(); }
  std::string label(const std::vector<int> &m, std::size_t index) const override;
  const RFMatrix &local(const std::vector<int> &m, std::size_t slot) const override;

private:
  int k_;
  std::optional<std::vector<int>> lambda_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::unique_ptr<std::vector<SubsetSequence>>> bases_;
  mutable std::map<std::pair<std::vector<int>, std::size_t>, std::unique_ptr<RFMatrix>> locals_;
};

/// Explicit matrices per slot on a fixed basis (homogeneous m only).
class FixedFamily : public RFamily {
public:
  FixedFamily(std::vector<std::string> labels, std::vector<RFMatrix> per_slot);

  std::size_t dim(const std::vector<int> &) const override { return labels_.size(); }
  std::string label(const std::vector<int> &, std::size_t index) const override {
    return labels_.at(index);
  }
  const RFMatrix &local(const std::vector<int> &m, std::size_t slot) const override;

private:
  std::vector<std::string> labels_;
  std::vector<RFMatrix> per_slot_;
};

/// Local operator at argument `arg` (a polynomial in `vars`).
RFMatrix evaluate_local(const RFMatrix &local, const Polynomial &arg,
                        const algebra::VariableSet &vars);

/// Tracks Psi^{m(A)}(A) = acc * Psi^{m0}(z) while the arguments A are
/// permuted by exchange moves and rotated by cyclicity moves.
class ExchangeEngine {
public:
  ExchangeEngine(const RFamily &family, std::vector<int> m, const algebra::VariableSet &vars);
  ExchangeEngine(const RFamily &family, std::vector<int> m, const algebra::VariableSet &vars,
                 std::vector<Polynomial> args);

  const std::vector<Polynomial> &args() const { return args_; }
  const std::vector<int> &m() const { return m_; }
  const RFMatrix &acc() const { return acc_; }

  /// Exchange of slots j, j+1 (0-based).
  void swap(std::size_t j);
  /// A -> (A_2, ..., A_N, A_1 + shift); rho maps basis(m) to basis(rotated m).
  void rotate(const RFMatrix &rho, const Polynomial &shift);
  /// A -> (A_N - shift, A_1, ..., A_{N-1}); rho_inv maps basis(m) to
  /// basis(m_N, m_1, ..., m_{N-1}).
  void rotate_inverse(const RFMatrix &rho_inv, const Polynomial &shift);

private:
  const RFamily &family_;
  const algebra::VariableSet &vars_;
  std::vector<int> m_;
  std::vector<Polynomial> args_;
  RFMatrix acc_;
};

/// R_i(u) R_{i+1}(u+v) R_i(v) = R_{i+1}(v) R_i(u+v) R_{i+1}(u) in exchange form
/// on slots (i, i+1, i+2), 0-based.
CheckResult verify_ybe(const RFamily &family, const std::vector<int> &m, std::size_t i);
/// R_j(u) R_j(-u) = 1
CheckResult verify_unitarity(const RFamily &family, const std::vector<int> &m, std::size_t j);
/// R_i(u) R_j(v) = R_j(v) R_i(u) for |i - j| >= 2
CheckResult verify_comm(const RFamily &family, const std::vector<int> &m, std::size_t i,
                        std::size_t j);

/// All of the above for every applicable slot of m.
std::vector<CheckResult> verify_relations(const RFamily &family, const std::vector<int> &m);

} // namespace qkz::rmatrix
