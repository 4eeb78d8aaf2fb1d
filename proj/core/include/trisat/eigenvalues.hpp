#pragma once

#include <map>

namespace trisat {

/// Eigenvalues of a finite-order orthogonal element, written as residues
/// j mod N standing for exp(2 pi i j / N), with multiplicities.
class EigenvalueMultiset {
 public:
  explicit EigenvalueMultiset(int modulus);

  int modulus() const { return modulus_; }
  /// Sum of multiplicities (the ambient dimension).
  int dimension() const { return dimension_; }
  int multiplicity(int residue) const;
  const std::map<int, int>& multiplicities() const { return mults_; }

  /// Adds mult copies of residue (reduced mod N). A negative mult removes
  /// copies; going below zero throws std::invalid_argument.
  void add(int residue, int mult = 1);

  /// Same eigenvalues expressed over a multiple of the current modulus.
  EigenvalueMultiset lifted(int new_modulus) const;

  /// Union of both multisets over lcm of the two moduli.
  EigenvalueMultiset merged(const EigenvalueMultiset& other) const;

  /// mult(j) == mult(N - j) for every j.
  bool is_conjugation_symmetric() const;

  friend bool operator==(const EigenvalueMultiset&, const EigenvalueMultiset&) = default;

 private:
  int modulus_;
  int dimension_ = 0;
  std::map<int, int> mults_;
};

/// Dimension of the fixed space of Ad(t) on so_m, where t has the given
/// eigenvalues on the natural module:
///   C(m_1, 2) + C(m_{-1}, 2) + (1/2) sum_{lambda != +-1} m_lambda^2.
/// Throws std::invalid_argument if the multiset is not conjugation
/// symmetric.
int so_fixed_dim(const EigenvalueMultiset& ev);

}  // namespace trisat
