#include "trisat/eigenvalues.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace trisat {

EigenvalueMultiset::EigenvalueMultiset(int modulus) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("eigenvalue modulus must be positive");
}

int EigenvalueMultiset::multiplicity(int residue) const {
  const int r = ((residue % modulus_) + modulus_) % modulus_;
  const auto it = mults_.find(r);
  return it == mults_.end() ? 0 : it->second;
}

void EigenvalueMultiset::add(int residue, int mult) {
  if (mult == 0) return;
  const int r = ((residue % modulus_) + modulus_) % modulus_;
  int& slot = mults_[r];
  if (slot + mult < 0) throw std::invalid_argument("negative eigenvalue multiplicity");
  slot += mult;
  dimension_ += mult;
  if (slot == 0) mults_.erase(r);
}

EigenvalueMultiset EigenvalueMultiset::lifted(int new_modulus) const {
  if (new_modulus % modulus_ != 0) {
    throw std::invalid_argument("cannot lift modulus " + std::to_string(modulus_) + " to " +
                                std::to_string(new_modulus));
  }
  const int scale = new_modulus / modulus_;
  EigenvalueMultiset out(new_modulus);
  for (const auto& [residue, mult] : mults_) out.add(residue * scale, mult);
  return out;
}

EigenvalueMultiset EigenvalueMultiset::merged(const EigenvalueMultiset& other) const {
  const int common = std::lcm(modulus_, other.modulus_);
  EigenvalueMultiset out = lifted(common);
  for (const auto& [residue, mult] : other.lifted(common).mults_) out.add(residue, mult);
  return out;
}

bool EigenvalueMultiset::is_conjugation_symmetric() const {
  for (const auto& [residue, mult] : mults_) {
    if (multiplicity(modulus_ - residue) != mult) return false;
  }
  return true;
}

int so_fixed_dim(const EigenvalueMultiset& ev) {
  if (!ev.is_conjugation_symmetric()) {
    throw std::invalid_argument("eigenvalues of an orthogonal element must be closed under inversion");
  }
  const int n = ev.modulus();
  const int m_plus = ev.multiplicity(0);
  const int m_minus = n % 2 == 0 ? ev.multiplicity(n / 2) : 0;
  long squares = 0;
  for (const auto& [residue, mult] : ev.multiplicities()) {
    if (residue == 0 || (n % 2 == 0 && residue == n / 2)) continue;
    squares += static_cast<long>(mult) * mult;
  }
  if (squares % 2 != 0) throw std::logic_error("odd sum of squared multiplicities");
  return m_plus * (m_plus - 1) / 2 + m_minus * (m_minus - 1) / 2 + static_cast<int>(squares / 2);
}

}  // namespace trisat
