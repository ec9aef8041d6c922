#pragma once
// Integral root subsystems Φ_ν = {α : <ν, α∨> ∈ Z} and the Macdonald
// representation j_{W_ν}^W(ε_ν) by truncated induction.

#include "wf/chars.hpp"

namespace wf {

struct IntegralSubsystem {
  RVec nu;                 // X ⊗ Q coordinates
  SubsystemInfo info;      // positive roots, simple system, component types
  int num_positive() const { return static_cast<int>(info.positive.size()); }
  std::string types() const { return types_str(info.types); }
};

IntegralSubsystem integral_subsystem(const RootDatum& d, const RVec& nu);

// Positive roots of the subsystem spanned by the given positive roots under
// reflections (the smallest reflection-closed set containing them).
std::vector<int> reflection_closure(const RootDatum& d, const std::vector<int>& roots);

struct MacdonaldResult {
  int index = -1;          // into the character table
  std::string label;
  int b = 0;
  ClassFunction induced;   // Ind_{W'}^W(ε')
  std::vector<i64> multiplicities;
};

// j_{W'}^W(ε') for W' generated by reflections in `positive_roots`: the unique
// constituent of Ind(ε') with b = |Φ'^+|. Throws std::logic_error if it is not
// unique, has multiplicity other than one, or a constituent has smaller b.
MacdonaldResult macdonald_rep(const CharTable& T, const std::vector<int>& positive_roots);

// Positive roots of W(C_k) given by ε-vectors.
std::vector<int> roots_with_eps(const RootDatum& d, const std::vector<Vec>& eps);
// Both sides of j_{A_{k-1}}^{C_k}(ε) = j_{D_{⌊(k+1)/2⌋} × C_{⌊k/2⌋}}^{C_k}(ε), as labels.
std::pair<std::string, std::string> adc_identity_sides(int k);

}  // namespace wf
