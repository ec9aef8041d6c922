#pragma once
// Covering data attached to (root datum, Weyl-invariant quadratic form, degree n):
// the lattices Y_{Q,n} ⊇ Ỹ^{sc}_{Q,n} ⊇ Y^{sc}_{Q,n}, the integers n_α and ñ_α,
// the dual root datum and the exceptional character with its saturation.

#include <string>
#include <vector>

#include "wf/rootdata.hpp"

namespace wf {

// Bilinear form B_Q as a Gram matrix on the Y basis; Q(y) = yᵀ B y / 2.
struct QuadraticForm {
  IntMat gram;
  i64 Q(const Vec& y) const;
  i64 B(const Vec& y, const Vec& z) const;
};

// B_Q from values Q(α_i∨) on the simple coroots (semisimple data only; the
// resulting Gram matrix on Y must be integral).
QuadraticForm form_from_simple_values(const RootDatum& d, const std::vector<i64>& values);
// Default normalizations per preset family, scaled by q:
//  simply connected: Q = q on short coroots;  GL: Kazhdan-Patterson (p, q) = (0, 1)
//  regardless of q;  SO_{2r+1}: Q(y) = q Σ y_i²;  GSpin_{2r+1}: Q(e_i) = q, Q(e_0) = 2q.
QuadraticForm default_form(const RootDatum& d, const std::string& preset, i64 q);
QuadraticForm kazhdan_patterson_form(int r, i64 p, i64 q);
// Throws InputError unless B is symmetric, Q integral and sᵀ B s = B for every simple s.
void check_weyl_invariant(const RootDatum& d, const QuadraticForm& f);

class Cover {
 public:
  Cover(RootDatum d, QuadraticForm f, i64 n);

  const RootDatum& datum() const { return d_; }
  const QuadraticForm& form() const { return f_; }
  i64 n() const { return n_; }

  // per positive root k (simple roots come first in height order)
  i64 n_root(int k) const { return n_root_[k]; }
  Rat i_root(int k) const { return i_root_[k]; }
  Rat ntilde_root(int k) const { return Rat(n_root_[k]) * i_root_[k]; }
  // per simple root i
  i64 n_simple(int i) const;
  Rat i_simple(int i) const;
  Rat ntilde_simple(int i) const;

  const Lattice& Y_Qn() const { return y_qn_; }
  const Lattice& Y_sc() const { return y_sc_; }
  const Lattice& Y_Qn_sc() const { return y_qn_sc_; }
  const Lattice& Ytilde_Qn_sc() const { return yt_qn_sc_; }

  bool saturated() const;
  // |Y_{Q,n} / (nY + Y^{sc}_{Q,n})|
  i64 torsor_size() const;
  RootDatum dual_datum() const;

  // exceptional character: pairings with simple coroots are 1/n_α (resp. 1/ñ_α);
  // canonical representative in span(Δ), returned in X ⊗ Q coordinates
  RVec nu_pairings() const;
  RVec nu_tilde_pairings() const;
  RVec nu() const;
  RVec nu_tilde() const;

  std::string summary() const;

 private:
  int simple_index(int i) const;

  RootDatum d_;
  QuadraticForm f_;
  i64 n_;
  std::vector<i64> n_root_;
  std::vector<Rat> i_root_;
  Lattice y_qn_, y_sc_, y_qn_sc_, yt_qn_sc_;
};

}  // namespace wf
