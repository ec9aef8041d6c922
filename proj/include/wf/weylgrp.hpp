#pragma once
// Weyl groups: conjugacy classes with representatives, exceptional groups as
// permutation groups on roots, element enumeration, and the twisted action
// w[y] = w(y - ρ∨) + ρ∨ on finite quotients Y/L.

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wf/partition.hpp"
#include "wf/rootdata.hpp"

namespace wf {

// w(e_j) = sign[j] e_{perm[j]} in the ε-coordinates of a classical realization
struct SignedPerm {
  std::vector<int> perm, sign;

  static SignedPerm identity(int m);
  int degree() const { return static_cast<int>(perm.size()); }
  SignedPerm operator*(const SignedPerm& b) const;  // (a*b)(x) = a(b(x))
  SignedPerm inverse() const;
  Vec apply(const Vec& v) const;
  bool operator==(const SignedPerm&) const = default;
};

// positive-cycle and negative-cycle lengths
Bipartition signed_cycle_type(const SignedPerm& w);
// parity of sign flips needed to conjugate w to a plain permutation by a
// diagonal sign change (meaningful when all cycles are positive)
int flip_parity(const SignedPerm& w);
// reflection in the i-th simple root, ε-coordinates
SignedPerm simple_reflection_eps(const CartanType& t, int i);
// reduced word (as a product s_{w0} s_{w1} ...) of a signed permutation
std::vector<int> word_of(const CartanType& t, const SignedPerm& w);
// ε(w) as a signed permutation: sgn(perm) · Π signs
int sign_of(const SignedPerm& w);

struct ConjClass {
  std::string label;
  i64 size = 0;
  std::vector<int> word;  // representative s_{w0} s_{w1} ...
  int sign = 1;           // ε(w)
  int order = 1;
  // classical data: signed cycle type and, for split D classes, ±1
  Bipartition cycles;
  int split = 0;
};

// W acting on the 2|Φ+| roots; root k < N is the k-th positive root, N + k its negative.
class PermGroup {
 public:
  using Perm = std::string;  // point images as bytes
  explicit PermGroup(const RootDatum& d, i64 max_order = 200000);

  i64 order() const { return static_cast<i64>(elems_.size()); }
  int num_points() const { return npts_; }
  const Perm& element(int i) const { return elems_[i]; }
  const Perm& generator(int i) const { return gens_[i]; }
  int index_of(const Perm& p) const;
  int class_of(int elem) const { return class_of_[elem]; }
  std::vector<int> word(int elem) const;
  static Perm compose(const Perm& a, const Perm& b);
  static Perm invert(const Perm& a);
  int sign(int elem) const { return sign_[elem]; }
  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_rep(int c) const { return class_reps_[c]; }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }
  // index of the point representing root coefficients c (either sign), or -1
  int point_of(const Vec& coeffs) const;
  // element reflecting in positive root k
  Perm reflection(int k) const;

 private:
  int npts_ = 0, npos_ = 0;
  std::vector<Vec> points_;
  std::vector<Perm> gens_, elems_;
  std::unordered_map<Perm, int> index_;
  std::vector<int> parent_, pgen_, sign_, class_of_, class_reps_;
  std::vector<std::vector<int>> class_members_;
};

class WeylGroup {
 public:
  // Irreducible root systems. Exceptional types need |W| <= max_perm_order
  // (E7 and E8 are rejected with BudgetError at the default).
  explicit WeylGroup(const RootDatum& d, i64 max_perm_order = 200000);

  const RootDatum& datum() const { return d_; }
  const CartanType& type() const { return d_.type(); }
  i64 order() const { return order_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ConjClass& cls(int i) const { return classes_[i]; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  IntMat class_matrix(int i) const { return d_.word_matrix(classes_[i].word); }
  int identity_class() const { return 0; }

  bool classical() const { return type().classical(); }
  // classical: class index of a signed cycle type (split = ±1 for split D classes)
  int class_index(const Bipartition& cycles, int split = 0) const;
  int class_of(const SignedPerm& w) const;
  int eps_degree() const;  // number of ε-coordinates
  const PermGroup* perm_group() const { return pg_.get(); }
  // class of the reflection in simple root i
  int reflection_class(int i) const;

 private:
  void build_classical();
  void build_exceptional(i64 max_perm_order);

  RootDatum d_;
  i64 order_ = 0;
  std::vector<ConjClass> classes_;
  std::unordered_map<std::string, int> by_key_;
  std::shared_ptr<PermGroup> pg_;
};

// Visit every element of W as a matrix on Y, by increasing length, keeping two
// length layers in memory. Stops early when `visit` returns false; returns
// false in that case.
bool for_each_element(const RootDatum& d, const std::function<bool(const IntMat&)>& visit);

// ------------------------------------------------------------ twisted action

// t_w = ρ∨ - w(ρ∨), integral
Vec twisted_translation(const RootDatum& d, const IntMat& w);
// #{y ∈ Y/L : w[y] = y} = [t_w ∈ (1-w)Y + L] · [Y : (1-w)Y + L]
i64 fixed_point_count(const RootDatum& d, const Lattice& L, const IntMat& w);
// σ^X as a class function
std::vector<i64> permutation_character(const WeylGroup& W, const Lattice& L);

struct OrbitData {
  i64 quotient_size = 0;
  i64 num_orbits = 0;
  i64 num_free = 0;
  bool zero_free = false;
  bool two_rho_free = false;
  std::vector<i64> orbit_sizes;  // sorted decreasing
};
// Enumerate twisted orbits on Y/L by union-find; BudgetError above `budget`.
OrbitData enumerate_orbits(const RootDatum& d, const Lattice& L, i64 budget = 10000000);

}  // namespace wf
