#pragma once
// Exact integer matrices, Hermite/Smith normal forms, sublattices of Z^d
// and finite quotients Z^d / L.

#include <optional>
#include <string>
#include <vector>

#include "wf/intmath.hpp"

namespace wf {

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<i64>> rows);

  static IntMat identity(int n);
  static IntMat from_columns(const std::vector<Vec>& cols, int dim);
  static IntMat from_rows(const std::vector<Vec>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  i64& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  i64 operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
  IntMat transpose() const;
  IntMat hcat(const IntMat& other) const;

  IntMat operator*(const IntMat& b) const;
  Vec operator*(const Vec& v) const;
  IntMat operator-(const IntMat& b) const;
  IntMat operator+(const IntMat& b) const;
  bool operator==(const IntMat& b) const = default;

  bool is_zero() const;
  std::string str() const;

  // column operations used by the normal-form routines
  void swap_cols(int i, int j);
  void swap_rows(int i, int j);
  // col_j += k * col_i
  void add_col(int j, int i, i64 k);
  void add_row(int j, int i, i64 k);
  void neg_col(int j);
  void neg_row(int j);

  const std::vector<i64>& data() const { return a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<i64> a_;
};

i64 dot(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Vec& a, i64 k);
bool vzero(const Vec& a);

// Column-style Hermite normal form. A*V = [H | 0] with V unimodular, H of full
// column rank `rank`, lower-echelon with positive pivots and reduced entries
// left of each pivot.
struct ColumnHNF {
  IntMat H;      // rows(A) x rank
  IntMat V;      // cols(A) x cols(A), unimodular
  int rank = 0;
  std::vector<int> pivot_rows;
};
ColumnHNF column_hnf(const IntMat& A);

// Smith normal form U*A*V = D with U, V unimodular and d_1 | d_2 | ...
struct SmithForm {
  IntMat U, V, D;
  std::vector<i64> diag;  // length min(rows, cols), nonnegative
};
SmithForm smith(const IntMat& A);

// Integer kernel basis of A (columns).
IntMat integer_kernel(const IntMat& A);

// Some integer solution of A x = b, if one exists.
std::optional<Vec> solve_integer(const IntMat& A, const Vec& b);

// Determinant of a square integer matrix (exact, via fraction-free elimination).
i64 determinant(const IntMat& A);

// Inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& A);

// A sublattice of Z^d, stored by a canonical basis (columns of the HNF).
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(int dim) : dim_(dim), basis_(dim, 0) {}
  // lattice spanned by the columns of G
  static Lattice span(const IntMat& generators);
  static Lattice span(const std::vector<Vec>& generators, int dim);
  static Lattice full(int dim);
  static Lattice scaled(int dim, i64 k);

  int dim() const { return dim_; }
  int rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }
  bool full_rank() const { return rank() == dim_; }

  bool contains(const Vec& v) const;
  // coordinates of v in the stored basis, if v lies in the lattice
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Lattice& sub) const;
  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }

  Lattice operator+(const Lattice& o) const;
  Lattice intersect(const Lattice& o) const;
  Lattice image(const IntMat& M) const;  // M * L
  bool stable_under(const IntMat& M) const;

  // [Z^d : L] for full rank lattices
  i64 index() const;
  // [this : sub] for sub contained in this, both of equal rank
  i64 index_of(const Lattice& sub) const;

 private:
  int dim_ = 0;
  IntMat basis_;
  std::vector<int> pivots_;
};

// Z^d / L for a full-rank L, with explicit coordinates.
class FiniteQuotient {
 public:
  FiniteQuotient() = default;
  explicit FiniteQuotient(const Lattice& L);

  const Lattice& lattice() const { return L_; }
  // nontrivial invariant factors d_1 | d_2 | ...
  const std::vector<i64>& invariants() const { return inv_; }
  i64 cardinality() const { return card_; }

  // reduced coordinates in prod Z/d_i of a vector of Z^d
  Vec project(const Vec& y) const;
  // mixed-radix index in [0, cardinality)
  i64 encode(const Vec& q) const;
  Vec decode(i64 idx) const;
  // a vector of Z^d projecting onto the given reduced coordinates
  Vec lift(const Vec& q) const;
  // matrix of an endomorphism M (with M L ⊆ L) in quotient coordinates
  IntMat induced(const IntMat& M) const;
  // apply induced affine map q -> A q + t (reduced)
  Vec apply(const IntMat& A, const Vec& t, const Vec& q) const;

 private:
  Lattice L_;
  IntMat U_, Uinv_;
  std::vector<int> rows_;   // rows of U with d_i > 1
  std::vector<i64> inv_;
  i64 card_ = 1;
};

}  // namespace wf
