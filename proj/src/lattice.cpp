#include "wf/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wf {

IntMat::IntMat(std::initializer_list<std::initializer_list<i64>> rows) {
  r_ = static_cast<int>(rows.size());
  c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(r_) * c_);
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix");
    for (i64 x : row) a_.push_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<Vec>& cols, int dim) {
  IntMat m(dim, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != dim) throw std::invalid_argument("column dimension");
    for (int i = 0; i < dim; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

IntMat IntMat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

Vec IntMat::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec IntMat::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

void IntMat::set_col(int j, const Vec& v) {
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::transpose() const {
  IntMat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::hcat(const IntMat& o) const {
  if (o.r_ != r_) throw std::invalid_argument("hcat row mismatch");
  IntMat m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

IntMat IntMat::operator*(const IntMat& b) const {
  if (c_ != b.r_) throw std::invalid_argument("matrix product shape");
  IntMat m(r_, b.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      i64 x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.c_; ++j) m(i, j) = add_ck(m(i, j), mul_ck(x, b(k, j)));
    }
  return m;
}

Vec IntMat::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("matrix-vector shape");
  Vec out(r_, 0);
  for (int i = 0; i < r_; ++i) {
    i64 s = 0;
    for (int j = 0; j < c_; ++j) s = add_ck(s, mul_ck((*this)(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

IntMat IntMat::operator-(const IntMat& b) const {
  IntMat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = sub_ck(a_[k], b.a_[k]);
  return m;
}

IntMat IntMat::operator+(const IntMat& b) const {
  IntMat m(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = add_ck(a_[k], b.a_[k]);
  return m;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](i64 x) { return x == 0; });
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}
void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}
void IntMat::add_col(int j, int i, i64 k) {
  if (k == 0) return;
  for (int r = 0; r < r_; ++r) (*this)(r, j) = add_ck((*this)(r, j), mul_ck(k, (*this)(r, i)));
}
void IntMat::add_row(int j, int i, i64 k) {
  if (k == 0) return;
  for (int c = 0; c < c_; ++c) (*this)(j, c) = add_ck((*this)(j, c), mul_ck(k, (*this)(i, c)));
}
void IntMat::neg_col(int j) {
  for (int r = 0; r < r_; ++r) (*this)(r, j) = -(*this)(r, j);
}
void IntMat::neg_row(int j) {
  for (int c = 0; c < c_; ++c) (*this)(j, c) = -(*this)(j, c);
}

i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = add_ck(s, mul_ck(a[i], b[i]));
  return s;
}
Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add_ck(a[i], b[i]);
  return r;
}
Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sub_ck(a[i], b[i]);
  return r;
}
Vec vscale(const Vec& a, i64 k) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul_ck(a[i], k);
  return r;
}
bool vzero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

namespace {

// (col_p, col_j) <- (x col_p + y col_j, u col_p + v col_j), applied to H and V
void combine_cols(IntMat& M, int p, int j, i64 x, i64 y, i64 u, i64 v) {
  for (int r = 0; r < M.rows(); ++r) {
    i64 a = M(r, p), b = M(r, j);
    M(r, p) = add_ck(mul_ck(x, a), mul_ck(y, b));
    M(r, j) = add_ck(mul_ck(u, a), mul_ck(v, b));
  }
}

}  // namespace

ColumnHNF column_hnf(const IntMat& A) {
  IntMat H = A;
  int m = A.rows(), k = A.cols();
  IntMat V = IntMat::identity(k);
  int piv = 0;
  std::vector<int> prow;
  for (int i = 0; i < m && piv < k; ++i) {
    for (int j = piv + 1; j < k; ++j) {
      if (H(i, j) == 0) continue;
      i64 a = H(i, piv), b = H(i, j);
      if (a == 0) {
        H.swap_cols(piv, j);
        V.swap_cols(piv, j);
        continue;
      }
      i64 x, y;
      i64 g = ext_gcd(a, b, x, y);
      i64 u = -b / g, v = a / g;
      combine_cols(H, piv, j, x, y, u, v);
      combine_cols(V, piv, j, x, y, u, v);
    }
    if (H(i, piv) == 0) continue;
    if (H(i, piv) < 0) {
      H.neg_col(piv);
      V.neg_col(piv);
    }
    i64 p = H(i, piv);
    for (int j = 0; j < piv; ++j) {
      i64 q = floor_div(H(i, j), p);
      if (q != 0) {
        H.add_col(j, piv, -q);
        V.add_col(j, piv, -q);
      }
    }
    prow.push_back(i);
    ++piv;
  }
  ColumnHNF out;
  out.rank = piv;
  out.H = IntMat(m, piv);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < piv; ++j) out.H(i, j) = H(i, j);
  out.V = V;
  out.pivot_rows = prow;
  return out;
}

SmithForm smith(const IntMat& A) {
  int m = A.rows(), k = A.cols();
  IntMat D = A;
  IntMat U = IntMat::identity(m), V = IntMat::identity(k);
  int t = 0;
  for (; t < std::min(m, k); ++t) {
    while (true) {
      // pick the smallest nonzero entry of the trailing block as pivot
      int bi = -1, bj = -1;
      i64 best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < k; ++j) {
          i64 x = std::llabs(D(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) goto done;
      D.swap_rows(t, bi);
      U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      V.swap_cols(t, bj);
      bool clean = true;
      i64 p = D(t, t);
      for (int i = t + 1; i < m; ++i) {
        i64 q = D(i, t) / p;
        if (q) {
          D.add_row(i, t, -q);
          U.add_row(i, t, -q);
        }
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < k; ++j) {
        i64 q = D(t, j) / p;
        if (q) {
          D.add_col(j, t, -q);
          V.add_col(j, t, -q);
        }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < k; ++j)
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.add_row(t, bad, 1);
      U.add_row(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.neg_row(t);
      U.neg_row(t);
    }
  }
done:
  SmithForm s;
  s.diag.resize(std::min(m, k));
  for (int i = 0; i < std::min(m, k); ++i) s.diag[i] = D(i, i);
  s.U = U;
  s.V = V;
  s.D = D;
  return s;
}

IntMat integer_kernel(const IntMat& A) {
  auto h = column_hnf(A);
  int k = A.cols();
  IntMat K(k, k - h.rank);
  for (int j = h.rank; j < k; ++j)
    for (int i = 0; i < k; ++i) K(i, j - h.rank) = h.V(i, j);
  return K;
}

i64 determinant(const IntMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination in 128-bit
  std::vector<__int128> M(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[static_cast<size_t>(i) * n + j] = A(i, j);
  auto at = [&](int i, int j) -> __int128& { return M[static_cast<size_t>(i) * n + j]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(s, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  __int128 d = at(n - 1, n - 1) * sign;
  if (d > INT64_MAX || d < INT64_MIN) throw OverflowError();
  return static_cast<i64>(d);
}

IntMat unimodular_inverse(const IntMat& A) {
  auto h = column_hnf(A);
  if (h.rank != A.rows() || A.rows() != A.cols()) throw std::invalid_argument("matrix not invertible");
  for (int i = 0; i < h.rank; ++i)
    if (h.H(i, i) != 1) throw std::invalid_argument("matrix not unimodular");
  return h.V;
}

// ---------------------------------------------------------------- Lattice

Lattice Lattice::span(const IntMat& G) {
  Lattice L;
  L.dim_ = G.rows();
  auto h = column_hnf(G);
  L.basis_ = h.H;
  L.pivots_ = h.pivot_rows;
  return L;
}

Lattice Lattice::span(const std::vector<Vec>& gens, int dim) {
  if (gens.empty()) return Lattice(dim);
  return span(IntMat::from_columns(gens, dim));
}

Lattice Lattice::full(int dim) { return span(IntMat::identity(dim)); }

Lattice Lattice::scaled(int dim, i64 k) {
  IntMat m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = k;
  return span(m);
}

std::optional<Vec> Lattice::coords(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("lattice dimension mismatch");
  Vec res = v;
  Vec x(rank(), 0);
  for (int c = 0; c < rank(); ++c) {
    int p = pivots_[c];
    i64 piv = basis_(p, c);
    if (res[p] % piv != 0) return std::nullopt;
    i64 q = res[p] / piv;
    x[c] = q;
    if (q)
      for (int i = 0; i < dim_; ++i) res[i] = sub_ck(res[i], mul_ck(q, basis_(i, c)));
  }
  if (!vzero(res)) return std::nullopt;
  return x;
}

bool Lattice::contains(const Vec& v) const { return coords(v).has_value(); }

bool Lattice::contains(const Lattice& sub) const {
  for (int j = 0; j < sub.rank(); ++j)
    if (!contains(sub.basis_.col(j))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
  if (rank() == 0) return o;
  if (o.rank() == 0) return *this;
  return span(basis_.hcat(o.basis_));
}

Lattice Lattice::intersect(const Lattice& o) const {
  if (rank() == 0 || o.rank() == 0) return Lattice(dim_);
  IntMat neg = o.basis_;
  for (int i = 0; i < neg.rows(); ++i)
    for (int j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  IntMat K = integer_kernel(basis_.hcat(neg));
  if (K.cols() == 0) return Lattice(dim_);
  IntMat top(rank(), K.cols());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < K.cols(); ++j) top(i, j) = K(i, j);
  return span(basis_ * top);
}

Lattice Lattice::image(const IntMat& M) const {
  if (rank() == 0) return Lattice(M.rows());
  return span(M * basis_);
}

bool Lattice::stable_under(const IntMat& M) const { return contains(image(M)); }

i64 Lattice::index() const {
  if (!full_rank()) throw std::invalid_argument("index of a lattice that is not full rank");
  i64 p = 1;
  for (int c = 0; c < rank(); ++c) p = mul_ck(p, basis_(pivots_[c], c));
  return p;
}

i64 Lattice::index_of(const Lattice& sub) const {
  if (sub.rank() != rank()) throw std::invalid_argument("index_of: rank mismatch");
  IntMat C(rank(), rank());
  for (int j = 0; j < rank(); ++j) {
    auto x = coords(sub.basis_.col(j));
    if (!x) throw std::invalid_argument("index_of: not a sublattice");
    for (int i = 0; i < rank(); ++i) C(i, j) = (*x)[i];
  }
  return std::llabs(determinant(C));
}

// ---------------------------------------------------------- FiniteQuotient

FiniteQuotient::FiniteQuotient(const Lattice& L) : L_(L) {
  if (!L.full_rank()) throw std::invalid_argument("quotient by a lattice that is not full rank");
  auto s = smith(L.basis());
  U_ = s.U;
  Uinv_ = unimodular_inverse(U_);
  for (int i = 0; i < L.dim(); ++i)
    if (s.diag[i] > 1) {
      rows_.push_back(i);
      inv_.push_back(s.diag[i]);
      card_ = mul_ck(card_, s.diag[i]);
    }
}

Vec FiniteQuotient::project(const Vec& y) const {
  Vec u = U_ * y;
  Vec q(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) q[k] = mod_pos(u[rows_[k]], inv_[k]);
  return q;
}

i64 FiniteQuotient::encode(const Vec& q) const {
  i64 idx = 0;
  for (size_t k = 0; k < q.size(); ++k) idx = idx * inv_[k] + q[k];
  return idx;
}

Vec FiniteQuotient::decode(i64 idx) const {
  Vec q(inv_.size());
  for (size_t k = inv_.size(); k-- > 0;) {
    q[k] = idx % inv_[k];
    idx /= inv_[k];
  }
  return q;
}

Vec FiniteQuotient::lift(const Vec& q) const {
  Vec full(L_.dim(), 0);
  for (size_t k = 0; k < rows_.size(); ++k) full[rows_[k]] = q[k];
  return Uinv_ * full;
}

IntMat FiniteQuotient::induced(const IntMat& M) const {
  IntMat T = U_ * M * Uinv_;
  int s = static_cast<int>(rows_.size());
  IntMat R(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) R(a, b) = mod_pos(T(rows_[a], rows_[b]), inv_[a]);
  return R;
}

Vec FiniteQuotient::apply(const IntMat& A, const Vec& t, const Vec& q) const {
  Vec r(q.size());
  for (size_t a = 0; a < q.size(); ++a) {
    i64 s = t[a];
    for (size_t b = 0; b < q.size(); ++b) s = (s + A(static_cast<int>(a), static_cast<int>(b)) * q[b]) % inv_[a];
    r[a] = mod_pos(s, inv_[a]);
  }
  return r;
}

}  // namespace wf

namespace wf {

std::optional<Vec> solve_integer(const IntMat& A, const Vec& b) {
  // U A V = D; A x = b  <=>  D u = U b with x = V u
  auto s = smith(A);
  Vec ub = s.U * b;
  int k = std::min(A.rows(), A.cols());
  Vec u(A.cols(), 0);
  for (int i = 0; i < A.rows(); ++i) {
    i64 di = i < k ? s.D(i, i) : 0;
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      u[i] = ub[i] / di;
    }
  }
  return s.V * u;
}

}  // namespace wf
