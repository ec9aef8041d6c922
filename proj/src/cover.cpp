#include "wf/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wf/linalg.hpp"

namespace wf {

i64 QuadraticForm::B(const Vec& y, const Vec& z) const { return dot(y, gram * z); }

i64 QuadraticForm::Q(const Vec& y) const { return B(y, y) / 2; }

QuadraticForm form_from_simple_values(const RootDatum& d, const std::vector<i64>& values) {
  int r = d.rank();
  if (!d.semisimple()) throw InputError("simple-coroot values determine Q only for semisimple data");
  if (static_cast<int>(values.size()) != r) throw InputError("need one Q value per simple coroot");
  IntMat bc(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) bc(i, j) = mul_ck(values[i], d.cartan(j, i));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (bc(i, j) != bc(j, i)) throw InputError("Q values are not compatible with root lengths");
  IntMat c = IntMat::from_columns(d.simple_coroots(), d.dim());
  std::vector<RVec> cinv;  // columns of C^{-1}
  for (int k = 0; k < r; ++k) {
    RVec e(r, Rat(0));
    e[k] = 1;
    cinv.push_back(solve_rational(c, e));
  }
  QuadraticForm f{IntMat(r, r)};
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Rat s(0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += cinv[a][i] * Rat(bc(i, j)) * cinv[b][j];
      if (!is_integer(s)) throw InputError("Q does not extend to an integral form on Y");
      f.gram(a, b) = s.numerator();
    }
  for (int a = 0; a < r; ++a)
    if (f.gram(a, a) % 2 != 0) throw InputError("Q is not integral on Y");
  return f;
}

QuadraticForm kazhdan_patterson_form(int r, i64 p, i64 q) {
  if (2 * p - q != -1) throw InputError("Kazhdan-Patterson parameters need 2p - q = -1");
  QuadraticForm f{IntMat(r, r)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) f.gram(i, j) = (i == j) ? 2 * p : q;
  return f;
}

QuadraticForm default_form(const RootDatum& d, const std::string& preset, i64 q) {
  int m = d.dim();
  if (preset == "GL") return kazhdan_patterson_form(m, 0, 1);
  if (preset == "SO") {
    QuadraticForm f{IntMat(m, m)};
    for (int i = 0; i < m; ++i) f.gram(i, i) = 2 * q;
    return f;
  }
  if (preset == "GSpin") {
    QuadraticForm f{IntMat(m, m)};
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == 0 || j == 0)
          f.gram(i, j) = (i == j) ? 4 * q : 2 * q;
        else
          f.gram(i, j) = (i == j) ? 2 * q : q;
      }
    return f;
  }
  IntMat g = simple_root_gram(d.type());
  i64 gmax = 0;
  for (int i = 0; i < d.rank(); ++i) gmax = std::max(gmax, g(i, i));
  std::vector<i64> vals;
  for (int i = 0; i < d.rank(); ++i) vals.push_back(q * (gmax / g(i, i)));
  return form_from_simple_values(d, vals);
}

void check_weyl_invariant(const RootDatum& d, const QuadraticForm& f) {
  const IntMat& b = f.gram;
  if (b.rows() != d.dim() || b.cols() != d.dim()) throw InputError("Gram matrix has wrong size");
  if (!(b == b.transpose())) throw InputError("B_Q is not symmetric");
  for (int i = 0; i < d.dim(); ++i)
    if (b(i, i) % 2 != 0) throw InputError("Q is not integral");
  for (int i = 0; i < d.rank(); ++i) {
    IntMat s = d.reflection_y(i);
    if (!(s.transpose() * b * s == b)) throw InputError("quadratic form is not Weyl-invariant");
  }
}

// ---------------------------------------------------------------- Cover

Cover::Cover(RootDatum d, QuadraticForm f, i64 n) : d_(std::move(d)), f_(std::move(f)), n_(n) {
  if (n < 1) throw InputError("degree n must be >= 1");
  check_weyl_invariant(d_, f_);
  int dim = d_.dim();
  const IntMat& b = f_.gram;

  // Y_{Q,n} = {y : B y ∈ nZ^d}; with U B V = D, y = V x and d_i x_i ∈ nZ
  auto s = smith(b);
  IntMat scale(dim, dim);
  for (int i = 0; i < dim; ++i) scale(i, i) = n / std::gcd(n, s.D(i, i));
  y_qn_ = Lattice::span(s.V * scale);

  for (int k = 0; k < d_.num_positive(); ++k) {
    Vec c = d_.coroot_y(k);
    i64 q = f_.Q(c);
    n_root_.push_back(n / std::gcd(n, q));
    // smallest m with m c ∈ Y_{Q,n}
    Vec bc = b * c;
    i64 g = 0;
    for (i64 x : bc) g = std::gcd(g, x);
    i64 m = n / std::gcd(n, g);
    Rat ia(m, n_root_.back());
    if (ia != Rat(1) && ia != Rat(1, 2)) throw std::logic_error("unexpected i_alpha " + rat_str(ia));
    i_root_.push_back(ia);
  }
  for (int i = 0; i < d_.rank(); ++i)
    if (d_.height(i) != 1 || d_.pos_root_coeffs()[i][i] != 1) throw std::logic_error("root order");

  y_sc_ = Lattice::span(d_.simple_coroots(), dim);
  std::vector<Vec> g1, g2;
  for (int i = 0; i < d_.rank(); ++i) g1.push_back(vscale(d_.simple_coroots()[i], n_root_[i]));
  for (int k = 0; k < d_.num_positive(); ++k) {
    Rat nt = ntilde_root(k);
    if (!is_integer(nt)) throw std::logic_error("non-integral rescaled coroot");
    g2.push_back(vscale(d_.coroot_y(k), nt.numerator()));
  }
  y_qn_sc_ = Lattice::span(g1, dim);
  yt_qn_sc_ = Lattice::span(g2, dim);
}

int Cover::simple_index(int i) const { return i; }
i64 Cover::n_simple(int i) const { return n_root_[simple_index(i)]; }
Rat Cover::i_simple(int i) const { return i_root_[simple_index(i)]; }
Rat Cover::ntilde_simple(int i) const { return ntilde_root(simple_index(i)); }

bool Cover::saturated() const { return y_sc_.intersect(y_qn_) == y_qn_sc_; }

i64 Cover::torsor_size() const {
  Lattice sub = Lattice::scaled(d_.dim(), n_) + y_qn_sc_;
  return y_qn_.index_of(sub);
}

RootDatum Cover::dual_datum() const {
  const IntMat& p = y_qn_.basis();
  IntMat pt = p.transpose();
  std::vector<Vec> roots, coroots;
  for (int i = 0; i < d_.rank(); ++i) {
    auto c = y_qn_.coords(vscale(d_.simple_coroots()[i], n_simple(i)));
    if (!c) throw std::logic_error("rescaled coroot outside Y_{Q,n}");
    roots.push_back(*c);
    Vec a = pt * d_.simple_roots()[i];
    for (i64& x : a) {
      if (x % n_simple(i) != 0) throw std::logic_error("rescaled root not integral on Y_{Q,n}");
      x /= n_simple(i);
    }
    coroots.push_back(a);
  }
  return auto_typed_datum("dual(" + d_.name() + ")", d_.dim(), roots, coroots);
}

RVec Cover::nu_pairings() const {
  RVec p;
  for (int i = 0; i < d_.rank(); ++i) p.push_back(Rat(1, n_simple(i)));
  return p;
}

RVec Cover::nu_tilde_pairings() const {
  RVec p;
  for (int i = 0; i < d_.rank(); ++i) p.push_back(Rat(1) / ntilde_simple(i));
  return p;
}

RVec Cover::nu() const { return d_.weight_from_pairings(nu_pairings()); }
RVec Cover::nu_tilde() const { return d_.weight_from_pairings(nu_tilde_pairings()); }

std::string Cover::summary() const {
  std::ostringstream os;
  os << d_.name() << "^(" << n_ << ") n_alpha=[";
  for (int i = 0; i < d_.rank(); ++i) os << (i ? "," : "") << n_simple(i);
  os << "] ntilde=[";
  for (int i = 0; i < d_.rank(); ++i) os << (i ? "," : "") << rat_str(ntilde_simple(i));
  os << "]";
  return os.str();
}

}  // namespace wf
