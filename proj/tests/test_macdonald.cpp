#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wf/cover.hpp"
#include "wf/linalg.hpp"
#include "wf/macdonald.hpp"

using namespace wf;

namespace {

Cover make(const std::string& preset, int r, i64 n, i64 q = 1) {
  auto d = make_preset(preset, r);
  return Cover(d, default_form(d, preset, q), n);
}

using Poly = std::map<std::vector<int>, Rat>;

Poly linear(const Vec& a) {
  Poly p;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i]) {
      std::vector<int> e(a.size(), 0);
      e[i] = 1;
      p[e] = Rat(a[i]);
    }
  return p;
}

Poly pmul(const Poly& a, const Poly& b) {
  Poly c;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c[e] += ca * cb;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == Rat(0) ? c.erase(it) : std::next(it);
  return c;
}

// dimension of the span of the W-orbit of Π_{α ∈ Φ'^+} α
int span_dimension(const RootDatum& d, const std::vector<int>& roots) {
  std::vector<Poly> orbit;
  for_each_element(d, [&](const IntMat& w) {
    std::vector<int> zero(d.dim(), 0);
    Poly p{{zero, Rat(1)}};
    for (int k : roots) p = pmul(p, linear(w.transpose() * d.root_x(k)));
    orbit.push_back(p);
    return true;
  });
  std::map<std::vector<int>, int> mono;
  for (auto& p : orbit)
    for (auto& [e, c] : p) mono.emplace(e, static_cast<int>(mono.size()));
  std::vector<std::vector<Rat>> rows;
  for (auto& p : orbit) {
    std::vector<Rat> r(mono.size(), Rat(0));
    for (auto& [e, c] : p) r[mono[e]] = c;
    rows.push_back(r);
  }
  int rank = 0;
  for (size_t col = 0; col < mono.size() && rank < static_cast<int>(rows.size()); ++col) {
    size_t p = rank;
    while (p < rows.size() && rows[p][col] == Rat(0)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][col] == Rat(0)) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (size_t j = col; j < mono.size(); ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("trivial and full subsystems") {
  for (CartanType t : {CartanType{Series::B, 3}, CartanType{Series::D, 4}, CartanType{Series::G, 2}}) {
    auto d = simply_connected(t);
    WeylGroup W(d);
    auto T = irreducible_table(W);
    CHECK(macdonald_rep(T, {}).index == T.trivial());
    std::vector<int> all;
    for (int k = 0; k < d.num_positive(); ++k) all.push_back(k);
    CHECK(macdonald_rep(T, all).index == T.sign());
  }
}

TEST_CASE("integral subsystem membership") {
  auto c = make("Sp", 4, 3);
  auto s = integral_subsystem(c.datum(), c.nu_tilde());
  const auto& d = c.datum();
  for (int k = 0; k < d.num_positive(); ++k) {
    bool in = std::find(s.info.positive.begin(), s.info.positive.end(), k) != s.info.positive.end();
    CHECK(in == (rdot(c.nu_tilde(), d.coroot_y(k)).denominator() == 1));
  }
}

TEST_CASE("G2 triple cover") {
  auto c = make("G", 2, 3);
  auto s = integral_subsystem(c.datum(), c.nu_tilde());
  CHECK(s.num_positive() == 3);
  CHECK(s.types() == "A2");
  // all three are short roots
  for (int k : s.info.positive) CHECK(c.datum().pair_coeffs(c.datum().pos_root_coeffs()[k], c.datum().pos_coroot_coeffs()[k]) == 2);
  WeylGroup W(c.datum());
  auto T = irreducible_table(W);
  CHECK(macdonald_rep(T, s.info.positive).label == "phi''_{1,3}");
}

TEST_CASE("symplectic odd covers, small cases") {
  // n > r: r - m copies of C1, j = (m; r-m)
  {
    auto c = make("Sp", 4, 5);
    auto s = integral_subsystem(c.datum(), c.nu_tilde());
    CHECK(s.types() == types_str(canonical_types({{Series::C, 1}, {Series::C, 1}})));
    WeylGroup W(c.datum());
    CHECK(macdonald_rep(irreducible_table(W), s.info.positive).label == "2;2");
  }
  // r = n: A_1 x C_1 for n = 3, j = (1; 2)
  {
    auto c = make("Sp", 3, 3);
    auto s = integral_subsystem(c.datum(), c.nu_tilde());
    CHECK(s.types() == types_str(canonical_types({{Series::A, 1}, {Series::C, 1}})));
    WeylGroup W(c.datum());
    CHECK(macdonald_rep(irreducible_table(W), s.info.positive).label == "1;2");
  }
}

TEST_CASE("general linear subsystems") {
  for (int r = 2; r <= 8; ++r)
    for (i64 n = 2; n <= 6; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      auto d = make_preset("GL", r);
      Cover c(d, kazhdan_patterson_form(r, 0, 1), n);
      auto s = integral_subsystem(d, c.nu_tilde());
      int q = r / static_cast<int>(n), t = r % static_cast<int>(n);
      std::vector<CartanType> expect;
      for (int i = 0; i < t; ++i)
        if (q >= 1) expect.push_back({Series::A, q});
      for (int i = 0; i < n - t; ++i)
        if (q - 1 >= 1) expect.push_back({Series::A, q - 1});
      CHECK(s.types() == types_str(canonical_types(expect)));
    }
}

TEST_CASE("A versus D x C identity") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    auto [l, r] = adc_identity_sides(k);
    CHECK(l == r);
  }
}

TEST_CASE("multiplicity one on random classical subsystems") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int r = 2; r <= 6; ++r)
    for (Series s : {Series::B, Series::C, Series::D}) {
      if (s == Series::D && r < 4) continue;
      auto d = simply_connected({s, r});
      WeylGroup W(d);
      auto T = irreducible_table(W);
      for (int trial = 0; trial < 15; ++trial) {
        auto roots = oracle::random_subsystem(d, rng);
        auto res = macdonald_rep(T, roots);
        CHECK(res.multiplicities[res.index] == 1);
        CHECK(T[res.index].b == static_cast<int>(roots.size()));
        ++checked;
      }
    }
  CHECK(checked == 13 * 15);
}

TEST_CASE("polynomial span model agrees with truncated induction") {
  std::mt19937 rng(11);
  for (CartanType t : {CartanType{Series::A, 2}, CartanType{Series::A, 3}, CartanType{Series::B, 2},
                       CartanType{Series::B, 3}, CartanType{Series::C, 3}, CartanType{Series::G, 2}}) {
    auto d = simply_connected(t);
    WeylGroup W(d);
    auto T = irreducible_table(W);
    for (int trial = 0; trial < 12; ++trial) {
      auto roots = oracle::random_subsystem(d, rng);
      CAPTURE(t.name());
      CAPTURE(roots.size());
      CHECK(span_dimension(d, roots) == T[macdonald_rep(T, roots).index].degree);
    }
  }
}
