#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wf/chars.hpp"

using namespace wf;
using namespace wf::oracle;

namespace {

WeylGroup group(Series s, int r) { return WeylGroup(simply_connected({s, r})); }

void check_table(const WeylGroup& W, const CharTable& T) { CHECK(table_defect(W, T) == ""); }

}  // namespace

TEST_CASE("S3 standard character") {
  auto W = group(Series::A, 2);
  auto T = irreducible_table(W);
  int k = T.find("2,1");
  REQUIRE(k >= 0);
  // standard representation on {x ∈ Z^3 : Σx = 0}: trace = (fixed points) - 1
  for (int c = 0; c < W.num_classes(); ++c) {
    int fixed = multiplicity(W.cls(c).cycles.first, 1);
    CHECK(T[k].values[c] == fixed - 1);
  }
  CHECK(T[k].values[W.class_index({{1, 1, 1}, {}})] == 2);
  CHECK(T[k].values[W.class_index({{2, 1}, {}})] == 0);
  CHECK(T[k].values[W.class_index({{3}, {}})] == -1);
}

TEST_CASE("type C2 labels") {
  auto W = group(Series::C, 2);
  auto T = irreducible_table(W);
  CHECK(T.size() == 5);
  for (std::string l : {"2;-", "1,1;-", "-;2", "-;1,1", "1;1"}) CHECK(T.find(l) >= 0);
}

TEST_CASE("classical tables are orthogonal") {
  for (int r = 1; r <= 8; ++r) {
    CAPTURE(r);
    auto W = group(Series::A, r);
    check_table(W, irreducible_table(W));
  }
  for (int r = 2; r <= 7; ++r) {
    CAPTURE(r);
    auto B = group(Series::B, r);
    check_table(B, irreducible_table(B));
    auto C = group(Series::C, r);
    check_table(C, irreducible_table(C));
  }
  for (int r = 4; r <= 7; ++r) {
    CAPTURE(r);
    auto D = group(Series::D, r);
    check_table(D, irreducible_table(D));
  }
}

TEST_CASE("b-invariants: closed forms agree with graded multiplicities") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::A, 5}, {Series::B, 3}, {Series::C, 4},
                                                         {Series::B, 5}, {Series::D, 4}, {Series::D, 5}, {Series::D, 6}}) {
    auto W = group(s, r);
    auto T = irreducible_table(W);
    for (auto& x : T.chars()) {
      CAPTURE(x.label);
      CHECK(b_invariant(W, x.values) == x.b);
    }
  }
  auto C = group(Series::C, 5);
  auto T = irreducible_table(C);
  CHECK(T[T.find("-;1,1,1,1,1")].b == 25);
  auto A = group(Series::A, 5);
  CHECK(irreducible_table(A)[irreducible_table(A).find("1,1,1,1,1,1")].b == 15);
}

TEST_CASE("seminormal form traces agree with Murnaghan-Nakayama") {
  for (int n = 2; n <= 7; ++n) {
    auto W = group(Series::A, n - 1);
    for (auto& lam : partitions(n)) {
      CAPTURE(to_string(lam));
      auto gens = seminormal(lam);
      size_t f = standard_tableaux(lam).size();
      // Coxeter relations, so the matrices do define a representation
      for (size_t i = 0; i < gens.size(); ++i) {
        CHECK(rmul(gens[i], gens[i]) == ident(f));
        for (size_t j = i + 1; j < gens.size(); ++j) {
          if (j == i + 1)
            CHECK(rmul(rmul(gens[i], gens[j]), gens[i]) == rmul(rmul(gens[j], gens[i]), gens[j]));
          else
            CHECK(rmul(gens[i], gens[j]) == rmul(gens[j], gens[i]));
        }
      }
      for (int c = 0; c < W.num_classes(); ++c) {
        RMat m = ident(f);
        for (int i : W.cls(c).word) m = rmul(m, gens[i]);
        CHECK(trace(m) == Rat(mn_value(lam, W.cls(c).cycles.first)));
      }
    }
  }
}

TEST_CASE("classical tables match Dixon-Schneider on the group") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 3},
                                                         {Series::A, 5},
                                                         {Series::A, 6},
                                                         {Series::B, 2},
                                                         {Series::B, 3},
                                                         {Series::C, 4},
                                                         {Series::B, 5},
                                                         {Series::D, 4},
                                                         {Series::D, 5}}) {
    auto W = group(s, r);
    CAPTURE(W.type().name());
    CHECK(dixon_rows(W) == table_rows(irreducible_table(W)));
  }
}

TEST_CASE("exceptional data files match Dixon-Schneider") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::G, 2}, {Series::F, 4}, {Series::E, 6}}) {
    auto W = group(s, r);
    CAPTURE(W.type().name());
    auto T = irreducible_table(W);
    check_table(W, T);
    CHECK(dixon_rows(W) == table_rows(T));
    for (auto& x : T.chars()) CHECK(b_invariant(W, x.values) == x.b);
  }
}

TEST_CASE("G2 one-dimensional characters") {
  auto W = group(Series::G, 2);
  auto T = irreducible_table(W);
  CHECK(T.size() == 6);
  int pp = T.find("phi''_{1,3}"), p = T.find("phi'_{1,3}");
  REQUIRE(pp >= 0);
  REQUIRE(p >= 0);
  CHECK(T[pp].b == 3);
  // α_1 short, α_2 long
  CHECK(T[pp].values[W.reflection_class(1)] == 1);
  CHECK(T[pp].values[W.reflection_class(0)] == -1);
  CHECK(T[p].values[W.reflection_class(1)] == -1);
  for (std::string l : {"phi_{1,0}", "phi_{1,6}", "phi_{2,1}", "phi_{2,2}"}) CHECK(T.find(l) >= 0);
}

TEST_CASE("table files reject tampering") {
  auto W = group(Series::G, 2);
  auto T = irreducible_table(W);
  std::string text = render_table_file(W, T.chars());
  CHECK(parse_table_file(W, text).size() == 6);
  std::string bad = text;
  bad[bad.find("char ") + 5] = 'x';
  CHECK_THROWS_AS(parse_table_file(W, bad), InputError);
}

TEST_CASE("sign induction: trivial and full subgroups") {
  auto W = group(Series::C, 2);
  auto T = irreducible_table(W);
  auto all = std::vector<int>{0, 1, 2, 3};
  CHECK(induce_sign(W, all) == sign_character(W));
  auto reg = induce_sign(W, {});
  CHECK(reg[W.identity_class()] == 8);
  for (int c = 1; c < W.num_classes(); ++c) CHECK(reg[c] == 0);
  // long root 2e_2 = α_2 in C2
  auto ind = induce_sign(W, {1});
  auto m = decompose(T, ind);
  i64 dim = 0;
  for (int i = 0; i < T.size(); ++i) dim += m[i] * T[i].degree;
  CHECK(dim == 4);
  CHECK(ind == induce_sign_enumerated(W, {1}));
}

TEST_CASE("sign induction by blocks agrees with enumeration") {
  std::mt19937 rng(7);
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 4},
                                                         {Series::B, 4},
                                                         {Series::C, 4},
                                                         {Series::D, 4},
                                                         {Series::D, 5},
                                                         {Series::B, 5},
                                                         {Series::G, 2},
                                                         {Series::F, 4}}) {
    auto W = group(s, r);
    const auto& d = W.datum();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> gens;
      int k = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int i = 0; i < k; ++i) gens.push_back(std::uniform_int_distribution<int>(0, d.num_positive() - 1)(rng));
      auto roots = oracle::reflection_closure(d, gens);
      CAPTURE(W.type().name());
      CAPTURE(roots.size());
      auto a = induce_sign(W, roots);
      CHECK(a == induce_sign_enumerated(W, roots));
      CHECK(a[W.identity_class()] * 1 > 0);
    }
  }
}

TEST_CASE("inner products") {
  auto W = group(Series::B, 3);
  auto e = sign_character(W);
  CHECK(inner_product(W, e, e) == 1);
  CHECK(inner_product(W, e, trivial_character(W)) == 0);
  ClassFunction half(W.num_classes(), 0);
  half[W.identity_class()] = 1;
  CHECK_THROWS(inner_product(W, half, trivial_character(W)));
}
