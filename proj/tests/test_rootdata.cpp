#include <set>

#include "doctest.h"
#include "wf/rootdata.hpp"

using namespace wf;

TEST_CASE("positive root counts and highest heights") {
  struct Row {
    const char* t;
    int npos, h;
  } rows[] = {{"A1", 1, 1}, {"A5", 15, 5}, {"B2", 4, 3}, {"B4", 16, 7}, {"C3", 9, 5}, {"C5", 25, 9},
              {"D4", 12, 5}, {"D6", 30, 9}, {"E6", 36, 11}, {"E7", 63, 17}, {"E8", 120, 29},
              {"F4", 24, 11}, {"G2", 6, 5}};
  for (auto& r : rows) {
    auto d = simply_connected(CartanType::parse(r.t));
    CHECK_MESSAGE(d.num_positive() == r.npos, r.t);
    CHECK_MESSAGE(d.num_positive() == positive_root_count(d.type()), r.t);
    CHECK_MESSAGE(d.highest_root_height() == r.h, r.t);
  }
}

TEST_CASE("G2 root heights") {
  auto d = make_preset("G", 2);
  std::multiset<int> hs;
  for (int k = 0; k < d.num_positive(); ++k) hs.insert(d.height(k));
  CHECK(hs == std::multiset<int>{1, 1, 2, 3, 4, 5});
}

TEST_CASE("root and coroot pair to 2 and reflections preserve roots") {
  for (const char* t : {"B3", "C4", "D5", "F4", "G2", "E6"}) {
    auto d = simply_connected(CartanType::parse(t));
    std::set<Vec> roots;
    for (int k = 0; k < d.num_positive(); ++k) {
      roots.insert(d.root_x(k));
      roots.insert(vscale(d.root_x(k), -1));
      CHECK(dot(d.root_x(k), d.coroot_y(k)) == 2);
    }
    for (int i = 0; i < d.rank(); ++i) {
      IntMat s = d.reflection_y(i);
      CHECK(s * s == IntMat::identity(d.dim()));
      // s acts on X by the transpose
      IntMat st = s.transpose();
      for (auto& r : roots) CHECK(roots.count(st * r));
    }
  }
}

TEST_CASE("presets") {
  auto gl = make_preset("GL", 4);
  CHECK(gl.dim() == 4);
  CHECK_FALSE(gl.semisimple());
  CHECK(gl.two_rho_vee() == Vec{3, 1, -1, -3});
  auto so = make_preset("SO", 3);
  CHECK(so.type().name() == "B3");
  CHECK(so.two_rho_vee() == Vec{6, 4, 2});
  auto sp = make_preset("Sp", 3);
  CHECK(sp.type().name() == "C3");
  auto gs = make_preset("GSpin", 3);
  CHECK(gs.dim() == 4);
  CHECK(gs.num_positive() == 9);
  CHECK_THROWS_AS(make_preset("Foo", 3), InputError);
  CHECK_THROWS_AS(make_preset("SpinEven", 3), InputError);
}

TEST_CASE("json config round trip") {
  auto d = root_datum_from_json(R"({"name":"t","dim":2,"type":"C2",
    "simple_roots":[[2,-1],[-2,2]],"simple_coroots":[[1,0],[0,1]]})");
  CHECK(d.num_positive() == 4);
  CHECK_THROWS_AS(root_datum_from_json(R"({"dim":2,"type":"B2",
    "simple_roots":[[2,-1],[-2,2]],"simple_coroots":[[1,0],[0,1]]})"), InputError);
  CHECK_THROWS_AS(root_datum_from_json("{"), InputError);
}

TEST_CASE("dual datum swaps B and C") {
  auto sp = make_preset("Sp", 3);
  auto d = sp.dual("dual");
  CHECK(d.type().name() == "B3");
  auto g = make_preset("G", 2).dual("g");
  CHECK(g.type().name() == "G2");
  auto f = make_preset("F", 4).dual("f");
  CHECK(f.num_positive() == 24);
}

TEST_CASE("subsystem classification") {
  auto d = simply_connected(CartanType::parse("B3"));
  std::vector<int> all;
  for (int k = 0; k < d.num_positive(); ++k) all.push_back(k);
  CHECK(types_str(classify_subsystem(d, all).types) == "B3");
  // long roots of B3 form D3 = A3
  std::vector<int> lng;
  for (int k = 0; k < d.num_positive(); ++k)
    if (d.root_eps(d.pos_root_coeffs()[k]) != Vec{} && [&] {
          auto e = d.root_eps(d.pos_root_coeffs()[k]);
          int nz = 0;
          for (auto x : e) nz += x != 0;
          return nz == 2;
        }())
      lng.push_back(k);
  CHECK(types_str(classify_subsystem(d, lng).types) == "A3");
  auto e8 = simply_connected(CartanType::parse("E8"));
  std::vector<int> e8all;
  for (int k = 0; k < e8.num_positive(); ++k) e8all.push_back(k);
  CHECK(types_str(classify_subsystem(e8, e8all).types) == "E8");
  auto g2 = make_preset("G", 2);
  std::vector<int> lg;  // long roots of G2 form A2
  for (Vec c : {Vec{0, 1}, Vec{3, 1}, Vec{3, 2}}) lg.push_back(g2.find_root(c));
  CHECK(types_str(classify_subsystem(g2, lg).types) == "A2");
  CHECK(classify_subsystem(g2, {0}).types.size() == 1);
  CHECK_THROWS(classify_subsystem(g2, {0, 1}));
}
