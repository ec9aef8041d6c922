#include <random>

#include "doctest.h"
#include "wf/linalg.hpp"
#include "wf/wavefront.hpp"

using namespace wf;

namespace {

Cover make(const std::string& preset, int r, i64 n, i64 q = 1) {
  auto d = make_preset(preset, r);
  return Cover(d, default_form(d, preset, q), n);
}

// f_X and f_Y through the weight and coweight pairings rather than coefficients
RatSet fx_oracle(const Cover& c) {
  const auto& d = c.datum();
  RatSet s;
  for (int k = 0; k < d.num_positive(); ++k) s.push_back(rdot(c.nu_tilde(), d.coroot_y(k)));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}
RatSet fy_oracle(const Cover& c) {
  const auto& d = c.datum();
  Vec two_rho = d.two_rho_vee();
  RatSet s;
  for (int k = 0; k < d.num_positive(); ++k) {
    Vec a = d.root_x(k);
    i64 p = 0;
    for (size_t i = 0; i < a.size(); ++i) p += a[i] * two_rho[i];
    s.push_back(Rat(p, 2) / c.ntilde_root(k));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct Preset {
  std::string name;
  int r;
};
std::vector<Preset> image_presets() {
  std::vector<Preset> out;
  for (int r = 2; r <= 7; ++r) {
    out.push_back({"SL", r});
    out.push_back({"Sp", r});
    out.push_back({"Spin", r});
    if (r >= 4) out.push_back({"SpinEven", r});
  }
  for (int r : {6, 7, 8}) out.push_back({"E", r});
  out.push_back({"F", 4});
  out.push_back({"G", 2});
  return out;
}

Partition sp_orbit_partition(int r, int n) {
  Partition p(2 * r / n, n);
  if (2 * r % n) p.push_back(2 * r % n);
  return collapse_symplectic(p);
}

Partition repeat(int v, int k) { return Partition(k, v); }

// the four cases for n = 2m+1 odd, r = an + b
Bipartition sp_expected_label(int r, int n) {
  int m = (n - 1) / 2, a = r / n, b = r % n;
  if (n >= 2 * r + 1) return {{r}, {}};
  if (n > r) return {{m}, {r - m}};
  if (b == 0) return {repeat(m, a), repeat(m + 1, a)};
  if (b >= (n + 1) / 2) {
    Partition eta = repeat(n - m, a);
    eta.push_back(b - m);
    return {repeat(m, a + 1), normalized(eta)};
  }
  Partition xi = repeat(m, a);
  xi.push_back(b);
  return {normalized(xi), repeat(m + 1, a)};
}

std::string dc_types(int d, int c) {
  return types_str(canonical_types({{Series::D, d}, {Series::C, c}}));
}

}  // namespace

TEST_CASE("f_X and f_Y images match the pairing oracle and the closed forms") {
  int with_form = 0;
  for (const auto& p : image_presets())
    for (i64 n = 1; n <= 12; ++n) {
      auto c = make(p.name, p.r, n);
      INFO(c.datum().name() << " n=" << n);
      auto fx = image_fx(c), fy = image_fy(c);
      CHECK(fx == fx_oracle(c));
      CHECK(fy == fy_oracle(c));
      CHECK(fx == fy);
      auto cf = closed_form_image(c);
      REQUIRE(cf);
      CHECK(*cf == fx);
      ++with_form;
    }
  CHECK(with_form == static_cast<int>(image_presets().size()) * 12);
}

TEST_CASE("closed forms, worked values") {
  // simply laced: [1, ht]/n
  CHECK(image_fx(make("SL", 3, 2)) == interval_over(1, 3, Rat(2)));
  // B3, n = 2: n_long = 2 n_short, [1, 6]/2
  auto b = make("Spin", 3, 2);
  CHECK(b.n_simple(0) == 2);
  CHECK(b.n_simple(2) == 1);
  CHECK(image_fx(b) == interval_over(1, 6, Rat(2)));
  // G2, n = 3: n_long = 3 n_short
  auto g = make("G", 2, 3);
  CHECK(g.n_simple(1) == 3 * g.n_simple(0));
  RatSet expect{Rat(1, 3), Rat(4, 3), Rat(5, 3), Rat(1), Rat(2), Rat(3)};
  std::sort(expect.begin(), expect.end());
  CHECK(image_fx(g) == expect);
  CHECK(render_set(interval_over(1, 3, Rat(2))) == "{1/2, 1, 3/2}");
}

TEST_CASE("minimal generic n") {
  auto e8 = make_preset("E", 8);
  CHECK(minimal_generic_n(e8, default_form(e8, "E", -1)) == 30);
  auto e6 = make_preset("E", 6);
  CHECK(minimal_generic_n(e6, default_form(e6, "E", 1)) == 12);
  auto sl = make_preset("SL", 4);
  CHECK(minimal_generic_n(sl, default_form(sl, "SL", 1)) == 5);
  // generic exactly from the reported n onwards in these cases
  for (i64 n = 1; n <= 40; ++n) {
    bool generic = !meets_integers(image_fx(Cover(e8, default_form(e8, "E", -1), n)));
    CHECK(generic == (n >= 30));
  }
}

TEST_CASE("genericity criteria agree on persistent covers") {
  ReportOptions opt;
  opt.scan_minimal_n = false;
  int checked = 0, generic = 0;
  std::vector<std::tuple<std::string, int, int>> cases;
  for (int r = 1; r <= 4; ++r) cases.push_back({"SL", r, 8});
  for (int r = 2; r <= 4; ++r) {
    cases.push_back({"Sp", r, 8});
    cases.push_back({"Spin", r, 8});
    cases.push_back({"GL", r, 6});
    cases.push_back({"SO", r, 6});
  }
  cases.push_back({"G", 2, 12});
  cases.push_back({"F", 4, 6});
  for (auto [preset, r, nmax] : cases)
    for (i64 n = 1; n <= nmax; ++n) {
      auto c = make(preset, r, n);
      if (c.Y_Qn().index() > 100000) continue;
      if (check_persistence(c).value != Tri::yes) continue;
      INFO(c.datum().name() << " n=" << n);
      auto g = genericity_report(c, opt);
      REQUIRE(g.some_free);
      CHECK(g.consistent());
      CHECK(g.images_equal);
      ++checked;
      if (g.w_trivial) {
        ++generic;
        auto oc = enumerate_orbits(c.datum(), c.Y_Qn());
        CHECK(predict_c(c) == oc.num_free);
        CHECK(dim_whittaker(c) == oc.num_free);
        CHECK(predict_orbit(c) == regular_orbit(c.datum().type()));
      } else {
        CHECK(dim_whittaker(c) == 0);
      }
    }
  CHECK(checked > 100);
  CHECK(generic > 20);
}

TEST_CASE("small covers: c_O and dim Wh") {
  auto sl2 = make("SL", 1, 3);
  CHECK(predict_c(sl2) == 1);
  CHECK(dim_whittaker(sl2) == 1);
  CHECK(predict_orbit(sl2) == regular_orbit(sl2.datum().type()));
  for (auto [p, r] : std::vector<std::pair<std::string, int>>{{"SL", 3}, {"Sp", 3}, {"Spin", 3}, {"G", 2}, {"F", 4}}) {
    auto c = make(p, r, 1);
    CHECK(predict_c(c) == 1);
    if (p != "F") CHECK(predict_orbit(c) == zero_orbit(c.datum().type()));
  }
}

TEST_CASE("non-persistent covers: c_O withheld, prediction flagged") {
  // Spin_{2r+1}, r even, n = 2k with k odd
  auto c = make("Spin", 2, 6);
  REQUIRE(check_persistence(c).value == Tri::no);
  CHECK_FALSE(predict_c(c));
  auto rep = analyze(c);
  CHECK_FALSE(rep.c_O);
  CHECK(rep.orbit);
  bool flagged = false;
  for (auto& f : rep.flags) flagged = flagged || f.find("outside stated hypotheses") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("symplectic covers of odd degree") {
  for (int n : {3, 5, 7, 9})
    for (int r = 2; r <= 8; ++r) {
      INFO("r=" << r << " n=" << n);
      auto c = make("Sp", r, n);
      WeylGroup W(c.datum());
      auto T = irreducible_table(W);
      auto j = macdonald_rep(T, integral_subsystem(c.datum(), c.nu_tilde()).info.positive);
      auto parsed = parse_classical_label(c.datum().type(), j.label);
      REQUIRE(parsed);
      CHECK(parsed->first == sp_expected_label(r, n));
      auto o = predict_orbit(c);
      CHECK(o.partition == sp_orbit_partition(r, n));
    }
}

TEST_CASE("general linear covers") {
  for (int r = 2; r <= 8; ++r)
    for (int n = 2; n <= 6; ++n) {
      INFO("r=" << r << " n=" << n);
      auto d = make_preset("GL", r);
      Cover c(d, kazhdan_patterson_form(r, 0, 1), n);
      Partition expect(r / n, n);
      if (r % n) expect.push_back(r % n);
      CHECK(predict_orbit(c).partition == expect);
    }
}

TEST_CASE("Sp four-fold covers") {
  for (int r = 2; r <= 8; ++r) {
    INFO("r=" << r);
    auto c = make("Sp", r, 4);
    int a = r / 2;
    auto s = integral_subsystem(c.datum(), c.nu_tilde());
    CHECK(s.types() == dc_types(r % 2 ? a + 1 : a, a));
    CHECK(predict_orbit(c).partition == Partition(r, 2));
  }
}

TEST_CASE("SO_{2r+1} four-fold covers") {
  for (int r = 2; r <= 7; ++r) {
    INFO("r=" << r);
    auto c = make("SO", r, 4);
    int m = r / 2;
    CHECK(c.saturated());
    auto s = integral_subsystem(c.datum(), c.nu());
    std::vector<CartanType> bt{{Series::B, r % 2 ? m + 1 : m}, {Series::B, m}};
    CHECK(s.types() == types_str(canonical_types(bt)));
    Partition expect(2 * m, 2);
    for (int i = 0; i < (r % 2 ? 3 : 1); ++i) expect.push_back(1);
    CHECK(predict_orbit(c).partition == expect);
  }
}

TEST_CASE("G2 triple cover prediction") {
  auto c = make("G", 2, 3);
  const auto& d = c.datum();
  auto s = integral_subsystem(d, c.nu());
  REQUIRE(s.num_positive() == 3);
  // coroots of Φ_ν are the long coroots
  for (int k : s.info.positive) CHECK(d.pair_coeffs(d.pos_root_coeffs()[k], d.pos_coroot_coeffs()[k]) == 2);
  auto rep = analyze(c);
  CHECK(rep.j_label == "phi''_{1,3}");
  auto& table = exceptional_springer(d.type());
  REQUIRE(rep.orbit);
  CHECK(rep.orbit->label == table.orbits[1].label);
  CHECK(rep.orbit->dim == 6);
  CHECK(rep.orbit_special == false);
}

TEST_CASE("predicted orbits lie between zero and regular") {
  for (int r = 2; r <= 5; ++r)
    for (i64 n = 1; n <= 8; ++n)
      for (std::string p : {"Sp", "Spin", "SL", "SO"}) {
        auto c = make(p, r, n);
        auto o = predict_orbit(c);
        auto t = c.datum().type();
        INFO(c.datum().name() << " n=" << n << " " << o.name());
        CHECK(valid_orbit_partition(t, o.partition));
        CHECK(closure_leq(zero_orbit(t), o));
        CHECK(closure_leq(o, regular_orbit(t)));
      }
}

TEST_CASE("saturation choice does not change the integral subsystem") {
  std::mt19937 rng(5);
  for (int r = 2; r <= 6; ++r)
    for (i64 n = 2; n <= 5; ++n) {
      auto d = make_preset("GL", r);
      Cover c(d, kazhdan_patterson_form(r, 0, 1), n);
      auto base = integral_subsystem(d, c.nu_tilde());
      for (int t = 0; t < 5; ++t) {
        // shift by a central weight, which pairs to zero with every coroot
        Rat z(std::uniform_int_distribution<int>(-20, 20)(rng), std::uniform_int_distribution<int>(1, 7)(rng));
        RVec nu = c.nu_tilde();
        for (auto& x : nu) x += z;
        CHECK(integral_subsystem(d, nu).info.positive == base.info.positive);
      }
    }
}

TEST_CASE("constituents: S = Δ recovers the theta prediction") {
  int used = 0;
  for (auto [p, r, n] : std::vector<std::tuple<std::string, int, int>>{
           {"SL", 3, 2}, {"SL", 4, 3}, {"Sp", 3, 3}, {"Sp", 4, 5}, {"Spin", 3, 3}, {"G", 2, 3}, {"SpinEven", 4, 2}}) {
    auto c = make(p, r, n);
    std::vector<int> all;
    for (int i = 0; i < c.datum().rank(); ++i) all.push_back(i);
    INFO(c.datum().name() << " n=" << n);
    auto pred = predict_orbit_for_constituent(c, c.nu_pairings(), all);
    CHECK(pred.phi_nu == all);
    CHECK(pred.orbit == predict_orbit(c));
    ++used;
  }
  CHECK(used == 7);
}

TEST_CASE("constituents: linear groups give induced zero orbits") {
  for (auto [p, r] : std::vector<std::pair<std::string, int>>{{"SL", 4}, {"Spin", 4}, {"Sp", 4}, {"SpinEven", 5}, {"G", 2}}) {
    auto c = make(p, r, 1);
    const auto& d = c.datum();
    auto t = d.type();
    RVec rho(d.rank(), Rat(1));
    for (int mask = 0; mask < (1 << d.rank()); ++mask) {
      std::vector<int> S;
      for (int i = 0; i < d.rank(); ++i)
        if (mask >> i & 1) S.push_back(i);
      INFO(t.name() << " mask " << mask);
      auto pred = predict_orbit_for_constituent(c, rho, S);
      if (mask == 0) CHECK(pred.orbit == regular_orbit(t));
      if (mask + 1 == (1 << d.rank())) CHECK(pred.orbit == zero_orbit(t));
      if (t.classical() && pred.levi_induced) {
        CHECK(pred.levi_trivial_local_systems);
        CHECK(*pred.levi_induced == pred.orbit);
      }
    }
  }
}

TEST_CASE("constituents: Levi cross-check on covers") {
  int agree = 0, skipped = 0;
  for (auto [p, r, n] : std::vector<std::tuple<std::string, int, int>>{
           {"Sp", 4, 3}, {"Sp", 5, 3}, {"Sp", 5, 5}, {"Sp", 4, 4}, {"SL", 5, 2}, {"SL", 5, 3}, {"Spin", 4, 3}}) {
    auto c = make(p, r, n);
    int rank = c.datum().rank();
    for (int mask = 0; mask < (1 << rank); ++mask) {
      std::vector<int> S;
      for (int i = 0; i < rank; ++i)
        if (mask >> i & 1) S.push_back(i);
      auto pred = predict_orbit_for_constituent(c, c.nu_pairings(), S);
      INFO(c.datum().name() << " n=" << n << " mask " << mask << " " << pred.orbit.name());
      if (!pred.levi_induced || !pred.levi_trivial_local_systems) {
        ++skipped;
        continue;
      }
      CHECK(*pred.levi_induced == pred.orbit);
      ++agree;
    }
  }
  MESSAGE(agree << " Levi cross-checks, " << skipped << " skipped");
  CHECK(agree > 150);
}

TEST_CASE("constituents: invalid ν and S are rejected") {
  auto c = make("SL", 3, 2);
  RVec zero(3, Rat(0));
  CHECK_THROWS_AS(predict_orbit_for_constituent(c, zero, {}), InputError);
  // Φ(ν) must sit inside Δ: ⟨ν, (α_1 + α_2)∨⟩ = 1/2
  RVec nu{Rat(1, 4), Rat(1, 4), Rat(1)};
  CHECK_THROWS_AS(predict_orbit_for_constituent(c, nu, {}), InputError);
  // S outside Φ(ν)
  RVec nu2{Rat(1, 2), Rat(1, 3), Rat(1, 2)};
  CHECK_THROWS_AS(predict_orbit_for_constituent(c, nu2, {1}), InputError);
  CHECK_NOTHROW(predict_orbit_for_constituent(c, nu2, {0, 2}));
}

TEST_CASE("report JSON round trip") {
  for (auto [p, r, n] : std::vector<std::tuple<std::string, int, int>>{
           {"Sp", 3, 3}, {"G", 2, 3}, {"Spin", 2, 6}, {"SL", 1, 3}, {"F", 4, 2}}) {
    auto rep = analyze(make(p, r, n));
    auto back = report_from_json(report_to_json(rep));
    CHECK(back == rep);
    CHECK(report_to_json(back) == report_to_json(rep));
    CHECK(!report_to_text(rep).empty());
  }
  CHECK_THROWS_AS(report_from_json("{"), InputError);
  CHECK_THROWS_AS(report_from_json(R"({"schema": 99})"), InputError);
}

TEST_CASE("analyze: F4 has no Springer table, E8 has no class table") {
  auto f = analyze(make("F", 4, 2));
  CHECK(f.j_label);
  CHECK_FALSE(f.orbit);
  CHECK(f.c_O);
  ReportOptions opt;
  opt.persistence_scan = 1000;
  auto e = analyze(make("E", 8, 2, -1), opt);
  CHECK_FALSE(e.j_label);
  CHECK_FALSE(e.c_O);
  CHECK(e.genericity.minimal_n == 30);
  CHECK(e.saturated);
}
