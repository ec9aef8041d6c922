#include "wf/wavefront.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wf/linalg.hpp"

namespace wf {

namespace {

RatSet sorted_unique(RatSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool all_equal(const std::vector<Rat>& v, int from, int to) {
  for (int i = from + 1; i < to; ++i)
    if (v[i] != v[from]) return false;
  return true;
}

Rat parse_rat(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("bad rational: " + s);
  }
}

int simple_root_index(const RootDatum& d, int i) {
  Vec e(d.rank(), 0);
  e[i] = 1;
  return d.find_root(e);
}

// character table of W, or nullopt when the group is too large
struct Tables {
  std::unique_ptr<WeylGroup> W;
  CharTable T;
};
std::optional<Tables> tables(const Cover& c, const ReportOptions& opt) {
  Tables t;
  try {
    t.W = std::make_unique<WeylGroup>(c.datum(), opt.max_perm_order);
  } catch (const BudgetError&) {
    return std::nullopt;
  }
  t.T = irreducible_table(*t.W);
  return t;
}

Tables require_tables(const Cover& c, const ReportOptions& opt) {
  auto t = tables(c, opt);
  if (!t) throw BudgetError("no character table for " + c.datum().type().name() + " within max_perm_order");
  return std::move(*t);
}

std::optional<OrbitData> orbits_within_budget(const Cover& c, const ReportOptions& opt) {
  if (c.Y_Qn().index() > opt.orbit_budget) return std::nullopt;
  return enumerate_orbits(c.datum(), c.Y_Qn(), opt.orbit_budget);
}

}  // namespace

// ------------------------------------------------------------ images

RatSet image_fx(const Cover& c) {
  const auto& d = c.datum();
  RatSet out;
  for (const auto& co : d.pos_coroot_coeffs()) {
    Rat s(0);
    for (int i = 0; i < d.rank(); ++i) s += Rat(co[i]) / c.ntilde_simple(i);
    out.push_back(s);
  }
  return sorted_unique(out);
}

RatSet image_fy(const Cover& c) {
  const auto& d = c.datum();
  RatSet out;
  for (int k = 0; k < d.num_positive(); ++k) out.push_back(Rat(d.height(k)) / c.ntilde_root(k));
  return sorted_unique(out);
}

bool meets_integers(const RatSet& s) {
  return std::any_of(s.begin(), s.end(), [](const Rat& r) { return r.denominator() == 1; });
}

RatSet interval_over(i64 lo, i64 hi, Rat d) {
  RatSet out;
  for (i64 a = lo; a <= hi; ++a) out.push_back(Rat(a) / d);
  return sorted_unique(out);
}

RatSet set_union(RatSet a, const RatSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted_unique(a);
}

std::string render_set(const RatSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + rat_str(s[i]);
  return out + "}";
}

std::optional<RatSet> closed_form_image(const Cover& c) {
  const auto& d = c.datum();
  const auto t = d.type();
  int r = d.rank();
  std::vector<Rat> n(r), nt(r);
  for (int i = 0; i < r; ++i) {
    n[i] = Rat(c.n_simple(i));
    nt[i] = c.ntilde_simple(i);
  }
  auto odd = [](std::initializer_list<i64> xs, Rat den) {
    RatSet s;
    for (i64 x : xs) s.push_back(Rat(x) / den);
    return sorted_unique(s);
  };
  switch (t.series) {
    case Series::A:
    case Series::D:
    case Series::E:
      if (!all_equal(n, 0, r)) return std::nullopt;
      return interval_over(1, d.highest_root_height(), n[0]);
    case Series::B:
      if (r == 2) {
        // as C2 with the short root first
        if (nt[0] == nt[1]) return interval_over(1, 3, nt[0]);
        if (Rat(2) * nt[1] == nt[0]) return set_union(interval_over(1, 3, Rat(2) * n[1]), interval_over(2, 2, n[1]));
        return std::nullopt;
      }
      if (all_equal(n, 0, r)) return interval_over(1, 2 * r - 1, n[0]);
      if (all_equal(n, 0, r - 1) && n[0] == Rat(2) * n[r - 1]) return interval_over(1, 2 * r, Rat(2) * n[r - 1]);
      return std::nullopt;
    case Series::C:
      if (all_equal(nt, 0, r)) return interval_over(1, 2 * r - 1, nt[0]);
      if (all_equal(nt, 0, r - 1) && Rat(2) * nt[0] == nt[r - 1])
        return set_union(interval_over(1, 2 * r - 1, Rat(2) * n[0]), interval_over(2, 2 * r - 2, n[0]));
      return std::nullopt;
    case Series::F:
      if (all_equal(n, 0, 4)) return interval_over(1, 11, n[0]);
      if (n[0] == n[1] && n[2] == n[3] && n[0] == Rat(2) * n[3])
        return set_union(interval_over(1, 8, n[3]), odd({1, 3, 5, 7, 9, 11}, Rat(2) * n[3]));
      return std::nullopt;
    case Series::G:
      if (n[0] == n[1]) return interval_over(1, 5, n[0]);
      if (n[1] == Rat(3) * n[0]) return set_union(odd({1, 4, 5}, Rat(3) * n[0]), odd({1, 2, 3}, n[0]));
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<i64> minimal_generic_n(const RootDatum& d, const QuadraticForm& f, i64 max_n) {
  for (i64 n = 1; n <= max_n; ++n)
    if (!meets_integers(image_fx(Cover(d, f, n)))) return n;
  return std::nullopt;
}

// ------------------------------------------------------------ genericity

bool Genericity::consistent() const {
  if (meets_integers(fx) == w_trivial) return false;
  for (const auto& flag : {two_rho_free, zero_free, some_free})
    if (flag && *flag != w_trivial) return false;
  if (two_rho_free && meets_integers(fy) == *two_rho_free) return false;
  return true;
}

Genericity genericity_report(const Cover& c, const ReportOptions& opt) {
  Genericity g;
  g.w_trivial = integral_subsystem(c.datum(), c.nu_tilde()).num_positive() == 0;
  g.fx = image_fx(c);
  g.fy = image_fy(c);
  g.images_equal = g.fx == g.fy;
  g.closed_form = closed_form_image(c);
  if (auto o = orbits_within_budget(c, opt)) {
    g.two_rho_free = o->two_rho_free;
    g.zero_free = o->zero_free;
    g.some_free = o->num_free > 0;
  }
  if (opt.scan_minimal_n) g.minimal_n = minimal_generic_n(c.datum(), c.form(), opt.max_scan_n);
  return g;
}

// ------------------------------------------------------------ predictions

NilpotentOrbit predict_orbit(const Cover& c, const ReportOptions& opt) {
  auto t = require_tables(c, opt);
  auto s = integral_subsystem(c.datum(), c.nu_tilde());
  auto j = macdonald_rep(t.T, s.info.positive);
  return springer_orbit(c.datum().type(), j.label);
}

std::optional<i64> predict_c(const Cover& c, const ReportOptions& opt) {
  if (check_persistence(c, opt.persistence_scan).value != Tri::yes) return std::nullopt;
  auto t = require_tables(c, opt);
  auto s = integral_subsystem(c.datum(), c.nu_tilde());
  auto j = macdonald_rep(t.T, s.info.positive);
  auto sigma = permutation_character(*t.W, c.Y_Qn());
  i64 v = inner_product(*t.W, t.T[j.index].values, tensor(sign_character(*t.W), sigma));
  if (v < 0) throw std::logic_error("negative c_O");
  return v;
}

i64 dim_whittaker(const Cover& c, const ReportOptions& opt) {
  auto o = orbits_within_budget(c, opt);
  auto t = tables(c, opt);
  if (!t) {
    if (!o) throw BudgetError("neither a class table nor an orbit enumeration fits the budget");
    return o->num_free;
  }
  auto sigma = permutation_character(*t->W, c.Y_Qn());
  i64 v = inner_product(*t->W, sign_character(*t->W), sigma);
  if (o && o->num_free != v)
    throw std::logic_error("free orbit count " + std::to_string(o->num_free) + " differs from <ε, σ> = " +
                           std::to_string(v));
  return v;
}

// ------------------------------------------------------------ constituents

namespace {

struct Block {
  CartanType type;              // A_{k-1} for GL_k, or the ambient series
  std::vector<int> simple;      // ambient simple indices, ascending
  bool same = false;
};

// Levi blocks of a classical type for the simple roots in S
std::vector<Block> levi_blocks(const CartanType& t, const std::vector<bool>& inS) {
  int r = t.rank;
  std::vector<Block> out;
  if (t.series == Series::A) {
    int start = 0;
    for (int i = 0; i <= r; ++i)
      if (i == r || !inS[i]) {
        Block b{{Series::A, i - start}, {}, false};
        for (int a = start; a < i; ++a) b.simple.push_back(a);
        out.push_back(b);
        start = i + 1;
      }
    return out;
  }
  std::vector<int> parent(r);
  for (int i = 0; i < r; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 0; i < r - 1; ++i)
    if (inS[i]) join(i, i + 1);
  bool tail_same;
  if (t.series == Series::D) {
    if (inS[r - 1]) join(r - 2, r - 1);
    tail_same = inS[r - 2] && inS[r - 1];
  } else {
    tail_same = inS[r - 1];
  }
  std::map<int, std::vector<int>> coords, roots;
  for (int i = 0; i < r; ++i) coords[find(i)].push_back(i);
  for (int i = 0; i < r; ++i) {
    if (!inS[i]) continue;
    int anchor = (t.series == Series::D && i == r - 1) ? r - 2 : i;
    roots[find(anchor)].push_back(i);
  }
  int tail = find(r - 1);
  for (auto& [root, cs] : coords) {
    int k = static_cast<int>(cs.size());
    bool same = tail_same && root == tail;
    Block b{same ? CartanType{t.series, k} : CartanType{Series::A, k - 1}, roots[root], same};
    std::sort(b.simple.begin(), b.simple.end());
    out.push_back(b);
  }
  return out;
}

// Springer orbit of j^{W(block)} for the block's integral subsystem
std::optional<std::pair<NilpotentOrbit, bool>> block_prediction(const Block& b, const RVec& pairings) {
  const auto& bt = b.type;
  int k = static_cast<int>(b.simple.size());
  if (k == 0) {
    if (bt.series == Series::A) return std::pair{make_orbit(bt, Partition(bt.rank + 1, 1)), true};
    return std::pair{make_orbit(bt, Partition(natural_dimension(bt), 1)), true};
  }
  if (b.same && k == 1 && bt.series != Series::D) {
    // so_3 or sp_2: integral root gives the sign, else the trivial character
    bool integral = pairings[b.simple[0]].denominator() == 1;
    int N = natural_dimension(bt);
    return std::pair{make_orbit(bt, integral ? Partition(N, 1) : Partition{N}), true};
  }
  if (!admissible(bt)) return std::nullopt;
  auto d = simply_connected(bt);
  RVec p;
  for (int i : b.simple) p.push_back(pairings[i]);
  auto s = integral_subsystem(d, d.weight_from_pairings(p));
  WeylGroup W(d);
  auto T = irreducible_table(W);
  auto j = macdonald_rep(T, s.info.positive);
  auto o = springer_orbit(bt, j.label);
  bool trivial = true;
  if (bt.series != Series::A) {
    auto inv = springer_inverse(o);
    trivial = parse_classical_label(bt, inv.label) == parse_classical_label(bt, j.label);
  }
  return std::pair{o, trivial};
}

}  // namespace

ConstituentPrediction predict_orbit_for_constituent(const Cover& c, const RVec& p, const std::vector<int>& S) {
  const auto& d = c.datum();
  int r = d.rank();
  if (static_cast<int>(p.size()) != r) throw InputError("ν needs one pairing per simple coroot");
  ConstituentPrediction out;
  std::vector<bool> simple_root(d.num_positive(), false);
  for (int i = 0; i < r; ++i) simple_root[simple_root_index(d, i)] = true;
  for (int k = 0; k < d.num_positive(); ++k) {
    Rat v(0);
    for (int i = 0; i < r; ++i) v += Rat(d.pos_coroot_coeffs()[k][i]) * p[i];
    if (v == Rat(0)) throw InputError("ν is not regular");
    Rat w = v * Rat(c.n_root(k));
    if (w == Rat(-1) || (w == Rat(1) && !simple_root[k])) throw InputError("Φ(ν) is not contained in Δ");
  }
  for (int i = 0; i < r; ++i)
    if (p[i] * Rat(c.n_simple(i)) == Rat(1)) out.phi_nu.push_back(i);
  std::vector<bool> inS(r, false);
  for (int i : S) {
    if (i < 0 || i >= r || !std::count(out.phi_nu.begin(), out.phi_nu.end(), i))
      throw InputError("S must be a subset of Φ(ν)");
    inS[i] = true;
  }
  for (int i = 0; i < r; ++i) out.nu_tilde_pairings.push_back(p[i] * Rat(c.n_simple(i)) / c.ntilde_simple(i));
  for (int k = 0; k < d.num_positive(); ++k) {
    const auto& rc = d.pos_root_coeffs()[k];
    bool inside = true;
    for (int i = 0; i < r; ++i)
      if (rc[i] && !inS[i]) inside = false;
    if (!inside) continue;
    Rat v(0);
    for (int i = 0; i < r; ++i) v += Rat(d.pos_coroot_coeffs()[k][i]) * out.nu_tilde_pairings[i];
    if (v.denominator() == 1) out.integral_roots.push_back(k);
  }
  out.integral_types = types_str(classify_subsystem(d, out.integral_roots).types);
  WeylGroup W(d);
  auto T = irreducible_table(W);
  auto j = macdonald_rep(T, out.integral_roots);
  out.j_label = j.label;
  out.orbit = springer_orbit(d.type(), j.label);

  if (d.type().classical()) {
    std::vector<LeviBlock> levi;
    bool ok = true;
    for (const auto& b : levi_blocks(d.type(), inS)) {
      auto bp = block_prediction(b, out.nu_tilde_pairings);
      if (!bp) {
        ok = false;
        break;
      }
      levi.push_back({b.type, bp->first});
      out.levi_trivial_local_systems = out.levi_trivial_local_systems && bp->second;
    }
    if (ok) out.levi_induced = induce_orbit(levi, d.type());
  }
  return out;
}

// ------------------------------------------------------------ report

CoverReport analyze(const Cover& c, const ReportOptions& opt) {
  const auto& d = c.datum();
  CoverReport R;
  R.group = d.name();
  R.type = d.type().name();
  R.n = c.n();
  for (int i = 0; i < d.rank(); ++i) {
    R.n_alpha.push_back(c.n_simple(i));
    R.ntilde_alpha.push_back(c.ntilde_simple(i));
  }
  R.saturated = c.saturated();
  auto pers = check_persistence(c, opt.persistence_scan);
  R.persistent = to_string(pers.value);
  R.persistence_method = pers.method;
  R.dual_type = c.dual_datum().type().name();
  R.torsor_size = c.torsor_size();
  R.nu = c.nu();
  R.nu_tilde = c.nu_tilde();
  R.phi_nu_types = integral_subsystem(d, R.nu).types();
  auto s = integral_subsystem(d, R.nu_tilde);
  R.phi_nu_tilde_types = s.types();
  R.phi_nu_tilde_positive = s.num_positive();
  if (pers.value == Tri::no) R.flags.push_back("not persistent: conjecture outside stated hypotheses");
  if (pers.value == Tri::undetermined) R.flags.push_back("persistence undetermined within scan budget");

  auto t = tables(c, opt);
  std::optional<OrbitData> orbits;
  if (c.Y_Qn().index() <= opt.orbit_budget) {
    orbits = enumerate_orbits(d, c.Y_Qn(), opt.orbit_budget);
    R.quotient_size = orbits->quotient_size;
    R.free_orbits = orbits->num_free;
  } else {
    R.flags.push_back("orbit enumeration skipped: |Y/Y_Qn| = " + std::to_string(c.Y_Qn().index()));
  }
  if (t) {
    auto j = macdonald_rep(t->T, s.info.positive);
    R.j_label = j.label;
    R.j_b = j.b;
    try {
      R.orbit = springer_orbit(d.type(), j.label);
      R.orbit_special = is_special(d.type(), j.label);
    } catch (const InputError& e) {
      R.flags.push_back(std::string("no Springer data: ") + e.what());
    }
    auto sigma = permutation_character(*t->W, c.Y_Qn());
    R.dim_wh = inner_product(*t->W, sign_character(*t->W), sigma);
    if (pers.value == Tri::yes)
      R.c_O = inner_product(*t->W, t->T[j.index].values, tensor(sign_character(*t->W), sigma));
    else
      R.flags.push_back("c_O withheld: cover not known to be persistent");
    if (orbits && *R.dim_wh != orbits->num_free) R.flags.push_back("MISMATCH: <ε, σ> differs from free orbit count");
  } else {
    R.flags.push_back("no character table for " + R.type + " within max_perm_order");
    if (orbits) R.dim_wh = orbits->num_free;
  }

  R.genericity = genericity_report(c, opt);
  const auto& g = R.genericity;
  if (pers.value == Tri::yes) {
    if (!g.consistent()) R.flags.push_back("MISMATCH: genericity criteria disagree");
    if (!g.images_equal) R.flags.push_back("MISMATCH: Im f_X differs from Im f_Y");
  }
  if (g.closed_form && *g.closed_form != g.fx) R.flags.push_back("MISMATCH: f_X image differs from its closed form");
  if (g.w_trivial) {
    if (R.orbit && !(*R.orbit == regular_orbit(d.type()))) R.flags.push_back("MISMATCH: generic but orbit not regular");
    if (R.c_O && R.dim_wh && *R.c_O != *R.dim_wh) R.flags.push_back("MISMATCH: generic but c_O differs from dim Wh");
  }
  return R;
}

// ------------------------------------------------------------ serialization

namespace {

using nlohmann::json;

json rats(const RVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}
RVec rats_of(const json& a) {
  RVec v;
  for (const auto& x : a) v.push_back(parse_rat(x.get<std::string>()));
  return v;
}
template <class T>
json opt(const std::optional<T>& o) {
  return o ? json(*o) : json(nullptr);
}
template <class T>
std::optional<T> opt_of(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json orbit_json(const NilpotentOrbit& o) {
  return {{"type", o.type.name()}, {"partition", o.partition}, {"very_even", o.very_even},
          {"label", o.label},      {"dim", o.dim},             {"name", o.name()}};
}
NilpotentOrbit orbit_of(const json& j) {
  NilpotentOrbit o;
  o.type = CartanType::parse(j.at("type").get<std::string>());
  o.partition = j.at("partition").get<Partition>();
  o.very_even = j.at("very_even").get<int>();
  o.label = j.at("label").get<std::string>();
  o.dim = j.at("dim").get<int>();
  return o;
}

}  // namespace

std::string report_to_json(const CoverReport& r, int indent) {
  const auto& g = r.genericity;
  json gj = {{"w_trivial", g.w_trivial},
             {"two_rho_free", opt(g.two_rho_free)},
             {"zero_free", opt(g.zero_free)},
             {"some_free", opt(g.some_free)},
             {"f_X", rats(g.fx)},
             {"f_Y", rats(g.fy)},
             {"images_equal", g.images_equal},
             {"closed_form", g.closed_form ? rats(*g.closed_form) : json(nullptr)},
             {"minimal_generic_n", opt(g.minimal_n)}};
  json j = {{"schema", kReportSchema},
            {"group", r.group},
            {"type", r.type},
            {"n", r.n},
            {"n_alpha", r.n_alpha},
            {"ntilde_alpha", rats(r.ntilde_alpha)},
            {"saturated", r.saturated},
            {"persistent", r.persistent},
            {"persistence_method", r.persistence_method},
            {"dual_type", r.dual_type},
            {"torsor_size", r.torsor_size},
            {"nu", rats(r.nu)},
            {"nu_tilde", rats(r.nu_tilde)},
            {"phi_nu", r.phi_nu_types},
            {"phi_nu_tilde", r.phi_nu_tilde_types},
            {"phi_nu_tilde_positive", r.phi_nu_tilde_positive},
            {"j_label", opt(r.j_label)},
            {"j_b", opt(r.j_b)},
            {"orbit", r.orbit ? orbit_json(*r.orbit) : json(nullptr)},
            {"orbit_special", opt(r.orbit_special)},
            {"c_O", opt(r.c_O)},
            {"dim_wh", opt(r.dim_wh)},
            {"quotient_size", opt(r.quotient_size)},
            {"free_orbits", opt(r.free_orbits)},
            {"genericity", gj},
            {"flags", r.flags}};
  return j.dump(indent);
}

CoverReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kReportSchema) throw InputError("unsupported report schema");
    CoverReport r;
    r.group = j.at("group").get<std::string>();
    r.type = j.at("type").get<std::string>();
    r.n = j.at("n").get<i64>();
    r.n_alpha = j.at("n_alpha").get<std::vector<i64>>();
    r.ntilde_alpha = rats_of(j.at("ntilde_alpha"));
    r.saturated = j.at("saturated").get<bool>();
    r.persistent = j.at("persistent").get<std::string>();
    r.persistence_method = j.at("persistence_method").get<std::string>();
    r.dual_type = j.at("dual_type").get<std::string>();
    r.torsor_size = j.at("torsor_size").get<i64>();
    r.nu = rats_of(j.at("nu"));
    r.nu_tilde = rats_of(j.at("nu_tilde"));
    r.phi_nu_types = j.at("phi_nu").get<std::string>();
    r.phi_nu_tilde_types = j.at("phi_nu_tilde").get<std::string>();
    r.phi_nu_tilde_positive = j.at("phi_nu_tilde_positive").get<int>();
    r.j_label = opt_of<std::string>(j.at("j_label"));
    r.j_b = opt_of<int>(j.at("j_b"));
    if (!j.at("orbit").is_null()) r.orbit = orbit_of(j.at("orbit"));
    r.orbit_special = opt_of<bool>(j.at("orbit_special"));
    r.c_O = opt_of<i64>(j.at("c_O"));
    r.dim_wh = opt_of<i64>(j.at("dim_wh"));
    r.quotient_size = opt_of<i64>(j.at("quotient_size"));
    r.free_orbits = opt_of<i64>(j.at("free_orbits"));
    const auto& gj = j.at("genericity");
    auto& g = r.genericity;
    g.w_trivial = gj.at("w_trivial").get<bool>();
    g.two_rho_free = opt_of<bool>(gj.at("two_rho_free"));
    g.zero_free = opt_of<bool>(gj.at("zero_free"));
    g.some_free = opt_of<bool>(gj.at("some_free"));
    g.fx = rats_of(gj.at("f_X"));
    g.fy = rats_of(gj.at("f_Y"));
    g.images_equal = gj.at("images_equal").get<bool>();
    if (!gj.at("closed_form").is_null()) g.closed_form = rats_of(gj.at("closed_form"));
    g.minimal_n = opt_of<i64>(gj.at("minimal_generic_n"));
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const CoverReport& r) {
  std::ostringstream o;
  auto vec = [](const RVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rat_str(v[i]);
    return s + ")";
  };
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
  o << r.group << " (" << r.type << "), n = " << r.n << "\n";
  o << "  n_alpha         ";
  for (auto x : r.n_alpha) o << " " << x;
  o << "\n  ntilde_alpha    ";
  for (auto& x : r.ntilde_alpha) o << " " << rat_str(x);
  o << "\n  saturated        " << (r.saturated ? "yes" : "no") << "\n";
  o << "  persistent       " << r.persistent << " (" << r.persistence_method << ")\n";
  o << "  dual type        " << r.dual_type << ", torsor size " << r.torsor_size << "\n";
  o << "  nu               " << vec(r.nu) << "\n";
  o << "  nu_tilde         " << vec(r.nu_tilde) << "\n";
  o << "  Phi_nu           " << r.phi_nu_types << "\n";
  o << "  Phi_nu_tilde     " << r.phi_nu_tilde_types << " (" << r.phi_nu_tilde_positive << " positive roots)\n";
  o << "  j                " << (r.j_label ? *r.j_label + " (b = " + std::to_string(*r.j_b) + ")" : "-") << "\n";
  o << "  orbit            " << (r.orbit ? r.orbit->name() + ", dim " + std::to_string(r.orbit->dim) : "-");
  if (r.orbit_special) o << (*r.orbit_special ? ", special" : ", not special");
  o << "\n  c_O              " << (r.c_O ? std::to_string(*r.c_O) : "-") << "\n";
  o << "  dim Wh           " << (r.dim_wh ? std::to_string(*r.dim_wh) : "-") << "\n";
  if (r.quotient_size) o << "  |Y/Y_Qn|         " << *r.quotient_size << ", free orbits " << *r.free_orbits << "\n";
  const auto& g = r.genericity;
  o << "  W_nu_tilde = 1   " << (g.w_trivial ? "yes" : "no") << "\n";
  o << "  2rho free        " << flag(g.two_rho_free) << "\n";
  o << "  0 free           " << flag(g.zero_free) << "\n";
  o << "  some free        " << flag(g.some_free) << "\n";
  o << "  Im f_X           " << render_set(g.fx) << "\n";
  o << "  Im f_Y           " << render_set(g.fy) << "\n";
  if (g.closed_form) o << "  closed form      " << render_set(*g.closed_form) << "\n";
  o << "  minimal generic n " << (g.minimal_n ? std::to_string(*g.minimal_n) : "-") << "\n";
  for (const auto& f : r.flags) o << "  ! " << f << "\n";
  return o.str();
}

}  // namespace wf
