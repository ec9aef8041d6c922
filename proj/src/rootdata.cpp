#include "wf/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wf/linalg.hpp"

namespace wf {

// ------------------------------------------------------------ CartanType

std::string CartanType::name() const {
  static const char* s = "ABCDEFG";
  return std::string(1, s[static_cast<int>(series)]) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw InputError("bad Cartan type: " + s);
  static const std::string letters = "ABCDEFG";
  auto p = letters.find(static_cast<char>(std::toupper(s[0])));
  if (p == std::string::npos) throw InputError("bad Cartan type: " + s);
  CartanType t{static_cast<Series>(p), std::stoi(s.substr(1))};
  return t;
}

bool CartanType::operator<(const CartanType& o) const {
  if (series != o.series) return series < o.series;
  return rank < o.rank;
}

bool admissible(const CartanType& t) {
  switch (t.series) {
    case Series::A: return t.rank >= 1;
    case Series::B:
    case Series::C: return t.rank >= 2;
    case Series::D: return t.rank >= 4;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    case Series::F: return t.rank == 4;
    case Series::G: return t.rank == 2;
  }
  return false;
}

std::vector<CartanType> canonical_types(std::vector<CartanType> ts) {
  std::vector<CartanType> out;
  for (auto t : ts) {
    if ((t.series == Series::B || t.series == Series::C) && t.rank == 1) t = {Series::A, 1};
    if (t.series == Series::D) {
      if (t.rank == 1) continue;
      if (t.rank == 2) {
        out.push_back({Series::A, 1});
        out.push_back({Series::A, 1});
        continue;
      }
      if (t.rank == 3) t = {Series::A, 3};
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string types_str(const std::vector<CartanType>& ts) {
  if (ts.empty()) return "trivial";
  std::map<std::string, int> cnt;
  std::vector<std::string> order;
  for (auto& t : ts) {
    if (!cnt.count(t.name())) order.push_back(t.name());
    ++cnt[t.name()];
  }
  std::string s;
  for (auto& n : order) {
    if (!s.empty()) s += "x";
    s += n;
    if (cnt[n] > 1) s += "^" + std::to_string(cnt[n]);
  }
  return s;
}

int positive_root_count(const CartanType& t) {
  int r = t.rank;
  switch (t.series) {
    case Series::A: return r * (r + 1) / 2;
    case Series::B:
    case Series::C: return r * r;
    case Series::D: return r * (r - 1);
    case Series::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

i64 weyl_order(const CartanType& t) {
  int r = t.rank;
  switch (t.series) {
    case Series::A: return factorial(r + 1);
    case Series::B:
    case Series::C: return mul_ck(ipow(2, r), factorial(r));
    case Series::D: return mul_ck(ipow(2, r - 1), factorial(r));
    case Series::E: return r == 6 ? 51840 : r == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

IntMat simple_root_gram(const CartanType& t) {
  int r = t.rank;
  IntMat g(r, r);
  auto link = [&](int i, int j, i64 v) { g(i, j) = g(j, i) = v; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 0; i < r; ++i) g(i, i) = (i == r - 1) ? 2 : 4;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -2);
      break;
    case Series::C:
      for (int i = 0; i < r; ++i) g(i, i) = (i == r - 1) ? 4 : 2;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case Series::E:
      for (int i = 0; i < r; ++i) g(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      link(2, 3, -1);
      for (int i = 3; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Series::F:
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Series::G:
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

namespace {

IntMat cartan_of_type(const CartanType& t) {
  IntMat g = simple_root_gram(t);
  IntMat c(t.rank, t.rank);
  for (int i = 0; i < t.rank; ++i)
    for (int j = 0; j < t.rank; ++j) c(i, j) = 2 * g(i, j) / g(i, i);
  return c;
}

// simple roots of the classical realization in ε-coordinates
std::vector<Vec> classical_simple_eps(const CartanType& t, bool coroots) {
  int r = t.rank;
  int m = (t.series == Series::A) ? r + 1 : r;
  std::vector<Vec> out;
  for (int i = 0; i < r; ++i) {
    Vec v(m, 0);
    if (i < r - 1 || t.series == Series::A) {
      v[i] = 1;
      v[i + 1] = -1;
    } else if (t.series == Series::B) {
      v[r - 1] = coroots ? 2 : 1;
    } else if (t.series == Series::C) {
      v[r - 1] = coroots ? 1 : 2;
    } else {  // D
      v[r - 2] = 1;
      v[r - 1] = 1;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------- RootDatum

RootDatum::RootDatum(std::string name, int dim, std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
                     CartanType type)
    : name_(std::move(name)),
      dim_(dim),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      type_(type) {
  int r = rank();
  if (static_cast<int>(simple_coroots_.size()) != r) throw InputError("root/coroot count mismatch");
  if (type_.rank != r) throw InputError("declared type rank does not match number of simple roots");
  for (auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != dim_) throw InputError("simple root dimension mismatch");
  for (auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != dim_) throw InputError("simple coroot dimension mismatch");
  cartan_ = IntMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_(i, j) = dot(simple_roots_[j], simple_coroots_[i]);
  if (!(cartan_ == cartan_of_type(type_)))
    throw InputError("Cartan matrix " + cartan_.str() + " does not match declared type " + type_.name());
  generate();
}

void RootDatum::generate() {
  int r = rank();
  std::map<Vec, int> seen;
  std::queue<int> q;
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    seen[e] = static_cast<int>(pos_root_coeffs_.size());
    pos_root_coeffs_.push_back(e);
    pos_coroot_coeffs_.push_back(e);
    q.push(i);
  }
  while (!q.empty()) {
    int k = q.front();
    q.pop();
    Vec c = pos_root_coeffs_[k], d = pos_coroot_coeffs_[k];
    for (int i = 0; i < r; ++i) {
      i64 a = 0, b = 0;  // <β, α_i∨>, <α_i, β∨>
      for (int j = 0; j < r; ++j) {
        a += cartan_(i, j) * c[j];
        b += cartan_(j, i) * d[j];
      }
      Vec c2 = c, d2 = d;
      c2[i] -= a;
      d2[i] -= b;
      bool pos = std::all_of(c2.begin(), c2.end(), [](i64 x) { return x >= 0; });
      if (!pos || seen.count(c2)) continue;
      seen[c2] = static_cast<int>(pos_root_coeffs_.size());
      pos_root_coeffs_.push_back(c2);
      pos_coroot_coeffs_.push_back(d2);
      q.push(static_cast<int>(pos_root_coeffs_.size()) - 1);
    }
  }
  // order by height, then lexicographically, for stable output
  std::vector<int> idx(pos_root_coeffs_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  auto ht = [&](int k) {
    i64 s = 0;
    for (i64 x : pos_root_coeffs_[k]) s += x;
    return s;
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (ht(a) != ht(b)) return ht(a) < ht(b);
    return pos_root_coeffs_[a] > pos_root_coeffs_[b];
  });
  std::vector<Vec> rc, cc;
  for (int k : idx) {
    rc.push_back(pos_root_coeffs_[k]);
    cc.push_back(pos_coroot_coeffs_[k]);
  }
  pos_root_coeffs_ = rc;
  pos_coroot_coeffs_ = cc;
}

Vec RootDatum::root_x(int k) const {
  Vec v(dim_, 0);
  for (int i = 0; i < rank(); ++i)
    if (pos_root_coeffs_[k][i]) v = vadd(v, vscale(simple_roots_[i], pos_root_coeffs_[k][i]));
  return v;
}

Vec RootDatum::coroot_y(int k) const {
  Vec v(dim_, 0);
  for (int i = 0; i < rank(); ++i)
    if (pos_coroot_coeffs_[k][i]) v = vadd(v, vscale(simple_coroots_[i], pos_coroot_coeffs_[k][i]));
  return v;
}

int RootDatum::height(int k) const {
  i64 s = 0;
  for (i64 x : pos_root_coeffs_[k]) s += x;
  return static_cast<int>(s);
}

int RootDatum::coroot_height(int k) const {
  i64 s = 0;
  for (i64 x : pos_coroot_coeffs_[k]) s += x;
  return static_cast<int>(s);
}

int RootDatum::highest_root_height() const {
  int h = 0;
  for (int k = 0; k < num_positive(); ++k) h = std::max(h, height(k));
  return h;
}

int RootDatum::find_root(const Vec& coeffs) const {
  for (int k = 0; k < num_positive(); ++k)
    if (pos_root_coeffs_[k] == coeffs) return k;
  return -1;
}

i64 RootDatum::pair_coeffs(const Vec& rc, const Vec& cc) const {
  i64 s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (cc[i] == 0) continue;
    i64 t = 0;
    for (int j = 0; j < rank(); ++j) t += cartan_(i, j) * rc[j];
    s += cc[i] * t;
  }
  return s;
}

Vec RootDatum::two_rho_vee() const {
  Vec v(dim_, 0);
  for (int k = 0; k < num_positive(); ++k) v = vadd(v, coroot_y(k));
  return v;
}

IntMat RootDatum::reflection_y(int i) const {
  IntMat s = IntMat::identity(dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) s(a, b) -= simple_coroots_[i][a] * simple_roots_[i][b];
  return s;
}

IntMat RootDatum::reflection_y_root(int k) const {
  Vec a = root_x(k), c = coroot_y(k);
  IntMat s = IntMat::identity(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) s(i, j) -= c[i] * a[j];
  return s;
}

IntMat RootDatum::word_matrix(const std::vector<int>& word) const {
  IntMat m = IntMat::identity(dim_);
  for (int i : word) m = m * reflection_y(i);
  return m;
}

RVec RootDatum::weight_from_pairings(const RVec& p) const {
  // ν = Σ m_k α_k with Σ_k m_k <α_k, α_j∨> = p_j
  RVec m = solve_rational(cartan_, p);
  RVec x(dim_, Rat(0));
  for (int k = 0; k < rank(); ++k)
    for (int a = 0; a < dim_; ++a) x[a] += m[k] * simple_roots_[k][a];
  return x;
}

int RootDatum::eps_dim() const {
  if (!type_.classical()) throw std::logic_error("ε-coordinates only exist for classical types");
  return type_.series == Series::A ? type_.rank + 1 : type_.rank;
}

Vec RootDatum::root_eps(const Vec& coeffs) const {
  auto s = classical_simple_eps(type_, false);
  Vec v(eps_dim(), 0);
  for (int i = 0; i < rank(); ++i) v = vadd(v, vscale(s[i], coeffs[i]));
  return v;
}

Vec RootDatum::coroot_eps(const Vec& coeffs) const {
  auto s = classical_simple_eps(type_, true);
  Vec v(eps_dim(), 0);
  for (int i = 0; i < rank(); ++i) v = vadd(v, vscale(s[i], coeffs[i]));
  return v;
}

RootDatum RootDatum::dual(std::string name) const {
  CartanType t = type_;
  std::vector<Vec> roots = simple_coroots_, coroots = simple_roots_;
  if (t.series == Series::B)
    t.series = Series::C;
  else if (t.series == Series::C)
    t.series = Series::B;
  else if (t.series == Series::F || t.series == Series::G) {
    std::reverse(roots.begin(), roots.end());
    std::reverse(coroots.begin(), coroots.end());
  }
  return RootDatum(std::move(name), dim_, roots, coroots, t);
}

// ---------------------------------------------------------------- presets

RootDatum simply_connected(const CartanType& t) {
  if (!admissible(t)) throw InputError("inadmissible type " + t.name());
  IntMat c = cartan_of_type(t);
  int r = t.rank;
  std::vector<Vec> roots, coroots;
  for (int j = 0; j < r; ++j) {
    Vec a(r), e(r, 0);
    for (int i = 0; i < r; ++i) a[i] = c(i, j);
    e[j] = 1;
    roots.push_back(a);
    coroots.push_back(e);
  }
  return RootDatum(t.name() + "_sc", r, roots, coroots, t);
}

std::vector<std::string> preset_names() {
  return {"SL", "GL", "Sp", "SO", "Spin", "SpinEven", "GSpin", "E", "F", "G"};
}

RootDatum make_preset(const std::string& p, int r) {
  auto unit = [](int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  if (p == "SL") {
    if (r < 1) throw InputError("SL_{r+1} needs r >= 1");
    auto d = simply_connected({Series::A, r});
    return RootDatum("SL" + std::to_string(r + 1), d.dim(), d.simple_roots(), d.simple_coroots(), d.type());
  }
  if (p == "Sp") {
    if (r < 2) throw InputError("Sp_{2r} needs r >= 2");
    auto d = simply_connected({Series::C, r});
    return RootDatum("Sp" + std::to_string(2 * r), d.dim(), d.simple_roots(), d.simple_coroots(), d.type());
  }
  if (p == "Spin") {
    if (r < 2) throw InputError("Spin_{2r+1} needs r >= 2");
    auto d = simply_connected({Series::B, r});
    return RootDatum("Spin" + std::to_string(2 * r + 1), d.dim(), d.simple_roots(), d.simple_coroots(), d.type());
  }
  if (p == "SpinEven") {
    if (r < 4) throw InputError("Spin_{2r} needs r >= 4 (D3 = A3 is the SL4 preset)");
    auto d = simply_connected({Series::D, r});
    return RootDatum("Spin" + std::to_string(2 * r), d.dim(), d.simple_roots(), d.simple_coroots(), d.type());
  }
  if (p == "E" || p == "F" || p == "G") {
    CartanType t{p == "E" ? Series::E : p == "F" ? Series::F : Series::G, r};
    if (!admissible(t)) throw InputError("inadmissible rank for " + p);
    auto d = simply_connected(t);
    return RootDatum(t.name(), d.dim(), d.simple_roots(), d.simple_coroots(), d.type());
  }
  if (p == "GL") {
    if (r < 2) throw InputError("GL_r needs r >= 2");
    std::vector<Vec> roots, coroots;
    for (int i = 0; i + 1 < r; ++i) {
      Vec v = vsub(unit(r, i), unit(r, i + 1));
      roots.push_back(v);
      coroots.push_back(v);
    }
    return RootDatum("GL" + std::to_string(r), r, roots, coroots, {Series::A, r - 1});
  }
  if (p == "SO") {
    if (r < 2) throw InputError("SO_{2r+1} needs r >= 2");
    std::vector<Vec> roots, coroots;
    for (int i = 0; i + 1 < r; ++i) {
      Vec v = vsub(unit(r, i), unit(r, i + 1));
      roots.push_back(v);
      coroots.push_back(v);
    }
    roots.push_back(unit(r, r - 1));
    coroots.push_back(vscale(unit(r, r - 1), 2));
    return RootDatum("SO" + std::to_string(2 * r + 1), r, roots, coroots, {Series::B, r});
  }
  if (p == "GSpin") {
    if (r < 2) throw InputError("GSpin_{2r+1} needs r >= 2");
    // basis e_0, e_1, ..., e_r
    int n = r + 1;
    std::vector<Vec> roots, coroots;
    for (int i = 1; i < r; ++i) {
      Vec v = vsub(unit(n, i), unit(n, i + 1));
      roots.push_back(v);
      coroots.push_back(v);
    }
    roots.push_back(unit(n, r));
    coroots.push_back(vsub(vscale(unit(n, r), 2), unit(n, 0)));
    return RootDatum("GSpin" + std::to_string(2 * r + 1), n, roots, coroots, {Series::B, r});
  }
  throw InputError("unknown preset: " + p);
}

RootDatum root_datum_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad root datum config: ") + e.what());
  }
  for (const char* key : {"dim", "type", "simple_roots", "simple_coroots"})
    if (!j.contains(key)) throw InputError(std::string("root datum config missing field: ") + key);
  int dim = j["dim"].get<int>();
  auto roots = j["simple_roots"].get<std::vector<Vec>>();
  auto coroots = j["simple_coroots"].get<std::vector<Vec>>();
  std::string name = j.value("name", std::string("custom"));
  return RootDatum(name, dim, roots, coroots, CartanType::parse(j["type"].get<std::string>()));
}

// --------------------------------------------------- type identification

std::pair<CartanType, std::vector<int>> identify_cartan(const IntMat& c) {
  int r = c.rows();
  if (r == 0) throw InputError("empty Cartan matrix");
  std::vector<CartanType> cands;
  if (r == 2 && c(0, 1) * c(1, 0) == 2) {
    cands.push_back({c(0, 1) == -2 ? Series::C : Series::B, 2});
  } else {
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G})
      if (admissible({s, r})) cands.push_back({s, r});
  }
  for (auto t : cands) {
    IntMat ref = cartan_of_type(t);
    std::vector<int> order(r, -1);
    std::vector<bool> used(r, false);
    // backtracking over assignments α_k -> input node
    std::function<bool(int)> go = [&](int k) {
      if (k == r) return true;
      for (int v = 0; v < r; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j)
          ok = c(v, order[j]) == ref(k, j) && c(order[j], v) == ref(j, k);
        if (!ok) continue;
        used[v] = true;
        order[k] = v;
        if (go(k + 1)) return true;
        used[v] = false;
      }
      return false;
    };
    if (go(0)) return {t, order};
  }
  throw InputError("Cartan matrix " + c.str() + " is not of irreducible finite type");
}

RootDatum auto_typed_datum(std::string name, int dim, const std::vector<Vec>& roots,
                           const std::vector<Vec>& coroots) {
  int r = static_cast<int>(roots.size());
  IntMat c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c(i, j) = dot(roots[j], coroots[i]);
  auto [t, order] = identify_cartan(c);
  std::vector<Vec> rs, cs;
  for (int k : order) {
    rs.push_back(roots[k]);
    cs.push_back(coroots[k]);
  }
  return RootDatum(std::move(name), dim, rs, cs, t);
}

// --------------------------------------------------- subsystem classification

namespace {

struct Component {
  CartanType type;
  std::vector<int> nodes;
};

// Identify an irreducible Cartan matrix a(i,j) = <β_j, β_i∨> on `nodes`.
Component identify(const std::vector<int>& nodes, const std::function<i64(int, int)>& a, Series ambient) {
  int k = static_cast<int>(nodes.size());
  std::map<int, std::vector<int>> adj;
  int maxbond = 1;
  for (int x : nodes)
    for (int y : nodes)
      if (x != y && a(x, y) != 0) {
        adj[x].push_back(y);
        maxbond = std::max<int>(maxbond, static_cast<int>(a(x, y) * a(y, x)));
      }
  auto deg = [&](int x) { return static_cast<int>(adj[x].size()); };
  if (k == 1) return {{Series::A, 1}, nodes};
  if (maxbond == 3) return {{Series::G, 2}, nodes};
  if (maxbond == 2) {
    // find the double bond
    int u = -1, v = -1;
    for (int x : nodes)
      for (int y : adj[x])
        if (a(x, y) * a(y, x) == 2) u = x, v = y;
    if (k == 4 && deg(u) == 2 && deg(v) == 2) return {{Series::F, 4}, nodes};
    // orient so that v is the end of the chain
    if (deg(v) != 1) std::swap(u, v);
    // v short iff |<v, u∨>| = 1
    bool v_short = std::llabs(a(u, v)) == 1;
    if (k == 2) {
      if (ambient == Series::C) return {{Series::C, 2}, nodes};
      return {{Series::B, 2}, nodes};
    }
    return {{v_short ? Series::B : Series::C, k}, nodes};
  }
  int branch = -1;
  for (int x : nodes)
    if (deg(x) >= 3) branch = x;
  if (branch < 0) return {{Series::A, k}, nodes};
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      int next = -1;
      for (int y : adj[cur])
        if (y != prev) next = y;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {{Series::D, k}, nodes};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {{Series::E, k}, nodes};
  throw std::logic_error("unrecognized Dynkin diagram");
}

}  // namespace

SubsystemInfo classify_subsystem(const RootDatum& d, const std::vector<int>& positive_roots) {
  SubsystemInfo info;
  info.positive = positive_roots;
  std::sort(info.positive.begin(), info.positive.end());
  std::set<Vec> members;
  for (int k : info.positive) members.insert(d.pos_root_coeffs()[k]);
  // reflection closure
  for (int a : info.positive)
    for (int b : info.positive) {
      const Vec& ca = d.pos_root_coeffs()[a];
      const Vec& cb = d.pos_root_coeffs()[b];
      i64 p = d.pair_coeffs(cb, d.pos_coroot_coeffs()[a]);
      Vec r = vsub(cb, vscale(ca, p));
      if (r[std::distance(r.begin(), std::find_if(r.begin(), r.end(), [](i64 x) { return x != 0; }))] < 0)
        r = vscale(r, -1);
      if (!members.count(r)) throw std::invalid_argument("root set is not closed under its reflections");
    }
  // simple roots: positive members that are not a sum of two positive members
  for (int k : info.positive) {
    const Vec& c = d.pos_root_coeffs()[k];
    bool decomposable = false;
    for (int a : info.positive) {
      Vec rest = vsub(c, d.pos_root_coeffs()[a]);
      if (members.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) info.simple.push_back(k);
  }
  auto a = [&](int x, int y) { return d.pair_coeffs(d.pos_root_coeffs()[y], d.pos_coroot_coeffs()[x]); };
  std::set<int> left(info.simple.begin(), info.simple.end());
  std::vector<CartanType> types;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t i = 0; i < comp.size(); ++i)
      for (auto it = left.begin(); it != left.end();) {
        if (a(comp[i], *it) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    auto c = identify(comp, a, d.type().series);
    types.push_back(c.type);
    info.components.push_back(c.nodes);
  }
  info.types = canonical_types(types);
  int expect = 0;
  for (auto& t : info.types) expect += positive_root_count(t);
  if (expect != static_cast<int>(info.positive.size()))
    throw std::logic_error("subsystem classification inconsistent with root count");
  return info;
}

}  // namespace wf
