#include "wf/weylgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace wf {

// ------------------------------------------------------------ SignedPerm

SignedPerm SignedPerm::identity(int m) {
  SignedPerm s;
  s.perm.resize(m);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.sign.assign(m, 1);
  return s;
}

SignedPerm SignedPerm::operator*(const SignedPerm& b) const {
  int m = degree();
  SignedPerm c;
  c.perm.resize(m);
  c.sign.resize(m);
  for (int j = 0; j < m; ++j) {
    c.perm[j] = perm[b.perm[j]];
    c.sign[j] = sign[b.perm[j]] * b.sign[j];
  }
  return c;
}

SignedPerm SignedPerm::inverse() const {
  int m = degree();
  SignedPerm c;
  c.perm.resize(m);
  c.sign.resize(m);
  for (int j = 0; j < m; ++j) {
    c.perm[perm[j]] = j;
    c.sign[perm[j]] = sign[j];
  }
  return c;
}

Vec SignedPerm::apply(const Vec& v) const {
  Vec out(v.size(), 0);
  for (int j = 0; j < degree(); ++j) out[perm[j]] += sign[j] * v[j];
  return out;
}

namespace {

template <class F>
void for_each_cycle(const SignedPerm& w, F f) {
  int m = w.degree();
  std::vector<bool> seen(m, false);
  for (int j = 0; j < m; ++j) {
    if (seen[j]) continue;
    std::vector<int> cyc;
    int s = 1;
    for (int k = j; !seen[k]; k = w.perm[k]) {
      seen[k] = true;
      cyc.push_back(k);
      s *= w.sign[k];
    }
    f(cyc, s);
  }
}

}  // namespace

Bipartition signed_cycle_type(const SignedPerm& w) {
  Bipartition b;
  for_each_cycle(w, [&](const std::vector<int>& c, int s) {
    (s > 0 ? b.first : b.second).push_back(static_cast<int>(c.size()));
  });
  b.first = normalized(b.first);
  b.second = normalized(b.second);
  return b;
}

int flip_parity(const SignedPerm& w) {
  int par = 0;
  for_each_cycle(w, [&](const std::vector<int>& c, int) {
    int t = 1;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      t *= w.sign[c[i]];
      if (t < 0) par ^= 1;
    }
  });
  return par;
}

int sign_of(const SignedPerm& w) {
  int s = 1;
  for_each_cycle(w, [&](const std::vector<int>& c, int cs) {
    if (c.size() % 2 == 0) s = -s;
    s *= cs;
  });
  return s;
}

SignedPerm simple_reflection_eps(const CartanType& t, int i) {
  int m = t.series == Series::A ? t.rank + 1 : t.rank;
  SignedPerm s = SignedPerm::identity(m);
  int r = t.rank;
  if (t.series == Series::A || i < r - 1) {
    std::swap(s.perm[i], s.perm[i + 1]);
  } else if (t.series == Series::B || t.series == Series::C) {
    s.sign[r - 1] = -1;
  } else if (t.series == Series::D) {
    s.perm[r - 2] = r - 1;
    s.perm[r - 1] = r - 2;
    s.sign[r - 2] = s.sign[r - 1] = -1;
  } else {
    throw std::logic_error("no ε-realization for exceptional types");
  }
  return s;
}

namespace {

std::vector<Vec> simple_eps(const CartanType& t) {
  int r = t.rank;
  int m = t.series == Series::A ? r + 1 : r;
  std::vector<Vec> out;
  for (int i = 0; i < r; ++i) {
    Vec v(m, 0);
    if (t.series == Series::A || i < r - 1) {
      v[i] = 1;
      v[i + 1] = -1;
    } else if (t.series == Series::B) {
      v[r - 1] = 1;
    } else if (t.series == Series::C) {
      v[r - 1] = 2;
    } else {
      v[r - 2] = 1;
      v[r - 1] = 1;
    }
    out.push_back(v);
  }
  return out;
}

bool eps_negative(const Vec& v) {
  for (i64 x : v)
    if (x != 0) return x < 0;
  return false;
}

}  // namespace

std::vector<int> word_of(const CartanType& t, const SignedPerm& w0) {
  auto simple = simple_eps(t);
  std::vector<SignedPerm> refl;
  for (int i = 0; i < t.rank; ++i) refl.push_back(simple_reflection_eps(t, i));
  SignedPerm w = w0;
  std::vector<int> word;
  while (true) {
    bool found = false;
    for (int i = 0; i < t.rank; ++i) {
      if (eps_negative(w.apply(simple[i]))) {
        w = w * refl[i];
        word.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  if (!(w == SignedPerm::identity(w.degree()))) throw std::logic_error("signed permutation not in W");
  std::reverse(word.begin(), word.end());
  return word;
}

// ------------------------------------------------------------ PermGroup

PermGroup::PermGroup(const RootDatum& d, i64 max_order) {
  npos_ = d.num_positive();
  npts_ = 2 * npos_;
  if (npts_ > 255) throw BudgetError("permutation representation too large");
  i64 ord = weyl_order(d.type());
  if (ord > max_order) throw BudgetError("Weyl group of " + d.type().name() + " exceeds the element budget");
  std::map<Vec, int> idx;
  for (int k = 0; k < npos_; ++k) {
    points_.push_back(d.pos_root_coeffs()[k]);
    idx[d.pos_root_coeffs()[k]] = k;
  }
  for (int k = 0; k < npos_; ++k) {
    points_.push_back(vscale(d.pos_root_coeffs()[k], -1));
    idx[points_.back()] = npos_ + k;
  }
  int r = d.rank();
  for (int i = 0; i < r; ++i) {
    Perm g(npts_, 0);
    for (int p = 0; p < npts_; ++p) {
      const Vec& b = points_[p];
      i64 c = 0;
      for (int j = 0; j < r; ++j) c += d.cartan(i, j) * b[j];
      Vec img = b;
      img[i] -= c;
      g[p] = static_cast<char>(idx.at(img));
    }
    gens_.push_back(g);
  }
  Perm id(npts_, 0);
  for (int p = 0; p < npts_; ++p) id[p] = static_cast<char>(p);
  elems_.push_back(id);
  index_[id] = 0;
  parent_.push_back(-1);
  pgen_.push_back(-1);
  sign_.push_back(1);
  for (size_t e = 0; e < elems_.size(); ++e) {
    for (int i = 0; i < r; ++i) {
      Perm p = compose(elems_[e], gens_[i]);
      if (index_.count(p)) continue;
      index_[p] = static_cast<int>(elems_.size());
      elems_.push_back(p);
      parent_.push_back(static_cast<int>(e));
      pgen_.push_back(i);
      sign_.push_back(-sign_[e]);
    }
  }
  if (order() != ord) throw std::logic_error("Weyl group order mismatch");
  // classes: union-find under conjugation by generators
  std::vector<int> uf(elems_.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (size_t e = 0; e < elems_.size(); ++e)
    for (int i = 0; i < r; ++i) {
      int f = index_.at(compose(compose(gens_[i], elems_[e]), gens_[i]));
      int a = find(static_cast<int>(e)), b = find(f);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, int> root_to_class;
  class_of_.resize(elems_.size());
  for (size_t e = 0; e < elems_.size(); ++e) {
    int root = find(static_cast<int>(e));
    auto it = root_to_class.find(root);
    if (it == root_to_class.end()) {
      int c = static_cast<int>(class_reps_.size());
      root_to_class[root] = c;
      class_reps_.push_back(static_cast<int>(e));
      class_members_.emplace_back();
      it = root_to_class.find(root);
    }
    class_of_[e] = it->second;
    class_members_[it->second].push_back(static_cast<int>(e));
  }
}

PermGroup::Perm PermGroup::compose(const Perm& a, const Perm& b) {
  Perm c(b.size(), 0);
  for (size_t p = 0; p < b.size(); ++p) c[p] = a[static_cast<unsigned char>(b[p])];
  return c;
}

PermGroup::Perm PermGroup::invert(const Perm& a) {
  Perm c(a.size(), 0);
  for (size_t p = 0; p < a.size(); ++p) c[static_cast<unsigned char>(a[p])] = static_cast<char>(p);
  return c;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> PermGroup::word(int e) const {
  std::vector<int> w;
  for (; parent_[e] >= 0; e = parent_[e]) w.push_back(pgen_[e]);
  std::reverse(w.begin(), w.end());
  return w;
}

int PermGroup::point_of(const Vec& c) const {
  for (int p = 0; p < npts_; ++p)
    if (points_[p] == c) return p;
  return -1;
}

PermGroup::Perm PermGroup::reflection(int k) const {
  // s_β = w s_i w^{-1} for β = w(α_i); search BFS elements for a conjugating element
  for (size_t e = 0; e < elems_.size(); ++e)
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
      if (static_cast<unsigned char>(elems_[e][i]) == k)
        return compose(compose(elems_[e], gens_[i]), invert(elems_[e]));
  throw std::logic_error("root not in a W-orbit of simple roots");
}

// ------------------------------------------------------------ WeylGroup

namespace {

int perm_order(const PermGroup::Perm& p) {
  std::vector<bool> seen(p.size(), false);
  i64 o = 1;
  for (size_t j = 0; j < p.size(); ++j) {
    if (seen[j]) continue;
    i64 len = 0;
    for (size_t k = j; !seen[k]; k = static_cast<unsigned char>(p[k])) {
      seen[k] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return static_cast<int>(o);
}

std::string class_key(const Bipartition& b, int split) { return to_string(b) + "|" + std::to_string(split); }

SignedPerm rep_of(const Bipartition& b, int m, int split) {
  SignedPerm s = SignedPerm::identity(m);
  int pos = 0;
  auto add = [&](int len, bool neg) {
    for (int k = 0; k < len; ++k) s.perm[pos + k] = pos + (k + 1) % len;
    if (neg) s.sign[pos + len - 1] = -1;
    pos += len;
  };
  for (int k : b.first) add(k, false);
  for (int k : b.second) add(k, true);
  if (split < 0) {
    SignedPerm t = SignedPerm::identity(m);
    t.sign[0] = -1;
    s = t * s * t;
  }
  return s;
}

}  // namespace

WeylGroup::WeylGroup(const RootDatum& d, i64 max_perm_order) : d_(d) {
  order_ = weyl_order(d.type());
  if (classical())
    build_classical();
  else
    build_exceptional(max_perm_order);
  i64 total = 0;
  for (auto& c : classes_) total += c.size;
  if (total != order_) throw std::logic_error("class sizes do not sum to |W|");
}

int WeylGroup::eps_degree() const { return type().series == Series::A ? type().rank + 1 : type().rank; }

void WeylGroup::build_classical() {
  const CartanType& t = type();
  int r = t.rank, m = eps_degree();
  std::vector<std::pair<Bipartition, int>> labels;
  if (t.series == Series::A) {
    for (auto& p : partitions(m)) labels.push_back({{p, {}}, 0});
  } else {
    for (auto& b : bipartitions(r)) {
      if (t.series == Series::D) {
        if (b.second.size() % 2 != 0) continue;
        bool split = b.second.empty() && std::all_of(b.first.begin(), b.first.end(), [](int x) { return x % 2 == 0; });
        if (split) {
          labels.push_back({b, 1});
          labels.push_back({b, -1});
          continue;
        }
      }
      labels.push_back({b, 0});
    }
  }
  // identity first
  std::stable_sort(labels.begin(), labels.end(), [&](auto& a, auto& b) {
    auto isid = [&](const Bipartition& x) { return x.second.empty() && (int)x.first.size() == m; };
    return isid(a.first) && !isid(b.first);
  });
  for (auto& [b, split] : labels) {
    ConjClass c;
    c.cycles = b;
    c.split = split;
    if (t.series == Series::A) {
      c.label = to_string(b.first);
      c.size = factorial(m) / z_of(b.first);
    } else {
      c.label = to_string(b) + (split > 0 ? "+" : split < 0 ? "-" : "");
      i64 den = mul_ck(mul_ck(z_of(b.first), z_of(b.second)), ipow(2, static_cast<int>(b.first.size() + b.second.size())));
      c.size = mul_ck(ipow(2, r), factorial(r)) / den;
      if (split) c.size /= 2;
    }
    SignedPerm w = rep_of(b, m, split);
    c.word = word_of(t, w);
    c.sign = sign_of(w);
    i64 o = 1;
    for (int k : b.first) o = std::lcm<i64>(o, k);
    for (int k : b.second) o = std::lcm<i64>(o, 2 * k);
    c.order = static_cast<int>(o);
    by_key_[class_key(b, split)] = static_cast<int>(classes_.size());
    classes_.push_back(c);
  }
}

void WeylGroup::build_exceptional(i64 max_perm_order) {
  pg_ = std::make_shared<PermGroup>(d_, max_perm_order);
  std::map<std::string, int> seen;
  for (int c = 0; c < pg_->num_classes(); ++c) {
    ConjClass cc;
    int e = pg_->class_rep(c);
    cc.size = static_cast<i64>(pg_->class_members(c).size());
    cc.word = pg_->word(e);
    cc.sign = pg_->sign(e);
    cc.order = perm_order(pg_->element(e));
    std::string base = "o" + std::to_string(cc.order) + "l" + std::to_string(cc.word.size());
    int k = seen[base]++;
    cc.label = base + (k ? std::string(1, static_cast<char>('a' + k)) : "");
    classes_.push_back(cc);
  }
}

int WeylGroup::class_index(const Bipartition& cycles, int split) const {
  auto it = by_key_.find(class_key(cycles, split));
  if (it == by_key_.end()) throw std::invalid_argument("no class " + to_string(cycles));
  return it->second;
}

int WeylGroup::class_of(const SignedPerm& w) const {
  Bipartition b = signed_cycle_type(w);
  int split = 0;
  if (type().series == Series::D && b.second.empty() &&
      std::all_of(b.first.begin(), b.first.end(), [](int x) { return x % 2 == 0; }))
    split = flip_parity(w) == 0 ? 1 : -1;
  return class_index(b, split);
}

int WeylGroup::reflection_class(int i) const {
  if (classical()) return class_of(simple_reflection_eps(type(), i));
  return pg_->class_of(pg_->index_of(pg_->generator(i)));
}

// ------------------------------------------------------------ enumeration

namespace {
struct VecHash {
  size_t operator()(const std::vector<i64>& v) const {
    size_t h = 1469598103934665603ull;
    for (i64 x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};
}  // namespace

bool for_each_element(const RootDatum& d, const std::function<bool(const IntMat&)>& visit) {
  Vec two_rho(d.dim(), 0);
  for (int k = 0; k < d.num_positive(); ++k) two_rho = vadd(two_rho, d.root_x(k));
  std::vector<IntMat> refl;
  for (int i = 0; i < d.rank(); ++i) refl.push_back(d.reflection_y(i));
  std::vector<IntMat> layer{IntMat::identity(d.dim())};
  while (!layer.empty()) {
    for (auto& w : layer)
      if (!visit(w)) return false;
    std::unordered_set<std::vector<i64>, VecHash> seen;
    std::vector<IntMat> next;
    for (auto& w : layer)
      for (int i = 0; i < d.rank(); ++i) {
        if (dot(two_rho, w * d.simple_coroots()[i]) < 0) continue;
        IntMat ws = w * refl[i];
        if (seen.insert(ws.data()).second) next.push_back(std::move(ws));
      }
    layer = std::move(next);
  }
  return true;
}

// ------------------------------------------------------------ twisted action

Vec twisted_translation(const RootDatum& d, const IntMat& w) {
  Vec tr = d.two_rho_vee();
  Vec t = vsub(tr, w * tr);
  for (i64& x : t) {
    if (x % 2 != 0) throw std::logic_error("ρ∨ - w ρ∨ not integral");
    x /= 2;
  }
  return t;
}

i64 fixed_point_count(const RootDatum& d, const Lattice& L, const IntMat& w) {
  IntMat a = IntMat::identity(d.dim()) - w;
  Lattice m = Lattice::span(a) + L;
  if (!m.contains(twisted_translation(d, w))) return 0;
  return m.index();
}

std::vector<i64> permutation_character(const WeylGroup& W, const Lattice& L) {
  std::vector<i64> v;
  for (int c = 0; c < W.num_classes(); ++c) v.push_back(fixed_point_count(W.datum(), L, W.class_matrix(c)));
  return v;
}

OrbitData enumerate_orbits(const RootDatum& d, const Lattice& L, i64 budget) {
  FiniteQuotient q(L);
  OrbitData out;
  out.quotient_size = q.cardinality();
  if (q.cardinality() > budget)
    throw BudgetError("quotient of size " + std::to_string(q.cardinality()) + " exceeds orbit budget");
  i64 nq = q.cardinality();
  std::vector<IntMat> a;
  std::vector<Vec> t;
  for (int i = 0; i < d.rank(); ++i) {
    a.push_back(q.induced(d.reflection_y(i)));
    t.push_back(q.project(d.simple_coroots()[i]));
  }
  std::vector<i64> uf(nq);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](i64 x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (i64 idx = 0; idx < nq; ++idx) {
    Vec v = q.decode(idx);
    for (int i = 0; i < d.rank(); ++i) {
      i64 j = q.encode(q.apply(a[i], t[i], v));
      i64 x = find(idx), y = find(j);
      if (x != y) uf[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<i64, i64> sizes;
  for (i64 idx = 0; idx < nq; ++idx) ++sizes[find(idx)];
  i64 wo = weyl_order(d.type());
  for (auto& [root, s] : sizes) {
    out.orbit_sizes.push_back(s);
    if (s == wo) ++out.num_free;
  }
  out.num_orbits = static_cast<i64>(sizes.size());
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  auto free_at = [&](const Vec& y) { return sizes[find(q.encode(q.project(y)))] == wo; };
  out.zero_free = free_at(Vec(d.dim(), 0));
  out.two_rho_free = free_at(d.two_rho_vee());
  return out;
}

}  // namespace wf
