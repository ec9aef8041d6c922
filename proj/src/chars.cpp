#include "wf/chars.hpp"

#include "wf/datafile.hpp"

#include <algorithm>
#include <optional>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace wf {

namespace {

using i128 = __int128;

bool all_even(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

bool split_type(const Bipartition& b) { return b.second.empty() && !b.first.empty() && all_even(b.first); }

Partition merged(const Partition& a, const Partition& b) {
  Partition p = a;
  p.insert(p.end(), b.begin(), b.end());
  return normalized(p);
}

i64 mn_rec(const Partition& lam, const Partition& mu, size_t k) {
  if (k == mu.size()) return lam.empty() ? 1 : 0;
  i64 s = 0;
  for (auto& [rest, leg] : remove_rim_hooks(lam, mu[k])) s += (leg % 2 ? -1 : 1) * mn_rec(rest, mu, k + 1);
  return s;
}

// cycles as (length, sign)
i64 wreath_rec(const Partition& xi, const Partition& eta, const std::vector<std::pair<int, int>>& cyc, size_t k) {
  if (k == cyc.size()) return xi.empty() && eta.empty() ? 1 : 0;
  auto [len, sg] = cyc[k];
  i64 s = 0;
  for (auto& [rest, leg] : remove_rim_hooks(xi, len)) s += (leg % 2 ? -1 : 1) * wreath_rec(rest, eta, cyc, k + 1);
  for (auto& [rest, leg] : remove_rim_hooks(eta, len))
    s += sg * (leg % 2 ? -1 : 1) * wreath_rec(xi, rest, cyc, k + 1);
  return s;
}

// B-class size 2^k k! / (z_α z_β 2^{ℓ(α)+ℓ(β)})
i64 b_class_size(const Bipartition& b) {
  int k = size(b.first) + size(b.second);
  i64 den = mul_ck(mul_ck(z_of(b.first), z_of(b.second)), ipow(2, static_cast<int>(b.first.size() + b.second.size())));
  return mul_ck(ipow(2, k), factorial(k)) / den;
}

// power series 1/p(t) up to degree N, p(0) = 1
std::vector<i64> inverse_series(const std::vector<i64>& p, int N) {
  std::vector<i64> s(N + 1, 0);
  s[0] = 1;
  for (int d = 1; d <= N; ++d) {
    i64 v = 0;
    for (int j = 1; j <= d && j < static_cast<int>(p.size()); ++j) v = sub_ck(v, mul_ck(p[j], s[d - j]));
    s[d] = v;
  }
  return s;
}

std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
  std::vector<i64> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = add_ck(c[i + j], mul_ck(a[i], b[j]));
  return c;
}

// det(1 - t w) as a polynomial in t, via Faddeev-LeVerrier on the integer matrix w
std::vector<i64> det_one_minus_tw(const IntMat& w) {
  int n = w.rows();
  // det(xI - w) = Σ c_k x^k, c_n = 1
  std::vector<i64> c(n + 1, 0);
  c[n] = 1;
  IntMat M(n, n);
  for (int k = 1; k <= n; ++k) {
    IntMat Mk = w * M;
    for (int i = 0; i < n; ++i) Mk(i, i) = add_ck(Mk(i, i), c[n - k + 1]);
    IntMat AM = w * Mk;
    i64 tr = 0;
    for (int i = 0; i < n; ++i) tr = add_ck(tr, AM(i, i));
    c[n - k] = -tr / k;
    M = Mk;
  }
  // det(1 - t w) = Σ c_k t^{n-k}
  std::vector<i64> p(n + 1);
  for (int k = 0; k <= n; ++k) p[n - k] = c[k];
  return p;
}

std::vector<i64> class_det_poly(const WeylGroup& W, int c) {
  if (!W.classical()) return det_one_minus_tw(W.class_matrix(c));
  std::vector<i64> p{1};
  auto factor = [&](int k, int sg) {
    std::vector<i64> f(k + 1, 0);
    f[0] = 1;
    f[k] = sg > 0 ? -1 : 1;
    p = poly_mul(p, f);
  };
  for (int k : W.cls(c).cycles.first) factor(k, 1);
  for (int k : W.cls(c).cycles.second) factor(k, -1);
  return p;
}

std::string exceptional_name(const CartanType& t) { return t.name(); }

}  // namespace

// ------------------------------------------------------------ classical values

i64 mn_value(const Partition& lambda, const Partition& mu) {
  if (size(lambda) != size(mu)) throw std::invalid_argument("mn_value: sizes differ");
  return mn_rec(lambda, mu, 0);
}

i64 wreath_mn_value(const Bipartition& chi, const Bipartition& cls) {
  std::vector<std::pair<int, int>> cyc;
  for (int k : cls.first) cyc.push_back({k, 1});
  for (int k : cls.second) cyc.push_back({k, -1});
  std::sort(cyc.begin(), cyc.end(), std::greater<>());
  return wreath_rec(chi.first, chi.second, cyc, 0);
}

std::string classical_label(const CartanType& t, const Bipartition& b, int split) {
  if (t.series == Series::A) return to_string(b.first);
  return to_string(b) + (split > 0 ? "+" : split < 0 ? "-" : "");
}

int b_invariant_formula(const CartanType& t, const Bipartition& b) {
  if (t.series == Series::A) return n_of(b.first);
  if (t.series == Series::B || t.series == Series::C) return 2 * n_of(b.first) + 2 * n_of(b.second) + size(b.second);
  if (t.series == Series::D)
    return 2 * n_of(b.first) + 2 * n_of(b.second) + std::min(size(b.first), size(b.second));
  throw std::invalid_argument("no closed b-invariant formula for " + t.name());
}

int b_invariant(const WeylGroup& W, const ClassFunction& chi) {
  int N = W.datum().num_positive();
  std::vector<i128> tot(N + 1, 0);
  for (int c = 0; c < W.num_classes(); ++c) {
    if (chi[c] == 0) continue;
    auto s = inverse_series(class_det_poly(W, c), N);
    i128 w = static_cast<i128>(W.cls(c).size) * chi[c];
    for (int d = 0; d <= N; ++d) tot[d] += w * s[d];
  }
  for (int d = 0; d <= N; ++d) {
    if (tot[d] % W.order() != 0) throw std::logic_error("b_invariant: non-integral graded multiplicity");
    if (tot[d] != 0) return d;
  }
  throw std::logic_error("b_invariant: character absent from the coinvariant algebra");
}

// ------------------------------------------------------------ class functions

ClassFunction trivial_character(const WeylGroup& W) { return ClassFunction(W.num_classes(), 1); }

ClassFunction sign_character(const WeylGroup& W) {
  ClassFunction f;
  for (auto& c : W.classes()) f.push_back(c.sign);
  return f;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = mul_ck(a[i], b[i]);
  return c;
}

Rat inner_product_rat(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g) {
  i128 s = 0;
  for (int c = 0; c < W.num_classes(); ++c) s += static_cast<i128>(W.cls(c).size) * f[c] * g[c];
  i128 o = W.order();
  i128 q = s / o, r = s % o;
  if (q > INT64_MAX || q < INT64_MIN) throw OverflowError();
  return Rat(static_cast<i64>(q)) + Rat(static_cast<i64>(r), W.order());
}

i64 inner_product(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g) {
  Rat r = inner_product_rat(W, f, g);
  if (r.denominator() != 1) throw std::logic_error("inner product not integral: " + rat_str(r));
  return r.numerator();
}

std::vector<i64> decompose(const CharTable& T, const ClassFunction& f) {
  std::vector<i64> m;
  for (auto& x : T.chars()) m.push_back(inner_product(T.group(), x.values, f));
  return m;
}

// ------------------------------------------------------------ tables

std::optional<std::pair<Bipartition, int>> parse_classical_label(const CartanType& t, const std::string& label) {
  try {
    std::string s = label;
    int split = 0;
    // a trailing '-' after a digit marks a split label; after ';' it is an empty part
    if (s.size() > 1 && (s.back() == '+' || (s.back() == '-' && std::isdigit(static_cast<unsigned char>(s[s.size() - 2]))))) {
      split = s.back() == '+' ? 1 : -1;
      s.pop_back();
    }
    Bipartition b;
    if (t.series == Series::A)
      b.first = parse_partition(s);
    else
      b = parse_bipartition(s);
    if (t.series == Series::D && b.second < b.first) std::swap(b.first, b.second);
    return std::make_pair(b, split);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

int CharTable::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (chars_[i].label == label) return i;
  if (!W_ || !W_->classical()) return -1;
  auto key = parse_classical_label(W_->type(), label);
  if (!key) return -1;
  for (int i = 0; i < size(); ++i)
    if (chars_[i].bip == key->first && chars_[i].split == key->second) return i;
  return -1;
}

int CharTable::trivial() const {
  for (int i = 0; i < size(); ++i)
    if (std::all_of(chars_[i].values.begin(), chars_[i].values.end(), [](i64 v) { return v == 1; })) return i;
  throw std::logic_error("no trivial character");
}

int CharTable::sign() const {
  auto s = sign_character(*W_);
  for (int i = 0; i < size(); ++i)
    if (chars_[i].values == s) return i;
  throw std::logic_error("no sign character");
}

namespace {

std::vector<IrrChar> classical_chars(const WeylGroup& W) {
  const CartanType& t = W.type();
  std::vector<IrrChar> out;
  auto finish = [&](IrrChar x) {
    x.degree = static_cast<int>(x.values[W.identity_class()]);
    x.label = classical_label(t, x.bip, x.split);
    out.push_back(std::move(x));
  };
  if (t.series == Series::A) {
    for (auto& lam : partitions(W.eps_degree())) {
      IrrChar x;
      x.bip = {lam, {}};
      for (auto& c : W.classes()) x.values.push_back(mn_value(lam, c.cycles.first));
      x.b = b_invariant_formula(t, x.bip);
      finish(x);
    }
    return out;
  }
  int r = t.rank;
  for (auto& bp : bipartitions(r)) {
    if (t.series != Series::D) {
      IrrChar x;
      x.bip = bp;
      for (auto& c : W.classes()) x.values.push_back(wreath_mn_value(bp, c.cycles));
      x.b = b_invariant_formula(t, bp);
      finish(x);
      continue;
    }
    if (bp.second < bp.first) continue;
    if (bp.first != bp.second) {
      IrrChar x;
      x.bip = bp;
      for (auto& c : W.classes()) x.values.push_back(wreath_mn_value(bp, c.cycles));
      x.b = b_invariant_formula(t, bp);
      finish(x);
      continue;
    }
    // (ξ;ξ) restricts to a sum of two characters; they differ on split classes
    // (2μ;∅)^± by ±2^{ℓ(μ)} χ^ξ(μ)
    for (int sp : {1, -1}) {
      IrrChar x;
      x.bip = bp;
      x.split = sp;
      for (auto& c : W.classes()) {
        i64 v = wreath_mn_value(bp, c.cycles);
        if (c.split != 0) {
          Partition mu;
          for (int k : c.cycles.first) mu.push_back(k / 2);
          v += sp * c.split * ipow(2, static_cast<int>(mu.size())) * mn_value(bp.first, mu);
        }
        if (v % 2 != 0) throw std::logic_error("odd value in split D character");
        x.values.push_back(v / 2);
      }
      x.b = b_invariant_formula(t, bp);
      finish(x);
    }
  }
  return out;
}

}  // namespace

std::string orthogonality_defect(const WeylGroup& W, const std::vector<IrrChar>& chars) {
  if (static_cast<int>(chars.size()) != W.num_classes()) return "number of characters differs from number of classes";
  for (size_t i = 0; i < chars.size(); ++i)
    for (size_t j = i; j < chars.size(); ++j) {
      Rat p = inner_product_rat(W, chars[i].values, chars[j].values);
      if (p != Rat(i == j ? 1 : 0)) return "<" + chars[i].label + ", " + chars[j].label + "> = " + rat_str(p);
    }
  return "";
}

CharTable irreducible_table(const WeylGroup& W) {
  if (W.classical()) return CharTable(&W, classical_chars(W));
  return CharTable(&W, parse_table_file(W, read_data_file(table_file_name(W.type()))));
}

// ------------------------------------------------------------ induction

namespace {

struct BlockDist {
  // (signed cycle type, flip parity) -> number of elements
  std::map<std::pair<Bipartition, int>, i64> count;
};

BlockDist combine(const BlockDist& a, const BlockDist& b) {
  BlockDist c;
  for (auto& [ka, na] : a.count)
    for (auto& [kb, nb] : b.count) {
      Bipartition m{merged(ka.first.first, kb.first.first), merged(ka.first.second, kb.first.second)};
      c.count[{m, ka.second ^ kb.second}] += mul_ck(na, nb);
    }
  return c;
}

// elements of a full signed-permutation block (all of W(B_k), or its D_k part)
BlockDist signed_block(int k, bool even_only) {
  BlockDist d;
  for (auto& bp : bipartitions(k)) {
    if (even_only && bp.second.size() % 2) continue;
    i64 n = b_class_size(bp);
    if (split_type(bp)) {
      d.count[{bp, 0}] += n / 2;
      d.count[{bp, 1}] += n / 2;
    } else {
      d.count[{bp, 0}] += n;
    }
  }
  return d;
}

// S_k acting on coordinates twisted by signs; `flips` = number of -1 signs
BlockDist perm_block(int k, int flips) {
  BlockDist d;
  for (auto& lam : partitions(k)) {
    Bipartition bp{lam, {}};
    int par = split_type(bp) ? flips % 2 : 0;
    d.count[{bp, par}] += factorial(k) / z_of(lam);
  }
  return d;
}

ClassFunction induce_classical(const WeylGroup& W, const std::vector<int>& roots) {
  const RootDatum& d = W.datum();
  int m = W.eps_degree();
  std::vector<Vec> eps;
  for (int k : roots) eps.push_back(d.root_eps(d.pos_root_coeffs()[k]));
  std::vector<int> uf(m);
  for (int i = 0; i < m; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (auto& v : eps) {
    int first = -1;
    for (int i = 0; i < m; ++i)
      if (v[i] != 0) {
        if (first < 0)
          first = i;
        else
          uf[find(i)] = find(first);
      }
  }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < m; ++i) blocks[find(i)].push_back(i);
  BlockDist total;
  total.count[{Bipartition{}, 0}] = 1;
  for (auto& [root, coords] : blocks) {
    int k = static_cast<int>(coords.size());
    std::vector<const Vec*> mine;
    for (auto& v : eps)
      if (find(static_cast<int>(std::find_if(v.begin(), v.end(), [](i64 x) { return x != 0; }) - v.begin())) == root)
        mine.push_back(&v);
    int R = static_cast<int>(mine.size());
    if (R == 0) {
      total = combine(total, perm_block(1, 0));
      continue;
    }
    bool single = false;
    std::set<std::pair<int, int>> diff, sum;
    for (auto* v : mine) {
      std::vector<int> nz;
      for (int i = 0; i < m; ++i)
        if ((*v)[i] != 0) nz.push_back(i);
      if (nz.size() == 1) {
        single = true;
      } else {
        auto key = std::make_pair(nz[0], nz[1]);
        ((*v)[nz[0]] * (*v)[nz[1]] < 0 ? diff : sum).insert(key);
      }
    }
    bool both = false;
    for (auto& p : diff)
      if (sum.count(p)) both = true;
    BlockDist bd;
    if (single) {
      if (R != k * k) throw std::invalid_argument("induce_sign: roots do not form a closed subsystem");
      bd = signed_block(k, false);
    } else if (both) {
      if (R != k * (k - 1)) throw std::invalid_argument("induce_sign: roots do not form a closed subsystem");
      bd = signed_block(k, true);
    } else {
      if (R != k * (k - 1) / 2) throw std::invalid_argument("induce_sign: roots do not form a closed subsystem");
      // roots s_i e_i - s_j e_j: propagate the twist s from the first coordinate
      std::map<int, int> s{{coords[0], 1}};
      for (bool changed = true; changed;) {
        changed = false;
        for (auto* v : mine) {
          std::vector<int> nz;
          for (int i = 0; i < m; ++i)
            if ((*v)[i] != 0) nz.push_back(i);
          int i = nz[0], j = nz[1];
          int rel = (*v)[i] * (*v)[j] < 0 ? 1 : -1;  // s_j = rel * s_i
          if (s.count(i) && !s.count(j)) {
            s[j] = rel * s[i];
            changed = true;
          } else if (s.count(j) && !s.count(i)) {
            s[i] = rel * s[j];
            changed = true;
          }
        }
      }
      int flips = 0;
      for (auto& [c, sg] : s) flips += sg < 0;
      bd = perm_block(k, flips);
    }
    total = combine(total, bd);
  }
  i64 H = 0;
  for (auto& [key, n] : total.count) H = add_ck(H, n);
  std::vector<i64> per_class(W.num_classes(), 0);
  bool isD = W.type().series == Series::D;
  for (auto& [key, n] : total.count) {
    Bipartition bp = key.first;
    int split = 0;
    if (isD && split_type(bp)) split = key.second == 0 ? 1 : -1;
    int c = W.class_index(bp, split);
    per_class[c] = add_ck(per_class[c], n);
  }
  ClassFunction f(W.num_classes(), 0);
  for (int c = 0; c < W.num_classes(); ++c) {
    if (per_class[c] == 0) continue;
    i128 num = static_cast<i128>(W.order()) * per_class[c];
    i128 den = static_cast<i128>(W.cls(c).size) * H;
    if (num % den != 0) throw std::logic_error("induced character not integral");
    f[c] = W.cls(c).sign * static_cast<i64>(num / den);
  }
  return f;
}

// generated subgroup inside a root permutation group, counted per class of g
std::vector<i64> subgroup_class_counts(const PermGroup& g, const std::vector<int>& roots, i64 budget) {
  std::vector<PermGroup::Perm> gens;
  for (int k : roots) gens.push_back(g.reflection(k));
  std::string id(g.num_points(), 0);
  for (int i = 0; i < g.num_points(); ++i) id[i] = static_cast<char>(i);
  std::unordered_set<std::string> seen{id};
  std::vector<std::string> frontier{id};
  std::vector<i64> counts(g.num_classes(), 0);
  counts[g.class_of(g.index_of(id))] = 1;
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (auto& x : frontier)
      for (auto& s : gens) {
        auto y = PermGroup::compose(x, s);
        if (seen.insert(y).second) {
          if (static_cast<i64>(seen.size()) > budget) throw BudgetError("reflection subgroup exceeds budget");
          ++counts[g.class_of(g.index_of(y))];
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return counts;
}

ClassFunction from_counts(const WeylGroup& W, const std::vector<i64>& per_class) {
  i64 H = 0;
  for (i64 n : per_class) H += n;
  ClassFunction f(W.num_classes(), 0);
  for (int c = 0; c < W.num_classes(); ++c) {
    if (!per_class[c]) continue;
    i128 num = static_cast<i128>(W.order()) * per_class[c];
    i128 den = static_cast<i128>(W.cls(c).size) * H;
    if (num % den != 0) throw std::logic_error("induced character not integral");
    f[c] = W.cls(c).sign * static_cast<i64>(num / den);
  }
  return f;
}

}  // namespace

ClassFunction induce_sign(const WeylGroup& W, const std::vector<int>& positive_roots, i64 budget) {
  if (W.classical()) return induce_classical(W, positive_roots);
  return from_counts(W, subgroup_class_counts(*W.perm_group(), positive_roots, budget));
}

ClassFunction induce_sign_enumerated(const WeylGroup& W, const std::vector<int>& positive_roots, i64 budget) {
  if (!W.classical()) return from_counts(W, subgroup_class_counts(*W.perm_group(), positive_roots, budget));
  PermGroup g(W.datum(), budget);
  auto counts = subgroup_class_counts(g, positive_roots, budget);
  std::vector<i64> per_class(W.num_classes(), 0);
  for (int c = 0; c < g.num_classes(); ++c) {
    if (!counts[c]) continue;
    SignedPerm s = SignedPerm::identity(W.eps_degree());
    for (int i : g.word(g.class_rep(c))) s = s * simple_reflection_eps(W.type(), i);
    per_class[W.class_of(s)] += counts[c];
  }
  return from_counts(W, per_class);
}

// ------------------------------------------------------------ Dixon-Schneider

namespace {

constexpr i64 P = (i64(1) << 61) - 1;

i64 mmul(i64 a, i64 b) { return static_cast<i64>(static_cast<i128>(a) * b % P); }
i64 madd(i64 a, i64 b) { return (a + b) % P; }
i64 msub(i64 a, i64 b) { return (a - b + P) % P; }
i64 mpow(i64 a, i64 e) {
  i64 r = 1;
  for (a %= P; e; e >>= 1, a = mmul(a, a))
    if (e & 1) r = mmul(r, a);
  return r;
}
i64 minv(i64 a) { return mpow(a, P - 2); }
i64 mred(i64 a) { return mod_pos(a, P); }
i64 lift(i64 a) { return a > P / 2 ? a - P : a; }

using MMat = std::vector<std::vector<i64>>;

// basis of the nullspace of a (rows x cols) matrix mod P, as column vectors
std::vector<std::vector<i64>> nullspace(MMat a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    i64 inv = minv(a[r][c]);
    for (auto& x : a[r]) x = mmul(x, inv);
    for (int i = 0; i < rows; ++i)
      if (i != r && a[i][c]) {
        i64 f = a[i][c];
        for (int j = 0; j < cols; ++j) a[i][j] = msub(a[i][j], mmul(f, a[r][j]));
      }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<std::vector<i64>> out;
  std::set<int> piv(pivcol.begin(), pivcol.end());
  for (int f = 0; f < cols; ++f) {
    if (piv.count(f)) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = msub(0, a[i][f]);
    out.push_back(v);
  }
  return out;
}

// characteristic polynomial det(xI - R) mod P, coefficients low to high
std::vector<i64> charpoly(const MMat& R) {
  int n = static_cast<int>(R.size());
  std::vector<i64> c(n + 1, 0);
  c[n] = 1;
  MMat M(n, std::vector<i64>(n, 0));
  for (int k = 1; k <= n; ++k) {
    MMat Mk(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (!R[i][l]) continue;
        for (int j = 0; j < n; ++j) Mk[i][j] = madd(Mk[i][j], mmul(R[i][l], M[l][j]));
      }
    for (int i = 0; i < n; ++i) Mk[i][i] = madd(Mk[i][i], c[n - k + 1]);
    i64 tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr = madd(tr, mmul(R[i][l], Mk[l][i]));
    c[n - k] = msub(0, mmul(tr, minv(k)));
    M = std::move(Mk);
  }
  return c;
}

// column basis (k x d) brought to reduced column-echelon form; returns pivot rows
std::vector<int> echelon_columns(std::vector<std::vector<i64>>& cols, int k) {
  std::vector<int> piv;
  int d = static_cast<int>(cols.size());
  int c = 0;
  for (int row = 0; row < k && c < d; ++row) {
    int p = c;
    while (p < d && cols[p][row] == 0) ++p;
    if (p == d) continue;
    std::swap(cols[p], cols[c]);
    i64 inv = minv(cols[c][row]);
    for (auto& x : cols[c]) x = mmul(x, inv);
    for (int j = 0; j < d; ++j)
      if (j != c && cols[j][row]) {
        i64 f = cols[j][row];
        for (int i = 0; i < k; ++i) cols[j][i] = msub(cols[j][i], mmul(f, cols[c][i]));
      }
    piv.push_back(row);
    ++c;
  }
  return piv;
}

}  // namespace

std::vector<std::vector<i64>> dixon_characters(const PermGroup& g) {
  int k = g.num_classes();
  std::vector<i64> h(k);
  for (int c = 0; c < k; ++c) h[c] = static_cast<i64>(g.class_members(c).size());
  int idc = g.class_of(0);
  // A[i][l][j] = #{x ∈ C_i : x^{-1} g_l ∈ C_j}; central characters satisfy
  // ω_i ω_j = Σ_l A[i][l][j] ω_l
  std::vector<MMat> A(k, MMat(k, std::vector<i64>(k, 0)));
  for (int l = 0; l < k; ++l) {
    const auto& gl = g.element(g.class_rep(l));
    for (int i = 0; i < k; ++i)
      for (int x : g.class_members(i)) {
        auto y = PermGroup::compose(PermGroup::invert(g.element(x)), gl);
        ++A[i][l][g.class_of(g.index_of(y))];
      }
  }
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> full;
    for (int c = 0; c < k; ++c) {
      std::vector<i64> e(k, 0);
      e[c] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& B : spaces) {
      int d = static_cast<int>(B.size());
      if (d == 1) {
        next.push_back(B);
        continue;
      }
      auto piv = echelon_columns(B, k);
      // restricted matrix R (d x d): A_i B = B R, read off pivot rows
      MMat R(d, std::vector<i64>(d, 0));
      for (int c = 0; c < d; ++c) {
        std::vector<i64> img(k, 0);
        for (int l = 0; l < k; ++l) {
          if (!B[c][l]) continue;
          for (int j = 0; j < k; ++j)
            if (A[i][l][j]) img[j] = madd(img[j], mmul(A[i][l][j], B[c][l]));
        }
        for (int r = 0; r < d; ++r) R[r][c] = img[piv[r]];
      }
      auto cp = charpoly(R);
      int found = 0;
      for (i64 lam = -h[i]; lam <= h[i] && found < d; ++lam) {
        i64 lm = mred(lam), val = 0;
        for (int e = d; e >= 0; --e) val = madd(mmul(val, lm), cp[e]);
        if (val != 0) continue;
        MMat S = R;
        for (int r = 0; r < d; ++r) S[r][r] = msub(S[r][r], lm);
        auto ns = nullspace(S, d);
        std::vector<std::vector<i64>> sub;
        for (auto& coef : ns) {
          std::vector<i64> v(k, 0);
          for (int c = 0; c < d; ++c)
            if (coef[c])
              for (int j = 0; j < k; ++j) v[j] = madd(v[j], mmul(coef[c], B[c][j]));
          sub.push_back(v);
        }
        found += static_cast<int>(sub.size());
        next.push_back(sub);
      }
      if (found != d) throw std::logic_error("Dixon: class matrix does not split over the integers");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<i64>> rows;
  i64 order = g.order();
  for (auto& B : spaces) {
    if (B.size() != 1) throw std::logic_error("Dixon: eigenspaces did not separate");
    std::vector<i64> v = B[0];
    if (v[idc] == 0) throw std::logic_error("Dixon: zero at identity");
    i64 inv = minv(v[idc]);
    std::vector<i64> w(k);
    for (int c = 0; c < k; ++c) w[c] = lift(mmul(v[c], inv));
    // χ(1)^2 Σ ω_l^2 / h_l = |G|
    Rat s(0);
    for (int c = 0; c < k; ++c) s += Rat(w[c] * w[c], h[c]);
    Rat d2 = Rat(order) / s;
    if (d2.denominator() != 1) throw std::logic_error("Dixon: non-integral degree");
    i64 deg = 1;
    while (deg * deg < d2.numerator()) ++deg;
    if (deg * deg != d2.numerator()) throw std::logic_error("Dixon: degree not a square root");
    std::vector<i64> row(k);
    for (int c = 0; c < k; ++c) {
      if ((w[c] * deg) % h[c] != 0) throw std::logic_error("Dixon: non-integral value");
      row[c] = w[c] * deg / h[c];
    }
    rows.push_back(row);
  }
  return rows;
}

// ------------------------------------------------------------ exceptional labels

std::vector<IrrChar> label_exceptional(const WeylGroup& W, const std::vector<std::vector<i64>>& rows) {
  std::vector<IrrChar> out;
  for (auto& r : rows) {
    IrrChar x;
    x.values = r;
    x.degree = static_cast<int>(r[W.identity_class()]);
    x.b = b_invariant(W, r);
    out.push_back(x);
  }
  IntMat gram = simple_root_gram(W.type());
  int longest = 0;
  for (int i = 0; i < W.type().rank; ++i)
    if (gram(i, i) > gram(longest, longest)) longest = i;
  int lc = W.reflection_class(longest);
  std::sort(out.begin(), out.end(), [&](const IrrChar& a, const IrrChar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.b != b.b) return a.b < b.b;
    if (a.values[lc] != b.values[lc]) return a.values[lc] > b.values[lc];
    return a.values > b.values;
  });
  for (size_t i = 0; i < out.size(); ++i) {
    int group = 0, pos = 0;
    for (size_t j = 0; j < out.size(); ++j)
      if (out[j].degree == out[i].degree && out[j].b == out[i].b) {
        if (j < i) ++pos;
        ++group;
      }
    if (group > 2) throw std::logic_error("more than two characters share (d,b)");
    std::string prime = group == 1 ? "" : (pos == 0 ? "''" : "'");
    out[i].label = "phi" + prime + "_{" + std::to_string(out[i].degree) + "," + std::to_string(out[i].b) + "}";
  }
  return out;
}

// ------------------------------------------------------------ data files

std::string table_file_name(const CartanType& t) { return "chars/" + exceptional_name(t) + ".tbl"; }


std::string render_table_file(const WeylGroup& W, const std::vector<IrrChar>& chars) {
  std::ostringstream o;
  o << "# irreducible characters of W(" << W.type().name() << "); exact integers\n";
  o << "# class <label> <size>; char <label> <b> <values in class order>\n";
  o << "type " << W.type().name() << "\n";
  o << "order " << W.order() << "\n";
  for (auto& c : W.classes()) o << "class " << c.label << " " << c.size << "\n";
  for (auto& x : chars) {
    o << "char " << x.label << " " << x.b;
    for (i64 v : x.values) o << " " << v;
    o << "\n";
  }
  return seal(o.str());
}

std::vector<IrrChar> parse_table_file(const WeylGroup& W, const std::string& text) {
  std::istringstream in(unseal(text, "character table"));
  std::string line;
  std::vector<IrrChar> out;
  int ci = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "type") {
      std::string t;
      ls >> t;
      if (t != W.type().name()) throw InputError("character table is for " + t);
    } else if (key == "order") {
      i64 o;
      ls >> o;
      if (o != W.order()) throw InputError("character table group order mismatch");
    } else if (key == "class") {
      std::string lab;
      i64 sz;
      ls >> lab >> sz;
      if (ci >= W.num_classes() || W.cls(ci).label != lab || W.cls(ci).size != sz)
        throw InputError("character table class list does not match the group");
      ++ci;
    } else if (key == "char") {
      IrrChar x;
      ls >> x.label >> x.b;
      i64 v;
      while (ls >> v) x.values.push_back(v);
      if (static_cast<int>(x.values.size()) != W.num_classes()) throw InputError("character row of wrong length");
      x.degree = static_cast<int>(x.values[W.identity_class()]);
      out.push_back(x);
    } else {
      throw InputError("unknown line in character table: " + line);
    }
  }
  if (ci != W.num_classes()) throw InputError("character table class list incomplete");
  std::string defect = orthogonality_defect(W, out);
  if (!defect.empty()) throw InputError("character table fails orthogonality: " + defect);
  return out;
}

}  // namespace wf
