#include "wf/macdonald.hpp"

#include <set>

#include "wf/linalg.hpp"

namespace wf {

IntegralSubsystem integral_subsystem(const RootDatum& d, const RVec& nu) {
  IntegralSubsystem s;
  s.nu = nu;
  std::vector<int> pos;
  for (int k = 0; k < d.num_positive(); ++k) {
    Rat p = rdot(nu, d.coroot_y(k));
    if (p.denominator() == 1) pos.push_back(k);
  }
  s.info = classify_subsystem(d, pos);
  return s;
}

std::vector<int> reflection_closure(const RootDatum& d, const std::vector<int>& roots) {
  std::set<int> s(roots.begin(), roots.end());
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) {
        const Vec& ra = d.pos_root_coeffs()[a];
        Vec v = vsub(ra, vscale(d.pos_root_coeffs()[b], d.pair_coeffs(ra, d.pos_coroot_coeffs()[b])));
        int k = d.find_root(v);
        if (k < 0) k = d.find_root(vscale(v, -1));
        if (s.insert(k).second) changed = true;
      }
  }
  return {s.begin(), s.end()};
}

MacdonaldResult macdonald_rep(const CharTable& T, const std::vector<int>& positive_roots) {
  const WeylGroup& W = T.group();
  MacdonaldResult r;
  r.b = static_cast<int>(positive_roots.size());
  r.induced = induce_sign(W, positive_roots);
  r.multiplicities = decompose(T, r.induced);
  for (int i = 0; i < T.size(); ++i) {
    if (r.multiplicities[i] == 0) continue;
    if (r.multiplicities[i] < 0) throw std::logic_error("induced sign character has a negative multiplicity");
    if (T[i].b < r.b) throw std::logic_error("constituent " + T[i].label + " below the truncation degree");
    if (T[i].b == r.b) {
      if (r.index >= 0) throw std::logic_error("two constituents at the truncation degree");
      if (r.multiplicities[i] != 1) throw std::logic_error("truncated constituent has multiplicity > 1");
      r.index = i;
    }
  }
  if (r.index < 0) throw std::logic_error("no constituent at the truncation degree");
  r.label = T[r.index].label;
  return r;
}

std::vector<int> roots_with_eps(const RootDatum& d, const std::vector<Vec>& eps) {
  std::vector<int> out;
  for (auto& e : eps) {
    int found = -1;
    for (int k = 0; k < d.num_positive(); ++k)
      if (d.root_eps(d.pos_root_coeffs()[k]) == e) found = k;
    if (found < 0) throw std::invalid_argument("not a positive root");
    out.push_back(found);
  }
  return out;
}

std::pair<std::string, std::string> adc_identity_sides(int k) {
  auto d = simply_connected({k == 1 ? Series::A : Series::C, k});
  if (k == 1) throw std::invalid_argument("adc identity needs k >= 2");
  WeylGroup W(d);
  CharTable T = irreducible_table(W);
  auto e = [&](int i) {
    Vec v(k, 0);
    v[i] = 1;
    return v;
  };
  std::vector<Vec> a, dc;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) a.push_back(vsub(e(i), e(j)));
  int na = (k + 1) / 2;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool same = (i < na) == (j < na);
      if (!same) continue;
      dc.push_back(vsub(e(i), e(j)));
      dc.push_back(vadd(e(i), e(j)));
    }
  for (int i = na; i < k; ++i) dc.push_back(vscale(e(i), 2));
  auto left = macdonald_rep(T, roots_with_eps(d, a));
  auto right = macdonald_rep(T, roots_with_eps(d, dc));
  return {left.label, right.label};
}

}  // namespace wf
