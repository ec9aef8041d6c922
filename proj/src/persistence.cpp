#include "wf/persistence.hpp"

#include "wf/weylgrp.hpp"

namespace wf {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "undetermined";
  }
}

bool breaks_persistence(const Cover& c, const IntMat& w, Vec* difference) {
  const RootDatum& d = c.datum();
  int dim = d.dim();
  IntMat a = w - IntMat::identity(dim);
  Vec t = twisted_translation(d, w);
  const Lattice& L = c.Y_Qn();
  const Lattice& S = c.Y_Qn_sc();
  // t + a x = L z
  IntMat m = a.hcat(IntMat(L.basis().rows(), L.basis().cols()) - L.basis());
  auto sol = solve_integer(m, vscale(t, -1));
  if (!sol) return false;
  Vec x(sol->begin(), sol->begin() + dim);
  Vec base = vadd(t, a * x);
  if (!S.contains(base)) {
    if (difference) *difference = base;
    return true;
  }
  Lattice inter = Lattice::span(a).intersect(L);
  for (int j = 0; j < inter.rank(); ++j) {
    Vec g = inter.basis().col(j);
    if (!S.contains(g)) {
      if (difference) *difference = vadd(base, g);
      return true;
    }
  }
  return false;
}

PersistenceResult check_persistence(const Cover& c, i64 max_scan) {
  PersistenceResult res;
  if (c.saturated()) {
    res.value = Tri::yes;
    res.method = "saturated";
    return res;
  }
  const RootDatum& d = c.datum();
  bool have_classes = d.type().classical() || weyl_order(d.type()) <= 200000;
  if (have_classes) {
    WeylGroup W(d);
    res.method = "classes";
    for (int k = 0; k < W.num_classes(); ++k) {
      IntMat w = W.class_matrix(k);
      Vec diff;
      if (breaks_persistence(c, w, &diff)) {
        res.value = Tri::no;
        res.witness = w;
        res.witness_difference = diff;
        return res;
      }
    }
    res.value = Tri::yes;
    return res;
  }
  res.method = "scan";
  i64 seen = 0;
  bool done = for_each_element(d, [&](const IntMat& w) {
    Vec diff;
    if (breaks_persistence(c, w, &diff)) {
      res.value = Tri::no;
      res.witness = w;
      res.witness_difference = diff;
      return false;
    }
    return ++seen < max_scan;
  });
  if (res.value == Tri::no) return res;
  if (done) {
    res.value = Tri::yes;
  } else {
    res.method = "budget";
    res.value = Tri::undetermined;
  }
  return res;
}

Tri persistence_bruteforce(const Cover& c, i64 budget) {
  const RootDatum& d = c.datum();
  if (!d.semisimple()) return Tri::undetermined;
  FiniteQuotient q(c.Y_Qn_sc());
  i64 work = mul_ck(q.cardinality(), weyl_order(d.type()));
  if (work > budget) throw BudgetError("brute-force persistence check too large");
  std::vector<IntMat> elems;
  for_each_element(d, [&](const IntMat& w) {
    elems.push_back(w);
    return true;
  });
  Vec rho2 = d.two_rho_vee();
  for (i64 idx = 0; idx < q.cardinality(); ++idx) {
    Vec y = q.lift(q.decode(idx));
    for (auto& w : elems) {
      // w[y] - y = w(y - ρ∨) + ρ∨ - y, computed with 2ρ∨ to stay integral
      Vec twice = vsub(vadd(w * vsub(vscale(y, 2), rho2), rho2), vscale(y, 2));
      Vec diff = vscale(twice, 1);
      for (i64& x : diff) x /= 2;
      if (c.Y_Qn().contains(diff) && !c.Y_Qn_sc().contains(diff)) return Tri::no;
    }
  }
  return Tri::yes;
}

}  // namespace wf
