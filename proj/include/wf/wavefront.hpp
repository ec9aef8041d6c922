#pragma once
// Predicted wavefront orbit of a theta representation, the leading coefficient
// c_O = <j, ε ⊗ σ^X>, dim Wh = <ε, σ^X>, genericity diagnostics through the
// maps f_X, f_Y, and predictions for constituents of regular principal series.

#include <optional>
#include <string>
#include <vector>

#include "wf/macdonald.hpp"
#include "wf/persistence.hpp"
#include "wf/springer.hpp"

namespace wf {

struct ReportOptions {
  i64 orbit_budget = 100000;        // |Y/Y_{Q,n}| above which orbits are not enumerated
  i64 persistence_scan = 3000000;
  i64 max_perm_order = 200000;      // exceptional Weyl groups larger than this have no class table
  i64 max_scan_n = 10000;           // minimal generic n search bound
  bool scan_minimal_n = true;
};

// sorted, distinct
using RatSet = std::vector<Rat>;

// f_X(β∨) = <ν̃, β∨> over positive coroots, f_Y(β) = ht(β)/ñ_β over positive roots
RatSet image_fx(const Cover& c);
RatSet image_fy(const Cover& c);
bool meets_integers(const RatSet& s);
// Closed forms per type from the n_α / ñ_α pattern; nullopt when no form applies.
std::optional<RatSet> closed_form_image(const Cover& c);
// {a/d : a in [lo, hi]}
RatSet interval_over(i64 lo, i64 hi, Rat d);
RatSet set_union(RatSet a, const RatSet& b);
std::string render_set(const RatSet& s);

// Smallest n' in [1, max_n] with W_ν̃ trivial for (d, f, n'); nullopt if none.
std::optional<i64> minimal_generic_n(const RootDatum& d, const QuadraticForm& f, i64 max_n = 10000);

struct Genericity {
  bool w_trivial = false;             // (i)
  std::optional<bool> two_rho_free;   // (ii)  set when orbits were enumerated
  std::optional<bool> zero_free;      // (iii)
  std::optional<bool> some_free;      // (iv)
  RatSet fx, fy;
  bool images_equal = false;
  std::optional<RatSet> closed_form;
  std::optional<i64> minimal_n;
  // all evaluated criteria agree
  bool consistent() const;
  bool operator==(const Genericity&) const = default;
};
Genericity genericity_report(const Cover& c, const ReportOptions& opt = {});

// Positive roots of Φ_ν̃ and the resulting prediction. Throws BudgetError when
// no character table can be built and InputError when no Springer data exists.
NilpotentOrbit predict_orbit(const Cover& c, const ReportOptions& opt = {});
// c_O; nullopt when the cover is not known to be persistent
std::optional<i64> predict_c(const Cover& c, const ReportOptions& opt = {});
// <ε, σ^X>; when |Y/Y_{Q,n}| is within budget it is compared with the free
// orbit count and std::logic_error is thrown on disagreement.
i64 dim_whittaker(const Cover& c, const ReportOptions& opt = {});

struct ConstituentPrediction {
  std::vector<int> phi_nu;          // simple indices in Φ(ν)
  RVec nu_tilde_pairings;
  std::vector<int> integral_roots;  // positive roots of W^S_ν̃
  std::string integral_types;
  std::string j_label;
  NilpotentOrbit orbit;
  // induction of the Levi-level prediction (classical ambient only)
  std::optional<NilpotentOrbit> levi_induced;
  bool levi_trivial_local_systems = true;
};
// ν given by its pairings with the simple coroots; S a subset of simple indices.
// Throws InputError unless ν is regular, Φ(ν) ⊆ Δ and S ⊆ Φ(ν).
ConstituentPrediction predict_orbit_for_constituent(const Cover& c, const RVec& nu_pairings,
                                                    const std::vector<int>& S);

struct CoverReport {
  std::string group;
  std::string type;
  i64 n = 0;
  std::vector<i64> n_alpha;    // per simple root
  std::vector<Rat> ntilde_alpha;
  bool saturated = false;
  std::string persistent;      // yes / no / undetermined
  std::string persistence_method;
  std::string dual_type;
  i64 torsor_size = 0;
  RVec nu, nu_tilde;           // X ⊗ Q coordinates
  std::string phi_nu_types, phi_nu_tilde_types;
  int phi_nu_tilde_positive = 0;
  std::optional<std::string> j_label;
  std::optional<int> j_b;
  std::optional<NilpotentOrbit> orbit;
  std::optional<bool> orbit_special;
  std::optional<i64> c_O;
  std::optional<i64> dim_wh;
  std::optional<i64> quotient_size;
  std::optional<i64> free_orbits;
  Genericity genericity;
  std::vector<std::string> flags;
  bool operator==(const CoverReport&) const = default;
};

CoverReport analyze(const Cover& c, const ReportOptions& opt = {});

inline constexpr int kReportSchema = 1;
std::string report_to_json(const CoverReport& r, int indent = 2);
// throws InputError on schema mismatch or malformed input
CoverReport report_from_json(const std::string& text);
std::string report_to_text(const CoverReport& r);

}  // namespace wf
