#include "wf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "wf/datafile.hpp"

namespace wf {

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && ws(s.back())) s.pop_back();
  size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, int dflt) {
  auto it = p.find(key);
  if (it == p.end()) return dflt;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw InputError("bad integer for " + key + ": " + it->second);
  }
}

std::string join_parts(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// "D2xC2", "A1^2xB3" in any order, canonicalized
std::string canonical_types_str(const std::string& s) {
  if (s == "trivial") return s;
  std::vector<CartanType> ts;
  for (auto& tok : split(s, 'x')) {
    auto caret = tok.find('^');
    int k = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    auto t = CartanType::parse(tok.substr(0, caret));
    for (int i = 0; i < k; ++i) ts.push_back(t);
  }
  return types_str(canonical_types(ts));
}

RatSet parse_set(const std::string& s) {
  std::string body = trim(s);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw InputError("bad set: " + s);
  RatSet out;
  for (auto& tok : split(body.substr(1, body.size() - 2), ',')) {
    auto t = trim(tok);
    if (t.empty()) continue;
    auto slash = t.find('/');
    out.push_back(slash == std::string::npos ? Rat(std::stoll(t))
                                             : Rat(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string orbit_str(const NilpotentOrbit& o) {
  if (!o.type.classical()) return o.label;
  std::string s = join_parts(o.partition);
  if (o.very_even) s += o.very_even == 1 ? " I" : " II";
  return s;
}

bool labels_match(const CartanType& t, const std::string& got, const std::string& want) {
  if (!t.classical()) return got == want;
  auto a = parse_classical_label(t, got), b = parse_classical_label(t, want);
  return a && b && *a == *b;
}

struct Check {
  Check() = default;
  Check(std::string c, bool o) : computed(std::move(c)), ok(o) {}
  std::string computed;
  bool ok = false;
  bool skipped = false;
  std::string note;
};

Check macdonald_for(const Cover& c, bool tilde, const std::string& want, bool orbit) {
  WeylGroup W(c.datum());
  auto T = irreducible_table(W);
  auto s = integral_subsystem(c.datum(), tilde ? c.nu_tilde() : c.nu());
  auto j = macdonald_rep(T, s.info.positive);
  const auto& t = c.datum().type();
  if (!orbit) return {j.label, labels_match(t, j.label, want)};
  auto o = springer_orbit(t, j.label);
  std::string got = orbit_str(o);
  return {got, got == want};
}

// W(D_{k+1} x D_{r-k-1}) inside W(D_r)
Check d_example(int r, int k, const std::string& want, bool orbit) {
  CartanType t{Series::D, r};
  auto d = simply_connected(t);
  WeylGroup W(d);
  auto T = irreducible_table(W);
  std::vector<Vec> eps;
  auto block = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j)
        for (int sgn : {-1, 1}) {
          Vec e(r, 0);
          e[i] = 1;
          e[j] = sgn;
          eps.push_back(e);
        }
  };
  block(0, k + 1);
  block(k + 1, r);
  auto j = macdonald_rep(T, roots_with_eps(d, eps));
  if (!orbit) return {j.label, labels_match(t, j.label, want)};
  auto got = orbit_str(springer_orbit(t, j.label));
  return {got, got == want};
}

Check run_check(const GoldenEntry& e, const ReportOptions& opt) {
  const auto& ck = e.check;
  const auto& want = e.expected;
  if (ck == "d-j" || ck == "d-orbit")
    return d_example(int_param(e.params, "r", 4), int_param(e.params, "k", 0), want, ck == "d-orbit");
  if (ck == "min-generic-n") {
    auto d = make_preset(e.params.at("preset"), int_param(e.params, "r", 1));
    auto m = minimal_generic_n(d, default_form(d, e.params.at("preset"), int_param(e.params, "q", 1)), opt.max_scan_n);
    std::string got = m ? std::to_string(*m) : "none";
    return {got, got == want};
  }
  Cover c = cover_from_params(e.params);
  const auto& d = c.datum();
  if (ck == "saturated") {
    auto got = yes_no(c.saturated());
    return {got, got == want};
  }
  if (ck == "persistent") {
    auto v = check_persistence(c, opt.persistence_scan).value;
    std::string got = v == Tri::yes ? "yes" : v == Tri::no ? "no" : "undetermined";
    return {got, got == want};
  }
  if (ck == "image") {
    auto fx = image_fx(c), fy = image_fy(c);
    std::string got = "f_X " + render_set(fx) + (fx == fy ? " = f_Y" : ", f_Y " + render_set(fy));
    if (want == "closed-form") {
      auto cf = closed_form_image(c);
      Check r{got, cf && fx == *cf && fy == *cf};
      r.note = cf ? "closed form " + render_set(*cf) : "no closed form applies";
      return r;
    }
    auto expect = parse_set(want);
    return {got, fx == expect && fy == expect};
  }
  if (ck == "generic") {
    Check r;
    if (c.Y_Qn().index() > opt.orbit_budget) {
      r.skipped = true;
      r.note = "|Y/Y_Qn| = " + std::to_string(c.Y_Qn().index()) + " above orbit budget";
      return r;
    }
    if (check_persistence(c, opt.persistence_scan).value != Tri::yes) {
      r.skipped = true;
      r.note = "not persistent";
      return r;
    }
    ReportOptions o = opt;
    o.scan_minimal_n = false;
    auto g = genericity_report(c, o);
    auto orbits = enumerate_orbits(d, c.Y_Qn(), opt.orbit_budget);
    std::ostringstream s;
    s << "W trivial " << yes_no(g.w_trivial) << ", 2rho free " << yes_no(*g.two_rho_free) << ", 0 free "
      << yes_no(*g.zero_free) << ", free orbits " << orbits.num_free;
    r.ok = g.consistent() && g.images_equal;
    if (g.w_trivial) {
      auto cO = predict_c(c, opt);
      s << ", c_O " << (cO ? std::to_string(*cO) : "-");
      r.ok = r.ok && cO && *cO == orbits.num_free;
      try {
        r.ok = r.ok && predict_orbit(c, opt) == regular_orbit(d.type());
      } catch (const InputError&) {
        r.note = "no Springer data for the orbit check";
      }
    } else {
      r.ok = r.ok && dim_whittaker(c, opt) == 0;
    }
    r.computed = s.str();
    if (r.ok) r.computed = "equivalent (" + r.computed + ")";
    return r;
  }
  if (ck == "orbit") return macdonald_for(c, true, want, true);
  if (ck == "j") return macdonald_for(c, true, want, false);
  if (ck == "orbit-rank") {
    auto o = predict_orbit(c, opt);
    const auto& tab = exceptional_springer(d.type());
    int idx = -1;
    for (size_t i = 0; i < tab.orbits.size(); ++i)
      if (tab.orbits[i].label == o.label) idx = static_cast<int>(i);
    auto got = std::to_string(idx);
    return {got, got == want};
  }
  if (ck == "phi-nu" || ck == "phi-nu-tilde") {
    auto got = integral_subsystem(d, ck == "phi-nu" ? c.nu() : c.nu_tilde()).types();
    return {got, got == canonical_types_str(want)};
  }
  if (ck == "phi-nu-coroots") {
    // long coroots are the coroots of short roots
    auto s = integral_subsystem(d, c.nu());
    IntMat g = simple_root_gram(d.type());
    auto norm = [&](const Vec& v) {
      i64 x = 0;
      for (int i = 0; i < d.rank(); ++i)
        for (int j = 0; j < d.rank(); ++j) x += v[i] * g(i, j) * v[j];
      return x;
    };
    i64 longest = 0;
    for (auto& rc : d.pos_root_coeffs()) longest = std::max(longest, norm(rc));
    int lng = 0, shrt = 0;
    for (int k : s.info.positive) (norm(d.pos_root_coeffs()[k]) < longest ? lng : shrt)++;
    std::string got = std::to_string(lng) + " long";
    if (shrt) got += ", " + std::to_string(shrt) + " short";
    return {got, got == want};
  }
  throw InputError("unknown check kind: " + ck);
}

}  // namespace

std::vector<GoldenEntry> parse_golden(const std::string& text) {
  std::vector<GoldenEntry> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto f = split(t, '|');
    if (f.size() != 5) throw InputError("golden line " + std::to_string(no) + ": expected 5 fields");
    GoldenEntry e;
    e.anchor = trim(f[0]);
    e.tag = trim(f[1]);
    e.check = trim(f[2]);
    std::istringstream ps(f[3]);
    std::string kv;
    while (ps >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("golden line " + std::to_string(no) + ": bad parameter " + kv);
      e.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    e.expected = trim(f[4]);
    e.line = no;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GoldenEntry> load_golden() { return parse_golden(read_data_file("golden/expected.golden")); }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::skipped: return "SKIP";
    default: return "ERROR";
  }
}

Cover cover_from_params(const std::map<std::string, std::string>& p) {
  auto it = p.find("preset");
  if (it == p.end()) throw InputError("missing preset");
  int r = int_param(p, "r", 1);
  i64 n = int_param(p, "n", 1);
  if (n < 1) throw InputError("n must be positive");
  auto d = make_preset(it->second, r);
  if (auto kp = p.find("kp"); kp != p.end()) {
    if (it->second != "GL") throw InputError("kp applies to the GL preset only");
    auto f = split(kp->second, ',');
    if (f.size() != 2) throw InputError("kp needs p,q");
    return Cover(d, kazhdan_patterson_form(r, std::stoll(f[0]), std::stoll(f[1])), n);
  }
  return Cover(d, default_form(d, it->second, int_param(p, "q", 1)), n);
}

VerifyResult run_entry(const GoldenEntry& e, const ReportOptions& opt) {
  VerifyResult r{e.anchor, e.tag, e.check, Outcome::error, "", e.expected, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto c = run_check(e, opt);
    r.computed = c.computed;
    r.note = c.note;
    r.outcome = c.skipped ? Outcome::skipped : c.ok ? Outcome::pass : Outcome::fail;
  } catch (const std::exception& ex) {
    r.outcome = Outcome::error;
    r.note = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<VerifyResult> run_golden(const std::vector<GoldenEntry>& entries, const std::string& filter, int threads,
                                     const ReportOptions& opt) {
  std::vector<const GoldenEntry*> todo;
  for (const auto& e : entries)
    if (filter.empty() || e.tag == filter) todo.push_back(&e);
  std::vector<VerifyResult> out(todo.size());
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < todo.size();) out[i] = run_entry(*todo[i], opt);
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.anchor < b.anchor; });
  return out;
}

}  // namespace wf
