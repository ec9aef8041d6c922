// Command-line front end: analyze a cover, run the golden verification suite,
// and small partition / symbol / character utilities.
// Exit codes: 0 ok, 1 verification mismatch, 2 invalid input, 3 budget exceeded.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wf/verify.hpp"

using nlohmann::json;
using namespace wf;

namespace {

constexpr int kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parts_str(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s.empty() ? "-" : s;
}

std::string row_str(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

json orbit_json(const NilpotentOrbit& o) {
  return {{"type", o.type.name()}, {"partition", o.partition}, {"very_even", o.very_even},
          {"label", o.label},      {"dim", o.dim},             {"name", o.name()}};
}

// "p=0,q=1" or "0,1"
std::pair<i64, i64> parse_kp(const std::string& s) {
  i64 p = 0, q = 1;
  bool have_p = false, have_q = false;
  std::stringstream in(s);
  std::string tok;
  int pos = 0;
  while (std::getline(in, tok, ',')) {
    try {
      auto eq = tok.find('=');
      std::string key = eq == std::string::npos ? (pos == 0 ? "p" : "q") : tok.substr(0, eq);
      i64 v = std::stoll(eq == std::string::npos ? tok : tok.substr(eq + 1));
      if (key == "p") p = v, have_p = true;
      else if (key == "q") q = v, have_q = true;
      else throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad --kp value: " + s);
    }
    ++pos;
  }
  if (!have_p || !have_q) throw InputError("--kp needs both p and q");
  return {p, q};
}

Cover cover_from_config(const std::string& path, std::optional<i64> n_flag) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad config: ") + e.what());
  }
  try {
    auto d = root_datum_from_json(j.at("datum").dump());
    QuadraticForm f;
    const auto& fj = j.at("form");
    if (fj.contains("gram")) {
      f.gram = IntMat::from_rows(fj.at("gram").get<std::vector<Vec>>());
      check_weyl_invariant(d, f);
    } else {
      f = form_from_simple_values(d, fj.at("simple_values").get<std::vector<i64>>());
    }
    i64 n = n_flag ? *n_flag : j.at("n").get<i64>();
    if (n < 1) throw InputError("n must be positive");
    return Cover(d, f, n);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad config: ") + e.what());
  }
}

CartanType type_from(const std::string& letter, int rank) {
  if (letter.size() > 1) return CartanType::parse(letter);
  auto t = CartanType::parse(letter + std::to_string(rank));
  return t;
}

// "2,1;1" -> bipartition, optional trailing split marker handled by the table parser
std::pair<Bipartition, int> parse_bip(const CartanType& t, const std::string& s) {
  auto p = parse_classical_label(t, s);
  if (!p) throw InputError("bad bipartition: " + s);
  return *p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavefront predictions for covering groups"};
  app.require_subcommand(1);
  std::string format = "text";

  // analyze
  auto* an = app.add_subcommand("analyze", "report for one cover");
  std::string preset, config, kp;
  int rank = 0;
  i64 n = 0, q = 1;
  ReportOptions opt;
  auto* o_preset = an->add_option("--preset", preset, "preset family: " + [] {
    std::string s;
    for (auto& p : preset_names()) s += (s.empty() ? "" : ", ") + p;
    return s;
  }());
  auto* o_config = an->add_option("--config", config, "JSON file with datum, form and n");
  o_preset->excludes(o_config);
  an->add_option("--rank", rank, "index r of the group name");
  auto* o_n = an->add_option("--n", n, "degree of the cover");
  an->add_option("--q", q, "scale of the default form");
  an->add_option("--kp", kp, "Kazhdan-Patterson parameters for GL, e.g. p=0,q=1");
  an->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  an->add_option("--orbit-budget", opt.orbit_budget);
  an->add_option("--max-perm-order", opt.max_perm_order, "largest exceptional Weyl group given a class table");
  an->add_option("--persistence-scan", opt.persistence_scan);
  bool no_min_n = false;
  an->add_flag("--no-min-n", no_min_n, "skip the minimal generic n search");

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the golden expectations");
  std::string filter, golden;
  int threads = 0;
  bool failures_only = false;
  vp->add_option("--filter", filter, "tag: tables, lemmas, generic, sp-odd, gl, sp4, so4, g2, e8, type-d");
  vp->add_option("--golden", golden, "expectations file (default: data dir)");
  vp->add_option("--threads", threads);
  vp->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  vp->add_flag("--failures-only", failures_only);

  // tools
  auto* tl = app.add_subcommand("tools", "partition, symbol and character utilities");
  tl->require_subcommand(1);
  std::string type, part, bip, label;
  auto* t_collapse = tl->add_subcommand("collapse", "symplectic or orthogonal collapse");
  auto* t_springer = tl->add_subcommand("springer", "Springer orbit of a character");
  auto* t_symbol = tl->add_subcommand("symbol", "symbol of a bipartition");
  auto* t_char = tl->add_subcommand("character", "characters of a Weyl group");
  auto* t_orbits = tl->add_subcommand("orbits", "nilpotent orbits of a classical type");
  for (auto* s : {t_collapse, t_springer, t_symbol, t_char, t_orbits}) {
    s->add_option("--type", type, "series letter or full type such as C4")->required();
    s->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  }
  t_collapse->add_option("--partition", part)->required();
  for (auto* s : {t_springer, t_symbol, t_char, t_orbits}) s->add_option("--rank", rank);
  t_springer->add_option("--bipartition", bip);
  t_springer->add_option("--label", label);
  t_symbol->add_option("--bipartition", bip)->required();
  int sym_k = 0;
  t_symbol->add_option("--k", sym_k, "padding (default: the smallest, giving the reduced symbol)");
  t_char->add_option("--label", label);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (an->parsed()) {
      if (preset.empty() == config.empty()) throw InputError("give exactly one of --preset and --config");
      opt.scan_minimal_n = !no_min_n;
      std::optional<Cover> c;
      if (!preset.empty()) {
        if (!*o_n) throw InputError("--n is required with --preset");
        if (n < 1) throw InputError("n must be positive");
        auto d = make_preset(preset, rank);
        if (!kp.empty()) {
          if (preset != "GL") throw InputError("--kp applies to the GL preset only");
          auto [p, qq] = parse_kp(kp);
          c.emplace(d, kazhdan_patterson_form(rank, p, qq), n);
        } else {
          c.emplace(d, default_form(d, preset, q), n);
        }
      } else {
        c.emplace(cover_from_config(config, *o_n ? std::optional<i64>(n) : std::nullopt));
      }
      auto rep = analyze(*c, opt);
      std::cout << (format == "json" ? report_to_json(rep) + "\n" : report_to_text(rep));
      for (auto& f : rep.flags)
        if (f.rfind("MISMATCH", 0) == 0) return kMismatch;
      return kOk;
    }

    if (vp->parsed()) {
      auto entries = golden.empty() ? load_golden() : parse_golden(slurp(golden));
      auto results = run_golden(entries, filter, threads);
      if (results.empty()) throw InputError("no entries match filter '" + filter + "'");
      int pass = 0, fail = 0, skip = 0;
      std::vector<std::string> failing;
      json arr = json::array();
      for (auto& r : results) {
        if (r.outcome == Outcome::pass) ++pass;
        else if (r.outcome == Outcome::skipped) ++skip;
        else {
          ++fail;
          failing.push_back(r.anchor);
        }
        if (format == "json") {
          arr.push_back({{"anchor", r.anchor}, {"tag", r.tag}, {"check", r.check}, {"outcome", to_string(r.outcome)},
                         {"computed", r.computed}, {"expected", r.expected}, {"note", r.note}});
        } else if (!failures_only || r.outcome == Outcome::fail || r.outcome == Outcome::error) {
          std::cout << to_string(r.outcome) << "  " << r.anchor << "  computed: " << r.computed
                    << "  expected: " << r.expected;
          if (!r.note.empty()) std::cout << "  [" << r.note << "]";
          std::cout << "\n";
        }
      }
      if (format == "json") {
        std::cout << json{{"schema", 1}, {"passed", pass}, {"failed", fail}, {"skipped", skip}, {"items", arr}}.dump(2)
                  << "\n";
      } else {
        std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
        for (auto& a : failing) std::cout << "failing: " << a << "\n";
      }
      return fail ? kMismatch : kOk;
    }

    // tools
    if (t_collapse->parsed()) {
      auto t = type_from(type, 1);
      Partition out;
      if (t.series == Series::C) out = collapse_symplectic(parse_partition(part));
      else if (t.series == Series::B || t.series == Series::D) out = collapse_orthogonal(parse_partition(part));
      else throw InputError("collapse needs type B, C or D");
      if (format == "json") std::cout << json{{"partition", out}}.dump() << "\n";
      else std::cout << parts_str(out) << "\n";
      return kOk;
    }
    if (t_springer->parsed()) {
      if (!rank && !bip.empty() && type.size() == 1) {
        auto pb = parse_classical_label({Series::B, 1}, bip);
        if (pb) rank = size(pb->first.first) + size(pb->first.second) - (type == "A" ? 1 : 0);
      }
      auto t = type_from(type, rank);
      if (!admissible(t)) throw InputError("inadmissible type " + t.name());
      if (bip.empty() == label.empty()) throw InputError("give exactly one of --bipartition and --label");
      std::string lab = label;
      if (!bip.empty()) {
        auto [b, split] = parse_bip(t, bip);
        lab = t.series == Series::A ? parts_str(b.first) : classical_label(t, b, split);
      }
      auto o = springer_orbit(t, lab);
      bool special = is_special(t, lab);
      if (format == "json")
        std::cout << json{{"character", lab}, {"orbit", orbit_json(o)}, {"special", special}}.dump() << "\n";
      else
        std::cout << lab << " -> " << o.name() << " (dim " << o.dim << (special ? ", special" : "") << ")\n";
      return kOk;
    }
    if (t_symbol->parsed()) {
      auto t = type_from(type, rank ? rank : 1);
      if (t.series != Series::B && t.series != Series::C && t.series != Series::D)
        throw InputError("symbols need type B, C or D");
      // the rank is the size of the bipartition
      auto pb = parse_classical_label({t.series, 64}, bip);
      if (!pb) throw InputError("bad bipartition: " + bip);
      // smallest padding, which gives the reduced symbol
      int lx = static_cast<int>(pb->first.first.size()), ly = static_cast<int>(pb->first.second.size());
      int k = sym_k ? sym_k : t.series == Series::D ? std::max(lx, ly) : std::max(lx - 1, ly);
      CartanType tk{t.series, std::max(k, 1)};
      auto s = symbol_of(tk, pb->first, k);
      if (format == "json")
        std::cout << json{{"top", s.top}, {"bottom", s.bottom}, {"defect", s.defect()}}.dump() << "\n";
      else
        std::cout << row_str(s.top) << "\n" << row_str(s.bottom) << "\n";
      return kOk;
    }
    if (t_char->parsed()) {
      auto t = type_from(type, rank);
      if (!admissible(t)) throw InputError("inadmissible type " + t.name());
      WeylGroup W(simply_connected(t));
      auto T = irreducible_table(W);
      json arr = json::array();
      for (auto& x : T.chars()) {
        if (!label.empty() && T.find(label) != &x - T.chars().data()) continue;
        std::optional<NilpotentOrbit> o;
        try {
          o = springer_orbit(t, x.label);
        } catch (const InputError&) {
        }
        if (format == "json") {
          arr.push_back({{"label", x.label}, {"degree", x.degree}, {"b", x.b},
                         {"orbit", o ? json(o->name()) : json(nullptr)}});
        } else {
          std::cout << x.label << "  degree " << x.degree << "  b " << x.b;
          if (o) std::cout << "  orbit " << o->name();
          std::cout << "\n";
        }
      }
      if (!label.empty() && T.find(label) < 0) throw InputError("no character " + label);
      if (format == "json") std::cout << arr.dump(2) << "\n";
      return kOk;
    }
    if (t_orbits->parsed()) {
      auto t = type_from(type, rank);
      if (!t.classical() || !admissible(t)) throw InputError("orbits need an admissible classical type");
      json arr = json::array();
      for (auto& o : nilpotent_orbits(t)) {
        auto inv = springer_inverse(o);
        if (format == "json") arr.push_back({{"orbit", orbit_json(o)}, {"springer", inv.label}});
        else std::cout << o.name() << "  dim " << o.dim << "  " << inv.label << "\n";
      }
      if (format == "json") std::cout << arr.dump(2) << "\n";
      return kOk;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
