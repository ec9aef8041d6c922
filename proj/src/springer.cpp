#include "wf/springer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "wf/chars.hpp"
#include "wf/datafile.hpp"

namespace wf {

namespace {

bool is_bc(const CartanType& t) { return t.series == Series::B || t.series == Series::C; }

void require_classical(const CartanType& t, const char* what) {
  if (!t.classical()) throw InputError(std::string(what) + ": classical type required, got " + t.name());
}

// parity of the parts that must occur with even multiplicity
int bad_parity(const CartanType& t) { return t.series == Series::C ? 1 : 0; }

Partition collapse_parity(Partition p, int bad) {
  p = normalized(p);
  for (;;) {
    int q = -1;
    for (int x : p)
      if (x % 2 == bad && multiplicity(p, x) % 2 == 1) {
        q = x;
        break;
      }
    if (q < 0) return p;
    p.push_back(0);
    int last = static_cast<int>(std::find(p.begin(), p.end(), q) - p.begin());
    while (p[last + 1] == q) ++last;
    p[last] = q - 1;
    int j = last + 1;
    while (j < static_cast<int>(p.size()) && p[j] >= q - 1) ++j;
    if (j == static_cast<int>(p.size())) throw InputError("partition cannot be collapsed: " + to_string(p));
    p[j] += 1;
    p = normalized(p);
  }
}

Partition increasing_padded(const Partition& p, int len) {
  if (static_cast<int>(p.size()) > len) throw std::logic_error("partition too long for symbol padding");
  Partition q(len - p.size(), 0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) q.push_back(*it);
  return q;
}

void check_rank(const CartanType& t, const Bipartition& b) {
  int n = t.series == Series::A ? t.rank + 1 : t.rank;
  if (size(b.first) + size(b.second) != n) throw InputError("label " + to_string(b) + " has wrong size for " + t.name());
}

}  // namespace

// ------------------------------------------------------------ orbits

int natural_dimension(const CartanType& t) {
  switch (t.series) {
    case Series::A: return t.rank + 1;
    case Series::B: return 2 * t.rank + 1;
    case Series::C:
    case Series::D: return 2 * t.rank;
    default: throw InputError("no natural representation for " + t.name());
  }
}

bool very_even(const Partition& p) {
  if (p.empty()) return false;
  for (int x : p)
    if (x % 2 != 0 || multiplicity(p, x) % 2 != 0) return false;
  return true;
}

bool valid_orbit_partition(const CartanType& t, const Partition& p) {
  if (!t.classical()) return false;
  if (normalized(p) != p || size(p) != natural_dimension(t)) return false;
  if (t.series == Series::A) return true;
  int bad = bad_parity(t);
  for (int x : p)
    if (x % 2 == bad && multiplicity(p, x) % 2 != 0) return false;
  return true;
}

int orbit_dimension(const CartanType& t, const Partition& p) {
  require_classical(t, "orbit_dimension");
  int N = natural_dimension(t);
  int sq = 0, odd = 0;
  for (int c : transpose(p)) sq += c * c;
  for (int x : p) odd += x % 2;
  switch (t.series) {
    case Series::A: return N * N - sq;
    case Series::C: return (N * (N + 1) - sq - odd) / 2;
    default: return (N * (N - 1) - sq + odd) / 2;
  }
}

NilpotentOrbit make_orbit(const CartanType& t, const Partition& p, int very_even_tag) {
  if (!valid_orbit_partition(t, p))
    throw InputError("partition (" + exp_string(p) + ") is not a nilpotent orbit of " + t.name());
  NilpotentOrbit o;
  o.type = t;
  o.partition = p;
  if (t.series == Series::D && very_even(p)) o.very_even = very_even_tag;
  o.dim = orbit_dimension(t, p);
  return o;
}

std::vector<NilpotentOrbit> nilpotent_orbits(const CartanType& t) {
  std::vector<NilpotentOrbit> out;
  if (!t.classical()) {
    for (auto& e : exceptional_springer(t).orbits) {
      NilpotentOrbit o;
      o.type = t;
      o.label = e.label;
      o.dim = e.dim;
      out.push_back(o);
    }
    return out;
  }
  for (auto& p : partitions(natural_dimension(t))) {
    if (!valid_orbit_partition(t, p)) continue;
    if (t.series == Series::D && very_even(p)) {
      out.push_back(make_orbit(t, p, 1));
      out.push_back(make_orbit(t, p, 2));
    } else {
      out.push_back(make_orbit(t, p));
    }
  }
  return out;
}

NilpotentOrbit zero_orbit(const CartanType& t) {
  if (!t.classical()) return nilpotent_orbits(t).front();
  return make_orbit(t, Partition(natural_dimension(t), 1));
}

NilpotentOrbit regular_orbit(const CartanType& t) {
  if (!t.classical()) return nilpotent_orbits(t).back();
  int N = natural_dimension(t);
  return make_orbit(t, t.series == Series::D ? Partition{N - 1, 1} : Partition{N});
}

std::string NilpotentOrbit::name() const {
  if (!label.empty()) return label;
  std::string s = "(" + exp_string(partition) + ")";
  if (very_even == 1) s += "_I";
  if (very_even == 2) s += "_II";
  return s;
}

// ------------------------------------------------------------ collapse

Partition collapse_symplectic(Partition p) {
  if (size(p) % 2 != 0) throw InputError("symplectic collapse needs an even total");
  return collapse_parity(std::move(p), 1);
}

Partition collapse_orthogonal(Partition p) { return collapse_parity(std::move(p), 0); }

Partition collapse(const CartanType& t, Partition p) {
  require_classical(t, "collapse");
  if (t.series == Series::A) return normalized(p);
  if (size(p) != natural_dimension(t)) throw InputError("collapse: wrong total for " + t.name());
  return t.series == Series::C ? collapse_symplectic(std::move(p)) : collapse_orthogonal(std::move(p));
}

bool closure_leq(const NilpotentOrbit& a, const NilpotentOrbit& b) {
  if (!(a.type == b.type)) throw InputError("closure_leq: orbits of different types");
  if (a == b) return true;
  if (a.type.classical()) {
    if (a.partition == b.partition) return false;  // distinct very even twins
    return dominated(a.partition, b.partition);
  }
  if (a.dim == 0 || b == regular_orbit(b.type)) return true;
  if (a.type.series == Series::G) return a.dim <= b.dim;  // linear order
  throw InputError("closure order not stored for " + a.type.name());
}

// ------------------------------------------------------------ induction

NilpotentOrbit induce_orbit(const std::vector<LeviBlock>& levi, const CartanType& ambient) {
  require_classical(ambient, "induce_orbit");
  int N = natural_dimension(ambient);
  if (ambient.series == Series::A) {
    Partition p;
    int total = 0;
    for (auto& b : levi) {
      if (b.type.series != Series::A) throw InputError("induce_orbit: type A ambient needs GL blocks");
      if (!valid_orbit_partition(b.type, b.orbit.partition)) throw InputError("induce_orbit: bad block orbit");
      total += natural_dimension(b.type);
      const Partition& m = b.orbit.partition;
      if (p.size() < m.size()) p.resize(m.size(), 0);
      for (size_t i = 0; i < m.size(); ++i) p[i] += m[i];
    }
    if (total != N) throw InputError("induce_orbit: Levi blocks do not fill " + ambient.name());
    return make_orbit(ambient, normalized(p));
  }
  Partition p;
  bool seen_same = false;
  int total = 0;
  std::vector<int> zero_blocks;  // sizes l of gl_l factors carrying the zero orbit
  for (auto& b : levi) {
    if (b.type.series == ambient.series) {
      if (seen_same) throw InputError("induce_orbit: more than one classical block");
      seen_same = true;
      if (!valid_orbit_partition(b.type, b.orbit.partition)) throw InputError("induce_orbit: bad block orbit");
      p = b.orbit.partition;
      total += natural_dimension(b.type);
    } else if (b.type.series == Series::A) {
      if (!valid_orbit_partition(b.type, b.orbit.partition)) throw InputError("induce_orbit: bad block orbit");
      total += 2 * natural_dimension(b.type);
      // a GL orbit μ is itself induced from the zero orbit of gl_{μ^t_1} x gl_{μ^t_2} x ...
      for (int c : transpose(b.orbit.partition)) zero_blocks.push_back(c);
    } else {
      throw InputError("induce_orbit: block " + b.type.name() + " does not fit " + ambient.name());
    }
  }
  if (!seen_same && ambient.series == Series::B) {
    p = {1};  // so_1
    total += 1;
  }
  if (total != N) throw InputError("induce_orbit: Levi blocks do not fill " + ambient.name());
  for (int l : zero_blocks) {
    if (static_cast<int>(p.size()) < l) p.resize(l, 0);
    for (int i = 0; i < l; ++i) p[i] += 2;
    p = ambient.series == Series::C ? collapse_symplectic(p) : collapse_orthogonal(p);
  }
  return make_orbit(ambient, normalized(p));
}

// ------------------------------------------------------------ symbols

std::vector<int> Symbol::entries() const {
  std::vector<int> e = top;
  e.insert(e.end(), bottom.begin(), bottom.end());
  std::sort(e.begin(), e.end());
  return e;
}

Symbol symbol_of(const CartanType& t, const Bipartition& b, int k) {
  require_classical(t, "symbol_of");
  if (t.series == Series::A) throw InputError("symbol_of: type A has no symbols");
  Symbol s;
  Partition x = increasing_padded(b.first, t.series == Series::D ? k : k + 1);
  Partition y = increasing_padded(b.second, k);
  for (size_t i = 0; i < x.size(); ++i) s.top.push_back(x[i] + static_cast<int>(i));
  for (size_t i = 0; i < y.size(); ++i) s.bottom.push_back(y[i] + static_cast<int>(i));
  return s;
}

Bipartition bipartition_of(const Symbol& s) {
  Bipartition b;
  for (size_t i = 0; i < s.top.size(); ++i) b.first.push_back(s.top[i] - static_cast<int>(i));
  for (size_t i = 0; i < s.bottom.size(); ++i) b.second.push_back(s.bottom[i] - static_cast<int>(i));
  b.first = normalized(b.first);
  b.second = normalized(b.second);
  return b;
}

Symbol orbit_symbol(const CartanType& t, const Partition& p, int k) {
  require_classical(t, "orbit_symbol");
  if (t.series == Series::A) throw InputError("orbit_symbol: type A has no symbols");
  if (!valid_orbit_partition(t, p)) throw InputError("orbit_symbol: (" + exp_string(p) + ") is not an orbit of " + t.name());
  bool d = t.series == Series::D;
  Partition q = increasing_padded(p, d ? 2 * k : 2 * k + 1);
  // C: even values form the top row; B, D: odd values
  int top_parity = t.series == Series::C ? 0 : 1;
  Symbol s;
  for (size_t i = 0; i < q.size(); ++i) {
    int v = q[i] + static_cast<int>(i);
    (v % 2 == top_parity ? s.top : s.bottom).push_back(v / 2);
  }
  if (static_cast<int>(s.top.size()) != (d ? k : k + 1) || static_cast<int>(s.bottom.size()) != k)
    throw std::logic_error("orbit symbol has the wrong shape");
  return s;
}

// ------------------------------------------------------------ Springer

Partition symbol_partition(const CartanType& t, const Symbol& s) {
  // inverse of the orbit recipe: top entries x -> 2x (C) or 2x+1 (B, D),
  // bottom entries y -> 2y+1 (C) or 2y; sort and subtract positions
  int tp = t.series == Series::C ? 0 : 1;
  std::vector<int> v;
  for (int x : s.top) v.push_back(2 * x + tp);
  for (int y : s.bottom) v.push_back(2 * y + 1 - tp);
  std::sort(v.begin(), v.end());
  Partition p;
  for (size_t i = 0; i < v.size(); ++i) p.push_back(v[i] - static_cast<int>(i));
  return normalized(p);
}

NilpotentOrbit springer_orbit(const CartanType& t, const Bipartition& b, int split) {
  require_classical(t, "springer_orbit");
  check_rank(t, b);
  if (t.series == Series::A) return make_orbit(t, b.first);
  bool degenerate = t.series == Series::D && b.first == b.second;
  if (degenerate != (split != 0)) throw InputError("label " + to_string(b) + ": split marker mismatch");
  Partition p = collapse(t, symbol_partition(t, symbol_of(t, b, t.rank)));
  return make_orbit(t, p, degenerate ? (split > 0 ? 1 : 2) : 0);
}

NilpotentOrbit springer_orbit(const CartanType& t, const std::string& label) {
  if (!t.classical()) {
    for (auto& o : nilpotent_orbits(t)) {
      auto& e = *std::find_if(exceptional_springer(t).orbits.begin(), exceptional_springer(t).orbits.end(),
                              [&](const ExceptionalOrbit& x) { return x.label == o.label; });
      if (e.trivial_char == label || std::count(e.other_chars.begin(), e.other_chars.end(), label)) return o;
    }
    throw InputError("label " + label + " is absent from the Springer table of " + t.name());
  }
  auto key = parse_classical_label(t, label);
  if (!key) throw InputError("bad label " + label + " for " + t.name());
  return springer_orbit(t, key->first, key->second);
}

SpringerLabel springer_inverse(const NilpotentOrbit& o) {
  const CartanType& t = o.type;
  SpringerLabel s;
  if (!t.classical()) {
    for (auto& e : exceptional_springer(t).orbits)
      if (e.label == o.label) {
        s.label = e.trivial_char;
        return s;
      }
    throw InputError("orbit " + o.label + " is absent from the Springer table of " + t.name());
  }
  if (!valid_orbit_partition(t, o.partition)) throw InputError("springer_inverse: invalid orbit");
  if (t.series == Series::A) {
    s.bip = {o.partition, {}};
  } else {
    s.bip = bipartition_of(orbit_symbol(t, o.partition, t.rank));
    if (t.series == Series::D) {
      if (s.bip.second < s.bip.first) std::swap(s.bip.first, s.bip.second);
      if (s.bip.first == s.bip.second) {
        if (o.very_even == 0) throw InputError("very even orbit " + o.name() + " needs an I/II tag");
        s.split = o.very_even == 1 ? 1 : -1;
      }
    }
  }
  s.label = classical_label(t, s.bip, s.split);
  return s;
}

bool is_special(const CartanType& t, const Bipartition& b, int split) {
  require_classical(t, "is_special");
  check_rank(t, b);
  (void)split;
  if (t.series == Series::A) return true;
  Symbol s = symbol_of(t, b, t.rank);
  auto interlaces = [](const std::vector<int>& x, const std::vector<int>& y) {
    // x_0 <= y_0 <= x_1 <= y_1 <= ...
    std::vector<int> z;
    for (size_t i = 0; i < x.size(); ++i) {
      z.push_back(x[i]);
      if (i < y.size()) z.push_back(y[i]);
    }
    return std::is_sorted(z.begin(), z.end());
  };
  if (is_bc(t)) return interlaces(s.top, s.bottom);
  return interlaces(s.top, s.bottom) || interlaces(s.bottom, s.top);
}

bool is_special(const CartanType& t, const std::string& label) {
  if (!t.classical()) {
    auto& sp = exceptional_springer(t).special;
    return std::find(sp.begin(), sp.end(), label) != sp.end();
  }
  auto key = parse_classical_label(t, label);
  if (!key) throw InputError("bad label " + label + " for " + t.name());
  return is_special(t, key->first, key->second);
}

// ------------------------------------------------------------ exceptional data

std::string springer_file_name(const CartanType& t) { return "springer/" + t.name() + ".spr"; }

ExceptionalSpringer parse_springer_file(const std::string& text) {
  std::istringstream in(unseal(text, "Springer table"));
  ExceptionalSpringer out;
  bool have_type = false;
  std::set<std::string> seen;
  std::string line;
  auto fresh = [&](const std::string& c) {
    if (!seen.insert(c).second) throw InputError("Springer table lists " + c + " twice");
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "type") {
      std::string n;
      ls >> n;
      out.type = CartanType::parse(n);
      have_type = true;
    } else if (kw == "orbit") {
      ExceptionalOrbit o;
      if (!(ls >> o.label >> o.dim >> o.trivial_char)) throw InputError("bad orbit line: " + line);
      fresh(o.trivial_char);
      std::string c;
      while (ls >> c) {
        fresh(c);
        o.other_chars.push_back(c);
      }
      if (!out.orbits.empty() && out.orbits.back().dim > o.dim) throw InputError("orbits out of dimension order");
      out.orbits.push_back(o);
    } else if (kw == "special") {
      std::string c;
      while (ls >> c) out.special.push_back(c);
    } else {
      throw InputError("unknown Springer table line: " + line);
    }
  }
  if (!have_type || out.orbits.empty()) throw InputError("Springer table without type or orbits");
  for (auto& c : out.special)
    if (!seen.count(c)) throw InputError("special label " + c + " not in the table");
  return out;
}

const ExceptionalSpringer& exceptional_springer(const CartanType& t) {
  static std::mutex mu;
  static std::map<std::string, ExceptionalSpringer> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.name());
  if (it != cache.end()) return it->second;
  auto table = parse_springer_file(read_data_file(springer_file_name(t)));
  if (!(table.type == t)) throw InputError("Springer table type mismatch for " + t.name());
  return cache.emplace(t.name(), std::move(table)).first->second;
}

}  // namespace wf
