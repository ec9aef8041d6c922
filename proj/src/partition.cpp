#include "wf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace wf {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition normalized(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x >= j) ++c;
    t.push_back(c);
  }
  return t;
}

int n_of(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (auto& x : partitions(a))
      for (auto& y : partitions(n - a)) out.push_back({x, y});
  return out;
}

bool dominated(const Partition& lam, const Partition& mu) {
  int sl = 0, sm = 0;
  size_t len = std::max(lam.size(), mu.size());
  for (size_t i = 0; i < len; ++i) {
    sl += i < lam.size() ? lam[i] : 0;
    sm += i < mu.size() ? mu[i] : 0;
    if (sl > sm) return false;
  }
  return sl == sm;
}

int multiplicity(const Partition& p, int k) { return static_cast<int>(std::count(p.begin(), p.end(), k)); }

i64 z_of(const Partition& p) {
  i64 z = 1;
  std::set<int> parts(p.begin(), p.end());
  for (int k : parts) {
    int m = multiplicity(p, k);
    z = mul_ck(z, mul_ck(ipow(k, m), factorial(m)));
  }
  return z;
}

std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int k) {
  // beta-numbers: β_i = λ_i + (L - 1 - i); a rim hook of length k is β -> β - k
  std::vector<std::pair<Partition, int>> out;
  int len = static_cast<int>(p.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  for (int i = 0; i < len; ++i) {
    int b = beta[i] - k;
    if (b < 0 || bs.count(b)) continue;
    int leg = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++leg;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition q(len);
    for (int j = 0; j < len; ++j) q[j] = nb[j] - (len - 1 - j);
    out.push_back({normalized(q), leg});
  }
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::string to_string(const Bipartition& b) { return to_string(b.first) + ";" + to_string(b.second); }

std::string exp_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += " ";
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  if (s.empty() || s == "-") return p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("bad partition: " + s);
    }
    if (pos != tok.size() || v < 0) throw InputError("bad partition: " + s);
    p.push_back(v);
  }
  return normalized(p);
}

Bipartition parse_bipartition(const std::string& s) {
  auto k = s.find(';');
  if (k == std::string::npos) throw InputError("bipartition needs ';': " + s);
  return {parse_partition(s.substr(0, k)), parse_partition(s.substr(k + 1))};
}

}  // namespace wf
