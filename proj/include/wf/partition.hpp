#pragma once
// Integer partitions and bipartitions.

#include <string>
#include <utility>
#include <vector>

#include "wf/intmath.hpp"

namespace wf {

// weakly decreasing positive parts
using Partition = std::vector<int>;

struct Bipartition {
  Partition first, second;
  bool operator==(const Bipartition&) const = default;
  auto operator<=>(const Bipartition&) const = default;
};

int size(const Partition& p);
Partition normalized(Partition p);  // sort decreasing, drop zeros
Partition transpose(const Partition& p);
// n(λ) = Σ (i-1) λ_i
int n_of(const Partition& p);
// all partitions of n, in reverse lexicographic order ((n) first)
std::vector<Partition> partitions(int n);
// all ordered pairs (ξ, η) with |ξ| + |η| = n
std::vector<Bipartition> bipartitions(int n);
// λ ≤ μ in dominance order (equal totals)
bool dominated(const Partition& lam, const Partition& mu);
// multiplicity of part k
int multiplicity(const Partition& p, int k);
// z_λ = Π k^{m_k} m_k!
i64 z_of(const Partition& p);

// Rim hooks of length k: returns (remaining partition, leg length) for every
// removable rim hook.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int k);

std::string to_string(const Partition& p);  // "3,2,1"; empty -> "-"
std::string to_string(const Bipartition& b);  // "3,1;2"
// Exponent form, e.g. (3,3,2,1) -> "3^2 2 1"
std::string exp_string(const Partition& p);
Partition parse_partition(const std::string& s);      // "3,2,1", "" or "-" for empty
Bipartition parse_bipartition(const std::string& s);  // "2,1;1"

}  // namespace wf
