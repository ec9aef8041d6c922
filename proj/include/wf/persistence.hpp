#pragma once
// Persistence of a cover: Stab_W(y; Y/Y^{sc}_{Q,n}) = Stab_W(y; Y/Y_{Q,n}) for all y.

#include <string>
#include <vector>

#include "wf/cover.hpp"

namespace wf {

enum class Tri { yes, no, undetermined };
std::string to_string(Tri t);

struct PersistenceResult {
  Tri value = Tri::undetermined;
  std::string method;      // "saturated", "classes", "scan", "budget"
  IntMat witness;          // some w with w[y] - y ∈ Y_{Q,n} \ Y^{sc}_{Q,n}, when value == no
  Vec witness_difference;  // that difference
};

// w[y] - y = (w-1)y + t_w runs over a coset of (w-1)Y inside Y^{sc}; the cover
// fails to be persistent at w iff that coset meets Y_{Q,n} outside Y^{sc}_{Q,n}.
// Conjugate elements behave alike, so one w per class suffices. Without a class
// table the group is scanned element by element up to `max_scan` elements.
PersistenceResult check_persistence(const Cover& c, i64 max_scan = 3000000);

// Test oracle: every y in Y/Y^{sc}_{Q,n} against every w (semisimple only).
Tri persistence_bruteforce(const Cover& c, i64 budget = 20000000);

// Does some y give w[y] - y ∈ Y_{Q,n} \ Y^{sc}_{Q,n}? Fills the difference if so.
bool breaks_persistence(const Cover& c, const IntMat& w, Vec* difference = nullptr);

}  // namespace wf
