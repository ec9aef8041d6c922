#pragma once
// Nilpotent orbits of classical Lie algebras as partitions, collapses,
// Lusztig-Spaltenstein induction, and the Springer correspondence: identity on
// partitions for A; for B/C/D the collapse of the partition read from the
// symbol of the bipartition; stored tables for G2 and E6.

#include <string>
#include <vector>

#include "wf/partition.hpp"
#include "wf/rootdata.hpp"

namespace wf {

struct NilpotentOrbit {
  CartanType type;
  Partition partition;  // classical
  // D, all parts even: 1 or 2 for the two orbits (I/II); 0 otherwise or unknown
  int very_even = 0;
  std::string label;  // exceptional: Bala-Carter name
  int dim = 0;

  // "(3 2^2 1)", "(2^4)_I", "G2(a1)"
  std::string name() const;
  bool operator==(const NilpotentOrbit& o) const {
    return type == o.type && partition == o.partition && very_even == o.very_even && label == o.label;
  }
};

// number of ε-coordinates of the natural representation: n+1, 2n+1, 2n, 2n
int natural_dimension(const CartanType& t);
// parity conditions for t (A: any partition of n+1)
bool valid_orbit_partition(const CartanType& t, const Partition& p);
bool very_even(const Partition& p);
int orbit_dimension(const CartanType& t, const Partition& p);
// All orbits; very even D partitions appear twice (tags 1, 2).
std::vector<NilpotentOrbit> nilpotent_orbits(const CartanType& t);
NilpotentOrbit make_orbit(const CartanType& t, const Partition& p, int very_even_tag = 0);
NilpotentOrbit zero_orbit(const CartanType& t);
NilpotentOrbit regular_orbit(const CartanType& t);

// Largest partition dominated by p whose odd parts (symplectic) or even parts
// (orthogonal) have even multiplicity. Throws InputError on odd total for
// the symplectic case.
Partition collapse_symplectic(Partition p);
Partition collapse_orthogonal(Partition p);
Partition collapse(const CartanType& t, Partition p);

// O_1 ⊆ closure(O_2). Classical: dominance (very even tags must agree when
// the partitions coincide). Exceptional: dimension order only identifies
// equal orbits; throws InputError for distinct orbits.
bool closure_leq(const NilpotentOrbit& a, const NilpotentOrbit& b);

// One block of a Levi subalgebra: type A blocks are GL factors (rank k-1 for
// gl_k); at most one block may have the ambient series.
struct LeviBlock {
  CartanType type;
  NilpotentOrbit orbit;
};
// Lusztig-Spaltenstein induction to a classical ambient algebra.
NilpotentOrbit induce_orbit(const std::vector<LeviBlock>& levi, const CartanType& ambient);

// ------------------------------------------------------------ symbols

struct Symbol {
  std::vector<int> top, bottom;  // strictly increasing
  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  // all entries, sorted
  std::vector<int> entries() const;
  bool operator==(const Symbol&) const = default;
};

// Symbol of a bipartition padded to k+1 (top, B/C) or k (D) top entries:
// top_i = ξ_i + i, bottom_i = η_i + i with parts in increasing order.
Symbol symbol_of(const CartanType& t, const Bipartition& b, int k);
Bipartition bipartition_of(const Symbol& s);
// Symbol attached to (O, trivial local system): pad to an odd (B/C) or even (D)
// number of parts in increasing order, add i to the i-th part, then sort even
// and odd values into the two rows.
Symbol orbit_symbol(const CartanType& t, const Partition& p, int k);
// Partition read back from any symbol by reversing the orbit recipe; it
// satisfies the parity conditions exactly for symbols of orbits.
Partition symbol_partition(const CartanType& t, const Symbol& s);

// ------------------------------------------------------------ Springer

struct SpringerLabel {
  std::string label;  // character label as in CharTable
  Bipartition bip;    // classical
  int split = 0;
};

NilpotentOrbit springer_orbit(const CartanType& t, const std::string& label);
NilpotentOrbit springer_orbit(const CartanType& t, const Bipartition& b, int split = 0);
// label attached to (O, trivial local system)
SpringerLabel springer_inverse(const NilpotentOrbit& o);

// Lusztig's special characters: symbol interlacing for B/C/D, all for A,
// stored flags for exceptional types.
bool is_special(const CartanType& t, const std::string& label);
bool is_special(const CartanType& t, const Bipartition& b, int split = 0);

// ------------------------------------------------------------ exceptional data

struct ExceptionalOrbit {
  std::string label;
  int dim = 0;
  std::string trivial_char;               // Springer label of (O, 1)
  std::vector<std::string> other_chars;   // nontrivial local systems
};
struct ExceptionalSpringer {
  CartanType type;
  std::vector<ExceptionalOrbit> orbits;   // increasing dimension
  std::vector<std::string> special;
};
std::string springer_file_name(const CartanType& t);  // "springer/G2.spr"
ExceptionalSpringer parse_springer_file(const std::string& text);
// Loaded from data_dir(); throws InputError when no table is shipped.
const ExceptionalSpringer& exceptional_springer(const CartanType& t);

}  // namespace wf
