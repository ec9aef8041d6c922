#pragma once
// Irreducible characters of Weyl groups, b-invariants, inner products and
// induction of sign characters from reflection subgroups.

#include <optional>
#include <string>
#include <vector>

#include "wf/datafile.hpp"
#include "wf/weylgrp.hpp"

namespace wf {

// values indexed by the classes of a WeylGroup
using ClassFunction = std::vector<i64>;

struct IrrChar {
  std::string label;
  // classical labels: partition (A, in .first), bipartition (B/C), unordered
  // bipartition stored with first <= second (D); split = ±1 for the two halves
  // of a D character with equal parts
  Bipartition bip;
  int split = 0;
  int degree = 0;
  int b = 0;
  ClassFunction values;
};

class CharTable {
 public:
  CharTable() = default;
  CharTable(const WeylGroup* W, std::vector<IrrChar> chars) : W_(W), chars_(std::move(chars)) {}

  const WeylGroup& group() const { return *W_; }
  int size() const { return static_cast<int>(chars_.size()); }
  const IrrChar& operator[](int i) const { return chars_[i]; }
  const std::vector<IrrChar>& chars() const { return chars_; }
  // index by label; classical labels are normalized before lookup. -1 if absent.
  int find(const std::string& label) const;
  int trivial() const;
  int sign() const;

 private:
  const WeylGroup* W_ = nullptr;
  std::vector<IrrChar> chars_;
};

// Full table. Classical types are computed from Murnaghan-Nakayama rules;
// exceptional types are read from checked data files (see data_dir()).
CharTable irreducible_table(const WeylGroup& W);

// Classical labels: A "3,1,1"; B/C "2,1;1" ("-" for an empty part);
// D unordered "1;2,1" with the smaller part first, "2;2+" / "2;2-" when split.
std::string classical_label(const CartanType& t, const Bipartition& b, int split);
// inverse of classical_label (accepts either order for D); nullopt if malformed
std::optional<std::pair<Bipartition, int>> parse_classical_label(const CartanType& t, const std::string& label);

// Murnaghan-Nakayama: χ^λ on cycle type μ
i64 mn_value(const Partition& lambda, const Partition& mu);
// χ^{(ξ;η)} of W(B_r) on signed cycle type (α;β)
i64 wreath_mn_value(const Bipartition& chi, const Bipartition& cls);

// b-invariant: lowest degree of the polynomial ring containing χ, from the
// graded Molien series (1/|W|) Σ χ(w)/det(1 - t w).
int b_invariant(const WeylGroup& W, const ClassFunction& chi);
// closed forms: n(λ) for A, 2n(ξ)+2n(η)+|η| for B/C, 2n(ξ)+2n(η)+min(|ξ|,|η|) for D
int b_invariant_formula(const CartanType& t, const Bipartition& b);

ClassFunction trivial_character(const WeylGroup& W);
ClassFunction sign_character(const WeylGroup& W);
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// (1/|W|) Σ |C| f(C) g(C)
Rat inner_product_rat(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g);
// same, required to be an integer (throws std::logic_error otherwise)
i64 inner_product(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g);
// multiplicities of each irreducible
std::vector<i64> decompose(const CharTable& T, const ClassFunction& f);

// Ind_{W'}^W(ε') for the reflection subgroup W' generated by reflections in the
// given positive roots (indices into datum().pos_root_coeffs()), which must
// form a closed subsystem. Classical types count elements of W' per class from
// its coordinate blocks; exceptional types enumerate W' inside the root
// permutation group, up to `budget` elements.
ClassFunction induce_sign(const WeylGroup& W, const std::vector<int>& positive_roots, i64 budget = 10000000);
// Same by explicit enumeration of W' inside the root permutation group (test oracle).
ClassFunction induce_sign_enumerated(const WeylGroup& W, const std::vector<int>& positive_roots,
                                     i64 budget = 1000000);

// ------------------------------------------------------------ exceptional data

// Dixon-Schneider over a large prime: rows of irreducible characters on the
// classes of `g`, in no particular order, with integer values.
std::vector<std::vector<i64>> dixon_characters(const PermGroup& g);

// Label exceptional characters φ_{d,b}; a pair with equal (d,b) gets '' on the
// one with the larger value on the long-root reflection class.
std::vector<IrrChar> label_exceptional(const WeylGroup& W, const std::vector<std::vector<i64>>& rows);

std::string table_file_name(const CartanType& t);  // e.g. "chars/F4.tbl"
// Render / parse the table file. Parsing verifies the checksum, the class
// list against W, and orthogonality; throws InputError on any mismatch.
std::string render_table_file(const WeylGroup& W, const std::vector<IrrChar>& chars);
std::vector<IrrChar> parse_table_file(const WeylGroup& W, const std::string& text);

// first orthogonality; returns a description of the first failure or ""
std::string orthogonality_defect(const WeylGroup& W, const std::vector<IrrChar>& chars);

}  // namespace wf
