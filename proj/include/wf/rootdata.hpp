#pragma once
// Root data (X, Φ, Δ; Y, Φ∨, Δ∨) of split reductive groups, presets and
// subsystem classification.

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "wf/lattice.hpp"

namespace wf {

enum class Series { A, B, C, D, E, F, G };

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  std::string name() const;  // e.g. "C3"
  static CartanType parse(const std::string& s);
  bool operator==(const CartanType&) const = default;
  bool operator<(const CartanType& o) const;
  bool classical() const { return series <= Series::D; }
};

// admissible: A>=1, B>=2, C>=2, D>=4 (D2, D3 are canonicalized away), E6-8, F4, G2.
bool admissible(const CartanType& t);
// Sorted, with D2 -> A1xA1, D3 -> A3, B1/C1 -> A1, D1 dropped.
std::vector<CartanType> canonical_types(std::vector<CartanType> ts);
std::string types_str(const std::vector<CartanType>& ts);
// number of positive roots
int positive_root_count(const CartanType& t);
i64 weyl_order(const CartanType& t);

// Scaled Gram matrix of the simple roots in Bourbaki labeling.
IntMat simple_root_gram(const CartanType& t);

class RootDatum {
 public:
  // Generic constructor. Simple roots in X-coordinates, simple coroots in
  // Y-coordinates (X basis dual to the Y basis); `type` is the declared
  // Bourbaki-labeled type of the (irreducible) root system.
  RootDatum(std::string name, int dim, std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
            CartanType type);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }  // semisimple rank
  bool semisimple() const { return rank() == dim_; }
  const CartanType& type() const { return type_; }

  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& simple_coroots() const { return simple_coroots_; }
  // cartan(i,j) = <α_j, α_i∨>
  i64 cartan(int i, int j) const { return cartan_(i, j); }
  const IntMat& cartan_matrix() const { return cartan_; }

  // positive roots as coefficient vectors over Δ and the matching coroots over Δ∨
  int num_positive() const { return static_cast<int>(pos_root_coeffs_.size()); }
  const std::vector<Vec>& pos_root_coeffs() const { return pos_root_coeffs_; }
  const std::vector<Vec>& pos_coroot_coeffs() const { return pos_coroot_coeffs_; }
  Vec root_x(int k) const;    // k-th positive root in X coordinates
  Vec coroot_y(int k) const;  // k-th positive coroot in Y coordinates
  int height(int k) const;    // height of the k-th positive root
  int coroot_height(int k) const;
  int highest_root_height() const;
  // index of the positive root with given coefficients, or -1
  int find_root(const Vec& coeffs) const;
  // pairing <root_a, coroot_b> for coefficient vectors
  i64 pair_coeffs(const Vec& root_c, const Vec& coroot_c) const;

  // 2ρ∨ in Y coordinates
  Vec two_rho_vee() const;
  // matrix of the simple reflection s_i on Y (column convention: y -> S y)
  IntMat reflection_y(int i) const;
  IntMat reflection_y_root(int k) const;  // reflection in the k-th positive root
  IntMat word_matrix(const std::vector<int>& word) const;  // s_{w0} s_{w1} ... on Y

  // rational weight in span(Δ) given by its pairings with the simple coroots,
  // returned in X ⊗ Q coordinates
  RVec weight_from_pairings(const RVec& pairings) const;

  // roots in the ε-coordinates of the classical realization (types A-D only)
  Vec root_eps(const Vec& coeffs) const;
  Vec coroot_eps(const Vec& coeffs) const;
  int eps_dim() const;

  // the Langlands dual datum
  RootDatum dual(std::string name) const;

 private:
  void generate();

  std::string name_;
  int dim_;
  std::vector<Vec> simple_roots_, simple_coroots_;
  CartanType type_;
  IntMat cartan_;
  std::vector<Vec> pos_root_coeffs_, pos_coroot_coeffs_;
};

// Type and Bourbaki ordering of an irreducible Cartan matrix c(i,j) = <β_j, β_i∨>:
// order[k] is the input index playing the role of α_{k+1}. Rank-2 doubly laced
// matrices keep their input order (B2 if the first root is long, else C2).
std::pair<CartanType, std::vector<int>> identify_cartan(const IntMat& c);
// Datum whose type and labeling are detected from the Cartan matrix (irreducible only).
RootDatum auto_typed_datum(std::string name, int dim, const std::vector<Vec>& simple_roots,
                           const std::vector<Vec>& simple_coroots);

// Presets. `rank` is the index r in the group name (SL_{r+1}, GL_r, Sp_{2r}...).
RootDatum make_preset(const std::string& preset, int rank);
std::vector<std::string> preset_names();
// Simply connected datum of a given type (Y = coroot lattice with basis Δ∨).
RootDatum simply_connected(const CartanType& t);

// Load a datum from a JSON config (dim, type, simple_roots, simple_coroots).
RootDatum root_datum_from_json(const std::string& text);

// A root subsystem given by positive roots (coefficient vectors over Δ).
struct SubsystemInfo {
  std::vector<int> positive;       // indices into d.pos_root_coeffs()
  std::vector<int> simple;         // indices of its simple roots
  std::vector<CartanType> types;   // canonical component types
  std::vector<std::vector<int>> components;  // simple-root indices per component
};
// Throws std::invalid_argument if the set is not closed under its own reflections.
SubsystemInfo classify_subsystem(const RootDatum& d, const std::vector<int>& positive_roots);

}  // namespace wf
