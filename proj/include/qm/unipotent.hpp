#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qm::unipotent {

// n x n matrix over F_2 (n <= 8); row i is a bitmask, bit j <-> entry (i, j), 0-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  static BitMatrix identity(int n);
  static BitMatrix elementary(int n, int i, int j);  // I + E_ij
  static BitMatrix from_key(int n, std::uint64_t key);

  int size() const { return n_; }
  bool get(int i, int j) const { return rows_[i] >> j & 1; }
  void set(int i, int j, bool v);
  bool is_unipotent() const;

  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix inverse() const;  // unipotent only
  // m x m block with top-left corner at (offset, offset)
  BitMatrix corner(int offset, int m) const;

  std::uint64_t key() const;
  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::array<std::uint8_t, 8> rows_{};
};

std::string to_string(const BitMatrix& m);

// Finite group as a multiplication table; elements are 0..order-1 and each carries a 64-bit label.
class GroupTable {
 public:
  using Elt = std::uint32_t;
  using Label = std::uint64_t;

  // Closure of `gens` under `mul`; element 0 is the identity.
  static GroupTable generate(const std::vector<Label>& gens, Label identity,
                             const std::function<Label(Label, Label)>& mul);

  std::size_t order() const { return labels_.size(); }
  Elt identity() const { return 0; }
  Elt mul(Elt a, Elt b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Elt inv(Elt a) const { return inverse_[a]; }
  Elt commutator(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elt power(Elt a, unsigned k) const;
  unsigned element_order(Elt a) const;
  const std::vector<Elt>& gens() const { return gens_; }
  Label label(Elt a) const { return labels_[a]; }
  std::optional<Elt> find(Label l) const;

  // Identity, inverses and associativity (Light's test over the generators).
  bool verify_axioms() const;
  // Subgroup generated by the given elements (as a sorted element list).
  std::vector<Elt> subgroup(const std::vector<Elt>& gens) const;
  bool is_central(Elt a) const;

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, Elt> index_;
  std::vector<Elt> table_, inverse_, gens_;
};

GroupTable direct_product(const GroupTable& G, const GroupTable& H);
GroupTable cyclic_group(unsigned n);
// Permutation group on at most 16 points, permutations given as images of 0..k-1.
GroupTable permutation_group(const std::vector<std::vector<int>>& gens);
// Subgroup of G generated by `gens`, as a table of its own.
GroupTable subgroup_table(const GroupTable& G, const std::vector<GroupTable::Elt>& gens);

// U_{n+1}, its quotient by the center, and the distinguished subgroups.
struct UnipotentGroups {
  int n = 0;                         // matrices are (n+1) x (n+1)
  GroupTable U, Ubar;                // Ubar: entry (1, n+1) erased
  std::vector<GroupTable::Elt> Z;    // center of U
  std::vector<GroupTable::Elt> Q;    // kernel of U -> (Z/2)^n
  std::vector<GroupTable::Elt> Qbar; // kernel of Ubar -> (Z/2)^n
  std::vector<GroupTable::Elt> U_to_Ubar;
  std::vector<std::uint32_t> U_abel, Ubar_abel;  // superdiagonal as a bitmask
};
UnipotentGroups build_groups(int n);
BitMatrix matrix_of(const GroupTable& G, GroupTable::Elt a, int size);

// Finitely presented groups; generator g is 2g, its inverse 2g + 1.
using Word = std::vector<int>;
struct Presentation {
  int generators = 0;
  std::vector<std::string> names;
  std::vector<Word> relators;
  std::vector<std::string> relator_names;
};
Presentation u4_presentation();
// Order of the presented group by coset enumeration over the trivial subgroup; nullopt if more than
// `max_cosets` cosets were needed.
std::optional<std::size_t> enumerate_order(const Presentation& P, std::size_t max_cosets = 1 << 20);
GroupTable::Elt evaluate(const GroupTable& G, const std::vector<GroupTable::Elt>& gen_images, const Word& w);

struct PresentationReport {
  bool relations_hold = false;
  std::size_t generated_order = 0;
  std::optional<std::size_t> presented_order;
  std::vector<std::optional<std::size_t>> dropped_orders;  // one per relator
  bool ok = false;
};
PresentationReport verify_presentation_u4();

struct CartesianReport {
  std::size_t domain = 0, fiber_product = 0, image = 0;
  bool compatible = false, injective = false, bijective = false;
};
// Ubar_5 -> U_4 x_{U_3} U_4 via the top-left and bottom-right 4 x 4 corners.
CartesianReport cartesian_square_check();

// Lifts of h: G -> (Z/2)^n (given on G's generators as bitmasks) through target -> (Z/2)^n.
// Returns images of G's generators, or nullopt when no homomorphism lifts h.
std::optional<std::vector<GroupTable::Elt>> lift_search(const GroupTable& G, const std::vector<std::uint32_t>& h,
                                                        const GroupTable& target,
                                                        const std::vector<std::uint32_t>& target_proj);
// Extends generator images to a homomorphism G -> T; nullopt if inconsistent.
std::optional<std::vector<GroupTable::Elt>> extend_homomorphism(const GroupTable& G, const GroupTable& T,
                                                                const std::vector<GroupTable::Elt>& gen_images);

// F_2[G]-module of dimension <= 32: action[g] lists the images of the basis vectors as bitmasks.
struct GModule {
  const GroupTable* group = nullptr;
  int dim = 0;
  std::vector<std::vector<std::uint32_t>> action;
  std::uint32_t act(GroupTable::Elt g, std::uint32_t v) const;
  bool is_valid() const;
};
GModule trivial_module(const GroupTable& G, int dim);

// 2-cochains are functions G x G -> M stored row-major.
using Cochain2 = std::vector<std::uint32_t>;
bool is_cocycle(const GModule& M, const Cochain2& c);
// A 1-cochain f with df = c, if any.
std::optional<std::vector<std::uint32_t>> coboundary_preimage(const GModule& M, const Cochain2& c);

// Homomorphisms G -> Z/2 as value tables.
std::vector<std::vector<std::uint8_t>> characters(const GroupTable& G);
// chi1 u chi2 is zero in H^2(G, Z/2).
bool cup_vanishes(const GroupTable& G, const std::vector<std::uint8_t>& chi1, const std::vector<std::uint8_t>& chi2);

struct H2Report {
  bool bilinear_matches = false;  // N x N' -> P is the displayed matrix formula and is bijective
  bool equivariant = false;       // and (U_3 x U_3)-equivariant
  bool extension_is_cocycle = false;
  bool differ_by_coboundary = false;
  bool class_nonzero = false;
  bool ok() const {
    return bilinear_matches && equivariant && extension_is_cocycle && differ_by_coboundary && class_nonzero;
  }
};
// 1 -> P -> U_5 -> U_3 x U_3 -> 1 has extension class t u t'.
H2Report h2_class_vs_cup();

// Small 2-groups used for cross-checks (orders <= 16).
std::vector<std::pair<std::string, GroupTable>> small_two_groups();

struct U3CrossCheck {
  std::size_t groups = 0, pairs = 0, mismatches = 0;
};
// For every pair of characters of every small group: lifts to U_3 <=> cup product vanishes.
U3CrossCheck u3_lift_vs_cup();

}  // namespace qm::unipotent
