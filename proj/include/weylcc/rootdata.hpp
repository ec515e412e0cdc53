#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcc/numeric.hpp"

namespace weylcc {

enum class Family { A, B, C, D, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  bool operator==(const CartanType&) const = default;
};

// Accepts "A1".."A3", "B2", "B3", "C2", "C3", "D3", "G2".
CartanType parse_cartan_type(std::string_view label);

struct FiniteWeylElement {
  IMat matrix{};          // action on fundamental-coweight coordinates
  std::vector<int> word;  // lex-least reduced word, letters 1..n
};

struct DiagramAut {
  std::array<int, kMaxRank> perm{};  // 0-based image of each simple index

  bool operator==(const DiagramAut&) const = default;
};

// P/Q as a product of cyclic groups, read off the Smith form of the Cartan
// matrix (Q is its row lattice in coweight coordinates).
class PiGroup {
 public:
  PiGroup() = default;
  PiGroup(const IMat& cartan, int n);

  std::vector<Int> coset_of(const IVec& lambda) const;
  const std::vector<Int>& invariant_factors() const { return factors_; }
  Int order() const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> negate(const std::vector<Int>& a) const;

 private:
  int n_ = 0;
  IMat right_{};
  std::vector<int> columns_;
  std::vector<Int> factors_;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return n_; }
  const IMat& cartan() const { return cartan_; }

  const std::vector<IVec>& positive_roots() const { return roots_; }
  const std::vector<IVec>& positive_coroots() const { return coroots_; }
  IVec simple_coroot(int i) const { return cartan_[i]; }
  std::size_t highest_root() const { return highest_; }
  Int connection_index() const { return connection_index_; }
  const PiGroup& pi_group() const { return pi_; }
  int coxeter_number() const { return coxeter_number_; }

  Int pair(const IVec& coweight, const IVec& root) const;
  Rational pair(const QVec& coweight, const IVec& root) const;
  Rational two_rho_pairing(const QVec& v) const;
  IVec coroot_to_coweight(const IVec& coroot_coords) const;
  bool in_coroot_lattice(const IVec& coweight) const;
  bool is_positive_root(const IVec& root) const;
  int root_index(const IVec& positive_root) const;  // -1 when absent

  // Finite Weyl group, elements addressed by dense indices; 0 is identity.
  int weyl_order() const { return static_cast<int>(weyl_.size()); }
  const FiniteWeylElement& weyl_element(int w) const { return weyl_[w]; }
  int weyl_simple(int i) const { return simple_[i]; }  // 0-based simple index
  int weyl_mul(int a, int b) const { return mul_[a * weyl_.size() + b]; }
  int weyl_inv(int a) const { return inv_[a]; }
  int weyl_length(int a) const { return static_cast<int>(weyl_[a].word.size()); }
  int weyl_longest() const { return longest_; }
  int weyl_index(const IMat& m) const;  // throws DomainError if not in W0
  int weyl_from_word(const std::vector<int>& letters) const;
  int weyl_word_rank(int w) const { return word_rank_[w]; }
  // Bit k set iff w^{-1}(alpha_k) > 0 for the k-th positive root.
  std::uint32_t inverse_positive_mask(int w) const { return inv_positive_[w]; }

  IVec act(int w, const IVec& v) const { return mat_vec(weyl_[w].matrix, v, n_); }
  QVec act(int w, const QVec& v) const { return mat_vec(weyl_[w].matrix, v, n_); }
  IVec act_on_root(int w, const IVec& root) const;

  std::pair<QVec, int> dominant_representative(const QVec& v) const;

  // Diagram automorphisms; index 0 is the identity.
  const std::vector<DiagramAut>& diagram_automorphisms() const { return auts_; }
  const IMat& aut_matrix(int d) const { return aut_matrices_[d]; }
  int aut_mul(int a, int b) const;
  int aut_inv(int a) const;
  int aut_conj(int d, int w) const;  // index of d w d^{-1}
  QVec act_aut(int d, const QVec& v) const { return mat_vec(aut_matrices_[d], v, n_); }
  IVec act_aut(int d, const IVec& v) const { return mat_vec(aut_matrices_[d], v, n_); }

  // Connected components of the Dynkin diagram restricted to `nodes`.
  std::vector<std::vector<int>> components(const std::vector<int>& nodes) const;

 private:
  void build_roots();
  void build_weyl();
  void build_automorphisms();

  CartanType type_;
  int n_;
  IMat cartan_{};
  std::vector<IVec> roots_;
  std::vector<IVec> coroots_;
  std::size_t highest_ = 0;
  Int connection_index_ = 1;
  PiGroup pi_;
  int coxeter_number_ = 0;

  std::vector<FiniteWeylElement> weyl_;
  std::map<IMat, int> weyl_lookup_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> simple_;
  std::vector<int> word_rank_;
  std::vector<std::uint32_t> inv_positive_;
  int longest_ = 0;

  std::vector<DiagramAut> auts_;
  std::vector<IMat> aut_matrices_;
};

IMat cartan_matrix(CartanType type);

}  // namespace weylcc
