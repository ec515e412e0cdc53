#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "weylcc/rootdata.hpp"

namespace weylcc {

// t^translation * w * delta, with w and delta given as indices into the
// Weyl table and the diagram-automorphism list of the owning RootSystem.
struct ExtAffineElement {
  IVec translation{};
  int finite = 0;
  int twist = 0;
  CartanType type{};

  bool operator==(const ExtAffineElement&) const = default;
};

struct ElementHash {
  std::size_t operator()(const ExtAffineElement& x) const noexcept;
};

using ElementSet = std::unordered_set<ExtAffineElement, ElementHash>;

struct AffineSimpleReflection {
  int index = 0;
  ExtAffineElement element;
  IVec root{};  // fixed hyperplane is {v : <v, root> = level}
  Int level = 0;
};

struct ReducedWord {
  std::vector<int> letters;
  ExtAffineElement tail;
};

enum class ConjFlavor { W, WG, Wext };

std::string to_string(ConjFlavor f);
ConjFlavor parse_flavor(std::string_view s);

struct TwistSelection {
  enum class Kind { All, None, Generated } kind = Kind::All;
  int generator = 0;

  static TwistSelection parse(std::string_view s);  // "all", "none", "dN"
};

class AffineGroup {
 public:
  explicit AffineGroup(CartanType type, TwistSelection twists = {});

  const RootSystem& roots() const { return rs_; }
  const CartanType& type() const { return rs_.type(); }
  int rank() const { return rs_.rank(); }
  std::string label() const { return rs_.type().label() + "~"; }
  const std::vector<int>& allowed_twists() const { return allowed_; }
  bool twist_allowed(int d) const;

  ExtAffineElement identity() const;
  ExtAffineElement translation(const IVec& lambda) const;
  ExtAffineElement make(const IVec& lambda, int w, int d) const;
  const ExtAffineElement& simple(int i) const { return simples_[i].element; }
  const std::vector<AffineSimpleReflection>& simple_affine_reflections() const { return simples_; }
  int num_simple() const { return rs_.rank() + 1; }

  ExtAffineElement mul(const ExtAffineElement& a, const ExtAffineElement& b) const;
  ExtAffineElement inv(const ExtAffineElement& a) const;
  ExtAffineElement pow(const ExtAffineElement& a, int k) const;
  // g x g^{-1}
  ExtAffineElement conj(const ExtAffineElement& x, const ExtAffineElement& g) const;
  ExtAffineElement conj_by_simple(const ExtAffineElement& x, int i) const;

  Int length(const ExtAffineElement& x) const;
  Int length_by_word(const ExtAffineElement& x) const;
  Int length_by_hyperplanes(const ExtAffineElement& x) const;
  std::vector<int> descents(const ExtAffineElement& x) const;
  ReducedWord reduced_word(const ExtAffineElement& x) const;
  ExtAffineElement from_word(const std::vector<int>& letters, const ExtAffineElement& tail) const;

  QVec affine_act(const ExtAffineElement& x, const QVec& p) const;
  IMat linear_part(const ExtAffineElement& x) const;
  const QVec& barycenter() const { return barycenter_; }
  bool in_fundamental_alcove(const QVec& p) const;

  // Length-zero elements; with_twists=false keeps only trivial-twist ones.
  const std::vector<ExtAffineElement>& omega_elements(bool with_twists) const;
  // The length-zero conjugators adjoined to S for a conjugacy flavor.
  const std::vector<ExtAffineElement>& flavor_omegas(ConjFlavor f) const;
  // Index of the simple reflection omega s_i omega^{-1}.
  int omega_permute(const ExtAffineElement& omega, int i) const;

  bool less(const ExtAffineElement& a, const ExtAffineElement& b) const;
  void sort(std::vector<ExtAffineElement>& v) const;

  // All elements of the ambient group with the given length, in total order.
  const std::vector<ExtAffineElement>& elements_of_length(int len) const;
  std::vector<ExtAffineElement> elements_up_to_length(int len) const;

  void check_same(const ExtAffineElement& x) const;

 private:
  RootSystem rs_;
  std::vector<int> allowed_;
  std::vector<AffineSimpleReflection> simples_;
  std::vector<ExtAffineElement> omega_all_;
  std::vector<ExtAffineElement> omega_plain_;
  std::vector<ExtAffineElement> omega_none_;
  QVec barycenter_{};

  mutable std::mutex layers_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<ExtAffineElement>>> layers_;
};

ExtAffineElement parse_element(const AffineGroup& g, std::string_view text);
std::string format_element(const AffineGroup& g, const ExtAffineElement& x);

}  // namespace weylcc
