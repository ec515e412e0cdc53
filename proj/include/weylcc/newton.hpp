#pragma once

#include <vector>

#include "weylcc/eaw.hpp"

namespace weylcc {

struct NewtonData {
  QVec nu{};
  QVec nu_bar{};
  int y = 0;           // finite Weyl index with y(nu_bar) = nu
  std::vector<int> J;  // 1-based simple indices with <nu_bar, alpha_i> = 0
  int period = 1;      // order of the linear part; x^period = t^{period * nu}
  int q_period = 1;    // multiple of period with x^q_period a translation in Q
};

struct AffineSubspace {
  QVec base{};
  std::vector<QVec> directions;  // reduced row echelon basis
  int ambient = 0;

  int dim() const { return static_cast<int>(directions.size()); }
  bool contains(const QVec& p) const;
};

struct StraightInvariant {
  std::vector<Int> kappa;  // canonical representative in (P/Q) modulo (1 - delta)
  QVec nu_bar{};
  int twist = 0;

  bool operator==(const StraightInvariant&) const = default;
};

NewtonData newton_point(const AffineGroup& g, const ExtAffineElement& x);
AffineSubspace fixed_space(const AffineGroup& g, const ExtAffineElement& x);
Rational two_rho_of_newton(const AffineGroup& g, const ExtAffineElement& x);

bool is_straight(const AffineGroup& g, const ExtAffineElement& x);
bool is_straight_by_powers(const AffineGroup& g, const ExtAffineElement& x, int m);

std::vector<Int> coinvariant_class(const RootSystem& rs, const std::vector<Int>& coset, int twist);
StraightInvariant straight_invariant(const AffineGroup& g, const ExtAffineElement& x);

// delta must have length zero; letters are the picks in product order.
ExtAffineElement twisted_coxeter(const AffineGroup& g, const ExtAffineElement& delta,
                                 const std::vector<int>& letters);
// Orbits of conjugation by a length-zero element on the affine simple reflections.
std::vector<std::vector<int>> simple_orbits(const AffineGroup& g, const ExtAffineElement& omega);
// Every twisted Coxeter element over all length-zero delta, transversals and orders.
std::vector<ExtAffineElement> all_twisted_coxeter_elements(const AffineGroup& g);

// Standard Levi-type subsystem of the affine group for a set of finite
// simple indices (0-based). Its simple reflections are s_i (i in J) and one
// affine reflection per connected component of J.
struct LeviSystem {
  std::vector<int> J;
  std::vector<std::vector<int>> components;
  std::vector<ExtAffineElement> generators;
  std::vector<int> generator_component;
  std::vector<std::size_t> positive_roots;  // indices into RootSystem::positive_roots

  LeviSystem(const AffineGroup& g, std::vector<int> J);
};

Int levi_length(const AffineGroup& g, const LeviSystem& levi, const ExtAffineElement& x);
bool is_superbasic_in(const AffineGroup& g, const LeviSystem& levi, const ExtAffineElement& x);
bool is_superbasic(const AffineGroup& g, const ExtAffineElement& x);

bool is_superstraight_class(const AffineGroup& g, const ExtAffineElement& x);

struct FiniteOrderCertificate {
  bool finite = false;
  bool nu_zero = false;
  bool power_closes = false;  // x^period has zero translation
  int order = 0;              // order of x when finite
  std::vector<int> word;      // reduced word letters
  ExtAffineElement tail;
  std::vector<int> J;         // tail-stable closure of the word support
  bool parabolic_finite = false;
};

FiniteOrderCertificate is_finite_order(const AffineGroup& g, const ExtAffineElement& x);

}  // namespace weylcc
