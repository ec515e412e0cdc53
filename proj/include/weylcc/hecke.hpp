#pragma once

#include <map>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "weylcc/conjmin.hpp"
#include "weylcc/eaw.hpp"
#include "weylcc/laurent.hpp"

namespace weylcc {

// Componentwise order; used only to keep Hecke terms in a stable order.
struct ElementLess {
  bool operator()(const ExtAffineElement& a, const ExtAffineElement& b) const {
    if (a.translation != b.translation) return a.translation < b.translation;
    if (a.finite != b.finite) return a.finite < b.finite;
    return a.twist < b.twist;
  }
};

class HeckeElement {
 public:
  using Terms = std::map<ExtAffineElement, LaurentPoly, ElementLess>;

  HeckeElement() = default;
  static HeckeElement basis(const ExtAffineElement& x, const LaurentPoly& c = 1);

  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(const ExtAffineElement& x) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const ExtAffineElement& x, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const LaurentPoly& c) const;
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const AffineGroup& g) : g_(g) {}

  const AffineGroup& group() const { return g_; }
  HeckeElement T(const ExtAffineElement& x) const { return HeckeElement::basis(x); }

  HeckeElement simple_left(int i, const HeckeElement& h) const;   // T_{s_i} h
  HeckeElement simple_right(const HeckeElement& h, int i) const;  // h T_{s_i}
  HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement t_inv(const ExtAffineElement& x) const;

 private:
  const AffineGroup& g_;
};

struct ClassPolyEntry {
  ClassKey cls;
  LaurentPoly poly;
};

struct ClassPolyResult {
  ExtAffineElement source;
  std::vector<ClassPolyEntry> entries;  // sorted by class representative
  bool unconfirmed_split = false;

  const LaurentPoly* find(int class_id) const;
  // Same classes with the same polynomials; the source is ignored.
  bool same_table(const ClassPolyResult& o) const;
};

// Class polynomials with respect to whole-group conjugacy classes (the
// Wext flavor by default). A deterministic instance memoises across calls.
class ClassPolynomials {
 public:
  ClassPolynomials(const AffineGroup& g, SearchLimits limits = {}, ConjFlavor flavor = ConjFlavor::Wext);

  // rng == nullptr: deterministic schedule; otherwise a fresh random
  // schedule with no memo reuse.
  ClassPolyResult compute(const ExtAffineElement& x, std::mt19937_64* rng = nullptr);
  ClassPolyResult cocenter_express(const HeckeElement& h);
  ClassIndex& index() { return index_; }
  const AffineGroup& group() const { return g_; }

 private:
  using Table = std::map<int, LaurentPoly>;
  using Memo = std::unordered_map<ExtAffineElement, Table, ElementHash>;
  const Table& table(const ExtAffineElement& x, Memo& memo, std::mt19937_64* rng);
  ClassPolyResult package(const ExtAffineElement& source, const Table& t) const;

  const AffineGroup& g_;
  SearchLimits limits_;
  ClassIndex index_;
  Memo memo_;
};

bool path_independence_check(ClassPolynomials& cp, const ExtAffineElement& x, int trials, std::uint64_t seed);

}  // namespace weylcc
