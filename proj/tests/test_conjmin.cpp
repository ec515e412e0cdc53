#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "weylcc/conjmin.hpp"

using namespace weylcc;
using weylcc::testing::group;
using weylcc::testing::P;

namespace {

// Independent minimum over the conjugation ball {c x c^-1 : l(c) <= r}.
Int ball_min(const AffineGroup& g, const ExtAffineElement& x, const std::vector<ExtAffineElement>& conjugators) {
  Int best = g.length(x);
  for (const auto& c : conjugators) best = std::min(best, g.length(g.conj(x, c)));
  return best;
}

bool in_affine_weyl(const AffineGroup& g, const ExtAffineElement& c) {
  return c.twist == 0 && g.roots().in_coroot_lattice(c.translation);
}

}  // namespace

TEST_CASE("reduction examples") {
  auto& a1 = group("A1");
  const auto r = reduce_to_min(a1, P(a1, "s0*s1*s0"));
  CHECK(r.min == a1.simple(1));
  REQUIRE(r.path.steps.size() == 1);
  CHECK(r.path.steps[0].index == 0);
  CHECK(r.path.steps[0].length_after == 1);

  const auto m = reduce_to_min(a1, a1.simple(1));
  CHECK(m.min == a1.simple(1));
  CHECK(m.path.steps.empty());

  auto& a2 = group("A2");
  const auto x = P(a2, "tc[2,2]*d1");
  const auto rx = reduce_to_min(a2, x);
  CHECK(rx.min == x);
  CHECK(rx.path.steps.empty());
}

TEST_CASE("reduction paths are monotone and replay") {
  std::mt19937_64 rng(3);
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    auto& g = group(label);
    for (const auto& x : g.elements_up_to_length(6)) {
      const auto r = reduce_to_min(g, x);
      ExtAffineElement cur = x;
      Int prev = g.length(x);
      for (const auto& s : r.path.steps) {
        cur = g.conj_by_simple(cur, s.index);
        CHECK(g.length(cur) == s.length_after);
        CHECK(s.length_after <= prev);
        prev = s.length_after;
      }
      CHECK(cur == r.min);
      CHECK(Rational(g.length(r.min)) >= two_rho_of_newton(g, x));
      for (int i = 0; i < g.num_simple(); ++i) CHECK(g.length(g.conj_by_simple(r.min, i)) >= g.length(r.min));
      const auto rr = reduce_to_min(g, x, {}, &rng);
      CHECK(g.length(rr.min) == g.length(r.min));
    }
  }
}

TEST_CASE("reduction reaches the ball minimum") {
  for (const char* label : {"A1", "A2"}) {
    auto& g = group(label);
    const auto conjugators = g.elements_up_to_length(4);
    for (const auto& x : g.elements_up_to_length(6))
      CHECK(g.length(reduce_to_min(g, x).min) <= ball_min(g, x, conjugators));
  }
}

TEST_CASE("resource cap is reported") {
  auto& g = group("A2");
  SearchLimits tiny;
  tiny.closure_cap = 2;
  CHECK_THROWS_AS(reduce_to_min(g, P(g, "tc[2,2]*d1"), tiny), ResourceCapExceeded);
  CHECK_THROWS_AS(enumerate_classes(g, 3, ConjFlavor::W, tiny), ResourceCapExceeded);
}

TEST_CASE("approx closures") {
  auto& a1 = group("A1");
  CHECK(approx_closure(a1, a1.identity()) == std::vector<ExtAffineElement>{a1.identity()});
  const auto t = a1.translation({2, 0, 0});
  const auto c = approx_closure(a1, t);
  CHECK(std::set<ExtAffineElement, bool (*)(const ExtAffineElement&, const ExtAffineElement&)>(
            c.begin(), c.end(), [](const ExtAffineElement& a, const ExtAffineElement& b) {
              return a.translation < b.translation;
            }).size() == 2);
  CHECK(std::find(c.begin(), c.end(), a1.translation({-2, 0, 0})) != c.end());
  auto& a2 = group("A2");
  for (const auto& w : a2.omega_elements(true)) CHECK(approx_closure(a2, w).size() == 1);
}

TEST_CASE("signatures are conjugation invariant") {
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    auto& g = group(label);
    for (ConjFlavor f : {ConjFlavor::W, ConjFlavor::WG, ConjFlavor::Wext}) {
      const SignatureContext ctx(g, f);
      for (const auto& x : g.elements_up_to_length(5)) {
        const auto s = ctx.signature(x);
        for (int i = 0; i < g.num_simple(); ++i) CHECK(ctx.signature(g.conj_by_simple(x, i)) == s);
        for (const auto& w : g.flavor_omegas(f)) CHECK(ctx.signature(g.conj(x, w)) == s);
      }
    }
  }
}

TEST_CASE("equal signatures are witnessed by conjugators") {
  for (const char* label : {"A1", "A2"}) {
    auto& g = group(label);
    for (ConjFlavor f : {ConjFlavor::W, ConjFlavor::WG, ConjFlavor::Wext}) {
      const SignatureContext ctx(g, f);
      std::map<ClassSignature, ExtAffineElement> first;
      for (const auto& x : g.elements_up_to_length(4)) {
        auto [it, fresh] = first.emplace(ctx.signature(x), x);
        if (fresh) continue;
        const auto w = find_conjugator(g, x, it->second, 6, f);
        REQUIRE(w.has_value());
        CHECK(g.conj(x, *w) == it->second);
        if (f == ConjFlavor::W) CHECK(in_affine_weyl(g, *w));
        if (f == ConjFlavor::WG) CHECK(w->twist == 0);
      }
    }
  }
}

TEST_CASE("are_conjugate") {
  auto& a1 = group("A1");
  const auto x = P(a1, "s0*s1");
  auto same = are_conjugate(a1, x, x, 6);
  CHECK(same.verdict == Verdict::Yes);
  CHECK(*same.witness == a1.identity());

  const auto no = are_conjugate(a1, a1.simple(0), a1.simple(1), 6, ConjFlavor::W);
  CHECK(no.verdict == Verdict::No);
  CHECK_FALSE(no.reason.empty());
  CHECK(are_conjugate(a1, a1.simple(0), a1.simple(1), 2, ConjFlavor::WG).verdict == Verdict::Yes);

  const auto t = a1.translation({2, 0, 0});
  const auto yes = are_conjugate(a1, t, a1.translation({-2, 0, 0}), 6);
  REQUIRE(yes.verdict == Verdict::Yes);
  CHECK(*yes.witness == a1.simple(1));

  CHECK(are_conjugate(a1, t, a1.simple(1), 6).verdict == Verdict::No);
  // far apart in the class, radius too small to find the conjugator
  const auto far = are_conjugate(a1, a1.simple(1), P(a1, "s0*s1*s0*s1*s0*s1*s0"), 1);
  CHECK(far.verdict == Verdict::Unknown);

  auto& a2 = group("A2");
  for (const auto& a : a2.elements_up_to_length(2))
    for (const auto& b : a2.elements_up_to_length(2)) {
      const auto ans = are_conjugate(a2, a, b, 4);
      if (ans.verdict == Verdict::Yes) {
        CHECK(a2.conj(a, *ans.witness) == b);
        CHECK(in_affine_weyl(a2, *ans.witness));
      }
      CHECK(ans.verdict != Verdict::Unknown);
    }
}

TEST_CASE("class keys") {
  auto& g = group("A2");
  ClassIndex index(g, ConjFlavor::W);
  for (const auto& x : g.elements_up_to_length(6)) {
    const ClassKey k = index.key_of(x);
    CHECK(g.length(k.rep) == k.min_length);
    CHECK(k.invariant == straight_invariant(g, k.rep));
    CHECK_FALSE(k.unconfirmed_split);
    for (int i = 0; i < g.num_simple(); ++i) CHECK(index.key_of(g.conj_by_simple(x, i)) == k);
    const auto& rec = index.record(k.id);
    CHECK(rec.minimal.front() == k.rep);
    CHECK(rec.straight == (Rational(k.min_length) == g.roots().two_rho_pairing(k.invariant.nu_bar)));
  }

  auto& a1 = group("A1");
  const auto t = class_key(a1, a1.translation({2, 0, 0}), ConjFlavor::W);
  CHECK(t.rep == a1.translation({-2, 0, 0}));
  CHECK(t.min_length == 2);
  CHECK_FALSE(class_key(a1, a1.simple(0), ConjFlavor::W).rep == class_key(a1, a1.simple(1), ConjFlavor::W).rep);
  CHECK(class_key(a1, a1.simple(0), ConjFlavor::WG).rep == class_key(a1, a1.simple(1), ConjFlavor::WG).rep);
}

TEST_CASE("class enumeration") {
  auto& a1 = group("A1");
  const auto keys = enumerate_classes(a1, 3, ConjFlavor::W);
  std::vector<ExtAffineElement> in_w;
  for (const auto& k : keys)
    if (in_affine_weyl(a1, k.rep)) in_w.push_back(k.rep);
  // classes of the affine Weyl group itself: 1, s0, s1, t^{+-alpha}
  std::vector<ExtAffineElement> expect{a1.identity(), a1.simple(1), a1.simple(0), a1.translation({-2, 0, 0})};
  a1.sort(expect);
  CHECK(in_w == expect);

  auto& a2 = group("A2");
  CHECK(enumerate_classes(a2, 0, ConjFlavor::W).size() == a2.omega_elements(true).size());
  std::size_t prev = 0;
  for (int l = 0; l <= 5; ++l) {
    const auto k = enumerate_classes(a2, l, ConjFlavor::Wext);
    CHECK(k.size() >= prev);
    prev = k.size();
  }
  // every element maps to a returned key
  ClassIndex index(a2, ConjFlavor::WG);
  const auto ks = index.enumerate(4);
  std::set<int> ids;
  for (const auto& k : ks) ids.insert(k.id);
  for (const auto& x : a2.elements_up_to_length(4)) CHECK(ids.count(index.key_of(x).id) == 1);
}

TEST_CASE("cyclic shift classes of straight elements") {
  auto& a1 = group("A1");
  ClassIndex i1(a1, ConjFlavor::W);
  CHECK(verify_cyclic_shift_straight(i1, i1.key_of(a1.translation({2, 0, 0}))));
  CHECK(verify_cyclic_shift_straight(i1, i1.key_of(a1.identity())));
  CHECK_THROWS_AS(verify_cyclic_shift_straight(i1, i1.key_of(a1.simple(1))), DomainError);

  auto& a2 = group("A2");
  ClassIndex i2(a2, ConjFlavor::W);
  for (const auto& c : all_twisted_coxeter_elements(a2)) CHECK(verify_cyclic_shift_straight(i2, i2.key_of(c)));
}

TEST_CASE("support and weak ellipticity") {
  auto& a2 = group("A2", "all");
  const auto& rs = a2.roots();
  CHECK(support(a2, a2.identity()).empty());
  CHECK(support(a2, P(a2, "s1*d1")) == std::vector<int>{1, 2});
  CHECK(support(a2, P(a2, "s1*s2*s1")) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(support(a2, a2.translation({1, 0, 0})), DomainError);

  CHECK(is_weakly_elliptic(a2, P(a2, "s1*s2")));
  CHECK(is_weakly_elliptic(a2, a2.identity()));
  CHECK_FALSE(is_weakly_elliptic(a2, P(a2, "s1")));
  CHECK_FALSE(is_weakly_elliptic(a2, P(a2, "d1")));
  CHECK(is_weakly_elliptic(a2, P(a2, "s1*s2*s1*d1")));
  CHECK(is_weakly_elliptic_in(rs, {rs.weyl_simple(0), 0}, {1}));

  auto& b2 = group("C2");
  CHECK_FALSE(is_weakly_elliptic(b2, P(b2, "s2")));
  auto& a3 = group("A3", "none");
  // s1 s3 has support {1,3}, not a union of components of A3
  CHECK_FALSE(is_weakly_elliptic(a3, P(a3, "s1*s3")));
  CHECK(is_weakly_elliptic_in(a3.roots(), {a3.roots().weyl_from_word({1, 3}), 0}, {1, 3}));
}

TEST_CASE("brute force nice finite classes") {
  auto& a2 = group("A2");
  const auto cox = brute_force_nice_finite(a2, P(a2, "s1*s2"));
  CHECK(cox.is_nice);
  const auto refl = brute_force_nice_finite(a2, P(a2, "s1"));
  CHECK_FALSE(refl.is_nice);
  CHECK(refl.witness_conjugator.has_value());
  CHECK(brute_force_nice_finite(a2, a2.identity()).is_nice);
  CHECK_THROWS_AS(brute_force_nice_finite(a2, P(a2, "s1*s2*s1")), DomainError);

  for (const char* label : {"A1", "A2", "B2", "G2", "A3"}) {
    auto& g = group(label);
    for (const auto& z : finite_class_minimal_reps(g)) {
      const auto r = brute_force_nice_finite(g, z);
      CHECK(r.is_nice == is_weakly_elliptic(g, z));
    }
  }
}

TEST_CASE("nice classes in affine groups") {
  auto& a2 = group("A2");
  CHECK(is_nice_class(a2, a2.identity()).is_nice);
  CHECK(is_nice_class(a2, P(a2, "s1*s2")).is_nice);
  CHECK(is_nice_class(a2, P(a2, "s0*s1*s2")).is_nice);
  CHECK_FALSE(is_nice_class(a2, P(a2, "s1")).is_nice);

  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    auto& g = group(label);
    ClassIndex index(g, ConjFlavor::W);
    for (const auto& k : index.enumerate(5)) {
      const auto r = is_nice_class(g, k.rep);
      CHECK(r.criteria_agree);
      if (!index.record(k.id).straight) continue;
      CHECK(is_nice_straight_class(index, k) == r.is_nice);
      if (is_superstraight_class(g, k.rep)) CHECK(r.is_nice);
    }
  }

  // a strictly dominant translation class
  ClassIndex index(a2, ConjFlavor::W);
  // basic, finite part conjugate to the bare flip: straight but not nice
  const auto flip_basic = P(a2, "t[0,1]*s2*s1*d1");
  CHECK(a2.length(flip_basic) == 0);
  CHECK_FALSE(is_nice_class(a2, flip_basic).is_nice);
  CHECK_FALSE(is_nice_straight_class(index, index.key_of(flip_basic)));
  auto& c2 = group("C2");
  ClassIndex ci(c2, ConjFlavor::W);
  const auto refl_basic = P(c2, "t[0,1]*s2*s1*s2");
  CHECK(c2.length(refl_basic) == 0);
  CHECK_FALSE(is_nice_straight_class(ci, ci.key_of(refl_basic)));
  CHECK(is_nice_straight_class(ci, ci.key_of(c2.identity())));
  CHECK(is_nice_straight_class(index, index.key_of(a2.translation({1, 1, 0}))));
  CHECK_THROWS_AS(is_nice_straight_class(index, index.key_of(a2.simple(1))), DomainError);
}

TEST_CASE("superstraight classes are whole fibers") {
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    auto& g = group(label);
    const RootSystem& rs = g.roots();
    // longest element among proper parabolics of the affine diagram is bounded by |Phi+|
    const int slack = static_cast<int>(rs.positive_roots().size());
    ClassIndex index(g, ConjFlavor::WG);
    const SignatureContext ctx(g, ConjFlavor::WG);
    for (const auto& k : index.enumerate(3)) {
      if (!index.record(k.id).straight) continue;
      const auto sig = ctx.signature(k.rep);
      bool whole_fiber = true;
      for (const auto& z : g.elements_up_to_length(static_cast<int>(k.min_length) + slack))
        if (z.twist == k.rep.twist && straight_invariant(g, z) == k.invariant && !(ctx.signature(z) == sig)) {
          whole_fiber = false;
          break;
        }
      CHECK_MESSAGE(is_superstraight_class(g, k.rep) == whole_fiber, format_element(g, k.rep));
    }
  }
}
