#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace weylcc;

using weylcc::testing::group;
using weylcc::testing::P;

TEST_CASE("multiplication basics") {
  auto& g = group("A1");
  const auto t = g.translation({2, 0, 0});
  CHECK(g.mul(P(g, "s1"), g.identity()) == P(g, "s1"));
  CHECK(g.mul(g.translation({1, 0, 0}), g.translation({3, 0, 0})) == g.translation({4, 0, 0}));
  CHECK(g.mul(g.simple(0), g.simple(1)) == t);
  CHECK(g.simple(0) == g.mul(t, g.simple(1)));
  CHECK(g.inv(g.identity()) == g.identity());
  CHECK(g.inv(t) == g.translation({-2, 0, 0}));
}

TEST_CASE("inverse and associativity on random elements") {
  std::mt19937_64 rng(11);
  for (const char* label : {"A2", "C2", "G2", "A3", "B3", "D3"}) {
    auto& g = group(label);
    const auto pool = g.elements_up_to_length(4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 200; ++k) {
      const auto& a = pool[pick(rng)];
      const auto& b = pool[pick(rng)];
      const auto& c = pool[pick(rng)];
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.length(g.mul(a, b)) <= g.length(a) + g.length(b));
      CHECK(g.length(g.inv(a)) == g.length(a));
      QVec p{ratio(1, 3), ratio(-2, 7), ratio(5, 11)};
      CHECK(g.affine_act(g.mul(a, b), p) == g.affine_act(a, g.affine_act(b, p)));
    }
  }
}

TEST_CASE("paper example length") {
  auto& g = group("A2");
  const auto x = P(g, "tc[2,2]*d1");
  CHECK(x.translation == IVec{2, 2, 0});
  CHECK(g.length(x) == 8);
  CHECK(g.length_by_hyperplanes(x) == 8);
  CHECK(g.length_by_word(x) == 8);
  const auto d = g.descents(x);
  CHECK_FALSE(d.empty());
  for (int i : d) CHECK(g.length(g.mul(g.simple(i), x)) == 7);
}

TEST_CASE("simple affine reflections") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"}) {
    auto& g = group(label);
    REQUIRE(g.simple_affine_reflections().size() == static_cast<std::size_t>(g.rank() + 1));
    for (const auto& s : g.simple_affine_reflections()) {
      CHECK(g.mul(s.element, s.element) == g.identity());
      CHECK(g.length(s.element) == 1);
      CHECK(g.length_by_hyperplanes(s.element) == 1);
      // the reflection fixes points of its hyperplane
      QVec p{};
      const int n = g.rank();
      int k = 0;
      while (s.root[k] == 0) ++k;
      p[k] = ratio(s.level, s.root[k]);
      CHECK(g.affine_act(s.element, p) == p);
    }
  }
  auto& a2 = group("A2");
  CHECK(a2.simple(0) == P(a2, "tc[1,1]*s1*s2*s1"));
  auto& a1 = group("A1");
  CHECK(a1.simple(0) == P(a1, "tc[1]*s1"));
}

TEST_CASE("omega elements") {
  CHECK(group("A1").omega_elements(false).size() == 2);
  CHECK(group("A2").omega_elements(false).size() == 3);
  CHECK(group("A2").omega_elements(true).size() == 6);
  CHECK(group("G2").omega_elements(false).size() == 1);
  CHECK(group("A3").omega_elements(false).size() == 4);
  CHECK(group("D3").omega_elements(false).size() == 4);
  for (const char* label : {"A1", "A2", "A3", "B2", "C3", "D3", "G2"}) {
    auto& g = group(label);
    const auto& om = g.omega_elements(true);
    CHECK(std::find(om.begin(), om.end(), g.identity()) != om.end());
    for (const auto& w : om) {
      std::set<int> image;
      for (int i = 0; i < g.num_simple(); ++i) image.insert(g.omega_permute(w, i));
      CHECK(image.size() == static_cast<std::size_t>(g.num_simple()));
      for (const auto& u : om) {
        const auto prod = g.mul(w, u);
        CHECK(std::find(om.begin(), om.end(), prod) != om.end());
      }
    }
  }
}

TEST_CASE("conjugation by simple reflections") {
  auto& g = group("A1");
  const auto x = P(g, "s0*s1*s0");
  CHECK(g.conj_by_simple(x, 0) == g.simple(1));
  CHECK(g.conj_by_simple(g.conj_by_simple(x, 1), 1) == x);
  CHECK(g.conj(x, g.identity()) == x);
  auto& a2 = group("A2");
  for (const auto& y : a2.elements_up_to_length(6))
    for (int i = 0; i < a2.num_simple(); ++i) {
      const Int d = a2.length(a2.conj_by_simple(y, i)) - a2.length(y);
      CHECK((d == -2 || d == 0 || d == 2));
    }
}

TEST_CASE("length oracles agree at small length") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto& g = group(label);
    for (const auto& x : g.elements_up_to_length(5)) {
      const Int l = g.length(x);
      CHECK(g.length_by_hyperplanes(x) == l);
      CHECK(g.length_by_word(x) == l);
    }
  }
}

TEST_CASE("layer enumeration matches a box scan") {
  for (const char* label : {"A1", "A2", "C2", "G2"}) {
    auto& g = group(label);
    const int L = 5;
    const int n = g.rank();
    std::set<std::tuple<IVec, int, int>> scanned;
    IVec lam{};
    std::function<void(int)> rec = [&](int k) {
      if (k == n) {
        for (int w = 0; w < g.roots().weyl_order(); ++w)
          for (int d : g.allowed_twists()) {
            const auto x = g.make(lam, w, d);
            if (g.length(x) <= L) scanned.emplace(x.translation, x.finite, x.twist);
          }
        return;
      }
      for (Int c = -L - 1; c <= L + 1; ++c) {
        lam[k] = c;
        rec(k + 1);
      }
      lam[k] = 0;
    };
    rec(0);
    std::set<std::tuple<IVec, int, int>> layered;
    for (const auto& x : g.elements_up_to_length(L)) layered.emplace(x.translation, x.finite, x.twist);
    CHECK(scanned == layered);
  }
}

TEST_CASE("reduced words") {
  auto& a1 = group("A1");
  CHECK(a1.reduced_word(a1.identity()).letters.empty());
  CHECK(a1.reduced_word(a1.simple(1)).letters == std::vector<int>{1});
  const auto rw = a1.reduced_word(a1.translation({2, 0, 0}));
  CHECK(rw.letters == std::vector<int>{0, 1});
  CHECK(rw.tail == a1.identity());
  for (const char* label : {"A2", "C2", "G2"}) {
    auto& g = group(label);
    for (const auto& x : g.elements_up_to_length(5)) {
      const auto w = g.reduced_word(x);
      CHECK(static_cast<Int>(w.letters.size()) == g.length(x));
      CHECK(g.length(w.tail) == 0);
      CHECK(g.from_word(w.letters, w.tail) == x);
    }
  }
}

TEST_CASE("length additivity matches word concatenation") {
  auto& g = group("A2");
  const auto pool = g.elements_up_to_length(3);
  for (std::size_t a = 0; a < pool.size(); a += 3)
    for (std::size_t b = 0; b < pool.size(); b += 5) {
      const auto& x = pool[a];
      const auto& y = pool[b];
      const auto wx = g.reduced_word(x);
      const auto wy = g.reduced_word(y);
      // x*y = letters(x) . (tail_x letters(y) tail_x^{-1}) . tail_x tail_y
      std::vector<int> word = wx.letters;
      for (int l : wy.letters) word.push_back(g.omega_permute(wx.tail, l));
      const auto xy = g.mul(x, y);
      CHECK(g.from_word(word, g.mul(wx.tail, wy.tail)) == xy);
      CHECK((g.length(xy) == g.length(x) + g.length(y)) ==
            (g.length_by_word(xy) == static_cast<Int>(word.size())));
    }
}

TEST_CASE("barycentres stay off hyperplanes") {
  for (const char* label : {"A2", "C2", "G2"}) {
    auto& g = group(label);
    for (const auto& x : g.elements_up_to_length(6)) {
      const QVec q = g.affine_act(x, g.barycenter());
      for (const IVec& a : g.roots().positive_roots()) CHECK(g.roots().pair(q, a).get_den() != 1);
    }
  }
}

TEST_CASE("parser and formatter") {
  auto& g = group("A2");
  CHECK(P(g, "t[1,0]") == g.translation({1, 0, 0}));
  CHECK(P(g, "s1*s2") == g.mul(g.simple(1), g.simple(2)));
  CHECK(P(g, "e") == g.identity());
  CHECK(format_element(g, g.identity()) == "e");
  CHECK(format_element(g, P(g, "tc[2,2]*d1")) == "t[2,2]*d1");
  for (const auto& x : g.elements_up_to_length(5)) CHECK(P(g, format_element(g, x).c_str()) == x);

  auto pos = [&](const char* text) {
    try {
      parse_element(g, text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("t[1]") == 1);
  CHECK(pos("s1*x") == 3);
  CHECK(pos("s4") == 0);
  CHECK(pos("d2") == 0);
  CHECK(pos("t[1/2,0]") == 2);
  CHECK(pos("s1*") == 3);
  CHECK(pos("") == 0);
  AffineGroup plain(parse_cartan_type("A2"), TwistSelection::parse("none"));
  CHECK_THROWS_AS(parse_element(plain, "d1"), ParseError);
  auto& c2 = group("C2");
  CHECK_THROWS_AS(g.mul(g.identity(), c2.identity()), DomainError);
}
