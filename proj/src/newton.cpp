#include "weylcc/newton.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "weylcc/lattice.hpp"

namespace weylcc {

namespace {

int matrix_order(const IMat& m, int n) {
  const IMat id = identity_matrix(n);
  IMat p = m;
  int k = 1;
  while (p != id) {
    p = mat_mul(p, m, n);
    if (++k > 10000) throw DomainError("linear part has no finite order");
  }
  return k;
}

QMat minus_identity(const IMat& m, int n) {
  QMat q{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = m[i][j] - (i == j ? 1 : 0);
  return q;
}

}  // namespace

NewtonData newton_point(const AffineGroup& g, const ExtAffineElement& x) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  const IMat m = g.linear_part(x);
  NewtonData out;
  out.period = matrix_order(m, n);
  IVec sum{};
  IVec cur = x.translation;
  for (int k = 0; k < out.period; ++k) {
    sum = add(sum, cur, n);
    cur = mat_vec(m, cur, n);
  }
  for (int i = 0; i < n; ++i) out.nu[i] = ratio(sum[i], out.period);

  int j = 1;
  IVec multiple = sum;
  while (!rs.in_coroot_lattice(multiple)) {
    multiple = add(multiple, sum, n);
    ++j;
  }
  out.q_period = out.period * j;

  const auto [dom, y] = rs.dominant_representative(out.nu);
  out.nu_bar = dom;
  out.y = y;
  for (int i = 0; i < n; ++i)
    if (dom[i] == 0) out.J.push_back(i + 1);
  return out;
}

bool AffineSubspace::contains(const QVec& p) const {
  QVec r = sub(p, base, ambient);
  for (const QVec& d : directions) {
    int lead = 0;
    while (d[lead] == 0) ++lead;
    const Rational c = r[lead];
    for (int k = 0; k < ambient; ++k) r[k] -= c * d[k];
  }
  return is_zero(r, ambient);
}

AffineSubspace fixed_space(const AffineGroup& g, const ExtAffineElement& x) {
  const int n = g.rank();
  const NewtonData nd = newton_point(g, x);
  AffineSubspace out;
  out.ambient = n;

  QVec p{};
  QVec acc{};
  for (int k = 0; k < nd.period; ++k) {
    acc = add(acc, p, n);
    p = g.affine_act(x, p);
  }
  out.base = scale(acc, ratio(1, nd.period), n);

  const QMat a = minus_identity(g.linear_part(x), n);
  out.directions = row_echelon(nullspace(a, n), n);
  if (g.affine_act(x, out.base) != add(out.base, nd.nu, n))
    throw DomainError("averaged point is not on the fixed space");
  return out;
}

Rational two_rho_of_newton(const AffineGroup& g, const ExtAffineElement& x) {
  return g.roots().two_rho_pairing(newton_point(g, x).nu_bar);
}

bool is_straight(const AffineGroup& g, const ExtAffineElement& x) {
  return Rational(g.length(x)) == two_rho_of_newton(g, x);
}

bool is_straight_by_powers(const AffineGroup& g, const ExtAffineElement& x, int m) {
  if (m < 1) throw DomainError("power bound must be positive");
  const Int len = g.length(x);
  ExtAffineElement p = x;
  for (int k = 2; k <= m; ++k) {
    p = g.mul(p, x);
    if (g.length(p) != k * len) return false;
  }
  return true;
}

std::vector<Int> coinvariant_class(const RootSystem& rs, const std::vector<Int>& coset, int twist) {
  const PiGroup& pi = rs.pi_group();
  const int n = rs.rank();
  std::vector<std::vector<Int>> gens;
  for (int k = 0; k < n; ++k) {
    IVec e{};
    e[k] = 1;
    gens.push_back(pi.add(pi.coset_of(e), pi.negate(pi.coset_of(rs.act_aut(twist, e)))));
  }
  std::set<std::vector<Int>> sub{std::vector<Int>(coset.size(), 0)};
  std::vector<std::vector<Int>> stack(sub.begin(), sub.end());
  while (!stack.empty()) {
    const auto h = stack.back();
    stack.pop_back();
    for (const auto& gen : gens) {
      auto next = pi.add(h, gen);
      if (sub.insert(next).second) stack.push_back(next);
    }
  }
  std::vector<Int> best = coset;
  for (const auto& h : sub) best = std::min(best, pi.add(coset, h));
  return best;
}

StraightInvariant straight_invariant(const AffineGroup& g, const ExtAffineElement& x) {
  StraightInvariant out;
  out.twist = x.twist;
  out.nu_bar = newton_point(g, x).nu_bar;
  out.kappa = coinvariant_class(g.roots(), g.roots().pi_group().coset_of(x.translation), x.twist);
  return out;
}

std::vector<std::vector<int>> simple_orbits(const AffineGroup& g, const ExtAffineElement& omega) {
  if (g.length(omega) != 0) throw DomainError("twisting element must have length zero");
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(g.num_simple(), false);
  for (int i = 0; i < g.num_simple(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = g.omega_permute(omega, j)) {
      seen[j] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  return orbits;
}

ExtAffineElement twisted_coxeter(const AffineGroup& g, const ExtAffineElement& delta,
                                 const std::vector<int>& letters) {
  const auto orbits = simple_orbits(g, delta);
  std::vector<int> hits(orbits.size(), 0);
  for (int l : letters) {
    bool found = false;
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (std::find(orbits[o].begin(), orbits[o].end(), l) != orbits[o].end()) {
        ++hits[o];
        found = true;
      }
    if (!found) throw DomainError("pick s" + std::to_string(l) + " is not an affine simple reflection");
  }
  for (int h : hits)
    if (h != 1) throw DomainError("picks are not a transversal of the delta-orbits");
  return g.from_word(letters, delta);
}

std::vector<ExtAffineElement> all_twisted_coxeter_elements(const AffineGroup& g) {
  std::vector<ExtAffineElement> out;
  for (const auto& delta : g.omega_elements(true)) {
    const auto orbits = simple_orbits(g, delta);
    std::vector<std::size_t> choice(orbits.size(), 0);
    while (true) {
      std::vector<int> picks;
      for (std::size_t o = 0; o < orbits.size(); ++o) picks.push_back(orbits[o][choice[o]]);
      std::sort(picks.begin(), picks.end());
      do {
        out.push_back(twisted_coxeter(g, delta, picks));
      } while (std::next_permutation(picks.begin(), picks.end()));
      std::size_t o = 0;
      while (o < orbits.size() && ++choice[o] == orbits[o].size()) choice[o++] = 0;
      if (o == orbits.size()) break;
    }
  }
  return out;
}

LeviSystem::LeviSystem(const AffineGroup& g, std::vector<int> nodes) : J(std::move(nodes)) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  std::sort(J.begin(), J.end());
  components = rs.components(J);
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < n; ++i)
      if (roots[k][i] != 0 && !std::binary_search(J.begin(), J.end(), i)) inside = false;
    if (inside) positive_roots.push_back(k);
  }
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int i : components[c]) {
      generators.push_back(g.simple(i + 1));
      generator_component.push_back(static_cast<int>(c));
    }
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::size_t top = 0;
    Int best = -1;
    for (std::size_t k : positive_roots) {
      bool in_c = true;
      Int h = 0;
      for (int i = 0; i < n; ++i) {
        if (roots[k][i] != 0 && !std::binary_search(components[c].begin(), components[c].end(), i))
          in_c = false;
        h += roots[k][i];
      }
      if (in_c && h > best) {
        best = h;
        top = k;
      }
    }
    const IVec& theta = roots[top];
    const IVec& co = rs.positive_coroots()[top];
    IMat s = identity_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i][j] -= co[i] * theta[j];
    generators.push_back(g.make(co, rs.weyl_index(s), 0));
    generator_component.push_back(static_cast<int>(c));
  }
}

Int levi_length(const AffineGroup& g, const LeviSystem& levi, const ExtAffineElement& x) {
  const RootSystem& rs = g.roots();
  const std::uint32_t mask = rs.inverse_positive_mask(x.finite);
  Int len = 0;
  for (std::size_t k : levi.positive_roots) {
    const Int p = rs.pair(x.translation, rs.positive_roots()[k]);
    len += (mask >> k & 1u) ? std::llabs(p) : std::llabs(p - 1);
  }
  return len;
}

bool is_superbasic_in(const AffineGroup& g, const LeviSystem& levi, const ExtAffineElement& x) {
  const std::size_t m = levi.generators.size();
  std::vector<int> perm(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    const ExtAffineElement c = g.conj(levi.generators[a], x);
    for (std::size_t b = 0; b < m; ++b)
      if (levi.generators[b] == c) perm[a] = static_cast<int>(b);
    if (perm[a] < 0) return false;  // x does not normalise S_J, so not basic there
  }
  std::vector<bool> seen(m, false);
  for (std::size_t a = 0; a < m; ++a) {
    if (seen[a]) continue;
    std::set<int> orbit;
    for (int b = static_cast<int>(a); !seen[b]; b = perm[b]) {
      seen[b] = true;
      orbit.insert(b);
    }
    for (int b : orbit)
      for (std::size_t c = 0; c < m; ++c)
        if (levi.generator_component[c] == levi.generator_component[b] && !orbit.count(static_cast<int>(c)))
          return false;
  }
  return true;
}

bool is_superbasic(const AffineGroup& g, const ExtAffineElement& x) {
  if (g.length(x) != 0) throw DomainError("is_superbasic needs a length-zero element");
  std::vector<int> all(g.rank());
  std::iota(all.begin(), all.end(), 0);
  return is_superbasic_in(g, LeviSystem(g, all), x);
}

bool is_superstraight_class(const AffineGroup& g, const ExtAffineElement& x) {
  const RootSystem& rs = g.roots();
  const NewtonData nd = newton_point(g, x);
  const AffineSubspace v = fixed_space(g, x);
  for (const IVec& a : rs.positive_roots()) {
    if (rs.pair(nd.nu, a) != 0) continue;
    for (const QVec& d : v.directions)
      if (rs.pair(d, a) != 0) return false;
    if (rs.pair(v.base, a).get_den() == 1) return false;
  }
  return true;
}

FiniteOrderCertificate is_finite_order(const AffineGroup& g, const ExtAffineElement& x) {
  const int n = g.rank();
  FiniteOrderCertificate c;
  const NewtonData nd = newton_point(g, x);
  c.nu_zero = is_zero(nd.nu, n);
  const ExtAffineElement p = g.pow(x, nd.period);
  c.power_closes = is_zero(p.translation, n);
  c.finite = c.nu_zero && c.power_closes;
  if (c.finite) {
    c.order = 1;
    for (ExtAffineElement q = x; !(q == g.identity()); q = g.mul(q, x)) ++c.order;
  }
  const ReducedWord rw = g.reduced_word(x);
  c.word = rw.letters;
  c.tail = rw.tail;
  std::set<int> support(rw.letters.begin(), rw.letters.end());
  std::vector<int> stack(support.begin(), support.end());
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const int j = g.omega_permute(rw.tail, i);
    if (support.insert(j).second) stack.push_back(j);
  }
  c.J.assign(support.begin(), support.end());
  c.parabolic_finite = static_cast<int>(c.J.size()) < g.num_simple();
  return c;
}

}  // namespace weylcc
