#include "weylcc/conjmin.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace weylcc {

namespace {

void check_cap(std::size_t size, const SearchLimits& limits, const char* what) {
  if (size > limits.closure_cap)
    throw ResourceCapExceeded(std::string(what) + " exceeded the closure cap of " +
                              std::to_string(limits.closure_cap) + " elements");
}

std::vector<int> generator_order(int count, std::mt19937_64* rng) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (rng) std::shuffle(order.begin(), order.end(), *rng);
  return order;
}

}  // namespace

Reduction reduce_to_min(const AffineGroup& g, const ExtAffineElement& x, const SearchLimits& limits,
                        std::mt19937_64* rng) {
  Reduction out;
  out.path.start = x;
  ExtAffineElement cur = x;
  while (true) {
    const Int len = g.length(cur);
    struct Parent {
      ExtAffineElement prev;
      int index;
    };
    std::unordered_map<ExtAffineElement, Parent, ElementHash> parent;
    parent.emplace(cur, Parent{cur, -1});
    std::deque<ExtAffineElement> queue{cur};
    std::optional<std::pair<ExtAffineElement, int>> drop;
    while (!queue.empty() && !drop) {
      const ExtAffineElement y = queue.front();
      queue.pop_front();
      const auto order = generator_order(g.num_simple(), rng);
      for (int i : order) {
        const ExtAffineElement z = g.conj_by_simple(y, i);
        const Int lz = g.length(z);
        if (lz < len) {
          drop.emplace(y, i);
          break;
        }
        if (lz == len && parent.emplace(z, Parent{y, i}).second) queue.push_back(z);
      }
      check_cap(parent.size(), limits, "reduction closure");
    }
    if (!drop) break;

    std::vector<ReductionStep> segment;
    for (ExtAffineElement y = drop->first; !(y == cur);) {
      const Parent& p = parent.at(y);
      segment.push_back({p.index, len});
      y = p.prev;
    }
    std::reverse(segment.begin(), segment.end());
    const ExtAffineElement next = g.conj_by_simple(drop->first, drop->second);
    segment.push_back({drop->second, g.length(next)});
    out.path.steps.insert(out.path.steps.end(), segment.begin(), segment.end());
    cur = next;
  }
  out.min = cur;
  out.path.end = cur;
  return out;
}

std::vector<ExtAffineElement> approx_closure(const AffineGroup& g, const ExtAffineElement& m,
                                             const SearchLimits& limits) {
  const Int len = g.length(m);
  ElementSet seen{m};
  std::vector<ExtAffineElement> out{m};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < g.num_simple(); ++i) {
      ExtAffineElement z = g.conj_by_simple(out[k], i);
      if (g.length(z) == len && seen.insert(z).second) {
        out.push_back(z);
        check_cap(out.size(), limits, "approx closure");
      }
    }
  g.sort(out);
  return out;
}

// ---- signatures ----

SignatureContext::SignatureContext(const AffineGroup& g, ConjFlavor flavor) : g_(g), flavor_(flavor) {
  const RootSystem& rs = g.roots();
  const int order = rs.weyl_order();
  const int auts = static_cast<int>(rs.diagram_automorphisms().size());
  const std::vector<int> twists = flavor == ConjFlavor::Wext ? g.allowed_twists() : std::vector<int>{0};
  for (int d : twists)
    for (int w = 0; w < order; ++w) linear_.emplace_back(w, d);

  classes_.resize(static_cast<std::size_t>(order) * auts);
  for (int d = 0; d < auts; ++d)
    for (int w = 0; w < order; ++w) {
      const ExtAffineElement u = g.make(IVec{}, w, d);
      std::pair<int, int> best{auts, order};
      int best_y = 0;
      for (std::size_t y = 0; y < linear_.size(); ++y) {
        const ExtAffineElement Y = g.make(IVec{}, linear_[y].first, linear_[y].second);
        const ExtAffineElement c = g.conj(u, Y);
        const std::pair<int, int> key{c.twist, c.finite};
        if (key < best) {
          best = key;
          best_y = static_cast<int>(y);
        }
      }
      classes_[w * auts + d] = {best.second * auts + best.first, best_y};
    }
}

ClassSignature SignatureContext::signature(const ExtAffineElement& x) const {
  g_.check_same(x);
  const RootSystem& rs = g_.roots();
  const int n = rs.rank();
  const int auts = static_cast<int>(rs.diagram_automorphisms().size());
  const LinearClass& lc = classes_[x.finite * auts + x.twist];
  const auto [yw, yd] = linear_[lc.conjugator];
  const IVec lambda0 = rs.act(yw, rs.act_aut(yd, x.translation));
  const int u0w = lc.canonical / auts, u0d = lc.canonical % auts;

  std::shared_ptr<CanonicalData> data;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = canonical_[lc.canonical];
    if (!slot) {
      slot = std::make_shared<CanonicalData>();
      const ExtAffineElement u0 = g_.make(IVec{}, u0w, u0d);
      for (std::size_t y = 0; y < linear_.size(); ++y) {
        const ExtAffineElement Y = g_.make(IVec{}, linear_[y].first, linear_[y].second);
        if (g_.conj(u0, Y) == u0) slot->centraliser.push_back(static_cast<int>(y));
      }
      const IMat m = g_.linear_part(u0);
      std::vector<IVec> gens;
      for (int k = 0; k < n; ++k) {
        IVec t{};
        if (flavor_ == ConjFlavor::W) {
          t = rs.simple_coroot(k);
        } else {
          t[k] = 1;
        }
        gens.push_back(sub(t, mat_vec(m, t, n), n));
      }
      slot->lattice = std::make_unique<HermiteLattice>(gens, n);
    }
    data = slot;
  }

  ClassSignature s;
  s.finite = u0w;
  s.twist = u0d;
  bool first = true;
  for (int y : data->centraliser) {
    const auto [cw, cd] = linear_[y];
    const IVec r = data->lattice->reduce(rs.act(cw, rs.act_aut(cd, lambda0)));
    if (first || r < s.lambda) s.lambda = r;
    first = false;
  }
  return s;
}

// ---- conjugacy probes ----

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

using Ball = std::unordered_map<ExtAffineElement, ExtAffineElement, ElementHash>;

Ball conjugation_ball(const AffineGroup& g, const ExtAffineElement& x, int radius, ConjFlavor flavor) {
  const auto& omegas = g.flavor_omegas(flavor);
  Ball ball;
  std::vector<ExtAffineElement> frontier;
  auto add_with_omegas = [&](const ExtAffineElement& z, const ExtAffineElement& conj) {
    for (const auto& w : omegas) {
      const ExtAffineElement zz = g.conj(z, w);
      const ExtAffineElement c = g.mul(w, conj);
      auto [it, fresh] = ball.emplace(zz, c);
      if (fresh) {
        frontier.push_back(zz);
      } else if (g.less(c, it->second)) {
        it->second = c;
      }
    }
  };
  add_with_omegas(x, g.identity());
  for (int r = 0; r < radius; ++r) {
    std::vector<ExtAffineElement> current;
    current.swap(frontier);
    for (const auto& z : current) {
      const ExtAffineElement conj = ball.at(z);
      for (int i = 0; i < g.num_simple(); ++i) {
        add_with_omegas(g.conj_by_simple(z, i), g.mul(g.simple(i), conj));
      }
    }
  }
  return ball;
}

bool same_dominant_up_to_twist(const AffineGroup& g, const QVec& a, const QVec& b, ConjFlavor flavor) {
  if (flavor != ConjFlavor::Wext) return a == b;
  for (int d : g.allowed_twists())
    if (g.roots().act_aut(d, a) == b) return true;
  return false;
}

}  // namespace

std::optional<ExtAffineElement> find_conjugator(const AffineGroup& g, const ExtAffineElement& x,
                                                const ExtAffineElement& y, int radius, ConjFlavor flavor) {
  const Ball bx = conjugation_ball(g, x, (radius + 1) / 2, flavor);
  const Ball by = conjugation_ball(g, y, radius / 2, flavor);
  std::optional<ExtAffineElement> best;
  for (const auto& [z, g2] : by) {
    auto it = bx.find(z);
    if (it == bx.end()) continue;
    const ExtAffineElement w = g.mul(g.inv(g2), it->second);
    if (!best || g.less(w, *best)) best = w;
  }
  return best;
}

ConjugacyAnswer are_conjugate(const AffineGroup& g, const ExtAffineElement& x, const ExtAffineElement& y,
                              int radius, ConjFlavor flavor) {
  ConjugacyAnswer ans;
  if (x == y) {
    ans.verdict = Verdict::Yes;
    ans.witness = g.identity();
    ans.reason = "equal";
    return ans;
  }
  auto no = [&](const char* why) {
    ans.verdict = Verdict::No;
    ans.reason = why;
    return ans;
  };
  if ((g.length(x) - g.length(y)) % 2 != 0) return no("length parity differs");
  const NewtonData nx = newton_point(g, x), ny = newton_point(g, y);
  if (!same_dominant_up_to_twist(g, nx.nu_bar, ny.nu_bar, flavor)) return no("nu_bar differs");
  if (flavor != ConjFlavor::Wext) {
    if (x.twist != y.twist) return no("twist differs");
    const auto& pi = g.roots().pi_group();
    if (flavor == ConjFlavor::W) {
      if (pi.coset_of(x.translation) != pi.coset_of(y.translation)) return no("kappa differs");
    } else if (straight_invariant(g, x).kappa != straight_invariant(g, y).kappa) {
      return no("kappa differs");
    }
  }
  const SignatureContext ctx(g, flavor);
  if (ctx.signature(x) != ctx.signature(y)) return no("class signature differs");

  if (auto w = find_conjugator(g, x, y, radius, flavor)) {
    ans.verdict = Verdict::Yes;
    ans.witness = *w;
    ans.reason = "ball search";
    return ans;
  }
  ans.verdict = Verdict::Unknown;
  ans.reason = "no witness within radius " + std::to_string(radius);
  return ans;
}

// ---- class index ----

ClassIndex::ClassIndex(const AffineGroup& g, ConjFlavor flavor, SearchLimits limits)
    : g_(g), flavor_(flavor), limits_(limits), sig_(g, flavor) {}

const std::vector<ExtAffineElement>& ClassIndex::same_signature(Int len, const ClassSignature& s) {
  auto it = by_signature_.find(len);
  if (it == by_signature_.end()) {
    const auto& layer = g_.elements_of_length(static_cast<int>(len));
    check_cap(layer.size(), limits_, "length layer");
    std::map<ClassSignature, std::vector<ExtAffineElement>> groups;
    for (const auto& y : layer) groups[sig_.signature(y)].push_back(y);
    it = by_signature_.emplace(len, std::move(groups)).first;
  }
  return it->second.at(s);
}

int ClassIndex::build(const ExtAffineElement& m) {
  const Int len = g_.length(m);
  const ClassSignature s = sig_.signature(m);
  const std::vector<ExtAffineElement> candidates = same_signature(len, s);

  std::unordered_map<ExtAffineElement, int, ElementHash> comp_of;
  std::vector<std::vector<ExtAffineElement>> comps;
  for (const auto& c : candidates) {
    if (comp_of.count(c)) continue;
    auto closure = approx_closure(g_, c, limits_);
    for (const auto& z : closure) comp_of[z] = static_cast<int>(comps.size());
    comps.push_back(std::move(closure));
  }
  for (const auto& c : candidates)
    if (!comp_of.count(c)) throw DomainError("candidate lost while grouping approx-components");

  std::vector<int> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& w : g_.flavor_omegas(flavor_)) {
      auto it = comp_of.find(g_.conj(comps[c][0], w));
      if (it != comp_of.end()) unite(static_cast<int>(c), it->second);
    }
  for (std::size_t j = 1; j < comps.size(); ++j)
    for (std::size_t r = 0; r < j; ++r) {
      if (find(static_cast<int>(r)) != static_cast<int>(r)) continue;
      if (find(static_cast<int>(j)) == find(static_cast<int>(r))) break;
      if (find_conjugator(g_, comps[j][0], comps[r][0], limits_.radius, flavor_))
        unite(static_cast<int>(j), static_cast<int>(r));
    }

  std::map<int, std::vector<int>> groups;
  for (std::size_t c = 0; c < comps.size(); ++c) groups[find(static_cast<int>(c))].push_back(static_cast<int>(c));

  int result = -1;
  for (const auto& [root, members] : groups) {
    auto rec = std::make_unique<ClassRecord>();
    rec->signature = s;
    for (int c : members) {
      rec->components.push_back(comps[c]);
      rec->minimal.insert(rec->minimal.end(), comps[c].begin(), comps[c].end());
    }
    g_.sort(rec->minimal);
    const int id = static_cast<int>(records_.size());
    rec->key.rep = rec->minimal.front();
    rec->key.min_length = len;
    rec->key.invariant = straight_invariant(g_, rec->key.rep);
    rec->key.flavor = flavor_;
    rec->key.unconfirmed_split = groups.size() > 1;
    rec->key.id = id;
    rec->straight = is_straight(g_, rec->key.rep);
    for (const auto& z : rec->minimal) {
      min_to_record_[z] = id;
      if (z == m) result = id;
    }
    records_.push_back(std::move(rec));
  }
  return result;
}

const ClassKey& ClassIndex::key_of(const ExtAffineElement& x) { return record_of(x).key; }

const ClassRecord& ClassIndex::record_of(const ExtAffineElement& x) {
  g_.check_same(x);
  const ExtAffineElement m = reduce_to_min(g_, x, limits_).min;
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = min_to_record_.find(m);
  const int id = it != min_to_record_.end() ? it->second : build(m);
  return *records_[id];
}

const ClassRecord& ClassIndex::record(int id) const { return *records_.at(id); }

std::vector<ClassKey> ClassIndex::enumerate(int max_len) {
  std::set<int> ids;
  std::size_t total = 0;
  for (int l = 0; l <= max_len; ++l) {
    const auto& layer = g_.elements_of_length(l);
    total += layer.size();
    check_cap(total, limits_, "class enumeration");
    for (const auto& x : layer) ids.insert(key_of(x).id);
  }
  std::vector<ClassKey> out;
  for (int id : ids) out.push_back(records_[id]->key);
  std::sort(out.begin(), out.end(), [this](const ClassKey& a, const ClassKey& b) { return g_.less(a.rep, b.rep); });
  return out;
}

ClassKey class_key(const AffineGroup& g, const ExtAffineElement& x, ConjFlavor flavor, const SearchLimits& limits) {
  ClassIndex index(g, flavor, limits);
  return index.key_of(x);
}

std::vector<ClassKey> enumerate_classes(const AffineGroup& g, int max_len, ConjFlavor flavor,
                                        const SearchLimits& limits) {
  ClassIndex index(g, flavor, limits);
  return index.enumerate(max_len);
}

bool verify_cyclic_shift_straight(ClassIndex& index, const ClassKey& key) {
  const ClassRecord& rec = index.record(key.id);
  if (!rec.straight) throw DomainError("cyclic-shift check needs a straight class");
  return rec.components.size() == 1 && !rec.key.unconfirmed_split;
}

// ---- finite part and nice classes ----

namespace {

FiniteElement fin_mul(const RootSystem& rs, FiniteElement a, FiniteElement b) {
  return {rs.weyl_mul(a.w, rs.aut_conj(a.sigma, b.w)), rs.aut_mul(a.sigma, b.sigma)};
}

FiniteElement fin_inv(const RootSystem& rs, FiniteElement a) {
  const int si = rs.aut_inv(a.sigma);
  return {rs.aut_conj(si, rs.weyl_inv(a.w)), si};
}

FiniteElement fin_conj(const RootSystem& rs, FiniteElement z, FiniteElement y) {
  return fin_mul(rs, fin_mul(rs, y, z), fin_inv(rs, y));
}

std::vector<int> all_nodes(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

FiniteElement finite_part(const AffineGroup&, const ExtAffineElement& z) {
  return {z.finite, z.twist};
}

std::vector<int> support(const RootSystem& rs, FiniteElement z, const std::vector<int>&) {
  std::set<int> s;
  for (int l : rs.weyl_element(z.w).word) s.insert(l);
  std::vector<int> stack(s.begin(), s.end());
  const auto& perm = rs.diagram_automorphisms()[z.sigma].perm;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const int j = perm[i - 1] + 1;
    if (s.insert(j).second) stack.push_back(j);
  }
  return {s.begin(), s.end()};
}

std::vector<int> support(const AffineGroup& g, const ExtAffineElement& z) {
  if (!is_zero(z.translation, g.rank())) throw DomainError("support needs a trivial translation part");
  return support(g.roots(), finite_part(g, z));
}

bool is_weakly_elliptic_in(const RootSystem& rs, FiniteElement z, const std::vector<int>& J) {
  // the support test is only meaningful on a minimal element of the W_J-class
  FiniteElement best = z;
  for (int y = 0; y < rs.weyl_order(); ++y) {
    const auto& word = rs.weyl_element(y).word;
    if (!std::all_of(word.begin(), word.end(),
                     [&](int l) { return std::find(J.begin(), J.end(), l) != J.end(); }))
      continue;
    const FiniteElement c = fin_conj(rs, z, {y, 0});
    if (rs.weyl_length(c.w) < rs.weyl_length(best.w)) best = c;
  }
  z = best;
  const std::vector<int> supp = support(rs, z);
  const std::set<int> sset(supp.begin(), supp.end());
  for (int s : supp)
    if (std::find(J.begin(), J.end(), s) == J.end()) return false;
  std::vector<int> zero_based;
  for (int j : J) zero_based.push_back(j - 1);
  for (const auto& comp : rs.components(zero_based)) {
    std::size_t inside = 0;
    for (int i : comp) inside += sset.count(i + 1);
    if (inside != 0 && inside != comp.size()) return false;
  }
  for (int t : J) {
    if (sset.count(t)) continue;
    const FiniteElement st{rs.weyl_simple(t - 1), 0};
    if (!(fin_mul(rs, z, st) == fin_mul(rs, st, z))) return false;
  }
  return true;
}

bool is_weakly_elliptic(const AffineGroup& g, const ExtAffineElement& z) {
  if (!is_zero(z.translation, g.rank())) throw DomainError("weak ellipticity needs a finite-type element");
  return is_weakly_elliptic_in(g.roots(), finite_part(g, z), all_nodes(g.rank()));
}

NiceReport brute_force_nice_finite(const AffineGroup& g, const ExtAffineElement& z) {
  if (!is_zero(z.translation, g.rank())) throw DomainError("brute_force_nice_finite needs a finite-type element");
  const RootSystem& rs = g.roots();
  const FiniteElement z0 = finite_part(g, z);
  const int len = rs.weyl_length(z0.w);
  const int order = rs.weyl_order();
  for (int y = 0; y < order; ++y)
    if (rs.weyl_length(fin_conj(rs, z0, {y, 0}).w) < len)
      throw DomainError("brute_force_nice_finite needs a minimal-length element");

  // x^{-1} z x for x in W0
  auto conj_inv = [&](int x) { return fin_conj(rs, z0, {rs.weyl_inv(x), 0}); };
  std::vector<bool> target(order, false), reached(order, false);
  for (int x = 0; x < order; ++x) target[x] = rs.weyl_length(conj_inv(x).w) == len;
  std::vector<int> queue{0};
  reached[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k];
    const int cur_len = rs.weyl_length(conj_inv(x).w);
    for (int i = 0; i < rs.rank(); ++i) {
      const int xs = rs.weyl_mul(x, rs.weyl_simple(i));
      if (reached[xs] || rs.weyl_length(conj_inv(xs).w) > cur_len) continue;
      reached[xs] = true;
      queue.push_back(xs);
    }
  }
  NiceReport r;
  r.method = "brute-force tau";
  r.is_nice = true;
  for (int x = 0; x < order; ++x)
    if (target[x] != reached[x]) {
      r.is_nice = false;
      r.witness_conjugator = x;
      break;
    }
  r.witness_support = support(rs, z0);
  r.weakly_elliptic_verdict = is_weakly_elliptic_in(rs, z0, all_nodes(rs.rank()));
  r.criteria_agree = r.weakly_elliptic_verdict == r.is_nice;
  return r;
}

NiceReport is_nice_class(const AffineGroup& g, const ExtAffineElement& x) {
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  const NewtonData nd = newton_point(g, x);
  const ExtAffineElement y0 = g.make(IVec{}, nd.y, 0);
  const ExtAffineElement y = g.conj(x, g.inv(y0));
  if (newton_point(g, y).nu != nd.nu_bar) throw DomainError("failed to conjugate the Newton point to dominant");

  NiceReport r;
  r.method = "weakly elliptic in W_J x| <sigma>";
  const FiniteElement fy = finite_part(g, y);
  r.witness_support = support(rs, fy);
  r.weakly_elliptic_verdict = is_weakly_elliptic_in(rs, fy, nd.J);
  r.is_nice = r.weakly_elliptic_verdict;

  const AffineSubspace v = fixed_space(g, y);
  bool ok = true;
  for (std::size_t k = 0; k < rs.positive_roots().size() && ok; ++k) {
    const IVec& a = rs.positive_roots()[k];
    if (rs.pair(nd.nu_bar, a) != 0) continue;
    bool constant = true;
    for (const QVec& d : v.directions)
      if (rs.pair(d, a) != 0) constant = false;
    if (constant) continue;
    std::vector<QVec> rows = v.directions;
    rows.push_back(to_rational(rs.positive_coroots()[k]));
    if (row_echelon(rows, n).size() != v.directions.size()) ok = false;
  }
  r.hyperplane_verdict = ok;
  r.criteria_agree = ok == r.weakly_elliptic_verdict;
  return r;
}

bool is_nice_straight_class(ClassIndex& index, const ClassKey& key) {
  const AffineGroup& g = index.group();
  const RootSystem& rs = g.roots();
  const int n = rs.rank();
  const ClassRecord& rec = index.record(key.id);
  if (!rec.straight) throw DomainError("is_nice_straight_class needs a straight class");

  std::vector<int> JO;
  for (int i = 0; i < n; ++i)
    if (key.invariant.nu_bar[i] == 0) JO.push_back(i);
  const LeviSystem levi_o(g, JO);
  const auto comps = levi_o.components;

  for (const auto& m : rec.minimal) {
    const NewtonData nd = newton_point(g, m);
    const ExtAffineElement x = g.conj(m, g.inv(g.make(IVec{}, nd.y, 0)));
    if (levi_length(g, levi_o, x) != 0) continue;
    const auto& perm = rs.diagram_automorphisms()[x.twist].perm;
    const std::vector<int> supp = support(rs, FiniteElement{x.finite, 0});
    for (unsigned mask = 0; mask < (1u << comps.size()); ++mask) {
      std::vector<int> J;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (mask >> c & 1u) J.insert(J.end(), comps[c].begin(), comps[c].end());
      std::sort(J.begin(), J.end());
      auto in_j = [&](int i) { return std::binary_search(J.begin(), J.end(), i); };
      bool ok = true;
      for (int i : J)
        if (!in_j(perm[i])) ok = false;
      for (int i : JO)
        if (!in_j(i) && perm[i] != i) ok = false;
      for (int s : supp)
        if (!in_j(s - 1)) ok = false;
      if (!ok) continue;
      const LeviSystem levi(g, J);
      if (levi_length(g, levi, x) == 0 && is_superbasic_in(g, levi, x)) return true;
    }
  }
  return false;
}

ExtAffineElement finite_minimal_conjugate(const AffineGroup& g, const ExtAffineElement& z) {
  if (!is_zero(z.translation, g.rank())) throw DomainError("finite_minimal_conjugate needs a finite-type element");
  const RootSystem& rs = g.roots();
  std::vector<ExtAffineElement> cls;
  for (int y = 0; y < rs.weyl_order(); ++y) {
    const FiniteElement c = fin_conj(rs, finite_part(g, z), {y, 0});
    cls.push_back(g.make(IVec{}, c.w, c.sigma));
  }
  return *std::min_element(cls.begin(), cls.end(),
                           [&g](const ExtAffineElement& a, const ExtAffineElement& b) { return g.less(a, b); });
}

std::vector<ExtAffineElement> finite_class_minimal_reps(const AffineGroup& g) {
  const RootSystem& rs = g.roots();
  std::set<std::pair<int, int>> seen;
  std::vector<ExtAffineElement> out;
  for (int d : g.allowed_twists())
    for (int w = 0; w < rs.weyl_order(); ++w) {
      if (seen.count({w, d})) continue;
      std::vector<ExtAffineElement> cls;
      for (int y = 0; y < rs.weyl_order(); ++y) {
        const FiniteElement c = fin_conj(rs, {w, d}, {y, 0});
        if (seen.insert({c.w, c.sigma}).second) cls.push_back(g.make(IVec{}, c.w, c.sigma));
      }
      g.sort(cls);
      out.push_back(cls.front());
    }
  g.sort(out);
  return out;
}

}  // namespace weylcc
