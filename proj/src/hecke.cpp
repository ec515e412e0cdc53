#include "weylcc/hecke.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace weylcc {

HeckeElement HeckeElement::basis(const ExtAffineElement& x, const LaurentPoly& c) {
  HeckeElement h;
  h.add(x, c);
  return h;
}

LaurentPoly HeckeElement::coeff(const ExtAffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const ExtAffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(x, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement h;
  for (const auto& [x, p] : terms_) h.add(x, p * c);
  return h;
}

// ---- T-basis arithmetic ----

HeckeElement HeckeAlgebra::simple_left(int i, const HeckeElement& h) const {
  const ExtAffineElement& s = g_.simple(i);
  const LaurentPoly u = LaurentPoly::u();
  HeckeElement out;
  for (const auto& [w, p] : h.terms()) {
    const ExtAffineElement sw = g_.mul(s, w);
    out.add(sw, p);
    if (g_.length(sw) < g_.length(w)) out.add(w, p * u);
  }
  return out;
}

HeckeElement HeckeAlgebra::simple_right(const HeckeElement& h, int i) const {
  const ExtAffineElement& s = g_.simple(i);
  const LaurentPoly u = LaurentPoly::u();
  HeckeElement out;
  for (const auto& [w, p] : h.terms()) {
    const ExtAffineElement ws = g_.mul(w, s);
    out.add(ws, p);
    if (g_.length(ws) < g_.length(w)) out.add(w, p * u);
  }
  return out;
}

HeckeElement HeckeAlgebra::t_mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [x, p] : a.terms()) {
    g_.check_same(x);
    const ReducedWord rw = g_.reduced_word(x);
    HeckeElement cur;
    for (const auto& [y, q] : b.terms()) cur.add(g_.mul(rw.tail, y), q);
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) cur = simple_left(*it, cur);
    out += cur.scaled(p);
  }
  return out;
}

HeckeElement HeckeAlgebra::t_inv(const ExtAffineElement& x) const {
  // T_x = T_{l1} ... T_{lk} T_tail, so T_x^-1 = T_tail^-1 T_{lk}^-1 ... T_{l1}^-1
  const ReducedWord rw = g_.reduced_word(x);
  HeckeElement h = T(g_.inv(rw.tail));
  const LaurentPoly u = LaurentPoly::u();
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) h = simple_right(h, *it) - h.scaled(u);
  return h;
}

// ---- class polynomials ----

const LaurentPoly* ClassPolyResult::find(int class_id) const {
  for (const auto& e : entries)
    if (e.cls.id == class_id) return &e.poly;
  return nullptr;
}

bool ClassPolyResult::same_table(const ClassPolyResult& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (!(entries[k].cls == o.entries[k].cls) || !(entries[k].poly == o.entries[k].poly)) return false;
  return true;
}

ClassPolynomials::ClassPolynomials(const AffineGroup& g, SearchLimits limits, ConjFlavor flavor)
    : g_(g), limits_(limits), index_(g, flavor, limits) {}

namespace {

struct Drop {
  ExtAffineElement w1;
  int index;
};

// First w1 in the equal-length closure of x with l(s_i w1 s_i) < l(w1).
std::optional<Drop> find_drop(const AffineGroup& g, const ExtAffineElement& x, const SearchLimits& limits,
                              std::mt19937_64* rng) {
  const Int len = g.length(x);
  ElementSet seen{x};
  std::deque<ExtAffineElement> queue{x};
  std::vector<int> order(g.num_simple());
  std::iota(order.begin(), order.end(), 0);
  while (!queue.empty()) {
    ExtAffineElement y;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
      const std::size_t k = pick(*rng);
      y = queue[k];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(k));
      std::shuffle(order.begin(), order.end(), *rng);
    } else {
      y = queue.front();
      queue.pop_front();
    }
    for (int i : order) {
      const ExtAffineElement z = g.conj_by_simple(y, i);
      const Int lz = g.length(z);
      if (lz < len) return Drop{y, i};
      if (lz == len && seen.insert(z).second) queue.push_back(z);
    }
    if (seen.size() > limits.closure_cap)
      throw ResourceCapExceeded("class polynomial closure exceeded the cap of " +
                                std::to_string(limits.closure_cap) + " elements");
  }
  return std::nullopt;
}

}  // namespace

const ClassPolynomials::Table& ClassPolynomials::table(const ExtAffineElement& x, Memo& memo,
                                                       std::mt19937_64* rng) {
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  Table t;
  if (const auto drop = find_drop(g_, x, limits_, rng)) {
    const ExtAffineElement& s = g_.simple(drop->index);
    const Table a = table(g_.mul(s, drop->w1), memo, rng);
    const Table b = table(g_.conj_by_simple(drop->w1, drop->index), memo, rng);
    const LaurentPoly u = LaurentPoly::u();
    for (const auto& [id, p] : a) t[id] += u * p;
    for (const auto& [id, p] : b) t[id] += p;
    for (auto e = t.begin(); e != t.end();) e = e->second.is_zero() ? t.erase(e) : std::next(e);
  } else {
    t[index_.key_of(x).id] = 1;
  }
  return memo.emplace(x, std::move(t)).first->second;
}

ClassPolyResult ClassPolynomials::package(const ExtAffineElement& source, const Table& t) const {
  ClassPolyResult r;
  r.source = source;
  for (const auto& [id, p] : t) {
    const ClassKey& k = index_.record(id).key;
    r.entries.push_back({k, p});
    r.unconfirmed_split = r.unconfirmed_split || k.unconfirmed_split;
  }
  std::sort(r.entries.begin(), r.entries.end(),
            [this](const ClassPolyEntry& a, const ClassPolyEntry& b) { return g_.less(a.cls.rep, b.cls.rep); });
  return r;
}

ClassPolyResult ClassPolynomials::compute(const ExtAffineElement& x, std::mt19937_64* rng) {
  g_.check_same(x);
  if (!rng) return package(x, table(x, memo_, nullptr));
  Memo fresh;
  return package(x, table(x, fresh, rng));
}

ClassPolyResult ClassPolynomials::cocenter_express(const HeckeElement& h) {
  Table sum;
  for (const auto& [x, c] : h.terms())
    for (const auto& [id, p] : table(x, memo_, nullptr)) sum[id] += c * p;
  for (auto e = sum.begin(); e != sum.end();) e = e->second.is_zero() ? sum.erase(e) : std::next(e);
  return package(g_.identity(), sum);
}

bool path_independence_check(ClassPolynomials& cp, const ExtAffineElement& x, int trials, std::uint64_t seed) {
  if (trials < 2) throw DomainError("path_independence_check needs at least two trials");
  const ClassPolyResult base = cp.compute(x);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trials; ++k)
    if (!cp.compute(x, &rng).same_table(base)) return false;
  return true;
}

}  // namespace weylcc
