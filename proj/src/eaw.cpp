#include "weylcc/eaw.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace weylcc {

std::size_t ElementHash::operator()(const ExtAffineElement& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.finite) * 131 + static_cast<std::size_t>(x.twist);
  for (Int c : x.translation) h = h * 1000003u ^ static_cast<std::size_t>(c + 0x9e3779b9);
  return h;
}

std::string to_string(ConjFlavor f) {
  switch (f) {
    case ConjFlavor::W: return "W";
    case ConjFlavor::WG: return "WG";
    case ConjFlavor::Wext: return "Wext";
  }
  return "?";
}

ConjFlavor parse_flavor(std::string_view s) {
  if (s == "W") return ConjFlavor::W;
  if (s == "WG") return ConjFlavor::WG;
  if (s == "Wext") return ConjFlavor::Wext;
  throw DomainError("unknown conjugacy flavor '" + std::string(s) + "'");
}

TwistSelection TwistSelection::parse(std::string_view s) {
  TwistSelection t;
  if (s == "all") return t;
  if (s == "none") {
    t.kind = Kind::None;
    return t;
  }
  if (s.size() >= 2 && s[0] == 'd' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    t.kind = Kind::Generated;
    t.generator = std::stoi(std::string(s.substr(1)));
    return t;
  }
  throw DomainError("unknown twist selection '" + std::string(s) + "'");
}

AffineGroup::AffineGroup(CartanType type, TwistSelection twists) : rs_(type) {
  const int n = rs_.rank();
  const int num_auts = static_cast<int>(rs_.diagram_automorphisms().size());
  switch (twists.kind) {
    case TwistSelection::Kind::All:
      for (int d = 0; d < num_auts; ++d) allowed_.push_back(d);
      break;
    case TwistSelection::Kind::None:
      allowed_.push_back(0);
      break;
    case TwistSelection::Kind::Generated: {
      if (twists.generator < 0 || twists.generator >= num_auts)
        throw DomainError("unknown twist d" + std::to_string(twists.generator));
      int p = 0;
      do {
        allowed_.push_back(p);
        p = rs_.aut_mul(p, twists.generator);
      } while (p != 0);
      std::sort(allowed_.begin(), allowed_.end());
      break;
    }
  }

  const IVec& theta = rs_.positive_roots()[rs_.highest_root()];
  const IVec& theta_co = rs_.positive_coroots()[rs_.highest_root()];
  IMat s_theta = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s_theta[i][j] -= theta_co[i] * theta[j];

  AffineSimpleReflection s0;
  s0.index = 0;
  s0.element = make(theta_co, rs_.weyl_index(s_theta), 0);
  s0.root = theta;
  s0.level = 1;
  simples_.push_back(s0);
  for (int i = 1; i <= n; ++i) {
    AffineSimpleReflection s;
    s.index = i;
    s.element = make(IVec{}, rs_.weyl_simple(i - 1), 0);
    s.root[i - 1] = 1;
    simples_.push_back(s);
  }

  for (int i = 0; i < n; ++i) barycenter_[i] = ratio(1, (n + 1) * theta[i]);

  IVec lam{};
  const Int lo = -2, hi = 2;
  std::function<void(int)> scan = [&](int k) {
    if (k == n) {
      for (int w = 0; w < rs_.weyl_order(); ++w)
        for (int d = 0; d < num_auts; ++d) {
          const ExtAffineElement x = make(lam, w, d);
          if (length(x) != 0) continue;
          if (d == 0) omega_plain_.push_back(x);
          if (twist_allowed(d)) omega_all_.push_back(x);
        }
      return;
    }
    for (Int c = lo; c <= hi; ++c) {
      lam[k] = c;
      scan(k + 1);
    }
    lam[k] = 0;
  };
  scan(0);
  sort(omega_plain_);
  sort(omega_all_);
  omega_none_.push_back(identity());
}

bool AffineGroup::twist_allowed(int d) const {
  return std::find(allowed_.begin(), allowed_.end(), d) != allowed_.end();
}

ExtAffineElement AffineGroup::identity() const { return make(IVec{}, 0, 0); }

ExtAffineElement AffineGroup::translation(const IVec& lambda) const { return make(lambda, 0, 0); }

ExtAffineElement AffineGroup::make(const IVec& lambda, int w, int d) const {
  ExtAffineElement x;
  x.translation = lambda;
  x.finite = w;
  x.twist = d;
  x.type = rs_.type();
  return x;
}

void AffineGroup::check_same(const ExtAffineElement& x) const {
  if (!(x.type == rs_.type()))
    throw DomainError("element of " + x.type.label() + "~ used in " + label());
}

ExtAffineElement AffineGroup::mul(const ExtAffineElement& a, const ExtAffineElement& b) const {
  check_same(a);
  check_same(b);
  const int n = rs_.rank();
  const IVec moved = rs_.act(a.finite, rs_.act_aut(a.twist, b.translation));
  return make(add(a.translation, moved, n), rs_.weyl_mul(a.finite, rs_.aut_conj(a.twist, b.finite)),
              rs_.aut_mul(a.twist, b.twist));
}

ExtAffineElement AffineGroup::inv(const ExtAffineElement& a) const {
  check_same(a);
  const int n = rs_.rank();
  const int dinv = rs_.aut_inv(a.twist);
  const int winv = rs_.weyl_inv(a.finite);
  const IVec lam = neg(rs_.act_aut(dinv, rs_.act(winv, a.translation)), n);
  return make(lam, rs_.aut_conj(dinv, winv), dinv);
}

ExtAffineElement AffineGroup::pow(const ExtAffineElement& a, int k) const {
  ExtAffineElement base = k < 0 ? inv(a) : a;
  ExtAffineElement out = identity();
  for (int e = std::abs(k); e > 0; --e) out = mul(out, base);
  return out;
}

ExtAffineElement AffineGroup::conj(const ExtAffineElement& x, const ExtAffineElement& g) const {
  return mul(mul(g, x), inv(g));
}

ExtAffineElement AffineGroup::conj_by_simple(const ExtAffineElement& x, int i) const {
  const ExtAffineElement& s = simple(i);
  return mul(mul(s, x), s);
}

Int AffineGroup::length(const ExtAffineElement& x) const {
  const auto& pos = rs_.positive_roots();
  const std::uint32_t mask = rs_.inverse_positive_mask(x.finite);
  Int len = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const Int p = rs_.pair(x.translation, pos[k]);
    len += (mask >> k & 1u) ? std::llabs(p) : std::llabs(p - 1);
  }
  return len;
}

bool AffineGroup::in_fundamental_alcove(const QVec& p) const {
  for (int i = 0; i < rs_.rank(); ++i)
    if (p[i] <= 0) return false;
  return rs_.pair(p, rs_.positive_roots()[rs_.highest_root()]) < 1;
}

Int AffineGroup::length_by_word(const ExtAffineElement& x) const {
  // BFS on left multiplication until the alcove of the current element is
  // the fundamental one; no use of the length formula.
  ElementSet seen{x};
  std::vector<ExtAffineElement> frontier{x};
  for (Int d = 0;; ++d) {
    for (const auto& y : frontier)
      if (in_fundamental_alcove(affine_act(y, barycenter_))) return d;
    std::vector<ExtAffineElement> next;
    for (const auto& y : frontier)
      for (int i = 0; i < num_simple(); ++i) {
        ExtAffineElement z = mul(simple(i), y);
        if (seen.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
}

Int AffineGroup::length_by_hyperplanes(const ExtAffineElement& x) const {
  const QVec q = affine_act(x, barycenter_);
  Int count = 0;
  for (const IVec& a : rs_.positive_roots()) count += std::llabs(floor_of(rs_.pair(q, a)));
  return count;
}

std::vector<int> AffineGroup::descents(const ExtAffineElement& x) const {
  std::vector<int> out;
  const Int len = length(x);
  for (int i = 0; i < num_simple(); ++i)
    if (length(mul(simple(i), x)) < len) out.push_back(i);
  return out;
}

ReducedWord AffineGroup::reduced_word(const ExtAffineElement& x) const {
  ReducedWord rw;
  ExtAffineElement cur = x;
  Int len = length(cur);
  while (len > 0) {
    for (int i = 0; i < num_simple(); ++i) {
      ExtAffineElement next = mul(simple(i), cur);
      const Int l = length(next);
      if (l < len) {
        rw.letters.push_back(i);
        cur = next;
        len = l;
        break;
      }
    }
  }
  rw.tail = cur;
  return rw;
}

ExtAffineElement AffineGroup::from_word(const std::vector<int>& letters,
                                        const ExtAffineElement& tail) const {
  ExtAffineElement out = identity();
  for (int i : letters) out = mul(out, simple(i));
  return mul(out, tail);
}

QVec AffineGroup::affine_act(const ExtAffineElement& x, const QVec& p) const {
  return add(to_rational(x.translation), rs_.act(x.finite, rs_.act_aut(x.twist, p)), rs_.rank());
}

IMat AffineGroup::linear_part(const ExtAffineElement& x) const {
  return mat_mul(rs_.weyl_element(x.finite).matrix, rs_.aut_matrix(x.twist), rs_.rank());
}

const std::vector<ExtAffineElement>& AffineGroup::omega_elements(bool with_twists) const {
  return with_twists ? omega_all_ : omega_plain_;
}

const std::vector<ExtAffineElement>& AffineGroup::flavor_omegas(ConjFlavor f) const {
  switch (f) {
    case ConjFlavor::W: return omega_none_;
    case ConjFlavor::WG: return omega_plain_;
    case ConjFlavor::Wext: return omega_all_;
  }
  return omega_none_;
}

int AffineGroup::omega_permute(const ExtAffineElement& omega, int i) const {
  const ExtAffineElement c = conj(simple(i), omega);
  for (int j = 0; j < num_simple(); ++j)
    if (simple(j) == c) return j;
  throw DomainError("element does not normalise the simple reflections");
}

bool AffineGroup::less(const ExtAffineElement& a, const ExtAffineElement& b) const {
  const Int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.translation != b.translation) return a.translation < b.translation;
  const int ra = rs_.weyl_word_rank(a.finite), rb = rs_.weyl_word_rank(b.finite);
  if (ra != rb) return ra < rb;
  return a.twist < b.twist;
}

void AffineGroup::sort(std::vector<ExtAffineElement>& v) const {
  std::sort(v.begin(), v.end(),
            [this](const ExtAffineElement& a, const ExtAffineElement& b) { return less(a, b); });
}

const std::vector<ExtAffineElement>& AffineGroup::elements_of_length(int len) const {
  if (len < 0) throw DomainError("negative length");
  std::lock_guard<std::mutex> lock(layers_mutex_);
  if (layers_.empty()) layers_.push_back(std::make_unique<std::vector<ExtAffineElement>>(omega_all_));
  while (static_cast<int>(layers_.size()) <= len) {
    const auto& prev = *layers_.back();
    const Int target = static_cast<Int>(layers_.size());
    ElementSet seen;
    std::vector<ExtAffineElement> next;
    for (const auto& x : prev)
      for (int i = 0; i < num_simple(); ++i) {
        ExtAffineElement y = mul(simple(i), x);
        if (length(y) == target && seen.insert(y).second) next.push_back(y);
      }
    sort(next);
    layers_.push_back(std::make_unique<std::vector<ExtAffineElement>>(std::move(next)));
  }
  return *layers_[len];
}

std::vector<ExtAffineElement> AffineGroup::elements_up_to_length(int len) const {
  std::vector<ExtAffineElement> out;
  for (int l = 0; l <= len; ++l) {
    const auto& layer = elements_of_length(l);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace weylcc
