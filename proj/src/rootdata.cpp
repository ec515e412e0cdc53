#include "weylcc/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "weylcc/lattice.hpp"

namespace weylcc {

namespace {

Int determinant(const IMat& a, int n) {
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

IMat simple_reflection_matrix(const IMat& cartan, int i, int n) {
  // lambda_j <- lambda_j - lambda_i * A_ij
  IMat m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[j][i] -= cartan[i][j];
  return m;
}

IVec reflect_root(const IMat& cartan, int i, const IVec& beta, int n) {
  Int c = 0;
  for (int j = 0; j < n; ++j) c += cartan[i][j] * beta[j];
  IVec out = beta;
  out[i] -= c;
  return out;
}

IVec reflect_coweight(const IMat& cartan, int i, const IVec& lambda, int n) {
  IVec out = lambda;
  const Int li = lambda[i];
  for (int j = 0; j < n; ++j) out[j] -= li * cartan[i][j];
  return out;
}

Int height(const IVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

}  // namespace

std::string CartanType::label() const {
  static const char* names = "ABCDG";
  return std::string(1, names[static_cast<int>(family)]) + std::to_string(rank);
}

CartanType parse_cartan_type(std::string_view label) {
  static const std::vector<std::pair<std::string, CartanType>> supported = {
      {"A1", {Family::A, 1}}, {"A2", {Family::A, 2}}, {"A3", {Family::A, 3}},
      {"B2", {Family::B, 2}}, {"B3", {Family::B, 3}}, {"C2", {Family::C, 2}},
      {"C3", {Family::C, 3}}, {"D3", {Family::D, 3}}, {"G2", {Family::G, 2}}};
  for (const auto& [name, type] : supported)
    if (name == label) return type;
  throw DomainError("unsupported type label '" + std::string(label) + "'");
}

IMat cartan_matrix(CartanType type) {
  const int n = type.rank;
  IMat a = identity_matrix(n);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      // D3: node 0 joined to nodes 1 and 2
      a[0][1] = a[1][0] = a[0][2] = a[2][0] = -1;
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

PiGroup::PiGroup(const IMat& cartan, int n) : n_(n) {
  const SmithForm snf = smith_normal_form(cartan, n);
  right_ = snf.right;
  for (int j = 0; j < n; ++j)
    if (snf.diagonal[j] != 1) {
      if (snf.diagonal[j] == 0) throw DomainError("Cartan matrix is singular");
      columns_.push_back(j);
      factors_.push_back(snf.diagonal[j]);
    }
}

std::vector<Int> PiGroup::coset_of(const IVec& lambda) const {
  std::vector<Int> out;
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += lambda[i] * right_[i][columns_[k]];
    const Int d = factors_[k];
    out.push_back(((s % d) + d) % d);
  }
  return out;
}

Int PiGroup::order() const {
  Int o = 1;
  for (Int f : factors_) o *= f;
  return o;
}

std::vector<Int> PiGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + b[k]) % factors_[k];
  return out;
}

std::vector<Int> PiGroup::negate(const std::vector<Int>& a) const {
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (factors_[k] - a[k]) % factors_[k];
  return out;
}

RootSystem::RootSystem(CartanType type) : type_(type), n_(type.rank) {
  if (n_ < 1 || n_ > kMaxRank) throw DomainError("unsupported rank");
  cartan_ = cartan_matrix(type);
  connection_index_ = std::llabs(determinant(cartan_, n_));
  pi_ = PiGroup(cartan_, n_);
  build_roots();
  build_weyl();
  build_automorphisms();
}

void RootSystem::build_roots() {
  std::map<IVec, IVec> found;  // root -> coroot
  std::deque<IVec> queue;
  for (int i = 0; i < n_; ++i) {
    IVec e{};
    e[i] = 1;
    found.emplace(e, cartan_[i]);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IVec beta = queue.front();
    queue.pop_front();
    const IVec co = found.at(beta);
    for (int i = 0; i < n_; ++i) {
      const IVec r = reflect_root(cartan_, i, beta, n_);
      if (found.count(r)) continue;
      found.emplace(r, reflect_coweight(cartan_, i, co, n_));
      queue.push_back(r);
    }
  }
  std::vector<std::pair<IVec, IVec>> positive;
  for (const auto& [root, co] : found)
    if (is_positive_root(root)) positive.emplace_back(root, co);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const Int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });
  for (const auto& [root, co] : positive) {
    roots_.push_back(root);
    coroots_.push_back(co);
  }
  highest_ = roots_.size() - 1;
}

void RootSystem::build_weyl() {
  std::vector<IMat> gens;
  for (int i = 0; i < n_; ++i) gens.push_back(simple_reflection_matrix(cartan_, i, n_));

  std::vector<IMat> mats{identity_matrix(n_)};
  std::vector<int> dist{0};
  weyl_lookup_.emplace(mats[0], 0);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (int i = 0; i < n_; ++i) {
      const IMat m = mat_mul(gens[i], mats[k], n_);
      if (weyl_lookup_.count(m)) continue;
      weyl_lookup_.emplace(m, static_cast<int>(mats.size()));
      mats.push_back(m);
      dist.push_back(dist[k] + 1);
    }

  const int order = static_cast<int>(mats.size());
  weyl_.resize(order);
  for (int w = 0; w < order; ++w) weyl_[w].matrix = mats[w];
  simple_.resize(n_);
  for (int i = 0; i < n_; ++i) simple_[i] = weyl_lookup_.at(gens[i]);

  mul_.assign(static_cast<std::size_t>(order) * order, 0);
  inv_.assign(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = weyl_lookup_.at(mat_mul(mats[a], mats[b], n_));
      mul_[a * order + b] = ab;
      if (ab == 0) inv_[a] = b;
    }

  // BFS order is by length, so each left-descent quotient already has its word.
  for (int w = 1; w < order; ++w) {
    for (int i = 0; i < n_; ++i) {
      const int sw = weyl_mul(simple_[i], w);
      if (dist[sw] < dist[w]) {
        weyl_[w].word.push_back(i + 1);
        weyl_[w].word.insert(weyl_[w].word.end(), weyl_[sw].word.begin(), weyl_[sw].word.end());
        break;
      }
    }
  }
  longest_ = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());

  std::vector<int> by_word(order);
  std::iota(by_word.begin(), by_word.end(), 0);
  std::sort(by_word.begin(), by_word.end(),
            [&](int a, int b) { return weyl_[a].word < weyl_[b].word; });
  word_rank_.assign(order, 0);
  for (int r = 0; r < order; ++r) word_rank_[by_word[r]] = r;

  inv_positive_.assign(order, 0);
  for (int w = 0; w < order; ++w)
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      // w^{-1}(alpha) = alpha * M_w as a row vector
      IVec img{};
      for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) img[j] += roots_[k][i] * mats[w][i][j];
      if (is_positive_root(img)) inv_positive_[w] |= (1u << k);
    }

  int c = 0;
  for (int i = 0; i < n_; ++i) c = weyl_mul(c, simple_[i]);
  coxeter_number_ = 1;
  for (int p = c; p != 0; p = weyl_mul(p, c)) ++coxeter_number_;
}

void RootSystem::build_automorphisms() {
  std::array<int, kMaxRank> perm{};
  std::iota(perm.begin(), perm.begin() + n_, 0);
  do {
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i)
      for (int j = 0; j < n_ && ok; ++j)
        if (cartan_[perm[i]][perm[j]] != cartan_[i][j]) ok = false;
    if (!ok) continue;
    DiagramAut d;
    d.perm = perm;
    IMat m{};
    for (int i = 0; i < n_; ++i) m[perm[i]][i] = 1;
    auts_.push_back(d);
    aut_matrices_.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.begin() + n_));
}

Int RootSystem::pair(const IVec& coweight, const IVec& root) const {
  Int s = 0;
  for (int j = 0; j < n_; ++j) s += coweight[j] * root[j];
  return s;
}

Rational RootSystem::pair(const QVec& coweight, const IVec& root) const {
  Rational s = 0;
  for (int j = 0; j < n_; ++j)
    if (root[j] != 0) s += coweight[j] * root[j];
  return s;
}

Rational RootSystem::two_rho_pairing(const QVec& v) const {
  Rational s = 0;
  for (const IVec& a : roots_) s += pair(v, a);
  return s;
}

IVec RootSystem::coroot_to_coweight(const IVec& c) const {
  IVec out{};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[j] += c[i] * cartan_[i][j];
  return out;
}

bool RootSystem::in_coroot_lattice(const IVec& coweight) const {
  for (Int c : pi_.coset_of(coweight))
    if (c != 0) return false;
  return true;
}

bool RootSystem::is_positive_root(const IVec& root) const {
  bool nonzero = false;
  for (int i = 0; i < n_; ++i) {
    if (root[i] < 0) return false;
    if (root[i] > 0) nonzero = true;
  }
  return nonzero;
}

int RootSystem::root_index(const IVec& root) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == root) return static_cast<int>(k);
  return -1;
}

int RootSystem::weyl_index(const IMat& m) const {
  auto it = weyl_lookup_.find(m);
  if (it == weyl_lookup_.end()) throw DomainError("matrix is not in the finite Weyl group");
  return it->second;
}

int RootSystem::weyl_from_word(const std::vector<int>& letters) const {
  int w = 0;
  for (int l : letters) {
    if (l < 1 || l > n_) throw DomainError("finite letter out of range");
    w = weyl_mul(w, simple_[l - 1]);
  }
  return w;
}

IVec RootSystem::act_on_root(int w, const IVec& root) const {
  const IMat& m = weyl_[inv_[w]].matrix;
  IVec out{};
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) out[j] += root[i] * m[i][j];
  return out;
}

std::pair<QVec, int> RootSystem::dominant_representative(const QVec& v) const {
  QVec cur = v;
  int y = 0;
  while (true) {
    int i = 0;
    while (i < n_ && cur[i] >= 0) ++i;
    if (i == n_) break;
    cur = act(simple_[i], cur);
    y = weyl_mul(y, simple_[i]);
  }
  return {cur, y};
}

int RootSystem::aut_mul(int a, int b) const {
  DiagramAut c;
  for (int i = 0; i < n_; ++i) c.perm[i] = auts_[a].perm[auts_[b].perm[i]];
  for (std::size_t k = 0; k < auts_.size(); ++k)
    if (auts_[k] == c) return static_cast<int>(k);
  throw DomainError("diagram automorphisms do not compose");
}

int RootSystem::aut_inv(int a) const {
  for (std::size_t k = 0; k < auts_.size(); ++k)
    if (aut_mul(a, static_cast<int>(k)) == 0) return static_cast<int>(k);
  throw DomainError("diagram automorphism has no inverse");
}

int RootSystem::aut_conj(int d, int w) const {
  const IMat m = mat_mul(mat_mul(aut_matrices_[d], weyl_[w].matrix, n_),
                         aut_matrices_[aut_inv(d)], n_);
  return weyl_index(m);
}

std::vector<std::vector<int>> RootSystem::components(const std::vector<int>& nodes) const {
  std::vector<std::vector<int>> out;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (cartan_[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

}  // namespace weylcc
