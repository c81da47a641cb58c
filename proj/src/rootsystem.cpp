#include "verystable/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace verystable {

namespace {

/** Fills a factor's Cartan block (0-based local indices) into A at the offset. */
void fill_cartan_block(std::vector<std::vector<int>>& A, const SimpleType& t, int off) {
  const int n = t.rank;
  auto set = [&](int i, int j, int v) { A[off + i][off + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int upto) {  // -1/-1 links between consecutive nodes 0..upto
    for (int i = 0; i + 1 <= upto; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (t.family) {
    case 'A':
      chain(n - 1);
      break;
    case 'B':  // last simple root short: pairing(alpha_{n-1}, coroot(alpha_n)) = -2
      chain(n - 2);
      set(n - 2, n - 1, -2);
      set(n - 1, n - 2, -1);
      break;
    case 'C':  // last simple root long
      chain(n - 2);
      set(n - 2, n - 1, -1);
      set(n - 1, n - 2, -2);
      break;
    case 'D':  // fork: node n attaches to node n-2
      chain(n - 2);
      set(n - 3, n - 1, -1);
      set(n - 1, n - 3, -1);
      break;
    case 'E':  // branch node 2 attaches to node 4; chain 1-3-4-...-n
      set(0, 2, -1);
      set(2, 0, -1);
      set(1, 3, -1);
      set(3, 1, -1);
      for (int i = 2; i + 1 < n; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      break;
    case 'F':  // nodes 1,2 short, nodes 3,4 long
      set(0, 1, -1);
      set(1, 0, -1);
      set(1, 2, -1);
      set(2, 1, -2);
      set(2, 3, -1);
      set(3, 2, -1);
      break;
    case 'G':  // node 1 short, node 2 long
      set(0, 1, -1);
      set(1, 0, -3);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
}

}  // namespace

RootSystem::RootSystem(const LieType& type) : type_(type) {
  if (type_.factors.empty()) throw std::invalid_argument("empty type");
  for (const auto& f : type_.factors) validate_simple_type(f);
  rank_ = type_.rank();
  int off = 0;
  for (const auto& f : type_.factors) {
    factors_.push_back({f, off});
    off += f.rank;
  }
  build_cartan();
  generate_roots();
  build_tables();
}

void RootSystem::build_cartan() {
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (const auto& f : factors_) fill_cartan_block(cartan_, f.type, f.offset);
}

void RootSystem::generate_roots() {
  // Reflection closure from the simple roots, propagating simple-root
  // coordinates and coroot coordinates through each simple reflection:
  //   s_j(beta)        = beta - pairing(beta, coroot_j) * alpha_j
  //   s_j(coroot beta) = coroot(beta) - coroot(beta)[j] * coroot_j
  std::map<std::vector<int>, std::vector<int>> seen;  // simple -> coroot coords
  std::deque<std::pair<std::vector<int>, std::vector<int>>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> sc(rank_, 0);
    sc[i] = 1;
    std::vector<int> cc(rank_);
    for (int j = 0; j < rank_; ++j) cc[j] = cartan_[j][i];
    seen.emplace(sc, cc);
    queue.emplace_back(std::move(sc), std::move(cc));
  }
  while (!queue.empty()) {
    auto [sc, cc] = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank_; ++j) {
      // pairing(beta, coroot_j) = sum_k sc[k] * A[k][j]
      int p = 0;
      for (int k = 0; k < rank_; ++k) p += sc[k] * cartan_[k][j];
      if (p == 0) continue;  // reflection fixes beta
      std::vector<int> nsc = sc;
      nsc[j] -= p;
      if (seen.count(nsc)) continue;
      std::vector<int> ncc = cc;
      const int cj = cc[j];
      for (int k = 0; k < rank_; ++k) ncc[k] -= cj * cartan_[k][j];
      seen.emplace(nsc, ncc);
      queue.emplace_back(std::move(nsc), std::move(ncc));
    }
  }
  positives_.clear();
  for (const auto& [sc, cc] : seen) {
    int h = 0;
    for (int v : sc) h += v;
    if (h > 0) {
      Root r;
      r.simple_coords = sc;
      r.coroot_coords = cc;
      r.height = h;
      positives_.push_back(std::move(r));
    }
  }
  std::sort(positives_.begin(), positives_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.simple_coords < b.simple_coords;
  });
  positive_index_.clear();
  for (int i = 0; i < static_cast<int>(positives_.size()); ++i)
    positive_index_.emplace(positives_[i].simple_coords, i);
}

void RootSystem::build_tables() {
  simple_index_.assign(rank_, -1);
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> sc(rank_, 0);
    sc[i] = 1;
    simple_index_[i] = positive_index_.at(sc);
  }

  // Per-factor highest root: the unique maximal-height root supported
  // on the factor's block.
  highest_of_factor_.assign(factors_.size(), -1);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const int lo = factors_[f].offset, hi = lo + factors_[f].type.rank;
    int best = -1;
    for (int p = 0; p < static_cast<int>(positives_.size()); ++p) {
      const auto& sc = positives_[p].simple_coords;
      bool in_block = sc[lo] != 0 || sc[hi - 1] != 0;
      if (!in_block) {  // any support inside [lo, hi)
        for (int k = lo; k < hi && !in_block; ++k) in_block = sc[k] != 0;
      }
      if (in_block && (best < 0 || positives_[p].height > positives_[best].height))
        best = p;
    }
    highest_of_factor_[f] = best;
  }

  // Root-string reach table: reach_[i][p] = max l with alpha_i + l*pos[p] a root.
  reach_.assign(rank_, std::vector<int>(positives_.size(), 0));
  for (int i = 0; i < rank_; ++i) {
    for (int p = 0; p < static_cast<int>(positives_.size()); ++p) {
      std::vector<int> cur = positives_[p].simple_coords;
      cur[i] += 1;  // alpha_i + 1*alpha
      int l = 0;
      while (positive_index_.count(cur)) {
        ++l;
        for (int k = 0; k < rank_; ++k) cur[k] += positives_[p].simple_coords[k];
      }
      reach_[i][p] = l;
    }
  }

  // Exact inverse of the Cartan matrix (Gauss-Jordan over rationals).
  std::vector<std::vector<BigRat>> aug(rank_, std::vector<BigRat>(2 * rank_, 0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) aug[i][j] = cartan_[i][j];
    aug[i][rank_ + i] = 1;
  }
  for (int col = 0; col < rank_; ++col) {
    int piv = -1;
    for (int r = col; r < rank_; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(aug[col], aug[piv]);
    const BigRat lead = aug[col][col];
    for (int j = 0; j < 2 * rank_; ++j) aug[col][j] /= lead;
    for (int r = 0; r < rank_; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const BigRat m = aug[r][col];
      for (int j = col; j < 2 * rank_; ++j) aug[r][j] -= m * aug[col][j];
    }
  }
  cartan_inverse_.assign(rank_, std::vector<BigRat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_inverse_[i][j] = aug[i][rank_ + j];

  // Minuscule fundamental indices (needs highest roots + pairing).
  minuscule_.clear();
  for (int i = 1; i <= rank_; ++i) {
    if (is_minuscule(fundamental_coweight(i))) minuscule_.push_back(i);
  }
}

bool RootSystem::is_root(const std::vector<int>& simple_coords) const {
  if (positive_index_.count(simple_coords)) return true;
  std::vector<int> neg(simple_coords.size());
  for (std::size_t i = 0; i < simple_coords.size(); ++i) neg[i] = -simple_coords[i];
  return positive_index_.count(neg) != 0;
}

int RootSystem::positive_root_index(const std::vector<int>& simple_coords) const {
  auto it = positive_index_.find(simple_coords);
  return it == positive_index_.end() ? -1 : it->second;
}

const Root& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  return positives_[simple_index_[i - 1]];
}

const Root& RootSystem::highest_root() const {
  if (factors_.size() != 1)
    throw std::domain_error("highest root is per-factor for product types");
  return positives_[highest_of_factor_[0]];
}

const Root& RootSystem::highest_root_of_factor(int f) const {
  if (f < 0 || f >= static_cast<int>(factors_.size()))
    throw std::invalid_argument("factor index out of range");
  return positives_[highest_of_factor_[f]];
}

int RootSystem::root_string_reach(int i, const Root& alpha) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  auto it = positive_index_.find(alpha.simple_coords);
  if (it == positive_index_.end())
    throw std::invalid_argument("root_string_reach requires a positive root");
  return reach_[i - 1][it->second];
}

Coweight RootSystem::fundamental_coweight(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("fundamental index out of range");
  Coweight w = Coweight::zero(rank_);
  w.coords[i - 1] = 1;
  return w;
}

Coweight RootSystem::coroot(const Root& alpha) const {
  Coweight w;
  w.coords.assign(alpha.coroot_coords.begin(), alpha.coroot_coords.end());
  return w;
}

Int RootSystem::pairing(const Root& alpha, const Coweight& mu) const {
  require_rank(mu);
  Int p = 0;
  for (int k = 0; k < rank_; ++k) p += static_cast<Int>(alpha.simple_coords[k]) * mu.coords[k];
  return p;
}

bool RootSystem::is_dominant(const Coweight& mu) const {
  require_rank(mu);
  for (Int v : mu.coords)
    if (v < 0) return false;
  return true;
}

std::vector<BigRat> RootSystem::to_coroot_basis(const Coweight& mu) const {
  require_rank(mu);
  std::vector<BigRat> x(rank_, 0);
  for (int k = 0; k < rank_; ++k) {
    BigRat acc = 0;
    for (int j = 0; j < rank_; ++j) acc += cartan_inverse_[k][j] * BigInt(mu.coords[j]);
    x[k] = acc;
  }
  return x;
}

Coweight RootSystem::from_coroot_basis(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != rank_)
    throw std::invalid_argument("coroot-basis vector has wrong rank");
  Coweight w = Coweight::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    Int acc = 0;
    for (int k = 0; k < rank_; ++k) acc += static_cast<Int>(cartan_[i][k]) * x[k];
    w.coords[i] = acc;
  }
  return w;
}

bool RootSystem::dominance_leq(const Coweight& lo, const Coweight& hi) const {
  require_rank(lo);
  require_rank(hi);
  const auto x = to_coroot_basis(hi - lo);
  for (const auto& v : x) {
    if (v < 0) return false;
    if (boost::multiprecision::denominator(v) != 1) return false;
  }
  return true;
}

bool RootSystem::is_minuscule(const Coweight& mu) const {
  if (!is_dominant(mu))
    throw std::invalid_argument("is_minuscule requires a dominant coweight");
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (pairing(positives_[highest_of_factor_[f]], mu) > 1) return false;
  }
  return true;
}

void RootSystem::require_rank(const Coweight& mu) const {
  if (mu.rank() != rank_)
    throw std::invalid_argument("coweight rank " + std::to_string(mu.rank()) +
                                " does not match root system rank " + std::to_string(rank_));
}

}  // namespace verystable
