/*
 * rootsystem.hpp — root systems generated from Cartan matrices.
 *
 * Roots are stored with their expansion in simple roots together with
 * the coordinates of the corresponding coroot in the fundamental-
 * coweight basis; both are propagated through the reflection closure,
 * so no floating point or inner products are ever needed.  Positive
 * roots are kept in a canonical order (height ascending, then
 * lexicographic on the simple-root coordinates) that every search in
 * the library relies on for determinism.
 */
#ifndef VERYSTABLE_ROOTSYSTEM_HPP
#define VERYSTABLE_ROOTSYSTEM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "verystable/types.hpp"

namespace verystable {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/**
 * One root: expansion in simple roots, the coroot written in the
 * fundamental-coweight basis, and the height (coordinate sum).
 */
struct Root {
  std::vector<int> simple_coords;
  std::vector<int> coroot_coords;
  int height = 0;

  bool operator==(const Root& o) const { return simple_coords == o.simple_coords; }
};

/**
 * A finite root system for a (product of) simple type(s).
 *
 * Construction runs the reflection closure from the simple roots and
 * precomputes everything later queries need (canonical positive-root
 * order, per-factor highest roots, minuscule fundamental indices, the
 * exact rational inverse of the Cartan matrix, and root-string reach
 * tables).  Instances are immutable after construction and safe to
 * share across threads for reads.
 */
class RootSystem {
 public:
  struct Factor {
    SimpleType type;
    int offset;  // 0-based index of the factor's first simple root
  };

  explicit RootSystem(const LieType& type);
  explicit RootSystem(const std::string& type) : RootSystem(LieType::parse(type)) {}

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /** Cartan matrix, A[i][j] = pairing(alpha_{i+1}, coroot of alpha_{j+1}). */
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /** Positive roots in canonical order: height ascending, then lexicographic. */
  const std::vector<Root>& positive_roots() const { return positives_; }

  /** Number of roots including negatives (= 2 * positive count). */
  std::size_t root_count() const { return 2 * positives_.size(); }

  /** True iff the given simple-root coordinate vector is a root (either sign). */
  bool is_root(const std::vector<int>& simple_coords) const;

  /** Index into positive_roots() for the coordinate vector, or -1. */
  int positive_root_index(const std::vector<int>& simple_coords) const;

  /** The i-th simple root (1-based) as a Root. */
  const Root& simple_root(int i) const;

  /**
   * Highest root of the unique factor (simple types only; throws
   * std::domain_error on products).  It dominates every root.
   */
  const Root& highest_root() const;

  /** Highest root of factor f (0-based factor index). */
  const Root& highest_root_of_factor(int f) const;

  /**
   * Largest l >= 0 such that alpha_i + l*alpha is a root, for a
   * positive root alpha and 1-based simple index i.  At least 0,
   * since alpha_i itself is a root.
   */
  int root_string_reach(int i, const Root& alpha) const;

  /** Fundamental coweight omega_i (1-based): coords = e_i. */
  Coweight fundamental_coweight(int i) const;

  /** Coroot of alpha as a Coweight (its fundamental-coweight coordinates). */
  Coweight coroot(const Root& alpha) const;

  /** pairing(alpha, mu) = sum_j simple_coords[j] * mu.coords[j]. */
  Int pairing(const Root& alpha, const Coweight& mu) const;

  /** True iff all coordinates are nonnegative. */
  bool is_dominant(const Coweight& mu) const;

  /**
   * True iff hi - lo is a nonnegative-integer combination of simple
   * coroots (exact rational solve against the Cartan matrix).
   */
  bool dominance_leq(const Coweight& lo, const Coweight& hi) const;

  /**
   * Writes mu in the simple-coroot basis (exact rational coordinates):
   * result[k] with mu = sum_k result[k] * coroot(alpha_{k+1}).
   */
  std::vector<BigRat> to_coroot_basis(const Coweight& mu) const;

  /** Converts simple-coroot-basis integer coordinates to coweight coords (A*x). */
  Coweight from_coroot_basis(const std::vector<Int>& x) const;

  /**
   * True iff the dominant coweight pairs with every positive root in
   * {0, 1}; equivalently, pairs with each factor's highest root at
   * most 1.  Throws std::invalid_argument on non-dominant input.
   * These are exactly the dominance-minimal coweights within their
   * coroot-lattice coset.
   */
  bool is_minuscule(const Coweight& mu) const;

  /** Sorted 1-based indices i with omega_i minuscule. */
  const std::vector<int>& minuscule_fundamentals() const { return minuscule_; }

  /** Checks vector length against rank; throws std::invalid_argument. */
  void require_rank(const Coweight& mu) const;

 private:
  LieType type_;
  int rank_ = 0;
  std::vector<Factor> factors_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positives_;
  std::map<std::vector<int>, int> positive_index_;
  std::vector<int> simple_index_;          // positive index of alpha_i
  std::vector<int> highest_of_factor_;     // positive index per factor
  std::vector<int> minuscule_;             // 1-based fundamental indices
  std::vector<std::vector<int>> reach_;    // reach_[i][p]: simple i (0-based) + l*positives_[p]
  std::vector<std::vector<BigRat>> cartan_inverse_;

  void build_cartan();
  void generate_roots();
  void build_tables();
};

}  // namespace verystable

#endif  // VERYSTABLE_ROOTSYSTEM_HPP
