/*
 * classify.hpp — very-stability of fixed points from multiplicity
 * divisors, with explicit wobbly witnesses.
 *
 * A multiplicity divisor assigns a dominant coweight to finitely many
 * labelled points.  The fixed point is very stable iff every assigned
 * coweight is minuscule; otherwise each offending point admits a
 * positive root alpha whose coroot both stays dominant after
 * subtraction and passes the root-string admissibility inequalities,
 * certifying a wobbly (non-closed upward flow) direction.
 */
#ifndef VERYSTABLE_CLASSIFY_HPP
#define VERYSTABLE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verystable/rootsystem.hpp"

namespace verystable {

/**
 * Finitely many labelled points, each carrying a dominant coweight
 * with nonnegative integer coordinates.  Points are kept sorted by
 * label; labels are unique and nonempty.
 */
struct MultiplicityDivisor {
  std::vector<std::pair<std::string, Coweight>> points;

  /** Adds a point; throws on duplicate/empty label or rank mismatch. */
  void add(const RootSystem& rs, const std::string& label, Coweight mu);

  /** Sum of all point coweights (zero coweight if empty). */
  Coweight total(const RootSystem& rs) const;

  /**
   * Parses the wire format "c1:1,0,0;c2:0,2,0" (empty string = empty
   * divisor).  Throws std::invalid_argument on malformed input.
   */
  static MultiplicityDivisor parse(const RootSystem& rs, const std::string& text);
};

/** A certified wobbly direction at one point. */
struct WobblyWitness {
  std::string point;
  Root root;        // the positive root alpha
  Coweight coroot;  // its coroot in fundamental-coweight coordinates
};

/** Classification outcome; witnesses is empty iff very_stable. */
struct Verdict {
  bool very_stable = true;
  std::vector<WobblyWitness> witnesses;  // ordered by point label
};

/**
 * Root-string admissibility of a candidate modification: with
 * multiplicity vector a and shift coweight b (coordinates b_i), checks
 * a_i - b_i - l >= 0 for every simple index i and every
 * 0 <= l <= root_string_reach(i, alpha).
 *
 * Precondition pairing(alpha, b) >= 1; violations throw
 * std::invalid_argument (reported distinctly from a false verdict).
 */
bool witness_admissible(const RootSystem& rs, const Coweight& a, const Coweight& b,
                        const Root& alpha);

/**
 * Deterministic wobbly witness for a dominant, non-minuscule coweight:
 * the first positive root in canonical order (height ascending, then
 * lexicographic) whose coroot keeps mu - coroot dominant and passes
 * witness_admissible.  Throws std::invalid_argument on non-dominant
 * input and std::domain_error on minuscule input.
 */
std::pair<Root, Coweight> wobbly_witness(const RootSystem& rs, const Coweight& mu);

/**
 * Classifies a multiplicity divisor: very stable iff every point's
 * coweight is minuscule; otherwise one witness per offending point.
 * Throws std::invalid_argument if any coordinate is negative.
 */
Verdict classify(const RootSystem& rs, const MultiplicityDivisor& divisor);

/**
 * Componentwise difference a - b of two multiplicity vectors; requires
 * 0 <= b_i <= a_i for all i (throws std::invalid_argument otherwise).
 */
Coweight hecke_shift(const RootSystem& rs, const Coweight& a, const Coweight& b);

/**
 * Coefficients of the highest root in the simple-root basis for a
 * simple classical type (A: all 1; B: 1,2,...,2; C: 2,...,2,1;
 * D: 1,2,...,2,1,1).  These weight the section vanishing orders in the
 * classical reformulation.  Throws std::domain_error otherwise.
 */
std::vector<Int> classical_weights(const RootSystem& rs);

/**
 * Classical-family route to the same verdict: a point is fine iff the
 * weighted sum of its vanishing orders is at most 1, where the orders
 * map positionally to simple roots and the weights are
 * classical_weights.  Witnesses for offending points reuse the
 * deterministic search.  Simple classical types only.
 */
Verdict classify_classical(const RootSystem& rs, const MultiplicityDivisor& divisor);

/**
 * Decides whether nu is a nonnegative-integer combination of minuscule
 * fundamental coweights; on success, terms lists (1-based index,
 * multiplicity) for the nonzero multiplicities.  Throws
 * std::invalid_argument on non-dominant input.
 */
struct FeasibleDecomposition {
  bool feasible = false;
  std::vector<std::pair<int, Int>> terms;
};
FeasibleDecomposition component_feasible(const RootSystem& rs, const Coweight& nu);

}  // namespace verystable

#endif  // VERYSTABLE_CLASSIFY_HPP
