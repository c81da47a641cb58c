/*
 * grading.hpp — the principal grading of a root system by height.
 *
 * Grading a simple Lie algebra by root height (the grading element
 * pairs with every simple root by 1) yields graded pieces whose
 * dimensions are the height counts; their conjugate partition is the
 * exponent multiset, and max height + 1 is the Coxeter number.
 */
#ifndef VERYSTABLE_GRADING_HPP
#define VERYSTABLE_GRADING_HPP

#include <map>
#include <vector>

#include "verystable/rootsystem.hpp"

namespace verystable {

/**
 * Dimension data of the height grading.
 *
 * counts_by_height holds positive heights only; count(h) answers for
 * any h (negative heights mirror, height 0 contributes the rank).
 */
struct GradingProfile {
  int rank = 0;
  std::map<int, int> counts_by_height;  // h >= 1 -> number of roots of height h
  std::vector<int> exponents;           // ascending, size == rank
  int coxeter_number = 0;               // max height + 1

  int count(int h) const {
    if (h == 0) return rank;
    if (h < 0) h = -h;
    auto it = counts_by_height.find(h);
    return it == counts_by_height.end() ? 0 : it->second;
  }
  int max_height() const { return coxeter_number - 1; }
};

/** Computes the height-grading profile (exponents via conjugate partition). */
GradingProfile grading_profile(const RootSystem& rs);

/**
 * The canonical uniformising coweight at the given genus: every
 * coordinate equals 2*genus - 2.  Throws std::invalid_argument for
 * genus < 2.
 */
Coweight canonical_coweight(const RootSystem& rs, Int genus);

}  // namespace verystable

#endif  // VERYSTABLE_GRADING_HPP
