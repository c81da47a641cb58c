/*
 * equivmult.hpp — virtual equivariant multiplicities of fixed points
 * and their closed-form companions.
 *
 * From the total coweight of a multiplicity divisor and a genus, the
 * height grading yields a degree profile, tangent-space dimensions per
 * circle weight, and finally the virtual multiplicity
 *
 *   m(t) = prod_j (1-t^j)^{-dims(j)} * prod_i (1-t^{e_i+1})^{(2e_i+1)(g-1)}
 *
 * as an exact factored product.  For minuscule total coweights m(t) is
 * a polynomial and agrees with the Dynkin polynomial of the coweight;
 * a built-in reference table records the classical closed forms.
 */
#ifndef VERYSTABLE_EQUIVMULT_HPP
#define VERYSTABLE_EQUIVMULT_HPP

#include <vector>

#include "verystable/grading.hpp"
#include "verystable/polyfactor.hpp"
#include "verystable/rootsystem.hpp"

namespace verystable {

/**
 * Degrees d_j of the graded bundle pieces for a total coweight and
 * genus: d_0 = 0 and d_j = j*count(j)*(2g-2) - S_j for j >= 1, where
 * S_j sums pairing(alpha, mu) over positive roots of height j.
 * Index j runs 0..coxeter (d vanishes beyond max height).
 * Throws std::invalid_argument for genus < 2 or non-dominant input.
 */
struct DegreeProfile {
  Int genus = 2;
  Coweight total;
  std::vector<Int> d;  // size coxeter+1, d[0] == 0
};
DegreeProfile degree_profile(const RootSystem& rs, const Coweight& total_mu, Int genus);

/**
 * Tangent weight-space dimensions: dims[j] for weights j = 1..coxeter,
 * dims(j) = d_{j-1} - d_j + (r_{j-1} + r_j)(g-1) with r_0 = rank and
 * r_j = count(j).  Negative entries flag an inadmissible input (a
 * fixed point that does not exist at this genus); they are reported
 * here as-is and rejected by virtual_multiplicity.
 */
struct TangentWeights {
  Int genus = 2;
  Coweight total;
  int coxeter = 0;
  std::vector<Int> dims;  // size coxeter+1; dims[0] unused (= 0)
  bool admissible() const {
    for (Int v : dims)
      if (v < 0) return false;
    return true;
  }
};
TangentWeights tangent_weights(const RootSystem& rs, const Coweight& total_mu, Int genus);

/**
 * The virtual equivariant multiplicity m(t) as a factored product.
 * Depends only on the total coweight.  Throws std::invalid_argument
 * for genus < 2 or non-dominant input, std::domain_error (with the
 * offending weight) if any tangent dimension is negative.
 */
FactoredProduct virtual_multiplicity(const RootSystem& rs, const Coweight& total_mu,
                                     Int genus);

/**
 * The Dynkin polynomial of a dominant coweight,
 *   D_mu(t) = prod_{alpha>0} (1-t^{ht(alpha)+pairing(alpha,mu)}) / (1-t^{ht(alpha)}),
 * returned in factored form (the division is exact; the half-sum of
 * positive coroots pairs with every positive root by its height).
 */
FactoredProduct dynkin_polynomial(const RootSystem& rs, const Coweight& mu);

/**
 * Exact dimension of the irreducible representation (of the dual
 * group) with highest weight mu: prod_{alpha>0} (ht + pairing) / ht,
 * computed as an exact rational product.  Equals eval_at_one of the
 * Dynkin polynomial.
 */
BigInt weyl_dimension(const RootSystem& rs, const Coweight& mu);

/**
 * Closed-form multiplicity for the minuscule fundamental coweight
 * omega_i of a simple type, from the built-in reference table
 * (families A, B, C, D and the two exceptional minuscule cases).
 * Throws std::domain_error if (type, i) has no table entry.
 */
FactoredProduct reference_closed_form(const SimpleType& type, int i);

/** True iff the simple type has reference table rows (nonzero minuscules). */
bool reference_table_covers(const SimpleType& type);

/**
 * One evaluated reference-table row: the pipeline multiplicity of a
 * minuscule fundamental coweight at every requested genus, its
 * polynomial expansion, and comparisons against the closed form and
 * the Dynkin polynomial.
 */
struct TableRow {
  int index = 0;              // 1-based fundamental index
  Coweight coweight;
  std::vector<Int> genus_list;
  FactoredProduct multiplicity;     // common to all genera in genus_list
  IntPoly poly;
  bool genus_independent = true;    // multiplicities agreed across genus_list
  bool matches_reference = false;
  bool matches_dynkin = false;
};

/**
 * Evaluates every reference-table row of a simple covered type at the
 * given genera (default {2, 3}).  Throws std::domain_error for types
 * without table coverage (E8, F4, G2, products).
 */
std::vector<TableRow> reference_table(const RootSystem& rs,
                                      const std::vector<Int>& genus_list = {2, 3});

}  // namespace verystable

#endif  // VERYSTABLE_EQUIVMULT_HPP
