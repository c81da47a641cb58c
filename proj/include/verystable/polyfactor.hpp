/*
 * polyfactor.hpp — exact products of cyclotomic-style factors and
 * dense integer polynomials.
 *
 * FactoredProduct is the canonical carrier for the rational functions
 * this library produces: a finite product prod_k (1 - t^k)^{c_k} with
 * signed integer exponents.  Expansion and division are exact over the
 * integers (every expanded factor has leading coefficient +-1), with
 * arbitrary-precision coefficients throughout.
 */
#ifndef VERYSTABLE_POLYFACTOR_HPP
#define VERYSTABLE_POLYFACTOR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "verystable/types.hpp"

namespace verystable {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Dense univariate polynomial with arbitrary-precision integer
 * coefficients, stored low degree first with no trailing zeros.
 * The zero polynomial has an empty coefficient vector and degree -1.
 */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly one() { return IntPoly({BigInt(1)}); }
  /** c * t^k */
  static IntPoly monomial(BigInt c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int k) const;  // 0 outside the stored range
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;     // throws on zero polynomial
  const BigInt& constant() const { return coeff(0); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;

  /** Multiplies in place by (1 - t^k), k >= 1. */
  void mul_one_minus_tk(Int k);

  struct DivMod;  // { quotient, remainder }, defined after the class
  /**
   * Exact Euclidean division; requires a divisor with leading
   * coefficient +1 or -1 (always the case for expanded factor
   * products).  quotient*divisor + remainder == *this.
   */
  DivMod divmod(const IntPoly& divisor) const;

  /** True iff coeff(i) == coeff(degree()-i) for all i (true for zero). */
  bool is_palindromic() const;
  /** Leading coefficient and constant term both equal to 1. */
  bool monic_and_constant_one() const;
  /** Sum of coefficients. */
  BigInt eval_at_one() const;
  /** All coefficients >= 0. */
  bool nonnegative() const;

  std::string str() const;  // human-readable, e.g. "1 + t + t^2"

 private:
  std::vector<BigInt> c_;
  void trim();
};

struct IntPoly::DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

/**
 * prod_k (1 - t^k)^{c_k} with k >= 1 and nonzero integer exponents
 * c_k; the identity is the empty product.  The representation of a
 * rational function in these generators is unique, so map equality is
 * rational-function equality; rational_equals additionally verifies by
 * cross-multiplying expanded numerator/denominator pairs.
 */
class FactoredProduct {
 public:
  FactoredProduct() = default;

  static FactoredProduct one() { return FactoredProduct(); }
  /** (1 - t^k)^e as a one-factor product. */
  static FactoredProduct factor(Int k, Int e);

  const std::map<Int, Int>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  /** Multiplies (1 - t^k)^e in; k >= 1, zero exponents normalize away. */
  void mul_factor(Int k, Int e);
  FactoredProduct& operator*=(const FactoredProduct& o);
  FactoredProduct operator*(const FactoredProduct& o) const;
  FactoredProduct inverse() const;
  bool operator==(const FactoredProduct& o) const { return exps_ == o.exps_; }

  /**
   * Expands the positive-exponent part (numerator) and the negated
   * negative-exponent part (denominator) as integer polynomials.
   * Throws std::length_error if the expanded degree would exceed an
   * internal sanity bound.
   */
  struct Expansion {
    IntPoly numerator;
    IntPoly denominator;
  };
  Expansion expand() const;

  /**
   * Divides the expanded numerator by the expanded denominator.  When
   * the division is exact the result is the polynomial; otherwise
   * is_polynomial is false and remainder_degree carries the degree of
   * the nonzero remainder.
   */
  struct ToPoly {
    bool is_polynomial = false;
    IntPoly poly;                // valid iff is_polynomial
    int remainder_degree = -1;   // valid iff !is_polynomial
  };
  ToPoly to_polynomial() const;

  /** Equality as rational functions (exact cross-multiplication). */
  bool rational_equals(const FactoredProduct& o) const;

  /**
   * Rendering such as "(1-t^2)^3 (1-t)^-1": positive exponents first,
   * then negative, each by ascending k; the identity renders as "1".
   */
  std::string str() const;

 private:
  std::map<Int, Int> exps_;
};

}  // namespace verystable

#endif  // VERYSTABLE_POLYFACTOR_HPP
