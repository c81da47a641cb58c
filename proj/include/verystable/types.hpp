/*
 * types.hpp — simple Lie types, product types, and coweights.
 *
 * A LieType names a product of simple Dynkin types ("B4", "A2+A2").
 * Coweights are integer coordinate vectors in the fundamental-coweight
 * basis of a fixed root system; all indices exposed by the API are
 * 1-based, matching the usual numbering of simple roots.
 */
#ifndef VERYSTABLE_TYPES_HPP
#define VERYSTABLE_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace verystable {

/** 64-bit signed integer used for coweight coordinates and pairings. */
using Int = long long;

/**
 * One simple factor: a family letter and a rank.
 *
 * Valid ranks: A >= 1, B >= 2, C >= 2, D >= 4, E in {6,7,8}, F = 4, G = 2.
 * Rank is capped at 99 to keep closure sizes sane.
 */
struct SimpleType {
  char family = 'A';
  int rank = 1;

  bool operator==(const SimpleType& o) const {
    return family == o.family && rank == o.rank;
  }
  std::string str() const { return family + std::to_string(rank); }
};

/** Throws std::invalid_argument unless (family, rank) is a valid simple type. */
void validate_simple_type(const SimpleType& t);

/**
 * A product of simple types, e.g. "A2+A2". A single factor is the
 * common case; the factor order is significant (coordinates are
 * concatenated factor by factor).
 */
struct LieType {
  std::vector<SimpleType> factors;

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  bool is_simple() const { return factors.size() == 1; }
  std::string str() const;

  /** Parses "B4" or "A2+A2"; throws std::invalid_argument on bad input. */
  static LieType parse(const std::string& text);

  bool operator==(const LieType& o) const { return factors == o.factors; }
};

/**
 * Integer coweight in the fundamental-coweight basis: coords[i] is the
 * pairing of the (i+1)-th simple root with the coweight.  Dominant
 * means all coordinates nonnegative.
 */
struct Coweight {
  std::vector<Int> coords;

  Coweight() = default;
  explicit Coweight(std::vector<Int> c) : coords(std::move(c)) {}
  static Coweight zero(int rank) { return Coweight(std::vector<Int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const {
    for (Int v : coords)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const Coweight& o) const { return coords == o.coords; }
  bool operator!=(const Coweight& o) const { return coords != o.coords; }

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;

  std::string str() const;
};

}  // namespace verystable

#endif  // VERYSTABLE_TYPES_HPP
