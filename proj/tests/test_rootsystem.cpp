#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "verystable/rootsystem.hpp"

using namespace verystable;

TEST_CASE("reflection closure agrees with the orthogonal realization") {
  // Two independent constructions of each root system: Cartan-matrix
  // closure (library) vs exact-rational realization (oracle).  Root
  // counts, expansions, and coroot coordinates must all agree.
  for (const SimpleType& t : oracles::simple_types_up_to(1, 8)) {
    CAPTURE(t.str());
    const RootSystem rs(LieType{{t}});
    const auto simples = oracles::simple_root_vectors(t);
    const auto realized = oracles::realized_roots(simples);

    CHECK(rs.root_count() == realized.size());
    CHECK(rs.positive_roots().size() * 2 == realized.size());

    std::set<std::vector<int>> seen;
    for (const Root& r : rs.positive_roots()) {
      CAPTURE(r.simple_coords);
      CHECK(seen.insert(r.simple_coords).second);  // no duplicates

      int h = 0;
      bool nonneg = true;
      for (int c : r.simple_coords) {
        h += c;
        nonneg = nonneg && c >= 0;
      }
      CHECK(r.height == h);
      CHECK(nonneg);

      // The expansion must be a realized root...
      const oracles::Vec v = oracles::realize(simples, r.simple_coords);
      CHECK(realized.count(v) == 1);
      // ...whose coroot coordinates match the propagated ones exactly.
      const auto cc = oracles::realized_coroot_coords(simples, v);
      REQUIRE(cc.size() == r.coroot_coords.size());
      for (std::size_t i = 0; i < cc.size(); ++i) CHECK(cc[i] == BigRat(r.coroot_coords[i]));
    }
  }
}

TEST_CASE("positive roots are sorted by height then lexicographically") {
  for (const char* name : {"A3", "B4", "D5", "F4", "G2", "E6", "A2+G2"}) {
    const RootSystem rs{std::string(name)};
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 1; i < pos.size(); ++i) {
      const bool ordered = pos[i - 1].height < pos[i].height ||
                           (pos[i - 1].height == pos[i].height &&
                            pos[i - 1].simple_coords < pos[i].simple_coords);
      CHECK(ordered);
    }
    for (std::size_t i = 0; i < pos.size(); ++i)
      CHECK(rs.positive_root_index(pos[i].simple_coords) == static_cast<int>(i));
  }
}

TEST_CASE("Cartan convention: pairing(alpha_i, coroot(alpha_j)) = A[i][j]") {
  for (const SimpleType& t : oracles::simple_types_up_to(1, 8)) {
    CAPTURE(t.str());
    const RootSystem rs(LieType{{t}});
    const auto& A = rs.cartan();
    for (int i = 1; i <= rs.rank(); ++i) {
      for (int j = 1; j <= rs.rank(); ++j) {
        CHECK(rs.pairing(rs.simple_root(i), rs.coroot(rs.simple_root(j))) == A[i - 1][j - 1]);
        // Fundamental coweights are the dual basis to the simple roots.
        CHECK(rs.pairing(rs.simple_root(i), rs.fundamental_coweight(j)) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("pinned Cartan matrices for the exceptional conventions") {
  CHECK(RootSystem("G2").cartan() ==
        std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(RootSystem("F4").cartan() ==
        std::vector<std::vector<int>>{
            {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  CHECK(RootSystem("B2").cartan() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  CHECK(RootSystem("C2").cartan() == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
}

TEST_CASE("highest roots carry the frozen simple-root coefficients") {
  auto coeffs = [](const char* name) { return RootSystem(name).highest_root().simple_coords; };
  CHECK(coeffs("A4") == std::vector<int>{1, 1, 1, 1});
  CHECK(coeffs("B4") == std::vector<int>{1, 2, 2, 2});
  CHECK(coeffs("C4") == std::vector<int>{2, 2, 2, 1});
  CHECK(coeffs("D5") == std::vector<int>{1, 2, 2, 1, 1});
  CHECK(coeffs("G2") == std::vector<int>{3, 2});
  CHECK(coeffs("F4") == std::vector<int>{2, 4, 3, 2});
  CHECK(coeffs("E6") == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(coeffs("E7") == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(coeffs("E8") == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("the highest root dominates every positive root") {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    const RootSystem rs{std::string(name)};
    const Root& theta = rs.highest_root();
    for (const Root& r : rs.positive_roots()) {
      for (int k = 0; k < rs.rank(); ++k)
        CHECK(theta.simple_coords[k] >= r.simple_coords[k]);
    }
  }
}

TEST_CASE("root membership queries cover both signs") {
  const RootSystem rs("B2");
  CHECK(rs.is_root({1, 0}));
  CHECK(rs.is_root({-1, 0}));
  CHECK(rs.is_root({1, 2}));
  CHECK(rs.is_root({-1, -2}));
  CHECK_FALSE(rs.is_root({1, -1}));
  CHECK_FALSE(rs.is_root({2, 1}));
  CHECK_FALSE(rs.is_root({0, 0}));
  CHECK(rs.positive_root_index({9, 9}) == -1);
}

TEST_CASE("root string reach matches explicit small cases") {
  const RootSystem a2("A2");
  CHECK(a2.root_string_reach(1, a2.simple_root(2)) == 1);
  CHECK(a2.root_string_reach(1, a2.simple_root(1)) == 0);
  CHECK(a2.root_string_reach(1, a2.highest_root()) == 0);

  const RootSystem g2("G2");
  CHECK(g2.root_string_reach(1, g2.simple_root(2)) == 1);
  CHECK(g2.root_string_reach(2, g2.simple_root(1)) == 3);
  CHECK(g2.root_string_reach(1, g2.highest_root()) == 0);
  const int theta_minus = g2.positive_root_index({3, 1});
  REQUIRE(theta_minus >= 0);
  CHECK(g2.root_string_reach(2, g2.positive_roots()[theta_minus]) == 1);

  CHECK_THROWS_AS(a2.root_string_reach(0, a2.simple_root(1)), std::invalid_argument);
  CHECK_THROWS_AS(a2.root_string_reach(3, a2.simple_root(1)), std::invalid_argument);
}

TEST_CASE("dominance order on coweights") {
  const RootSystem a2("A2");
  // omega_1 covers nothing dominant except itself: A^{-1}(1,0) is not integral.
  CHECK_FALSE(a2.dominance_leq(Coweight::zero(2), a2.fundamental_coweight(1)));
  CHECK(a2.dominance_leq(Coweight::zero(2), Coweight({1, 1})));
  CHECK(a2.dominance_leq(Coweight({1, 1}), Coweight({1, 1})));
  CHECK_FALSE(a2.dominance_leq(Coweight({1, 1}), Coweight::zero(2)));

  // Partial-order axioms on a small dominant sample.
  const RootSystem b3("B3");
  const auto box = oracles::dominant_box(3, 2);
  for (const auto& x : box) {
    CHECK(b3.dominance_leq(x, x));
    for (const auto& y : box) {
      if (b3.dominance_leq(x, y) && b3.dominance_leq(y, x)) CHECK(x == y);
      for (const auto& z : box) {
        if (b3.dominance_leq(x, y) && b3.dominance_leq(y, z)) CHECK(b3.dominance_leq(x, z));
      }
    }
  }
}

TEST_CASE("coroot basis conversions round-trip") {
  for (const char* name : {"A3", "B3", "C4", "D4", "F4", "G2"}) {
    const RootSystem rs{std::string(name)};
    std::vector<Int> x(static_cast<std::size_t>(rs.rank()), 0);
    x[0] = 2;
    x.back() = 1;
    const Coweight mu = rs.from_coroot_basis(x);
    const auto back = rs.to_coroot_basis(mu);
    for (int k = 0; k < rs.rank(); ++k) CHECK(back[static_cast<std::size_t>(k)] == BigRat(x[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("minuscule fundamental indices match the classification") {
  auto minuscule = [](const char* name) { return RootSystem(name).minuscule_fundamentals(); };
  CHECK(minuscule("A1") == std::vector<int>{1});
  CHECK(minuscule("A4") == std::vector<int>{1, 2, 3, 4});
  CHECK(minuscule("B4") == std::vector<int>{1});
  CHECK(minuscule("C4") == std::vector<int>{4});
  CHECK(minuscule("D4") == std::vector<int>{1, 3, 4});
  CHECK(minuscule("D6") == std::vector<int>{1, 5, 6});
  CHECK(minuscule("E6") == std::vector<int>{1, 6});
  CHECK(minuscule("E7") == std::vector<int>{7});
  CHECK(minuscule("E8").empty());
  CHECK(minuscule("F4").empty());
  CHECK(minuscule("G2").empty());
  CHECK(minuscule("A2+A2") == std::vector<int>{1, 2, 3, 4});
  CHECK(minuscule("G2+C3") == std::vector<int>{5});
}

TEST_CASE("is_minuscule: zero, fundamentals, and input validation") {
  const RootSystem d4("D4");
  CHECK(d4.is_minuscule(Coweight::zero(4)));
  CHECK(d4.is_minuscule(d4.fundamental_coweight(1)));
  CHECK_FALSE(d4.is_minuscule(d4.fundamental_coweight(2)));
  CHECK_FALSE(d4.is_minuscule(Coweight({1, 0, 0, 1})));  // sums are not minuscule
  CHECK_THROWS_AS(d4.is_minuscule(Coweight({-1, 0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(d4.is_minuscule(Coweight({1, 0})), std::invalid_argument);
}

TEST_CASE("product types concatenate blocks") {
  const RootSystem rs("A2+A2");
  CHECK(rs.rank() == 4);
  CHECK(rs.root_count() == 12);
  REQUIRE(rs.factors().size() == 2);
  CHECK(rs.factors()[0].offset == 0);
  CHECK(rs.factors()[1].offset == 2);
  CHECK_THROWS_AS(rs.highest_root(), std::domain_error);
  CHECK(rs.highest_root_of_factor(0).simple_coords == std::vector<int>{1, 1, 0, 0});
  CHECK(rs.highest_root_of_factor(1).simple_coords == std::vector<int>{0, 0, 1, 1});
  CHECK_THROWS_AS(rs.highest_root_of_factor(2), std::invalid_argument);

  // Cartan matrix is block diagonal.
  const auto& A = rs.cartan();
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) {
      CHECK(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0);
      CHECK(A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == 0);
    }

  // Per-factor minuscule test on concatenated coordinates.
  CHECK(rs.is_minuscule(Coweight({1, 0, 0, 1})));
  CHECK_FALSE(rs.is_minuscule(Coweight({1, 1, 0, 0})));
}

TEST_CASE("construction rejects invalid types") {
  CHECK_THROWS_AS(RootSystem("D3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(""), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem("A0"), std::invalid_argument);
}
