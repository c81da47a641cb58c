#include "verystable/grading.hpp"

#include <stdexcept>

namespace verystable {

GradingProfile grading_profile(const RootSystem& rs) {
  GradingProfile g;
  g.rank = rs.rank();
  for (const auto& r : rs.positive_roots()) g.counts_by_height[r.height] += 1;
  const int max_h = g.counts_by_height.empty() ? 0 : g.counts_by_height.rbegin()->first;
  g.coxeter_number = max_h + 1;
  // Conjugate partition of the height counts: the number of exponents
  // >= h equals the number of roots of height h, so exponent h occurs
  // count(h) - count(h+1) times.
  for (int h = 1; h <= max_h; ++h) {
    const int mult = g.count(h) - g.count(h + 1);
    for (int m = 0; m < mult; ++m) g.exponents.push_back(h);
  }
  return g;
}

Coweight canonical_coweight(const RootSystem& rs, Int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
  Coweight w = Coweight::zero(rs.rank());
  for (auto& c : w.coords) c = 2 * genus - 2;
  return w;
}

}  // namespace verystable
