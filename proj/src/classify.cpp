#include "verystable/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace verystable {

namespace {

Int parse_int(const std::string& tok, const std::string& whole) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + tok + "' in divisor '" + whole + "'");
  }
  if (used != tok.size())
    throw std::invalid_argument("bad integer '" + tok + "' in divisor '" + whole + "'");
  return v;
}

void require_nonnegative(const RootSystem& rs, const MultiplicityDivisor& divisor) {
  for (const auto& [label, mu] : divisor.points) {
    rs.require_rank(mu);
    for (Int v : mu.coords)
      if (v < 0)
        throw std::invalid_argument("negative multiplicity at point '" + label + "'");
  }
}

}  // namespace

void MultiplicityDivisor::add(const RootSystem& rs, const std::string& label, Coweight mu) {
  if (label.empty()) throw std::invalid_argument("point label must be nonempty");
  rs.require_rank(mu);
  auto pos = std::lower_bound(points.begin(), points.end(), label,
                              [](const auto& p, const std::string& l) { return p.first < l; });
  if (pos != points.end() && pos->first == label)
    throw std::invalid_argument("duplicate point label '" + label + "'");
  points.emplace(pos, label, std::move(mu));
}

Coweight MultiplicityDivisor::total(const RootSystem& rs) const {
  Coweight sum = Coweight::zero(rs.rank());
  for (const auto& [label, mu] : points) sum = sum + mu;
  return sum;
}

MultiplicityDivisor MultiplicityDivisor::parse(const RootSystem& rs, const std::string& text) {
  MultiplicityDivisor d;
  if (text.empty()) return d;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string entry = text.substr(start, end - start);
    const std::size_t colon = entry.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("missing ':' in divisor entry '" + entry + "'");
    const std::string label = entry.substr(0, colon);
    std::vector<Int> coords;
    std::size_t p = colon + 1;
    while (p <= entry.size()) {
      const std::size_t q = std::min(entry.find(',', p), entry.size());
      coords.push_back(parse_int(entry.substr(p, q - p), text));
      p = q + 1;
    }
    if (static_cast<int>(coords.size()) != rs.rank())
      throw std::invalid_argument("divisor entry '" + entry + "' has " +
                                  std::to_string(coords.size()) + " coordinates, expected " +
                                  std::to_string(rs.rank()));
    d.add(rs, label, Coweight(std::move(coords)));
    start = end + 1;
  }
  return d;
}

bool witness_admissible(const RootSystem& rs, const Coweight& a, const Coweight& b,
                        const Root& alpha) {
  rs.require_rank(a);
  rs.require_rank(b);
  Int p = 0;
  for (int k = 0; k < rs.rank(); ++k)
    p += static_cast<Int>(alpha.simple_coords[k]) * b.coords[k];
  if (p < 1)
    throw std::invalid_argument("witness_admissible requires pairing(alpha, b) >= 1");
  for (int i = 1; i <= rs.rank(); ++i) {
    const Int reach = rs.root_string_reach(i, alpha);
    if (a.coords[i - 1] - b.coords[i - 1] - reach < 0) return false;
  }
  return true;
}

std::pair<Root, Coweight> wobbly_witness(const RootSystem& rs, const Coweight& mu) {
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("wobbly_witness requires a dominant coweight");
  if (rs.is_minuscule(mu))
    throw std::domain_error("minuscule coweights admit no wobbly witness");
  for (const Root& alpha : rs.positive_roots()) {
    const Coweight b = rs.coroot(alpha);
    if (!rs.is_dominant(mu - b)) continue;
    if (witness_admissible(rs, mu, b, alpha)) return {alpha, b};
  }
  throw std::logic_error("no wobbly witness found for a non-minuscule coweight");
}

Verdict classify(const RootSystem& rs, const MultiplicityDivisor& divisor) {
  require_nonnegative(rs, divisor);
  Verdict v;
  for (const auto& [label, mu] : divisor.points) {
    if (rs.is_minuscule(mu)) continue;
    auto [root, coroot] = wobbly_witness(rs, mu);
    v.witnesses.push_back({label, root, coroot});
  }
  v.very_stable = v.witnesses.empty();
  return v;
}

Coweight hecke_shift(const RootSystem& rs, const Coweight& a, const Coweight& b) {
  rs.require_rank(a);
  rs.require_rank(b);
  for (int i = 0; i < rs.rank(); ++i) {
    if (b.coords[i] < 0 || b.coords[i] > a.coords[i])
      throw std::invalid_argument("hecke_shift requires 0 <= b_i <= a_i");
  }
  return a - b;
}

std::vector<Int> classical_weights(const RootSystem& rs) {
  if (!rs.type().is_simple())
    throw std::domain_error("classical weights are defined for simple types only");
  const SimpleType t = rs.type().factors[0];
  const int n = t.rank;
  std::vector<Int> w(static_cast<std::size_t>(n), 2);
  switch (t.family) {
    case 'A':
      std::fill(w.begin(), w.end(), Int(1));
      break;
    case 'B':
      w[0] = 1;
      break;
    case 'C':
      w[static_cast<std::size_t>(n) - 1] = 1;
      break;
    case 'D':
      w[0] = 1;
      w[static_cast<std::size_t>(n) - 2] = 1;
      w[static_cast<std::size_t>(n) - 1] = 1;
      break;
    default:
      throw std::domain_error("classical weights are defined for families A, B, C, D");
  }
  return w;
}

Verdict classify_classical(const RootSystem& rs, const MultiplicityDivisor& divisor) {
  const std::vector<Int> w = classical_weights(rs);
  require_nonnegative(rs, divisor);
  Verdict v;
  for (const auto& [label, mu] : divisor.points) {
    Int weighted = 0;
    for (int i = 0; i < rs.rank(); ++i) weighted += w[static_cast<std::size_t>(i)] * mu.coords[i];
    if (weighted <= 1) continue;
    auto [root, coroot] = wobbly_witness(rs, mu);
    v.witnesses.push_back({label, root, coroot});
  }
  v.very_stable = v.witnesses.empty();
  return v;
}

FeasibleDecomposition component_feasible(const RootSystem& rs, const Coweight& nu) {
  if (!rs.is_dominant(nu))
    throw std::invalid_argument("component_feasible requires a dominant coweight");
  const auto& minuscule = rs.minuscule_fundamentals();
  FeasibleDecomposition out;
  // The minuscule fundamental coweights are unit vectors in these
  // coordinates, so the only candidate decomposition is coordinatewise.
  for (int i = 1; i <= rs.rank(); ++i) {
    const Int c = nu.coords[i - 1];
    if (c == 0) continue;
    if (!std::binary_search(minuscule.begin(), minuscule.end(), i)) {
      out.feasible = false;
      out.terms.clear();
      return out;
    }
    out.terms.emplace_back(i, c);
  }
  out.feasible = true;
  return out;
}

}  // namespace verystable
