#include "verystable/equivmult.hpp"

#include <stdexcept>
#include <string>

namespace verystable {

namespace {

void require_genus(Int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
}

}  // namespace

DegreeProfile degree_profile(const RootSystem& rs, const Coweight& total_mu, Int genus) {
  require_genus(genus);
  if (!rs.is_dominant(total_mu))
    throw std::invalid_argument("degree profile requires a dominant coweight");
  const GradingProfile g = grading_profile(rs);
  DegreeProfile out;
  out.genus = genus;
  out.total = total_mu;
  out.d.assign(static_cast<std::size_t>(g.coxeter_number) + 1, 0);
  std::vector<Int> pairing_sum(out.d.size(), 0);  // S_j by height
  for (const auto& alpha : rs.positive_roots())
    pairing_sum[static_cast<std::size_t>(alpha.height)] += rs.pairing(alpha, total_mu);
  for (int j = 1; j <= g.coxeter_number; ++j) {
    out.d[static_cast<std::size_t>(j)] =
        static_cast<Int>(j) * g.count(j) * (2 * genus - 2) - pairing_sum[static_cast<std::size_t>(j)];
  }
  return out;
}

TangentWeights tangent_weights(const RootSystem& rs, const Coweight& total_mu, Int genus) {
  const DegreeProfile dp = degree_profile(rs, total_mu, genus);
  const GradingProfile g = grading_profile(rs);
  TangentWeights out;
  out.genus = genus;
  out.total = total_mu;
  out.coxeter = g.coxeter_number;
  out.dims.assign(static_cast<std::size_t>(g.coxeter_number) + 1, 0);
  for (int j = 1; j <= g.coxeter_number; ++j) {
    const Int r_prev = g.count(j - 1);
    const Int r_cur = g.count(j);
    out.dims[static_cast<std::size_t>(j)] = dp.d[static_cast<std::size_t>(j - 1)] -
                                            dp.d[static_cast<std::size_t>(j)] +
                                            (r_prev + r_cur) * (genus - 1);
  }
  return out;
}

FactoredProduct virtual_multiplicity(const RootSystem& rs, const Coweight& total_mu,
                                     Int genus) {
  require_genus(genus);
  if (!rs.is_dominant(total_mu))
    throw std::invalid_argument("virtual multiplicity requires a dominant total coweight");
  const TangentWeights tw = tangent_weights(rs, total_mu, genus);
  for (int j = 1; j <= tw.coxeter; ++j) {
    if (tw.dims[static_cast<std::size_t>(j)] < 0)
      throw std::domain_error("negative tangent dimension at weight " + std::to_string(j) +
                              ": no such fixed point at genus " + std::to_string(genus));
  }
  FactoredProduct m;
  for (int j = 1; j <= tw.coxeter; ++j)
    m.mul_factor(j, -tw.dims[static_cast<std::size_t>(j)]);
  const GradingProfile g = grading_profile(rs);
  for (int e : g.exponents)
    m.mul_factor(static_cast<Int>(e) + 1, (2 * static_cast<Int>(e) + 1) * (genus - 1));
  return m;
}

FactoredProduct dynkin_polynomial(const RootSystem& rs, const Coweight& mu) {
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("the Dynkin polynomial requires a dominant coweight");
  FactoredProduct p;
  for (const auto& alpha : rs.positive_roots()) {
    const Int shifted = static_cast<Int>(alpha.height) + rs.pairing(alpha, mu);
    p.mul_factor(shifted, 1);
    p.mul_factor(alpha.height, -1);
  }
  return p;
}

BigInt weyl_dimension(const RootSystem& rs, const Coweight& mu) {
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("the Weyl dimension requires a dominant coweight");
  BigRat dim = 1;
  for (const auto& alpha : rs.positive_roots()) {
    const Int shifted = static_cast<Int>(alpha.height) + rs.pairing(alpha, mu);
    dim *= BigRat(shifted, alpha.height);
  }
  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("Weyl dimension product is not an integer");
  return boost::multiprecision::numerator(dim);
}

FactoredProduct reference_closed_form(const SimpleType& type, int i) {
  validate_simple_type(type);
  const int n = type.rank;
  if (i < 1 || i > n) throw std::invalid_argument("fundamental index out of range");
  FactoredProduct p;
  auto no_entry = [&]() {
    throw std::domain_error("no reference closed form for " + type.str() + " at index " +
                            std::to_string(i));
  };
  switch (type.family) {
    case 'A':
      // Gaussian binomial coefficient [n+1 choose i]_t.
      for (int j = 1; j <= i; ++j) {
        p.mul_factor(n + 2 - j, 1);
        p.mul_factor(j, -1);
      }
      break;
    case 'B':
      if (i != 1) no_entry();
      p.mul_factor(2 * n, 1);
      p.mul_factor(1, -1);
      break;
    case 'C':
      if (i != n) no_entry();
      for (int j = 1; j <= n; ++j) {
        p.mul_factor(2 * j, 1);
        p.mul_factor(j, -1);
      }
      break;
    case 'D':
      if (i == 1) {
        p.mul_factor(2 * (n - 1), 1);
        p.mul_factor(n - 1, -1);
        p.mul_factor(n, 1);
        p.mul_factor(1, -1);
      } else if (i == n - 1 || i == n) {
        for (int j = 1; j <= n - 1; ++j) {
          p.mul_factor(2 * j, 1);
          p.mul_factor(j, -1);
        }
      } else {
        no_entry();
      }
      break;
    case 'E':
      if (n == 6 && (i == 1 || i == 6)) {
        p.mul_factor(12, 1);
        p.mul_factor(4, -1);
        p.mul_factor(9, 1);
        p.mul_factor(1, -1);
      } else if (n == 7 && i == 7) {
        p.mul_factor(10, 1);
        p.mul_factor(5, -1);
        p.mul_factor(18, 1);
        p.mul_factor(9, -1);
        p.mul_factor(14, 1);
        p.mul_factor(1, -1);
      } else {
        no_entry();
      }
      break;
    default:
      no_entry();
  }
  return p;
}

bool reference_table_covers(const SimpleType& type) {
  validate_simple_type(type);
  switch (type.family) {
    case 'A':
    case 'B':
    case 'C':
    case 'D':
      return true;
    case 'E':
      return type.rank == 6 || type.rank == 7;
    default:
      return false;
  }
}

std::vector<TableRow> reference_table(const RootSystem& rs, const std::vector<Int>& genus_list) {
  if (!rs.type().is_simple())
    throw std::domain_error("the reference table covers simple types only");
  const SimpleType type = rs.type().factors[0];
  if (!reference_table_covers(type))
    throw std::domain_error("no reference table rows for " + type.str());
  if (genus_list.empty()) throw std::invalid_argument("genus list must be nonempty");
  std::vector<TableRow> rows;
  for (int i : rs.minuscule_fundamentals()) {
    TableRow row;
    row.index = i;
    row.coweight = rs.fundamental_coweight(i);
    row.genus_list = genus_list;
    row.multiplicity = virtual_multiplicity(rs, row.coweight, genus_list.front());
    row.genus_independent = true;
    for (std::size_t g = 1; g < genus_list.size(); ++g) {
      if (!(virtual_multiplicity(rs, row.coweight, genus_list[g]) == row.multiplicity))
        row.genus_independent = false;
    }
    const auto tp = row.multiplicity.to_polynomial();
    if (!tp.is_polynomial)
      throw std::logic_error("minuscule multiplicity failed to expand to a polynomial");
    row.poly = tp.poly;
    row.matches_reference = row.multiplicity.rational_equals(reference_closed_form(type, i));
    row.matches_dynkin = row.multiplicity.rational_equals(dynkin_polynomial(rs, row.coweight));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace verystable
