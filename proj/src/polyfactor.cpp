#include "verystable/polyfactor.hpp"

#include <sstream>
#include <stdexcept>

namespace verystable {

namespace {
const BigInt kZero = 0;
// Largest expanded degree expand() will attempt on either side.
constexpr Int kMaxExpandedDegree = 2'000'000;
}  // namespace

IntPoly IntPoly::monomial(BigInt c, int k) {
  if (k < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (c == 0) return IntPoly();
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, BigInt(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(v));
}

void IntPoly::mul_one_minus_tk(Int k) {
  if (k < 1) throw std::invalid_argument("factor degree must be at least 1");
  if (c_.empty()) return;
  const std::size_t n = c_.size();
  c_.resize(n + static_cast<std::size_t>(k), BigInt(0));
  for (std::size_t i = n; i-- > 0;) c_[i + static_cast<std::size_t>(k)] -= c_[i];
  trim();
}

IntPoly::DivMod IntPoly::divmod(const IntPoly& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("divmod requires a nonzero divisor");
  const BigInt& lead = divisor.leading();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("divmod requires a divisor with leading coefficient +1 or -1");
  DivMod out;
  out.remainder = *this;
  const int dd = divisor.degree();
  if (degree() < dd) return out;
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd) + 1, BigInt(0));
  std::vector<BigInt>& r = out.remainder.c_;
  for (int i = degree(); i >= dd; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (r[ui] == 0) continue;
    const BigInt f = (lead == 1) ? r[ui] : BigInt(-r[ui]);
    q[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
  }
  out.remainder.trim();
  out.quotient = IntPoly(std::move(q));
  return out;
}

bool IntPoly::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  }
  return true;
}

bool IntPoly::monic_and_constant_one() const {
  return !c_.empty() && c_.front() == 1 && c_.back() == 1;
}

BigInt IntPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

bool IntPoly::nonnegative() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigInt a = c_[k];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FactoredProduct FactoredProduct::factor(Int k, Int e) {
  FactoredProduct p;
  p.mul_factor(k, e);
  return p;
}

void FactoredProduct::mul_factor(Int k, Int e) {
  if (k < 1) throw std::invalid_argument("factor degree must be at least 1");
  if (e == 0) return;
  auto [it, inserted] = exps_.emplace(k, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) exps_.erase(it);
  }
}

FactoredProduct& FactoredProduct::operator*=(const FactoredProduct& o) {
  for (const auto& [k, e] : o.exps_) mul_factor(k, e);
  return *this;
}

FactoredProduct FactoredProduct::operator*(const FactoredProduct& o) const {
  FactoredProduct p = *this;
  p *= o;
  return p;
}

FactoredProduct FactoredProduct::inverse() const {
  FactoredProduct p;
  for (const auto& [k, e] : exps_) p.exps_.emplace(k, -e);
  return p;
}

FactoredProduct::Expansion FactoredProduct::expand() const {
  Int num_deg = 0, den_deg = 0;
  for (const auto& [k, e] : exps_) {
    if (e > 0)
      num_deg += k * e;
    else
      den_deg += k * (-e);
  }
  if (num_deg > kMaxExpandedDegree || den_deg > kMaxExpandedDegree)
    throw std::length_error("factored product too large to expand");
  Expansion out;
  out.numerator = IntPoly::one();
  out.denominator = IntPoly::one();
  for (const auto& [k, e] : exps_) {
    IntPoly& side = (e > 0) ? out.numerator : out.denominator;
    const Int reps = (e > 0) ? e : -e;
    for (Int r = 0; r < reps; ++r) side.mul_one_minus_tk(k);
  }
  return out;
}

FactoredProduct::ToPoly FactoredProduct::to_polynomial() const {
  const Expansion ex = expand();
  ToPoly out;
  if (ex.denominator == IntPoly::one()) {
    out.is_polynomial = true;
    out.poly = ex.numerator;
    return out;
  }
  const auto dm = ex.numerator.divmod(ex.denominator);
  if (dm.remainder.is_zero()) {
    out.is_polynomial = true;
    out.poly = dm.quotient;
  } else {
    out.is_polynomial = false;
    out.remainder_degree = dm.remainder.degree();
  }
  return out;
}

bool FactoredProduct::rational_equals(const FactoredProduct& o) const {
  if (exps_ == o.exps_) return true;
  // Shared factors cancel inside the quotient, so the expansion below
  // only touches what actually differs.
  const Expansion ex = (*this * o.inverse()).expand();
  return ex.numerator == ex.denominator;
}

std::string FactoredProduct::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](Int k, Int e) {
    if (!first) out << " ";
    first = false;
    out << "(1-t";
    if (k > 1) out << "^" << k;
    out << ")";
    if (e != 1) out << "^" << e;
  };
  for (const auto& [k, e] : exps_)
    if (e > 0) emit(k, e);
  for (const auto& [k, e] : exps_)
    if (e < 0) emit(k, e);
  return out.str();
}

}  // namespace verystable
