#include "verystable/types.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace verystable {

namespace {
constexpr int kMaxRank = 99;
}

void validate_simple_type(const SimpleType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r == 6 || r == 7 || r == 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: ok = false; break;
  }
  if (ok && r > kMaxRank) ok = false;
  if (!ok)
    throw std::invalid_argument("invalid simple type '" + std::string(1, t.family) +
                                std::to_string(t.rank) + "'");
}

std::string LieType::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '+';
    out += factors[i].str();
  }
  return out;
}

LieType LieType::parse(const std::string& text) {
  LieType result;
  std::size_t pos = 0;
  if (text.empty()) throw std::invalid_argument("empty type string");
  while (pos < text.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (fam < 'A' || fam > 'G')
      throw std::invalid_argument("bad family letter in type '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 2)
      throw std::invalid_argument("bad rank in type '" + text + "'");
    SimpleType st{fam, std::stoi(text.substr(start, pos - start))};
    validate_simple_type(st);
    result.factors.push_back(st);
    if (pos < text.size()) {
      if (text[pos] != '+')
        throw std::invalid_argument("expected '+' between factors in '" + text + "'");
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("trailing '+' in type '" + text + "'");
    }
  }
  if (result.rank() > kMaxRank)
    throw std::invalid_argument("total rank of '" + text + "' exceeds " +
                                std::to_string(kMaxRank));
  return result;
}

Coweight Coweight::operator+(const Coweight& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("coweight rank mismatch in addition");
  Coweight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Coweight Coweight::operator-(const Coweight& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("coweight rank mismatch in subtraction");
  Coweight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

std::string Coweight::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

}  // namespace verystable
