#include "nefkit/rational.hpp"

#include <sstream>

namespace nefkit {

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
    }
    return Integer(std::string(part));
  };
  const Integer num = parse_int(num_part);
  if (slash == std::string_view::npos) return Rational(num);
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;  // boost prints p/q in lowest terms, integers without '/'
  return out.str();
}

Vec Vec::unit(std::size_t size, std::size_t axis) {
  Vec v(size);
  v[axis] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Vec Vec::operator-() const {
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = -entries_[i];
  return out;
}

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}
}  // namespace

Vec Vec::operator+(const Vec& other) const {
  require_same_size(*this, other);
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other[i];
  return out;
}

Vec Vec::operator-(const Vec& other) const {
  require_same_size(*this, other);
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] - other[i];
  return out;
}

Vec Vec::operator*(const Rational& scalar) const {
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] * scalar;
  return out;
}

bool Vec::lex_less(const Vec& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] != other[i]) return entries_[i] < other[i];
  }
  return false;
}

Rational dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Vec append(const Vec& v, const Rational& tail) {
  Vec out(v.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  out[v.size()] = tail;
  return out;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace nefkit
