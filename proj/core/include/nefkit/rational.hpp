#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nefkit {

/// Exact arbitrary-precision rational; the scalar of every computation.
/// cpp_rational keeps values canonical (positive denominator, coprime).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Thrown when vector/matrix shapes disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else
/// (including q == 0).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" when q != 1, plain integer text otherwise.
std::string to_string(const Rational& value);

/// Fixed-length vector of rationals. Length is set at construction and all
/// componentwise operations insist on matching lengths.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t size) : entries_(size) {}
  Vec(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit Vec(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vec zero(std::size_t size) { return Vec(size); }
  static Vec unit(std::size_t size, std::size_t axis);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  Vec operator-() const;
  Vec operator+(const Vec& other) const;
  Vec operator-(const Vec& other) const;
  Vec operator*(const Rational& scalar) const;

  bool operator==(const Vec& other) const { return entries_ == other.entries_; }

  /// Lexicographic order, used for the canonical ordering of cone data.
  bool lex_less(const Vec& other) const;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const Vec& a, const Vec& b);

/// Concatenates (v, tail) into a vector one entry longer; used for the
/// rank-(rho+1) class lattice coordinates.
Vec append(const Vec& v, const Rational& tail);

std::string to_string(const Vec& v);

}  // namespace nefkit
