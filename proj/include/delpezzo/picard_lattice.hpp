#pragma once

// Picard lattice of the quartic Del Pezzo surface: Z^6 with basis
// l (pullback of a plane line) and e_1..e_5 (exceptional curves).
// A class is stored as (a; b_1..b_5) meaning a*l - sum b_i*e_i, so the
// exceptional curve e_i itself has coordinates (0; ..., -1, ...).

#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "checked.hpp"
#include "errors.hpp"

namespace delpezzo {

using Coeff = std::int64_t;

inline constexpr int kPoints = 5;

struct DivisorClass {
  Coeff a = 0;
  std::array<Coeff, kPoints> b{};

  /// Coefficient b_i for a 1-based point index.
  constexpr Coeff at(int i) const { return b[static_cast<std::size_t>(i - 1)]; }

  friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  constexpr DivisorClass operator+(const DivisorClass& o) const {
    DivisorClass r{checked::add(a, o.a), {}};
    for (std::size_t i = 0; i < b.size(); ++i) r.b[i] = checked::add(b[i], o.b[i]);
    return r;
  }

  constexpr DivisorClass operator-() const {
    DivisorClass r{checked::neg(a), {}};
    for (std::size_t i = 0; i < b.size(); ++i) r.b[i] = checked::neg(b[i]);
    return r;
  }

  constexpr DivisorClass operator-(const DivisorClass& o) const { return *this + (-o); }
};

constexpr DivisorClass add(const DivisorClass& x, const DivisorClass& y) { return x + y; }

constexpr DivisorClass scale(Coeff n, const DivisorClass& d) {
  DivisorClass r{checked::mul(n, d.a), {}};
  for (std::size_t i = 0; i < d.b.size(); ++i) r.b[i] = checked::mul(n, d.b[i]);
  return r;
}

constexpr DivisorClass operator*(Coeff n, const DivisorClass& d) { return scale(n, d); }

// ---------------------------------------------------------------------------
// Named classes

namespace classes {

inline constexpr DivisorClass zero{0, {0, 0, 0, 0, 0}};
/// Pullback of a general plane line.
inline constexpr DivisorClass plane_line{1, {0, 0, 0, 0, 0}};
/// Hyperplane section 3l - sum e_i.
inline constexpr DivisorClass hyperplane{3, {1, 1, 1, 1, 1}};
inline constexpr DivisorClass canonical{-3, {-1, -1, -1, -1, -1}};
/// Strict transform of the conic through all five points.
inline constexpr DivisorClass conic_g{2, {1, 1, 1, 1, 1}};

/// Exceptional curve over point i (1-based).
constexpr DivisorClass exceptional(int i) {
  DivisorClass d{};
  d.b[static_cast<std::size_t>(i - 1)] = -1;
  return d;
}

/// Strict transform of the line through points i and j.
constexpr DivisorClass secant(int i, int j) {
  DivisorClass d{1, {}};
  d.b[static_cast<std::size_t>(i - 1)] = 1;
  d.b[static_cast<std::size_t>(j - 1)] = 1;
  return d;
}

}  // namespace classes

// ---------------------------------------------------------------------------
// Intersection numbers

/// The pairing a1*a2 - sum b1_i*b2_i (signature (1,5)).
constexpr Coeff intersect(const DivisorClass& x, const DivisorClass& y) {
  Coeff r = checked::mul(x.a, y.a);
  for (std::size_t i = 0; i < x.b.size(); ++i) r = checked::sub(r, checked::mul(x.b[i], y.b[i]));
  return r;
}

/// Degree in P^4, i.e. D.h = 3a - sum b_i.
constexpr Coeff degree(const DivisorClass& d) {
  Coeff r = checked::mul(Coeff{3}, d.a);
  for (Coeff bi : d.b) r = checked::sub(r, bi);
  return r;
}

constexpr Coeff self_intersection(const DivisorClass& d) { return intersect(d, d); }

/// p_a = (a-1)(a-2)/2 - sum b_i(b_i-1)/2. Cross-checked against the
/// adjunction form (D^2 - deg D)/2 + 1; disagreement is a logic error.
constexpr Coeff arithmetic_genus(const DivisorClass& d) {
  using namespace checked;
  Coeff plane = half_exact(mul(sub(d.a, Coeff{1}), sub(d.a, Coeff{2})));
  Coeff points = 0;
  for (Coeff bi : d.b) points = add(points, half_exact(mul(bi, sub(bi, Coeff{1}))));
  const Coeff pa = sub(plane, points);
  const Coeff adjunction = add(half_exact(sub(self_intersection(d), degree(d))), Coeff{1});
  if (pa != adjunction) throw std::logic_error("arithmetic genus formulas disagree");
  return pa;
}

/// chi(O(D)) = D.(D - K)/2 + 1.
constexpr Coeff euler_characteristic(const DivisorClass& d) {
  return checked::add(checked::half_exact(intersect(d, d - classes::canonical)), Coeff{1});
}

// ---------------------------------------------------------------------------
// Canonical text form `a;b1,b2,b3,b4,b5`

inline std::string to_text(const DivisorClass& d) {
  std::string s = std::to_string(d.a);
  s += ';';
  for (std::size_t i = 0; i < d.b.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.b[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << to_text(d); }

namespace detail {

inline Coeff parse_coeff(std::string_view text, std::size_t& pos) {
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  // from_chars rejects a leading '+', which the canonical form never uses.
  Coeff value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", pos);
  if (ec != std::errc{} || ptr == first) throw ParseError("expected a signed integer", pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace detail

/// Parses the canonical text form. No whitespace is accepted.
inline DivisorClass parse_class(std::string_view text) {
  DivisorClass d;
  std::size_t pos = 0;
  d.a = detail::parse_coeff(text, pos);
  if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';'", pos);
  ++pos;
  for (std::size_t i = 0; i < d.b.size(); ++i) {
    if (i) {
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ',' (a class needs five b-values)", pos);
      ++pos;
    }
    d.b[i] = detail::parse_coeff(text, pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return d;
}

}  // namespace delpezzo
