#pragma once

#include <concepts>
#include <stdexcept>

// Overflow-checked integer primitives. Lattice coefficients stay small in
// practice, but every product and sum goes through here so a runaway word
// or a huge user input raises instead of wrapping.

namespace delpezzo::checked {

template <std::integral T>
constexpr T add(T x, T y) {
  T r{};
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

template <std::integral T>
constexpr T sub(T x, T y) {
  T r{};
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

template <std::integral T>
constexpr T mul(T x, T y) {
  T r{};
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

template <std::integral T>
constexpr T neg(T x) {
  return sub(T{0}, x);
}

/// Exact halving; throws std::logic_error when `x` is odd.
template <std::integral T>
constexpr T half_exact(T x) {
  if (x % 2 != 0) throw std::logic_error("expected an even intermediate value");
  return x / 2;
}

}  // namespace delpezzo::checked
