#pragma once

#include <concepts>
#include <string>

namespace moduli {

// A commutative ring with exact equality whose integer constants need no
// context (T(0), T(1) embed everywhere).
template <class T>
concept ExactRing = std::regular<T> && std::constructible_from<T, long> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <class T>
concept ExactField = ExactRing<T> && requires(const T& a, const T& b) {
  { a / b } -> std::convertible_to<T>;
};

template <ExactRing T>
bool is_zero(const T& x) {
  return x == T(0);
}

template <ExactRing T>
T power(const T& base, unsigned long exponent) {
  T result(1);
  T b = base;
  while (exponent != 0) {
    if ((exponent & 1UL) != 0) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

}  // namespace moduli
