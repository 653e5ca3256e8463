#pragma once

#include <utility>

namespace fodlab {

/// Element a + b*eps of the ring of dual numbers over T (eps^2 = 0).
template <class T>
struct Dual {
  T value{};
  T eps{};

  Dual() = default;
  Dual(T v, T e) : value(std::move(v)), eps(std::move(e)) {}
  explicit Dual(T v) : value(std::move(v)), eps(0) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.eps + b.eps}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.eps - b.eps}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.eps + a.eps * b.value};
  }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.eps == b.eps;
  }
};

}  // namespace fodlab
