#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace fbc {

/// Exact non-negative rational number, always stored in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  [[nodiscard]] bool is_integral() const { return den == 1; }
  [[nodiscard]] std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

}  // namespace fbc
