#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mpr {

inline constexpr int kMaxVariables = 16;

using Exponents = std::array<std::uint8_t, kMaxVariables>;

struct Monomial {
  Exponents e{};
  long long c = 0;
};

/// Sparse polynomial with nonnegative integer exponents. Terms are kept
/// sorted by exponent vector with like terms merged.
class Polynomial {
 public:
  explicit Polynomial(int variables = 0) : variables_(variables) {}
  Polynomial(int variables, std::vector<Monomial> terms);

  int variables() const { return variables_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const;
  int degree_in(int var) const;
  double evaluate(const double* x) const;

 private:
  void normalize();
  int variables_;
  std::vector<Monomial> terms_;
};

}  // namespace mpr
