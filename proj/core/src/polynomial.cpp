#include "mpr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpr {

Polynomial::Polynomial(int variables, std::vector<Monomial> terms) : variables_(variables), terms_(std::move(terms)) {
  if (variables < 0 || variables > kMaxVariables) throw std::invalid_argument("Polynomial: too many variables");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  std::vector<Monomial> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().e == t.e)
      merged.back().c += t.c;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Monomial& m) { return m.c == 0; });
  terms_ = std::move(merged);
}

bool Polynomial::has_constant_term() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Monomial& m) {
    return std::all_of(m.e.begin(), m.e.end(), [](std::uint8_t x) { return x == 0; });
  });
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& m : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(var)]));
  return d;
}

double Polynomial::evaluate(const double* x) const {
  double s = 0.0;
  for (const auto& m : terms_) {
    double v = static_cast<double>(m.c);
    for (int k = 0; k < variables_; ++k)
      if (m.e[static_cast<std::size_t>(k)]) v *= std::pow(x[k], m.e[static_cast<std::size_t>(k)]);
    s += v;
  }
  return s;
}

}  // namespace mpr
