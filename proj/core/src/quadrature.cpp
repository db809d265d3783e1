#include "mpr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace mpr {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod(const ComplexIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const std::complex<double> fc = f(c);
  std::complex<double> k = fc * kWgk[7];
  std::complex<double> g = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const std::complex<double> s = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                           int max_panels) {
  std::priority_queue<Panel> heap;
  Panel first = kronrod(f, a, b);
  heap.push(first);
  std::complex<double> total = first.value;
  double err = first.error;
  long evals = 15;
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) && static_cast<int>(heap.size()) < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    Panel l = kronrod(f, worst.a, mid), r = kronrod(f, mid, worst.b);
    evals += 30;
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Recompute the sums from the panels to shed accumulated rounding.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {total, err, evals};
}

QuadratureResult integrate_half_line(const ComplexIntegrand& f, double h, double rel_tol, double tail_tol) {
  if (h <= 0.0) throw std::invalid_argument("integrate_half_line: panel width must be positive");
  QuadratureResult out{0.0, 0.0, 0};
  double a = 0.0, b = h;
  int quiet = 0;
  for (int panel = 0; panel < 200; ++panel) {
    const QuadratureResult r = integrate(f, a, b, 1e-300, rel_tol);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
    if (std::abs(r.value) <= tail_tol * std::abs(out.value) && std::abs(out.value) > 0.0) {
      if (++quiet >= 3) return out;
    } else {
      quiet = 0;
    }
    a = b;
    b = (panel == 0) ? 2.0 * h : 2.0 * b;
  }
  throw std::runtime_error("integrate_half_line: integrand does not decay");
}

}  // namespace mpr
