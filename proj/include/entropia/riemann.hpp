// riemann.hpp
// Logarithmic integral and the Riemann R main term of the explicit formula.
#pragma once

namespace entropia {

/// Principal-value li(x) for x > 1 (Ramanujan's series, relative error ~1e-15).
double log_integral(double x);

/// R(x) = sum_{n<=n_max} mu(n)/n li(x^{1/n}), x >= 2.
/// Terms with x^{1/n} < 2 are dropped, so n_max beyond floor(log2 x) has no
/// effect. n_max = 0 means floor(log2 x).
double riemann_R(double x, unsigned n_max = 0);

}  // namespace entropia
