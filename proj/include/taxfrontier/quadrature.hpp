#pragma once

#include <cstddef>
#include <functional>

#include "taxfrontier/errors.hpp"

namespace taxfrontier {

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::size_t max_panels = 200000;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi].
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |integral|). Endpoints are
/// never evaluated (all abscissae are interior). Throws numeric_error on
/// non-finite integrand values or failure to converge.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opt = {});

}  // namespace taxfrontier
