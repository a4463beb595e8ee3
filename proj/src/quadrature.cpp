#include "taxfrontier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace taxfrontier {

namespace {

// Positive Kronrod-15 abscissae (center last) with their weights, and the
// embedded Gauss-7 weights for abscissae 1, 3, 5 and the center.
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
  double lo, hi;
  double value;
  double err;
};

struct PanelErrLess {
  bool operator()(const Panel& a, const Panel& b) const { return a.err < b.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    k15 += kWgk[i] * fsum;
    if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
  }
  k15 *= half;
  g7 *= half;

  if (!std::isfinite(k15)) {
    throw numeric_error("integrate: non-finite integrand value inside [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return Panel{lo, hi, k15, std::fabs(k15 - g7)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opt) {
  if (!(lo < hi)) return 0.0;
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw numeric_error("integrate: non-finite bounds");
  }

  std::vector<Panel> heap;
  heap.push_back(eval_panel(f, lo, hi));
  double total = heap.front().value;
  double err = heap.front().err;
  const PanelErrLess cmp;

  while (err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
    if (heap.size() >= opt.max_panels) {
      throw numeric_error("integrate: failed to converge within " +
                          std::to_string(opt.max_panels) + " panels");
    }
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw numeric_error("integrate: interval collapsed before reaching the "
                          "requested tolerance");
    }
    const Panel left = eval_panel(f, worst.lo, mid);
    const Panel right = eval_panel(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), cmp);
  }

  // Re-sum once at the end; the incremental total accumulates round-off.
  double sum = 0.0;
  for (const Panel& p : heap) sum += p.value;
  return sum;
}

}  // namespace taxfrontier
