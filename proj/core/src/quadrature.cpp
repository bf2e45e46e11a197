#include "mbhankel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace mbhankel::quad {
namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b, value, error, l1;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double l1 = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kron += kWgk[j] * (f1 + f2);
    l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kron * half;
  const double err = std::abs((kron - gauss) * half);
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(l1 * half);
  return {a, b, value, std::max(err, floor), std::abs(l1 * half)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  if (a > b) {
    out = integrate_adaptive(f, b, a, opts);
    out.value = -out.value;
    return out;
  }

  std::function<double(double)> g;
  double lo = a;
  double hi = b;
  const bool inf_lo = std::isinf(a);
  const bool inf_hi = std::isinf(b);
  if (inf_lo && inf_hi) {
    g = [&f](double t) {
      const double d = 1.0 - t * t;
      return f(t / d) * (1.0 + t * t) / (d * d);
    };
    lo = -1.0;
    hi = 1.0;
  } else if (inf_hi) {
    g = [&f, a](double t) {
      const double d = 1.0 - t;
      return f(a + t / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else if (inf_lo) {
    g = [&f, b](double t) {
      const double d = 1.0 - t;
      return f(b - t / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
  }

  std::priority_queue<Piece> heap;
  Piece first = gk15(g, lo, hi);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  double total_l1 = first.l1;
  std::size_t count = 1;

  auto done = [&] {
    return total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };
  while (!done() && count < opts.max_intervals) {
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    Piece left = gk15(g, worst.a, mid);
    Piece right = gk15(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum in a fixed order to remove drift from the incremental updates.
  std::vector<Piece> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  total = 0.0;
  total_err = 0.0;
  total_l1 = 0.0;
  for (const Piece& p : pieces) {
    total += p.value;
    total_err += p.error;
    total_l1 += p.l1;
  }

  out.value = total;
  out.error_estimate = total_err;
  out.l1_norm = total_l1;
  out.intervals = pieces.size();
  out.converged = total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  return out;
}

}  // namespace mbhankel::quad
