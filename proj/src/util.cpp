#include "logsteady/util.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace logsteady {

std::vector<double> log_samples(double lo, double hi, int count) {
  if (!(hi > lo) || !(lo > 0.0) || count < 2)
    throw std::invalid_argument("log_samples needs 0 < lo < hi, count >= 2");
  std::vector<double> out(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
  out.back() = hi;
  return out;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) return {lo};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t test_seed() {
  if (const char* env = std::getenv("LOGISTIC_STEADY_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0x10657ad1ull;
}

std::mt19937_64 seeded_rng() { return std::mt19937_64(test_seed()); }

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double gauss5(const std::function<double(double)>& f, double a, double b,
              int pieces) {
  static const double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double ws[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  if (pieces < 1) pieces = 1;
  double total = 0.0;
  const double h = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const double lo = a + p * h, hi = lo + h;
    const double c = 0.5 * (lo + hi), s = 0.5 * (hi - lo);
    for (int i = 0; i < 5; ++i) total += ws[i] * f(c + s * xs[i]) * s;
  }
  return total;
}

}  // namespace logsteady
