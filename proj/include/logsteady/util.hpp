#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace logsteady {

// Log-spaced sample of (lo, hi], endpoints included, hi > lo > 0.
std::vector<double> log_samples(double lo, double hi, int count);

std::vector<double> linspace(double lo, double hi, int count);

// FNV-1a 64-bit, used for run-manifest content hashes.
std::uint64_t fnv1a(const std::string& bytes);

// Seed for randomized test directions; LOGISTIC_STEADY_SEED overrides.
std::uint64_t test_seed();

std::mt19937_64 seeded_rng();

// Adaptive Simpson on [a, b] to the given absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

// Composite 5-point Gauss-Legendre on [a, b] split into `pieces` panels.
double gauss5(const std::function<double(double)>& f, double a, double b,
              int pieces = 1);

}  // namespace logsteady
