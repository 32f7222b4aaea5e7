#pragma once

// Published reference values for the clamped rectangle [0, h] x [0, 1].

#include <array>

namespace cplate::reference {

struct BoundsEntry {
  double h;
  double lambda1;
  double nu1;
  double pct_err;
  double lambda1_ulp;  // one unit in the last printed digit
  double nu1_ulp;
};

inline constexpr std::array<BoundsEntry, 9> kBoundsTable{{
    {1.0, 1286.66, 1295.93, 0.720, 0.01, 0.01},
    {1.2, 940.070, 946.421, 0.676, 0.001, 0.001},
    {1.4, 776.088, 780.618, 0.584, 0.001, 0.001},
    {1.6, 687.796, 691.129, 0.485, 0.001, 0.001},
    {1.8, 635.529, 638.044, 0.396, 0.001, 0.001},
    {2.0, 602.282, 604.221, 0.322, 0.001, 0.001},
    {3.0, 537.444, 538.111, 0.124, 0.001, 0.001},
    {4.0, 519.496, 519.794, 0.058, 0.001, 0.001},
    {5.0, 512.080, 512.237, 0.031, 0.001, 0.001},
}};

struct NegativityEntry {
  double h;
  double l2_bound;
};

inline constexpr std::array<NegativityEntry, 7> kNegativityTable{{
    {1.0, 0.0484},
    {10.0, 0.0336},
    {20.0, 0.0249},
    {40.0, 0.0179},
    {60.0, 0.0147},
    {80.0, 0.0128},
    {100.0, 0.0114},
}};

// First clamped-beam root and gradient coefficient as printed (5 decimals).
inline constexpr double kC1 = 4.73004;
inline constexpr double kD1 = 0.54988;
inline constexpr double kC1Fourth = 500.564;

// Interval-arithmetic enclosure of mu_1 for the unit square:
// 1294.933940 <= mu_1 <= 1294.933988.
inline constexpr double kSquareMu1Lower = 1294.933940;
inline constexpr double kSquareMu1Upper = 1294.933988;

}  // namespace cplate::reference
