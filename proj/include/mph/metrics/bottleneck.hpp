#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "mph/invariants/barcode.hpp"
#include "mph/invariants/signed_barcode.hpp"

namespace mph::metrics {

/// Matched pairs (index into the first multiset, index into the second).
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double cost = 0;
};

/// Optimal partial matching between two multisets of sizes n and m under bottleneck
/// cost: matched pairs cost pair(i, j), unmatched elements cost left(i) / right(j).
/// Exact: binary search over the candidate costs with a maximum matching at each threshold.
Matching bottleneck_matching(std::size_t n, std::size_t m, const std::function<double(std::size_t, std::size_t)>& pair,
                             const std::function<double(std::size_t)>& left,
                             const std::function<double(std::size_t)>& right);

/// c(I, J) = max(|c - a|, |d - b|) with inf - inf = 0.
double interval_cost(const inv::Interval1D& i, const inv::Interval1D& j);
/// c(I) = (b - a) / 2.
double interval_cost(const inv::Interval1D& i);

double bottleneck_1d(const inv::Barcode1D& c, const inv::Barcode1D& d);

/// Interleaving distance between the interval modules of half-open rectangles [lo, hi).
double interleaving_rectangles(const inv::Rectangle& a, const inv::Rectangle& b);
/// Interleaving distance to the zero module: half the shorter side.
double interleaving_to_zero(const inv::Rectangle& a);

/// Generalized bottleneck distance on half-open rectangle multisets.
double bottleneck_rectangles(const std::vector<inv::Rectangle>& a, const std::vector<inv::Rectangle>& b);

/// Bottleneck distance between (X.positive + Y.negative) and (Y.positive + X.negative),
/// rectangles read as half-open.
double bottleneck_signed(const inv::SignedBarcode& x, const inv::SignedBarcode& y);

/// The same barcode with every rectangle converted to half-open on its grid.
inv::SignedBarcode half_open(const inv::SignedBarcode& b);

}  // namespace mph::metrics
