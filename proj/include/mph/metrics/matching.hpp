#pragma once

#include <cstddef>
#include <vector>

#include "mph/core/graded_matrix.hpp"
#include "mph/invariants/barcode.hpp"
#include "mph/invariants/signed_barcode.hpp"
#include "mph/present/presentation.hpp"

namespace mph::metrics {

struct MatchingResult {
  double value = 0;  // lower bound for the matching distance
  inv::Line line;    // first sampled line attaining the value
};

/// n x n lines: angles evenly spaced in [pi/8, 3pi/8] times base points evenly spaced on the
/// anti-diagonal of the box [lo, hi]; directions scaled so the smaller component is 1.
std::vector<inv::Line> sample_lines(const Grade& lo, const Grade& hi, std::size_t n);

/// Bounding box of the grades of both matrices; {0,0} x {0,0} when there are none.
std::pair<Grade, Grade> bounding_box(const GradedMatrix& p, const GradedMatrix& q);

/// max over `lines` of the bottleneck distance between the slice barcodes.
MatchingResult matching_distance(const GradedMatrix& p, const GradedMatrix& q, const std::vector<inv::Line>& lines,
                                 unsigned threads = 1);
/// Same, on sample_lines over the joint bounding box; ContractError if fields or axes differ.
MatchingResult matching_distance(const present::Presentation& p, const present::Presentation& q, std::size_t n,
                                 unsigned threads = 1);

/// Barcode of the direct sum of half-open rectangle modules restricted to the line.
inv::Barcode1D slice_rectangles(const std::vector<inv::Rectangle>& rects, const inv::Line& l);

}  // namespace mph::metrics
