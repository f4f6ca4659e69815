#pragma once

// Log-log power-law fitting and the shared `B,count` CSV format.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "kummer/region_counter.hpp"

namespace kummer {

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

/// Ordinary least squares y ~ slope * x + intercept. Needs >= 2 points with
/// distinct x. A perfectly flat y gives r_squared = 1.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

struct GrowthFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    double tail_fraction = 1;
    std::size_t n_tail = 0;
};

/// Fits ln(count) against ln(B) over the ceil(tail_fraction * n) samples with
/// the largest B. Throws InsufficientSamples when fewer than three of those
/// have count >= 1.
GrowthFit fit_exponent(std::span<const CountSample> samples, double tail_fraction = 1.0);

void write_samples_csv(std::ostream& out, std::span<const CountSample> samples);
/// Reads the header `B,count` then decimal rows. Throws std::invalid_argument
/// naming the offending line.
std::vector<CountSample> read_samples_csv(std::istream& in);

}  // namespace kummer
