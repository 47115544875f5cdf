#pragma once

#include <string>

#include "gaborpair/signal.hpp"
#include "gaborpair/zak.hpp"

namespace gaborpair {

/// Shortest round-trip decimal text for a double, locale independent.
std::string format_double(double v);

/// Writes text to path atomically (temp file in the same directory, then
/// rename).
void write_file_atomic(const std::string& path, const std::string& text);

/// Header "t,re,im", one row per sample.
std::string signal_csv(const SampledSignal& s);

/// Header "x,omega,re,im", row-major over the grid.
std::string zak_csv(const ZakField& z);

/// Header "omega1,omega2,theta" for a row-major n x n grid over [0,1)^2.
std::string theta_csv(const std::vector<double>& grid, int n);

} // namespace gaborpair
