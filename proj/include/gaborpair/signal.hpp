#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace gaborpair {

using cdouble = std::complex<double>;

class WindowSpec;

/// Uniform real-line grid. Samples sit at cell midpoints, so summing
/// values times spacing() is the composite midpoint rule.
struct Grid {
    double t_min = -6.0;
    double t_max = 6.0;
    int n_samples = 4096;

    Grid() = default;
    Grid(double t0, double t1, int n);

    double spacing() const { return (t_max - t_min) / n_samples; }
    double point(int j) const { return t_min + (j + 0.5) * spacing(); }
    bool operator==(const Grid&) const = default;

    /// Default desk-scale grid for Gaussian-type signals: [-6,6], 4096 samples.
    static Grid desk();
    /// Box-aligned grid: [-6,6], spacing 1/400, cell edges on half-integers.
    /// Indicator windows integrate exactly on it.
    static Grid desk_box();
};

/// Complex samples of a function on a Grid. Immutable after construction.
/// Signals sampled from an analytic WindowSpec keep a reference to it so
/// that shifts can re-evaluate instead of interpolating.
class SampledSignal {
public:
    SampledSignal(Grid grid, std::vector<cdouble> values,
                  std::shared_ptr<const WindowSpec> source = nullptr);

    const Grid& grid() const { return grid_; }
    const std::vector<cdouble>& values() const { return values_; }
    cdouble operator[](int j) const { return values_[static_cast<size_t>(j)]; }
    int size() const { return grid_.n_samples; }

    const std::shared_ptr<const WindowSpec>& source() const { return source_; }
    bool zero_extended() const { return zero_extended_; }
    void mark_zero_extended() { zero_extended_ = true; }

private:
    Grid grid_;
    std::vector<cdouble> values_;
    std::shared_ptr<const WindowSpec> source_;
    bool zero_extended_ = false;
};

} // namespace gaborpair
