#include "gaborpair/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace gaborpair {

Grid::Grid(double t0, double t1, int n) : t_min(t0), t_max(t1), n_samples(n) {
    if (!(t0 < t1)) throw std::invalid_argument("Grid: t_min must be below t_max");
    if (n < 2) throw std::invalid_argument("Grid: need at least 2 samples");
}

Grid Grid::desk() { return Grid(-6.0, 6.0, 4096); }

Grid Grid::desk_box() { return Grid(-6.0, 6.0, 4800); }

SampledSignal::SampledSignal(Grid grid, std::vector<cdouble> values,
                             std::shared_ptr<const WindowSpec> source)
    : grid_(grid), values_(std::move(values)), source_(std::move(source)) {
    if (values_.size() != static_cast<size_t>(grid_.n_samples))
        throw std::invalid_argument("SampledSignal: value count does not match grid");
    for (size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j].real()) || !std::isfinite(values_[j].imag()))
            throw std::invalid_argument("SampledSignal: non-finite value at index " +
                                        std::to_string(j));
    }
}

} // namespace gaborpair
