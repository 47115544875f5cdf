#include "gaborpair/quadrature.hpp"

// Rules live in the header as templates; this unit anchors the constants.

namespace gaborpair::quad {}
