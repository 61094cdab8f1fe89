#ifndef RAMICALC_SVG_PLOT_HPP
#define RAMICALC_SVG_PLOT_HPP

#include <string>
#include <utility>
#include <vector>

#include "ramicalc/plf.hpp"

namespace ramicalc {

using LabeledFunction = std::pair<std::string, PLFunction>;

/// Deterministic SVG overlay of piecewise-linear functions.
///
/// The viewport is fixed (640x480). The window is [0, X] x [ymin, Y] with
/// X = 5/4 of the largest breakpoint abscissa (1 if all functions are
/// affine) and Y, ymin the extreme values over the window. Pixel coordinates
/// are computed exactly and rounded half-up to 1/100 pixel; the map is
/// recorded in a header comment. Throws DomainError on an empty list.
std::string plot_svg(const std::vector<LabeledFunction>& functions);

}  // namespace ramicalc

#endif
