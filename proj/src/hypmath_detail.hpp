#pragma once

#include <utility>

namespace hypiso::detail {

/// Legs of the right triangle with acute angles (angle1, angle2), where
/// `defect` = pi/2 - angle1 - angle2 is passed separately so callers that
/// know it exactly do not lose it to cancellation.
std::pair<double, double> legs_from_angles(double angle1, double angle2, double defect);

/// sinh(x) / sinh(y) for y > 0 without overflow.
double sinh_ratio(double x, double y);

} // namespace hypiso::detail
