#pragma once

// 50-digit reference evaluations for the test suites.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline const Real& pi() {
    static const Real value = boost::math::constants::pi<Real>();
    return value;
}

inline Real asinh(const Real& x) { return log(x + sqrt(x * x + 1)); }
inline Real acosh(const Real& x) { return log(x + sqrt(x * x - 1)); }
inline Real atanh(const Real& x) { return log((1 + x) / (1 - x)) / 2; }
inline Real acot(const Real& x) { return atan(1 / x); }

inline double d(const Real& x) { return x.convert_to<double>(); }

inline double rel(double got, const Real& want) {
    const Real w = abs(want);
    return d(abs(Real(got) - want) / (w > 1 ? w : Real(1)));
}

/// Pi divided by an integer at full precision.
inline Real pi_over(int n) { return pi() / n; }

} // namespace oracle
