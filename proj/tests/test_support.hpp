#pragma once

#include "semihilbert/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace testing_support {

using semihilbert::CMatrix;

inline double max_abs_diff(const CMatrix& a, const CMatrix& b)
{
    double worst = 0.0;
    const auto x = a.entries();
    const auto y = b.entries();
    for (std::size_t k = 0; k < x.size(); ++k) {
        worst = std::max(worst, std::abs(x[k] - y[k]));
    }
    return worst;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

} // namespace testing_support
