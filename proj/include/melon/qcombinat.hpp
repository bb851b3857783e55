#pragma once

#include "melon/laurent_poly.hpp"

namespace melon {

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
LaurentPoly qint(long n);

/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly qfactorial(long n);

/// Gaussian binomial [R choose r]; zero when r < 0 or r > R.
LaurentPoly qbinomial(long upper, long lower);

/// [R choose r] == [R-1 choose r-1] + q^r [R-1 choose r], checked exactly.
bool pascal_check(long upper, long lower);

/// h_r(1, q, ..., q^{m-1}) = [m+r-1 choose r]; 1 for r = 0, 0 for r < 0.
LaurentPoly h_complete(long degree, long vars);

}  // namespace melon
