#pragma once

#include <vector>

#include "zuk/numeric.hpp"

namespace zuk {

// Exact determinant of an n x n integer matrix (row-major) via Bareiss
// fraction-free elimination; all intermediate divisions are exact.
Int bareiss_determinant(std::vector<Int> m, int n);

}  // namespace zuk
