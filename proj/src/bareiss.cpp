#include "zuk/bareiss.hpp"

#include <utility>

namespace zuk {

Int bareiss_determinant(std::vector<Int> m, int n) {
    if (n <= 0) return 1;
    if (n == 1) return m[0];

    auto at = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * n + j]; };

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

}  // namespace zuk
