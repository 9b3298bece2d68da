#include "pdssdc/cmat.hpp"

#include <cmath>

namespace pdssdc {

CMat CMat::inverse() const {
    if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows;
    CMat w = *this;
    CMat inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(w.at(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w.at(r, col)) > best) {
                best = std::abs(w.at(r, col));
                pivot = r;
            }
        if (best == 0.0) throw std::invalid_argument("singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        cdbl d = 1.0 / w.at(col, col);
        for (int c = 0; c < n; ++c) {
            w.at(col, c) *= d;
            inv.at(col, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            cdbl f = w.at(r, col);
            if (f == cdbl(0)) continue;
            for (int c = 0; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

}  // namespace pdssdc
