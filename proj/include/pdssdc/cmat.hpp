#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace pdssdc {

using cdbl = std::complex<double>;

/// Minimal dense complex matrix for the floating-point (simulation) path.
struct CMat {
    int rows = 0, cols = 0;
    std::vector<cdbl> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    cdbl& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const cdbl& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    double max_abs() const {
        double mx = 0;
        for (const cdbl& z : a) mx = std::max(mx, std::abs(z));
        return mx;
    }

    /// Gauss-Jordan inverse with partial pivoting.
    CMat inverse() const;
};

}  // namespace pdssdc
