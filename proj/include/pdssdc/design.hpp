#pragma once

#include <string>
#include <vector>

#include "pdssdc/exact.hpp"

namespace pdssdc {

/// Unit coefficient of a design entry.
enum class Coeff : std::int8_t { zero, plus_one, minus_one, plus_j, minus_j };

ExactComplex coeff_value(Coeff c);
Coeff coeff_negate(Coeff c);

/// One slot of a codeword template: 0, or (coeff) * h_k^(*) * x~_n^(*).
/// Conjugation always applies to the h factor and the symbol together.
struct DesignEntry {
    Coeff coeff = Coeff::zero;
    int h_index = -1;    // 0-based relay index, -1 when empty
    bool h_conj = false;
    int sym_index = -1;  // 0-based interleaved-symbol index, -1 when empty
    bool sym_conj = false;

    bool empty() const { return coeff == Coeff::zero; }
    static DesignEntry term(Coeff c, int h_index, int sym_index, bool conj);

    bool operator==(const DesignEntry& o) const = default;

    /// "0", "h1 x1", "-h2* x2*", "j h3 x4" (1-based indices, * marks conjugates).
    std::string str() const;
};

/// K x T symbolic codeword template over N interleaved symbols.
struct Design {
    int K = 0;  // relays (rows)
    int T = 0;  // slots (columns)
    int N = 0;  // interleaved symbols referenced
    std::vector<DesignEntry> grid;  // row-major K*T

    Design() = default;
    Design(int relays, int slots, int symbols)
        : K(relays), T(slots), N(symbols), grid(size_t(relays) * slots) {}

    DesignEntry& at(int k, int t) { return grid[size_t(k) * T + t]; }
    const DesignEntry& at(int k, int t) const { return grid[size_t(k) * T + t]; }

    bool operator==(const Design& o) const = default;

    /// Enforces the entry-form invariants: coeff 0 iff both indices unset,
    /// h/symbol conjugation flags equal, rows reference only their own h.
    void validate() const;

    /// Grid as printable rows ("h1 x1 | h1 x2 | ..."), for golden comparisons.
    std::vector<std::string> rows_str() const;
};

/// Horizontal concatenation; all parts must share K. Symbol sets may overlap.
Design juxtapose(const std::vector<Design>& parts);

}  // namespace pdssdc
