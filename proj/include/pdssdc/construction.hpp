#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pdssdc/codespec.hpp"
#include "pdssdc/design.hpp"

namespace pdssdc {

/// Decompositions used by the construction cases and the rate formulas:
/// K = 4x + a, N = 4y + b, K = 2l or 2l+1, N = 2m or 2m+1.
struct ConstructionParams {
    int N = 0, K = 0;
    int x = 0, a = 0;
    int y = 0, b = 0;
    int l = 0, m = 0;
    static ConstructionParams from(int N, int K);
};

/// Alternating per-relay conjugation pattern: delta = diag{1,0,1,0,...},
/// theta = I - delta, G = H*delta + H^* theta. Reduced to one flag per relay:
/// conj_flag[k] true means relay k carries (h_k^*, x~^*) forms.
struct GroupDiagonal {
    int K = 0;
    std::vector<std::uint8_t> conj_flag;
    static GroupDiagonal alternating(int K);
};

/// 2x2 Alamouti template [[x_i1, x_i2], [-x_i2*, x_i1*]] over 1-based symbol
/// indices; local relay rows 0,1 (re-stamped when placed into a larger design).
Design build_alamouti(int i1, int i2);

/// 4x4 two-by-two-of-Alamouti block over symbols 4m+1..4m+4.
Design build_omega_block(int m);

/// Row-monomial semi-orthogonal construction for N >= 4, K >= 4.
/// Returns the symbolic design and a full CodeSpec (precoders, relay
/// matrices, pairing metadata). Throws for N < 4 or K < 4.
std::pair<Design, CodeSpec> construct_rspdssdc(int N, int K);

/// Baseline distributed-orthogonal designs for N in {1,2,3,4}, K >= 2,
/// identity precoding. Throws for other N.
std::pair<Design, CodeSpec> construct_dostbc(int N, int K);

/// Design over symbols offset+1..offset+Nsym, used standalone and as the
/// tail part of the N = 4y + b construction.
Design dostbc_design(int Nsym, int K, int sym_offset);

/// Inverts the codeword template into per-relay processing pairs:
/// entry c*h_k x~_n at (k,t) => A_k[n,t] = c; conjugated entries fill B_k.
std::vector<std::pair<ExactMatrix, ExactMatrix>> extract_relay_matrices(const Design& d);

/// Rebuilds the symbolic design from unit-alphabet relay matrices
/// (round-trip inverse of extract_relay_matrices).
Design design_from_spec(const CodeSpec& spec);

CodeSpec spec_from_design(const Design& d, Family family, const ExactMatrix& P, const ExactMatrix& Q,
                          std::vector<std::vector<int>> pairing);

/// Closed-form minimum block lengths (T) per (N, K), for the constructed
/// semi-orthogonal family and the orthogonal baseline.
struct MinT {
    long rspdssdc = 0;
    long dostbc = 0;
};
MinT min_T_table(int N, int K);

}  // namespace pdssdc
