#pragma once

#include <utility>
#include <vector>

#include "pdssdc/cmat.hpp"
#include "pdssdc/exact.hpp"

namespace pdssdc {

/// Source precoder pair with its N = 4y + a block decomposition.
/// For the constructed family the induced real map on R^{2N} is a signed
/// permutation; the trailing a symbols pass through unchanged.
struct PrecoderPair {
    int N = 0;
    int y = 0, a = 0;  // N = 4y + a, a in {0,1,2,3}
    ExactMatrix P, Q;  // N x N
};

/// The two 4x4 generator matrices of the coordinate-interleaving family,
/// entries in {0, +-1/2, +-j/2}.
std::pair<ExactMatrix, ExactMatrix> build_gamma_omega();

/// P = diag(Gamma, ..., Gamma, I_a), Q = diag(Omega, ..., Omega, 0_a) with y
/// 4x4 blocks, so block m interleaves symbols {4m+1..4m+4}:
///   x~_{4m+1} = x_{(4m+1)I} + j x_{(4m+4)Q},  x~_{4m+2} = x_{(4m+2)I} + j x_{(4m+3)Q},
///   x~_{4m+3} = x_{(4m+1)Q} + j x_{(4m+4)I},  x~_{4m+4} = x_{(4m+2)Q} + j x_{(4m+3)I}.
/// y = 0 (N < 4) degenerates to P = I, Q = 0 (no interleaving).
PrecoderPair build_precoders(int N);

/// s~ = s P + s* Q.
std::vector<cdbl> precode(const std::vector<cdbl>& s, const PrecoderPair& pair);
std::vector<ExactComplex> precode_exact(const std::vector<ExactComplex>& s, const PrecoderPair& pair);

/// Real 2N x 2N matrix M with (s~_I || s~_Q) = (s_I || s_Q) M (concatenated
/// coordinate order). Exact; entries are +-1/0 for the constructed family.
ExactMatrix real_map(const PrecoderPair& pair);

/// True when every row and column of m holds exactly one entry of value +-1.
bool is_signed_permutation(const ExactMatrix& m);

}  // namespace pdssdc
