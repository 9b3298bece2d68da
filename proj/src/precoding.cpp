#include "pdssdc/precoding.hpp"

#include "pdssdc/codespec.hpp"

namespace pdssdc {

std::pair<ExactMatrix, ExactMatrix> build_gamma_omega() {
    // Row-major sign tables; every entry is (re + im*j)/2.
    static const int g_re[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    static const int g_im[4][4] = {{0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    static const int o_re[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
    static const int o_im[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    ExactMatrix gamma(4, 4), omega(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            gamma.at(r, c) = ExactComplex::make(g_re[r][c], 2, g_im[r][c], 2);
            omega.at(r, c) = ExactComplex::make(o_re[r][c], 2, o_im[r][c], 2);
        }
    return {gamma, omega};
}

PrecoderPair build_precoders(int N) {
    if (N < 1) throw std::invalid_argument("build_precoders: N must be positive");
    PrecoderPair pp;
    pp.N = N;
    pp.y = N / 4;
    pp.a = N % 4;
    pp.P = ExactMatrix::zero(N, N);
    pp.Q = ExactMatrix::zero(N, N);
    auto [gamma, omega] = build_gamma_omega();
    for (int m = 0; m < pp.y; ++m)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                pp.P.at(4 * m + r, 4 * m + c) = gamma.at(r, c);
                pp.Q.at(4 * m + r, 4 * m + c) = omega.at(r, c);
            }
    for (int i = 4 * pp.y; i < N; ++i) pp.P.at(i, i) = ExactComplex(1);
    return pp;
}

namespace {

CodeSpec precoder_shim(const PrecoderPair& pair) {
    // apply_precoders only touches N/P/Q; reuse the shared row-vector product.
    CodeSpec s;
    s.N = pair.N;
    s.K = 1;
    s.T = 1;
    s.P = pair.P;
    s.Q = pair.Q;
    s.A.assign(1, ExactMatrix::zero(pair.N, 1));
    s.B.assign(1, ExactMatrix::zero(pair.N, 1));
    return s;
}

}  // namespace

std::vector<cdbl> precode(const std::vector<cdbl>& s, const PrecoderPair& pair) {
    return apply_precoders(precoder_shim(pair), s);
}

std::vector<ExactComplex> precode_exact(const std::vector<ExactComplex>& s, const PrecoderPair& pair) {
    return apply_precoders_exact(precoder_shim(pair), s);
}

ExactMatrix real_map(const PrecoderPair& pair) {
    int N = pair.N;
    ExactMatrix m(2 * N, 2 * N);
    for (int p = 0; p < 2 * N; ++p) {
        std::vector<ExactComplex> s(N);
        // Concatenated order: coordinates 0..N-1 are in-phase, N..2N-1 quadrature.
        if (p < N)
            s[p] = ExactComplex(1);
        else
            s[p - N] = ExactComplex::i();
        std::vector<ExactComplex> st = precode_exact(s, pair);
        for (int n = 0; n < N; ++n) {
            m.at(p, n) = ExactComplex(st[n].re(), mpq_class(0));
            m.at(p, N + n) = ExactComplex(st[n].im(), mpq_class(0));
        }
    }
    return m;
}

bool is_signed_permutation(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return false;
    std::vector<int> col_used(m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r) {
        int nz = 0;
        for (int c = 0; c < m.cols(); ++c) {
            const ExactComplex& z = m.at(r, c);
            if (z.is_zero()) continue;
            if (z != ExactComplex(1) && z != ExactComplex(-1)) return false;
            ++nz;
            ++col_used[c];
        }
        if (nz != 1) return false;
    }
    for (int c : col_used)
        if (c != 1) return false;
    return true;
}

}  // namespace pdssdc
