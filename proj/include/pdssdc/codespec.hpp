#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdssdc/cmat.hpp"
#include "pdssdc/exact.hpp"

namespace pdssdc {

enum class Family { rs_pdssdc, dostbc, user };

std::string family_str(Family f);
Family family_parse(const std::string& s);

/// Complete description of a precoded distributed code: dimensions,
/// source precoders P/Q, per-relay processing pairs (A_k, B_k), and the
/// declared row pairing when known.
///
/// Position-disjointness of A_k/B_k and the unit-alphabet property hold for
/// every generated code and are enforced by the verification checks; raw
/// user specs (e.g. classifier fixtures) may violate them and still load.
struct CodeSpec {
    int N = 0, K = 0, T = 0;
    Family family = Family::user;
    ExactMatrix P, Q;             // N x N
    std::vector<ExactMatrix> A;   // K matrices, N x T
    std::vector<ExactMatrix> B;   // K matrices, N x T
    std::vector<std::vector<int>> pairing;  // optional; 1-based relay groups

    void validate_dims() const;
};

/// JSON round trip (bit-exact: entries serialize as canonical rational strings).
std::string codespec_to_json(const CodeSpec& spec);
CodeSpec codespec_from_json(const std::string& text);

CodeSpec load_codespec(const std::string& path);
/// Writes atomically (temp file + rename), so failures leave no partial file.
void save_codespec(const CodeSpec& spec, const std::string& path);

/// s~ = s P + s* Q with the spec's own precoders.
std::vector<cdbl> apply_precoders(const CodeSpec& spec, const std::vector<cdbl>& s);
std::vector<ExactComplex> apply_precoders_exact(const CodeSpec& spec, const std::vector<ExactComplex>& s);

/// Codeword matrix X: row k = h_k (s~ A_k) + h_k* (s~* B_k).
CMat assemble_codeword(const CodeSpec& spec, const std::vector<cdbl>& h, const std::vector<cdbl>& s_tilde);
ExactMatrix assemble_codeword_exact(const CodeSpec& spec, const std::vector<ExactComplex>& h,
                                    const std::vector<ExactComplex>& s_tilde);

/// Weight matrices of the linear-dispersion expansion over the information
/// coordinates, ordered [Phi_1I, Phi_1Q, Phi_2I, Phi_2Q, ...]. Each is the
/// codeword assembled with one real coordinate set to 1 (precoding applied
/// first), so sum_p u_p Phi_p reproduces assemble_codeword.
std::vector<CMat> extract_weight_matrices(const CodeSpec& spec, const std::vector<cdbl>& h);
std::vector<ExactMatrix> extract_weight_matrices_exact(const CodeSpec& spec, const std::vector<ExactComplex>& h);

/// Real coordinates (x1I, x1Q, x2I, x2Q, ...) <-> complex symbol vectors.
std::vector<ExactComplex> coords_to_symbols(const std::vector<mpq_class>& u);
std::vector<cdbl> coords_to_symbols(const std::vector<double>& u);

}  // namespace pdssdc
