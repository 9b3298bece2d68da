#include "pdssdc/codespec.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pdssdc {

using nlohmann::ordered_json;

std::string family_str(Family f) {
    switch (f) {
        case Family::rs_pdssdc: return "rs_pdssdc";
        case Family::dostbc: return "dostbc";
        case Family::user: return "user";
    }
    throw std::logic_error("bad family");
}

Family family_parse(const std::string& s) {
    if (s == "rs_pdssdc") return Family::rs_pdssdc;
    if (s == "dostbc") return Family::dostbc;
    if (s == "user") return Family::user;
    throw std::invalid_argument("unknown family: " + s);
}

void CodeSpec::validate_dims() const {
    if (N < 1 || K < 1 || T < 1) throw std::invalid_argument("CodeSpec: nonpositive dimension");
    if (P.rows() != N || P.cols() != N || Q.rows() != N || Q.cols() != N)
        throw std::invalid_argument("CodeSpec: precoder must be N x N");
    if (int(A.size()) != K || int(B.size()) != K)
        throw std::invalid_argument("CodeSpec: need K relay matrix pairs");
    for (int k = 0; k < K; ++k)
        if (A[k].rows() != N || A[k].cols() != T || B[k].rows() != N || B[k].cols() != T)
            throw std::invalid_argument("CodeSpec: relay matrices must be N x T");
    for (const auto& grp : pairing) {
        if (grp.empty() || grp.size() > 2) throw std::invalid_argument("CodeSpec: pairing groups have 1 or 2 rows");
        for (int k : grp)
            if (k < 1 || k > K) throw std::invalid_argument("CodeSpec: pairing index out of range");
    }
}

namespace {

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const ordered_json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || int(j.size()) != rows) throw std::invalid_argument(std::string(what) + ": bad row count");
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || int(row.size()) != cols)
            throw std::invalid_argument(std::string(what) + ": bad column count");
        for (int c = 0; c < cols; ++c) m.at(r, c) = ExactComplex::parse(row[c].get<std::string>());
    }
    return m;
}

}  // namespace

std::string codespec_to_json(const CodeSpec& spec) {
    spec.validate_dims();
    ordered_json j;
    j["N"] = spec.N;
    j["K"] = spec.K;
    j["T"] = spec.T;
    j["family"] = family_str(spec.family);
    j["P"] = matrix_to_json(spec.P);
    j["Q"] = matrix_to_json(spec.Q);
    ordered_json a = ordered_json::array(), b = ordered_json::array();
    for (int k = 0; k < spec.K; ++k) {
        a.push_back(matrix_to_json(spec.A[k]));
        b.push_back(matrix_to_json(spec.B[k]));
    }
    j["A"] = std::move(a);
    j["B"] = std::move(b);
    if (!spec.pairing.empty()) j["pairing"] = spec.pairing;
    return j.dump(2) + "\n";
}

CodeSpec codespec_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("CodeSpec JSON parse error: ") + e.what());
    }
    CodeSpec spec;
    spec.N = j.at("N").get<int>();
    spec.K = j.at("K").get<int>();
    spec.T = j.at("T").get<int>();
    spec.family = family_parse(j.at("family").get<std::string>());
    spec.P = matrix_from_json(j.at("P"), spec.N, spec.N, "P");
    spec.Q = matrix_from_json(j.at("Q"), spec.N, spec.N, "Q");
    const auto& a = j.at("A");
    const auto& b = j.at("B");
    if (int(a.size()) != spec.K || int(b.size()) != spec.K)
        throw std::invalid_argument("CodeSpec: A/B must hold K matrices");
    for (int k = 0; k < spec.K; ++k) {
        spec.A.push_back(matrix_from_json(a[k], spec.N, spec.T, "A"));
        spec.B.push_back(matrix_from_json(b[k], spec.N, spec.T, "B"));
    }
    if (j.contains("pairing")) spec.pairing = j.at("pairing").get<std::vector<std::vector<int>>>();
    spec.validate_dims();
    return spec;
}

CodeSpec load_codespec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return codespec_from_json(ss.str());
}

void save_codespec(const CodeSpec& spec, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << codespec_to_json(spec);
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

namespace {

// One implementation of row-vector precoding and codeword assembly shared by
// the exact (verification) and floating (simulation) paths.
template <class Scalar>
std::vector<Scalar> precode_impl(const CodeSpec& spec, const std::vector<Scalar>& s,
                                 Scalar (*from_exact)(const ExactComplex&), Scalar (*conj_fn)(const Scalar&)) {
    if (int(s.size()) != spec.N) throw std::invalid_argument("precode: vector length != N");
    std::vector<Scalar> out(spec.N, Scalar(0));
    for (int i = 0; i < spec.N; ++i) {
        Scalar si = s[i];
        Scalar ci = conj_fn(s[i]);
        for (int n = 0; n < spec.N; ++n) {
            if (!spec.P.at(i, n).is_zero()) out[n] += si * from_exact(spec.P.at(i, n));
            if (!spec.Q.at(i, n).is_zero()) out[n] += ci * from_exact(spec.Q.at(i, n));
        }
    }
    return out;
}

cdbl exact_to_cdbl(const ExactComplex& z) { return z.to_complex(); }
ExactComplex exact_to_exact(const ExactComplex& z) { return z; }
cdbl conj_cdbl(const cdbl& z) { return std::conj(z); }
ExactComplex conj_exact(const ExactComplex& z) { return z.conj(); }

template <class Scalar, class Mat>
Mat assemble_impl(const CodeSpec& spec, const std::vector<Scalar>& h, const std::vector<Scalar>& s_tilde,
                  Scalar (*from_exact)(const ExactComplex&), Scalar (*conj_fn)(const Scalar&)) {
    if (int(h.size()) != spec.K) throw std::invalid_argument("assemble: h length != K");
    if (int(s_tilde.size()) != spec.N) throw std::invalid_argument("assemble: s~ length != N");
    Mat X(spec.K, spec.T);
    for (int k = 0; k < spec.K; ++k) {
        Scalar hk = h[k];
        Scalar hkc = conj_fn(h[k]);
        for (int n = 0; n < spec.N; ++n) {
            Scalar sn = s_tilde[n];
            Scalar snc = conj_fn(s_tilde[n]);
            for (int t = 0; t < spec.T; ++t) {
                if (!spec.A[k].at(n, t).is_zero()) X.at(k, t) += hk * (sn * from_exact(spec.A[k].at(n, t)));
                if (!spec.B[k].at(n, t).is_zero()) X.at(k, t) += hkc * (snc * from_exact(spec.B[k].at(n, t)));
            }
        }
    }
    return X;
}

}  // namespace

std::vector<cdbl> apply_precoders(const CodeSpec& spec, const std::vector<cdbl>& s) {
    return precode_impl<cdbl>(spec, s, exact_to_cdbl, conj_cdbl);
}

std::vector<ExactComplex> apply_precoders_exact(const CodeSpec& spec, const std::vector<ExactComplex>& s) {
    return precode_impl<ExactComplex>(spec, s, exact_to_exact, conj_exact);
}

CMat assemble_codeword(const CodeSpec& spec, const std::vector<cdbl>& h, const std::vector<cdbl>& s_tilde) {
    return assemble_impl<cdbl, CMat>(spec, h, s_tilde, exact_to_cdbl, conj_cdbl);
}

ExactMatrix assemble_codeword_exact(const CodeSpec& spec, const std::vector<ExactComplex>& h,
                                    const std::vector<ExactComplex>& s_tilde) {
    return assemble_impl<ExactComplex, ExactMatrix>(spec, h, s_tilde, exact_to_exact, conj_exact);
}

std::vector<ExactComplex> coords_to_symbols(const std::vector<mpq_class>& u) {
    if (u.size() % 2) throw std::invalid_argument("odd coordinate count");
    std::vector<ExactComplex> s(u.size() / 2);
    for (size_t i = 0; i < s.size(); ++i) s[i] = ExactComplex(u[2 * i], u[2 * i + 1]);
    return s;
}

std::vector<cdbl> coords_to_symbols(const std::vector<double>& u) {
    if (u.size() % 2) throw std::invalid_argument("odd coordinate count");
    std::vector<cdbl> s(u.size() / 2);
    for (size_t i = 0; i < s.size(); ++i) s[i] = cdbl(u[2 * i], u[2 * i + 1]);
    return s;
}

std::vector<CMat> extract_weight_matrices(const CodeSpec& spec, const std::vector<cdbl>& h) {
    std::vector<CMat> phi;
    phi.reserve(2 * spec.N);
    for (int p = 0; p < 2 * spec.N; ++p) {
        std::vector<double> u(2 * spec.N, 0.0);
        u[p] = 1.0;
        phi.push_back(assemble_codeword(spec, h, apply_precoders(spec, coords_to_symbols(u))));
    }
    return phi;
}

std::vector<ExactMatrix> extract_weight_matrices_exact(const CodeSpec& spec, const std::vector<ExactComplex>& h) {
    std::vector<ExactMatrix> phi;
    phi.reserve(2 * spec.N);
    for (int p = 0; p < 2 * spec.N; ++p) {
        std::vector<mpq_class> u(2 * spec.N, mpq_class(0));
        u[p] = 1;
        phi.push_back(assemble_codeword_exact(spec, h, apply_precoders_exact(spec, coords_to_symbols(u))));
    }
    return phi;
}

}  // namespace pdssdc
