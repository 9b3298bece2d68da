#include "pdssdc/design.hpp"

#include <algorithm>

namespace pdssdc {

ExactComplex coeff_value(Coeff c) {
    switch (c) {
        case Coeff::zero: return ExactComplex(0);
        case Coeff::plus_one: return ExactComplex(1);
        case Coeff::minus_one: return ExactComplex(-1);
        case Coeff::plus_j: return ExactComplex::i();
        case Coeff::minus_j: return -ExactComplex::i();
    }
    throw std::logic_error("bad coeff");
}

Coeff coeff_negate(Coeff c) {
    switch (c) {
        case Coeff::zero: return Coeff::zero;
        case Coeff::plus_one: return Coeff::minus_one;
        case Coeff::minus_one: return Coeff::plus_one;
        case Coeff::plus_j: return Coeff::minus_j;
        case Coeff::minus_j: return Coeff::plus_j;
    }
    throw std::logic_error("bad coeff");
}

DesignEntry DesignEntry::term(Coeff c, int h_index, int sym_index, bool conj) {
    if (c == Coeff::zero) return {};
    DesignEntry e;
    e.coeff = c;
    e.h_index = h_index;
    e.h_conj = conj;
    e.sym_index = sym_index;
    e.sym_conj = conj;
    return e;
}

std::string DesignEntry::str() const {
    if (empty()) return "0";
    std::string s;
    switch (coeff) {
        case Coeff::plus_one: break;
        case Coeff::minus_one: s += "-"; break;
        case Coeff::plus_j: s += "j "; break;
        case Coeff::minus_j: s += "-j "; break;
        case Coeff::zero: break;
    }
    s += "h" + std::to_string(h_index + 1) + (h_conj ? "*" : "");
    s += " x" + std::to_string(sym_index + 1) + (sym_conj ? "*" : "");
    return s;
}

void Design::validate() const {
    for (int k = 0; k < K; ++k)
        for (int t = 0; t < T; ++t) {
            const DesignEntry& e = at(k, t);
            if (e.empty()) {
                if (e.h_index != -1 || e.sym_index != -1)
                    throw std::invalid_argument("zero entry with indices set");
                continue;
            }
            if (e.h_index < 0 || e.sym_index < 0) throw std::invalid_argument("nonzero entry missing indices");
            if (e.h_conj != e.sym_conj)
                throw std::invalid_argument("entry mixes conjugated and unconjugated factors");
            if (e.h_index != k) throw std::invalid_argument("row references foreign relay variable");
            if (e.sym_index >= N) throw std::invalid_argument("symbol index out of range");
        }
}

std::vector<std::string> Design::rows_str() const {
    std::vector<std::string> rows(K);
    for (int k = 0; k < K; ++k) {
        std::string r;
        for (int t = 0; t < T; ++t) {
            if (t) r += " | ";
            r += at(k, t).str();
        }
        rows[k] = r;
    }
    return rows;
}

Design juxtapose(const std::vector<Design>& parts) {
    if (parts.empty()) throw std::invalid_argument("juxtapose of empty list");
    int K = parts.front().K;
    int T = 0, N = 0;
    for (const Design& d : parts) {
        if (d.K != K) throw std::invalid_argument("juxtapose: relay count mismatch");
        T += d.T;
        N = std::max(N, d.N);
    }
    Design out(K, T, N);
    int off = 0;
    for (const Design& d : parts) {
        for (int k = 0; k < K; ++k)
            for (int t = 0; t < d.T; ++t) out.at(k, off + t) = d.at(k, t);
        off += d.T;
    }
    return out;
}

}  // namespace pdssdc
