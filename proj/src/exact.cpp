#include "pdssdc/exact.hpp"

#include <algorithm>
#include <cctype>

namespace pdssdc {

ExactComplex ExactComplex::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return {q, mpq_class(0)};
}

ExactComplex ExactComplex::make(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw std::invalid_argument("zero denominator");
    mpq_class r(re_num, re_den), i(im_num, im_den);
    r.canonicalize();
    i.canonicalize();
    return {r, i};
}

ExactComplex ExactComplex::i() { return {mpq_class(0), mpq_class(1)}; }

ExactComplex ExactComplex::operator/(const ExactComplex& o) const {
    mpq_class d = o.norm2();
    if (sgn(d) == 0) throw std::invalid_argument("division by zero");
    ExactComplex num = *this * o.conj();
    return {num.re() / d, num.im() / d};
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Parses "a" or "a/b" into a canonical rational.
mpq_class parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace

std::string ExactComplex::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out += rat_str(re_);
    if (sgn(im_) != 0) {
        mpq_class mag = abs(im_);
        std::string sign = sgn(im_) < 0 ? "-" : (out.empty() ? "" : "+");
        out += sign;
        if (mag == 1)
            out += "j";
        else
            out += rat_str(mag) + "*j";
    }
    return out;
}

ExactComplex ExactComplex::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // Split an optional second term at a '+'/'-' that is not leading.
    size_t split = std::string::npos;
    for (size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '*') split = p;
    }
    auto parse_term = [](const std::string& t, mpq_class& re, mpq_class& im) {
        if (t.empty()) throw std::invalid_argument("empty term");
        if (t.back() == 'j') {
            std::string coef = t.substr(0, t.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+")
                im += 1;
            else if (coef == "-")
                im += -1;
            else
                im += parse_rat(coef);
        } else {
            re += parse_rat(t);
        }
    };
    mpq_class re(0), im(0);
    if (split == std::string::npos) {
        parse_term(s, re, im);
    } else {
        parse_term(s.substr(0, split), re, im);
        parse_term(s.substr(split), re, im);
    }
    return {re, im};
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ExactComplex(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const ExactComplex& z) { return z.is_zero(); });
}

bool ExactMatrix::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r != c && !at(r, c).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (r == c && at(r, c) != ExactComplex(1)) return false;
            if (r != c && !at(r, c).is_zero()) return false;
        }
    return true;
}

int ExactMatrix::nonzero_count() const {
    int n = 0;
    for (const auto& z : a_)
        if (!z.is_zero()) ++n;
    return n;
}

bool ExactMatrix::is_row_monomial() const {
    for (int r = 0; r < rows_; ++r) {
        int nz = 0;
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && ++nz > 1) return false;
    }
    return true;
}

bool ExactMatrix::is_column_monomial() const {
    for (int c = 0; c < cols_; ++c) {
        int nz = 0;
        for (int r = 0; r < rows_; ++r)
            if (!at(r, c).is_zero() && ++nz > 1) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).conj();
    return m;
}

ExactMatrix ExactMatrix::conj_transpose() const { return conj().transpose(); }

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
    ExactMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
    ExactMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch in *");
    ExactMatrix m(rows_, o.cols_);
    // Relay/precoding matrices are monomial-sparse; skipping zero pivots makes
    // the dense triple loop behave like a sparse product.
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const ExactComplex& x = at(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const ExactComplex& y = o.at(k, c);
                if (y.is_zero()) continue;
                m.at(r, c) += x * y;
            }
        }
    return m;
}

ExactMatrix ExactMatrix::scaled(const ExactComplex& s) const {
    ExactMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

int ExactMatrix::rank() const {
    ExactMatrix w = *this;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < w.cols_ && row < w.rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < w.rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < w.cols_; ++c) std::swap(w.at(pivot, c), w.at(row, c));
        ExactComplex inv = ExactComplex(1) / w.at(row, col);
        for (int r = row + 1; r < w.rows_; ++r) {
            if (w.at(r, col).is_zero()) continue;
            ExactComplex f = w.at(r, col) * inv;
            for (int c = col; c < w.cols_; ++c) w.at(r, c) -= f * w.at(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    ExactMatrix w = *this;
    ExactMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        ExactComplex d = ExactComplex(1) / w.at(col, col);
        for (int c = 0; c < n; ++c) {
            w.at(col, c) *= d;
            inv.at(col, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            ExactComplex f = w.at(r, col);
            for (int c = 0; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::vector<std::complex<double>> ExactMatrix::to_complex_rowmajor() const {
    std::vector<std::complex<double>> out(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) out[i] = a_[i].to_complex();
    return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const ExactComplex& x = a.at(i1, j1);
            if (x.is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    if (b.at(i2, j2).is_zero()) continue;
                    m.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b.at(i2, j2);
                }
        }
    return m;
}

}  // namespace pdssdc
