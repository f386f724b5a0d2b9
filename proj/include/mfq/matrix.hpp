#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfq/ring.hpp"

namespace mfq {

// Dense square matrix over one Modulus. Entries are stored packed
// (Residue::packed) so equality and hashing are cheap during enumeration.
class Mat {
public:
    Mat(uint32_t dim, const Modulus& mod)
        : n_(dim), mod_(mod), e_(size_t(dim) * dim, 0) {
        if (dim < 1 || dim > kMaxDim) throw input_error("Mat: dimension out of range");
    }

    static Mat identity(uint32_t dim, const Modulus& mod) {
        Mat m(dim, mod);
        for (uint32_t i = 0; i < dim; ++i) m.set(i, i, Residue::one(mod));
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<int64_t>>& rows, const Modulus& mod) {
        Mat m(uint32_t(rows.size()), mod);
        for (uint32_t i = 0; i < m.n_; ++i) {
            if (rows[i].size() != m.n_) throw input_error("Mat: ragged rows");
            for (uint32_t j = 0; j < m.n_; ++j) {
                int64_t v = rows[i][j] % int64_t(mod.m());
                if (v < 0) v += mod.m();
                m.set(i, j, Residue(uint64_t(v), mod));
            }
        }
        return m;
    }

    uint32_t dim() const { return n_; }
    const Modulus& modulus() const { return mod_; }

    Residue at(uint32_t i, uint32_t j) const { return Residue::from_packed(e_[i * n_ + j], mod_); }
    void set(uint32_t i, uint32_t j, const Residue& v) {
        if (!(v.modulus() == mod_)) throw input_error("Mat::set: modulus mismatch");
        e_[i * n_ + j] = v.packed();
    }

    const std::vector<uint32_t>& packed_entries() const { return e_; }

    bool is_identity() const { return *this == identity(n_, mod_); }

    // True iff scalar * I for some ring element (not necessarily a unit).
    bool is_scalar() const {
        uint32_t d = e_[0];
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < n_; ++j)
                if (e_[i * n_ + j] != (i == j ? d : 0)) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        if (n_ != o.n_ || !(mod_ == o.mod_)) throw input_error("Mat: mul dim/modulus mismatch");
        Mat out(n_, mod_);
        if (!mod_.quadratic()) {
            // dot products fit u64: n * (m-1)^2 <= 12 * (2^16)^2 < 2^63
            uint64_t m = mod_.m();
            for (uint32_t i = 0; i < n_; ++i) {
                const uint32_t* a = &e_[i * n_];
                for (uint32_t j = 0; j < n_; ++j) {
                    uint64_t acc = 0;
                    for (uint32_t k = 0; k < n_; ++k) acc += uint64_t(a[k]) * o.e_[k * n_ + j];
                    out.e_[i * n_ + j] = uint32_t(acc % m);
                }
            }
        } else {
            for (uint32_t i = 0; i < n_; ++i)
                for (uint32_t j = 0; j < n_; ++j) {
                    Residue acc = Residue::zero(mod_);
                    for (uint32_t k = 0; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
                    out.e_[i * n_ + j] = acc.packed();
                }
        }
        return out;
    }

    Mat transpose() const {
        Mat out(n_, mod_);
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < n_; ++j) out.e_[j * n_ + i] = e_[i * n_ + j];
        return out;
    }

    // Entrywise x -> x^p; with transpose() this gives the conjugate-transpose
    // used by Hermitian form checks.
    Mat frobenius() const {
        Mat out(n_, mod_);
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < n_; ++j)
                out.e_[i * n_ + j] = at(i, j).frobenius().packed();
        return out;
    }

    // Division-free determinant: expansion by minors over column subsets.
    // Works verbatim over Z_{p^r} and composite rings.
    Residue determinant() const {
        if (n_ == 1) return at(0, 0);
        if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        // dp[mask] = minor of rows 0..popcount-1 on column set `mask`
        std::vector<Residue> dp(size_t(1) << n_, Residue::zero(mod_));
        for (uint32_t j = 0; j < n_; ++j) dp[1u << j] = at(0, j);
        for (uint32_t mask = 1; mask < (1u << n_); ++mask) {
            uint32_t row = uint32_t(__builtin_popcount(mask));
            if (row < 2 || row > n_) continue;
            Residue acc = Residue::zero(mod_);
            bool neg = (row - 1) % 2 == 1; // expansion along row r-1: sign (-1)^(r-1+c)
            for (uint32_t j = 0; j < n_; ++j) {
                if (!(mask & (1u << j))) continue;
                Residue term = at(row - 1, j) * dp[mask ^ (1u << j)];
                acc = neg ? acc - term : acc + term;
                neg = !neg;
            }
            dp[mask] = acc;
        }
        return dp[(1u << n_) - 1];
    }

    Mat inverse() const {
        if (mod_.kind() == ModKind::Composite) return inverse_crt();
        return inverse_local();
    }

    // A^T J A = J for the standard alternating form J = [[0, I_g], [-I_g, 0]].
    bool symplectic(uint32_t g) const {
        if (n_ != 2 * g) throw input_error("symplectic: dim != 2g");
        Mat j = standard_symplectic_form(g, mod_);
        return transpose() * j * (*this) == j;
    }

    // A^dagger H A = H for the anti-diagonal Hermitian form.
    bool hermitian_isometry() const {
        if (!mod_.quadratic()) throw input_error("hermitian_isometry: needs GF(p^2)");
        Mat h = antidiag_form(n_, mod_);
        return frobenius().transpose() * h * (*this) == h;
    }

    static Mat standard_symplectic_form(uint32_t g, const Modulus& mod) {
        Mat j(2 * g, mod);
        Residue one = Residue::one(mod);
        for (uint32_t i = 0; i < g; ++i) {
            j.set(i, g + i, one);
            j.set(g + i, i, -one);
        }
        return j;
    }

    static Mat antidiag_form(uint32_t n, const Modulus& mod) {
        Mat h(n, mod);
        for (uint32_t i = 0; i < n; ++i) h.set(i, n - 1 - i, Residue::one(mod));
        return h;
    }

    bool operator==(const Mat& o) const {
        return n_ == o.n_ && mod_ == o.mod_ && e_ == o.e_;
    }
    bool operator<(const Mat& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return e_ < o.e_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (uint32_t i = 0; i < n_; ++i) {
            s += i ? ";" : "";
            for (uint32_t j = 0; j < n_; ++j) s += (j ? "," : "[") + at(i, j).to_string();
            s += "]";
        }
        return s + "]";
    }

    static constexpr uint32_t kMaxDim = 12;

private:
    uint32_t n_;
    Modulus mod_;
    std::vector<uint32_t> e_; // row-major packed residues

    // Gauss-Jordan with unit pivots; valid over fields and local rings Z_{p^r}.
    Mat inverse_local() const {
        Mat a(*this), inv = identity(n_, mod_);
        for (uint32_t col = 0; col < n_; ++col) {
            uint32_t piv = n_;
            for (uint32_t row = col; row < n_; ++row)
                if (a.at(row, col).is_unit()) { piv = row; break; }
            if (piv == n_) throw singular_error("Mat: not invertible");
            if (piv != col) { a.swap_rows(piv, col); inv.swap_rows(piv, col); }
            Residue s = a.at(col, col).inverse();
            a.scale_row(col, s);
            inv.scale_row(col, s);
            for (uint32_t row = 0; row < n_; ++row) {
                if (row == col) continue;
                Residue f = a.at(row, col);
                if (f.is_zero()) continue;
                a.add_scaled_row(row, col, -f);
                inv.add_scaled_row(row, col, -f);
            }
        }
        return inv;
    }

    // Composite m: invert modulo each prime power and recombine.
    Mat inverse_crt() const {
        uint32_t m = mod_.m();
        std::vector<uint32_t> pps;
        uint32_t n = m;
        for (uint32_t d = 2; d <= n; ++d) {
            if (n % d) continue;
            uint32_t pp = 1;
            while (n % d == 0) { n /= d; pp *= d; }
            pps.push_back(pp);
        }
        Mat out(n_, mod_);
        std::vector<Mat> parts;
        parts.reserve(pps.size());
        for (uint32_t pp : pps) {
            Modulus sub = Modulus::zmod(pp);
            Mat red(n_, sub);
            for (uint32_t i = 0; i < n_ * n_; ++i) red.e_[i] = e_[i] % pp;
            parts.push_back(red.inverse_local());
        }
        for (uint32_t i = 0; i < n_ * n_; ++i) {
            uint64_t x = 0;
            for (size_t k = 0; k < pps.size(); ++k) {
                uint64_t q = m / pps[k];
                uint64_t qinv = Residue(q, Modulus::zmod(pps[k])).inverse().a();
                x = (x + uint64_t(parts[k].e_[i]) * q % m * qinv) % m;
            }
            out.e_[i] = uint32_t(x);
        }
        return out;
    }

    void swap_rows(uint32_t i, uint32_t j) {
        for (uint32_t k = 0; k < n_; ++k) std::swap(e_[i * n_ + k], e_[j * n_ + k]);
    }
    void scale_row(uint32_t i, const Residue& s) {
        for (uint32_t k = 0; k < n_; ++k) set(i, k, at(i, k) * s);
    }
    void add_scaled_row(uint32_t dst, uint32_t src, const Residue& s) {
        for (uint32_t k = 0; k < n_; ++k) set(dst, k, at(dst, k) + at(src, k) * s);
    }
};

} // namespace mfq
