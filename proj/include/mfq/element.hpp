#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mfq/matrix.hpp"
#include "mfq/perm.hpp"

namespace mfq {

// Matrix considered up to scalar units: the representative is normalized so
// that its first nonzero entry is 1. Only defined over fields, where every
// nonzero scalar is a unit; this makes set membership deterministic.
class ProjMat {
public:
    explicit ProjMat(const Mat& m) : rep_(normalize(m)) {}

    const Mat& rep() const { return rep_; }
    uint32_t dim() const { return rep_.dim(); }
    const Modulus& modulus() const { return rep_.modulus(); }

    bool is_identity() const { return rep_.is_scalar(); }

    ProjMat operator*(const ProjMat& o) const { return ProjMat(rep_ * o.rep_); }
    ProjMat inverse() const { return ProjMat(rep_.inverse()); }

    bool operator==(const ProjMat& o) const { return rep_ == o.rep_; }
    bool operator<(const ProjMat& o) const { return rep_ < o.rep_; }

    std::string to_string() const { return "[" + rep_.to_string() + "]"; }

private:
    Mat rep_;

    static Mat normalize(const Mat& m) {
        if (!m.modulus().field())
            throw input_error("ProjMat: scalar normalization needs a field");
        const auto& e = m.packed_entries();
        for (uint32_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Residue lead = Residue::from_packed(e[i], m.modulus());
            if (lead.is_one()) return m;
            Residue s = lead.inverse();
            Mat out(m.dim(), m.modulus());
            for (uint32_t r = 0; r < m.dim(); ++r)
                for (uint32_t c = 0; c < m.dim(); ++c) out.set(r, c, m.at(r, c) * s);
            return out;
        }
        throw input_error("ProjMat: zero matrix");
    }
};

// One group element: a permutation, a matrix, or a matrix up to scalars.
class GroupElement {
public:
    GroupElement(Perm p) : v_(std::move(p)) {}
    GroupElement(Mat m) : v_(std::move(m)) {}
    GroupElement(ProjMat m) : v_(std::move(m)) {}

    bool is_perm() const { return v_.index() == 0; }
    bool is_mat() const { return v_.index() == 1; }
    bool is_projmat() const { return v_.index() == 2; }

    const Perm& perm() const { return std::get<Perm>(v_); }
    const Mat& mat() const { return std::get<Mat>(v_); }
    const ProjMat& projmat() const { return std::get<ProjMat>(v_); }

    bool is_identity() const {
        switch (v_.index()) {
            case 0: return perm().is_identity();
            case 1: return mat().is_identity();
            default: return projmat().is_identity();
        }
    }

    GroupElement operator*(const GroupElement& o) const {
        if (v_.index() != o.v_.index()) throw input_error("GroupElement: variant mismatch");
        switch (v_.index()) {
            case 0: return GroupElement(perm() * o.perm());
            case 1: return GroupElement(mat() * o.mat());
            default: return GroupElement(projmat() * o.projmat());
        }
    }

    GroupElement inverse() const {
        switch (v_.index()) {
            case 0: return GroupElement(perm().inverse());
            case 1: return GroupElement(mat().inverse());
            default: return GroupElement(projmat().inverse());
        }
    }

    GroupElement identity_like() const {
        switch (v_.index()) {
            case 0: return GroupElement(Perm(perm().degree()));
            case 1: return GroupElement(Mat::identity(mat().dim(), mat().modulus()));
            default:
                return GroupElement(
                    ProjMat(Mat::identity(projmat().dim(), projmat().modulus())));
        }
    }

    bool same_shape(const GroupElement& o) const {
        if (v_.index() != o.v_.index()) return false;
        switch (v_.index()) {
            case 0: return perm().degree() == o.perm().degree();
            case 1: return mat().dim() == o.mat().dim() && mat().modulus() == o.mat().modulus();
            default:
                return projmat().dim() == o.projmat().dim() &&
                       projmat().modulus() == o.projmat().modulus();
        }
    }

    bool operator==(const GroupElement& o) const { return v_ == o.v_; }
    bool operator<(const GroupElement& o) const {
        if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
        switch (v_.index()) {
            case 0: return perm() < o.perm();
            case 1: return mat() < o.mat();
            default: return projmat() < o.projmat();
        }
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(v_.index());
        switch (v_.index()) {
            case 0:
                for (uint16_t x : perm().images()) mix(x);
                break;
            case 1:
                mix(uint64_t(mat().dim()) << 32 | mat().modulus().m());
                for (uint32_t e : mat().packed_entries()) mix(e);
                break;
            default:
                mix(uint64_t(projmat().dim()) << 32 | projmat().modulus().m());
                for (uint32_t e : projmat().rep().packed_entries()) mix(e);
                break;
        }
        return size_t(h);
    }

    std::string to_string() const {
        switch (v_.index()) {
            case 0: return perm().to_string();
            case 1: return mat().to_string();
            default: return projmat().to_string();
        }
    }

private:
    std::variant<Perm, Mat, ProjMat> v_;
};

struct GroupElementHash {
    size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// Nonempty generator list, all of one shape.
struct GenSet {
    std::vector<GroupElement> generators;
    std::string label;

    GenSet(std::vector<GroupElement> gens, std::string lbl = "")
        : generators(std::move(gens)), label(std::move(lbl)) {
        if (generators.empty()) throw input_error("GenSet: empty");
        for (const auto& g : generators)
            if (!g.same_shape(generators.front()))
                throw input_error("GenSet: mixed element shapes");
    }
};

} // namespace mfq
