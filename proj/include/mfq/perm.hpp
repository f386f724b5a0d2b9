#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mfq/errors.hpp"

namespace mfq {

// Permutation of 0..d-1 by image array.
class Perm {
public:
    explicit Perm(uint32_t degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), uint16_t(0));
    }
    explicit Perm(std::vector<uint16_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (uint16_t v : img_) {
            if (v >= img_.size() || seen[v]) throw input_error("Perm: not a bijection");
            seen[v] = true;
        }
    }

    // Product of cycles in 0-based point labels, e.g. {{0,1,2},{3,4}}.
    static Perm from_cycles(uint32_t degree, const std::vector<std::vector<uint16_t>>& cycles) {
        std::vector<uint16_t> img(degree);
        std::iota(img.begin(), img.end(), uint16_t(0));
        for (const auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (cyc[i] >= degree) throw input_error("Perm: point out of range");
                img[cyc[i]] = cyc[(i + 1) % cyc.size()];
            }
        return Perm(std::move(img));
    }

    uint32_t degree() const { return uint32_t(img_.size()); }
    uint16_t operator[](uint32_t x) const { return img_[x]; }
    const std::vector<uint16_t>& images() const { return img_; }

    bool is_identity() const {
        for (uint32_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm operator*(const Perm& o) const { // (this * o)(x) = this(o(x))
        if (degree() != o.degree()) throw input_error("Perm: degree mismatch");
        std::vector<uint16_t> img(img_.size());
        for (uint32_t x = 0; x < img_.size(); ++x) img[x] = img_[o.img_[x]];
        Perm p(0);
        p.img_ = std::move(img);
        return p;
    }

    Perm inverse() const {
        std::vector<uint16_t> img(img_.size());
        for (uint32_t x = 0; x < img_.size(); ++x) img[img_[x]] = uint16_t(x);
        Perm p(0);
        p.img_ = std::move(img);
        return p;
    }

    std::vector<uint32_t> cycle_lengths() const {
        std::vector<uint32_t> out;
        std::vector<bool> seen(img_.size(), false);
        for (uint32_t x = 0; x < img_.size(); ++x) {
            if (seen[x]) continue;
            uint32_t len = 0, y = x;
            do { seen[y] = true; y = img_[y]; ++len; } while (y != x);
            out.push_back(len);
        }
        return out;
    }

    uint64_t order() const {
        uint64_t k = 1;
        for (uint32_t len : cycle_lengths()) k = std::lcm(k, uint64_t(len));
        return k;
    }

    bool even() const {
        uint32_t transpositions = 0;
        for (uint32_t len : cycle_lengths()) transpositions += len - 1;
        return transpositions % 2 == 0;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return img_ < o.img_;
    }

    std::string to_string() const {
        std::string s;
        std::vector<bool> seen(img_.size(), false);
        for (uint32_t x = 0; x < img_.size(); ++x) {
            if (seen[x] || img_[x] == x) { seen[x] = true; continue; }
            s += "(";
            uint32_t y = x;
            bool first = true;
            do {
                s += (first ? "" : " ") + std::to_string(y);
                first = false;
                seen[y] = true;
                y = img_[y];
            } while (y != x);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

private:
    std::vector<uint16_t> img_;
};

} // namespace mfq
