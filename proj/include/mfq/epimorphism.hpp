#pragma once

#include <algorithm>
#include <vector>

#include "mfq/group.hpp"
#include "mfq/signature.hpp"
#include "mfq/subgroups.hpp"

namespace mfq {

// Generator-image assignment from a Fuchsian group of signature (0;a,b,c) or
// (1;m) onto an enumerated finite group. For the triangle shapes the three
// elliptic images satisfy x1 x2 x3 = 1; for (1;m) the elliptic image is the
// inverse commutator of the two handle images.
struct Epimorphism {
    Signature domain;
    const EnumeratedGroup* codomain = nullptr;
    std::vector<GroupElement> free_images; // (x1, x2) or (a, b)
    bool surface_kernel = false;

    std::vector<GroupElement> elliptic_images() const {
        if (domain.is_triangle()) {
            const GroupElement &x1 = free_images[0], &x2 = free_images[1];
            return {x1, x2, (x1 * x2).inverse()};
        }
        if (domain.is_genus1_one_period()) {
            const GroupElement &a = free_images[0], &b = free_images[1];
            return {(a * b * a.inverse() * b.inverse()).inverse()};
        }
        throw unsupported("elliptic_images: unsupported signature shape");
    }

    bool operator<(const Epimorphism& o) const { return free_images < o.free_images; }
};

// Exhaustive epimorphism search over the two searchable shapes. With
// surface_kernel the elliptic images must have the exact period orders;
// otherwise the product/commutator order only has to divide its period.
// up_to_conjugacy restricts the first image to class representatives.
inline std::vector<Epimorphism> find_epimorphisms(const Signature& sig,
                                                  const EnumeratedGroup& g,
                                                  bool surface_kernel = true,
                                                  bool up_to_conjugacy = true) {
    if (!g.enumerated()) throw unsupported("find_epimorphisms: G must be enumerated");
    std::vector<Epimorphism> out;
    const uint64_t n = g.order();

    auto generates = [&](const GroupElement& a, const GroupElement& b) {
        EnumeratedGroup h = enumerate_group(GenSet({a, b}), n);
        return h.enumerated() && h.order() == n;
    };

    if (sig.is_triangle()) {
        uint32_t m1 = sig.periods[0], m2 = sig.periods[1], m3 = sig.periods[2];
        std::vector<GroupElement> firsts =
            up_to_conjugacy ? class_reps_of_order(g, m1) : elements_of_order(g, m1);
        std::vector<GroupElement> seconds = elements_of_order(g, m2);
        for (const GroupElement& x1 : firsts)
            for (const GroupElement& x2 : seconds) {
                uint64_t o;
                try {
                    o = element_order(x1 * x2, m3);
                } catch (const cap_exceeded&) {
                    continue;
                }
                bool ok = surface_kernel ? (o == m3) : (m3 % o == 0);
                if (!ok || !generates(x1, x2)) continue;
                out.push_back({sig, &g, {x1, x2}, surface_kernel});
            }
    } else if (sig.is_genus1_one_period()) {
        uint32_t m = sig.periods[0];
        // first handle image over class representatives of every order
        std::vector<GroupElement> firsts;
        if (up_to_conjugacy) {
            std::unordered_set<GroupElement, GroupElementHash> assigned;
            for (const GroupElement& x : g.elements()) {
                if (assigned.count(x)) continue;
                firsts.push_back(x);
                for (const GroupElement& y : conjugacy_class(g, x)) assigned.insert(y);
            }
        } else {
            firsts = g.elements();
        }
        for (const GroupElement& a : firsts)
            for (const GroupElement& b : g.elements()) {
                GroupElement x = (a * b * a.inverse() * b.inverse()).inverse();
                uint64_t o = element_order(x, m + 1);
                bool ok = surface_kernel ? (o == m) : (m % o == 0);
                if (!ok || !generates(a, b)) continue;
                out.push_back({sig, &g, {a, b}, surface_kernel});
            }
    } else {
        throw unsupported("find_epimorphisms: only (0;a,b,c) and (1;m) are searchable");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Singerman's subgroup-signature procedure: the preimage of H under an
// epimorphism from a Fuchsian group, computed from the cycle structure of the
// elliptic images on the cosets of H.
inline Signature preimage_signature(const Epimorphism& epi, const GenSet& h_gens) {
    const EnumeratedGroup& g = *epi.codomain;
    CosetAction act = coset_action(g, h_gens);
    uint64_t d = act.degree;

    std::vector<uint32_t> periods;
    std::vector<GroupElement> elliptics = epi.elliptic_images();
    for (size_t i = 0; i < elliptics.size(); ++i) {
        uint32_t m = epi.domain.periods[i];
        Perm image = coset_image(g, act, elliptics[i]);
        for (uint32_t c : image.cycle_lengths()) {
            if (m % c != 0)
                throw internal_inconsistency("preimage_signature: cycle does not divide period");
            if (c < m) periods.push_back(m / c);
        }
    }
    std::sort(periods.begin(), periods.end());

    // d * mu(domain) = 2g' - 2 + sum(1 - 1/m'): solve for the genus
    Rational rhs = epi.domain.measure() * int64_t(d) + Rational(2);
    for (uint32_t m : periods) rhs = rhs - Rational(int64_t(m) - 1, m);
    if (!rhs.is_integer() || rhs.num() < 0 || rhs.num() % 2 != 0)
        throw internal_inconsistency("preimage_signature: non-integral genus");
    return Signature(uint32_t(rhs.num() / 2), std::move(periods));
}

} // namespace mfq
