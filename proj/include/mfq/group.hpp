#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mfq/element.hpp"
#include "mfq/prng.hpp"

namespace mfq {

constexpr uint64_t kDefaultEnumerationCap = 5'000'000;

// least k >= 1 with x^k = identity (for matrix-mod-scalars the representative
// already absorbs scalars). Iterated multiplication; `cap` bounds the probe.
inline uint64_t element_order(const GroupElement& x, uint64_t cap = 1'000'000) {
    if (cap < 1) throw input_error("element_order: cap >= 1 required");
    if (x.is_perm()) {
        uint64_t k = x.perm().order(); // lcm of cycle lengths
        if (k > cap) throw cap_exceeded("element_order: order exceeds cap");
        return k;
    }
    GroupElement acc = x;
    uint64_t k = 1;
    while (!acc.is_identity()) {
        acc = acc * x;
        if (++k > cap) throw cap_exceeded("element_order: cap " + std::to_string(cap));
    }
    return k;
}

inline GroupElement element_power(const GroupElement& x, uint64_t e) {
    GroupElement out = x.identity_like(), base = x;
    while (e) {
        if (e & 1) out = out * base;
        if (e >>= 1) base = base * base;
    }
    return out;
}

struct Spectrum {
    std::vector<uint64_t> orders; // sorted, deduplicated
    bool exact = false;

    bool contains(uint64_t k) const {
        return std::binary_search(orders.begin(), orders.end(), k);
    }
    bool contains_all(std::initializer_list<uint64_t> ks) const {
        for (uint64_t k : ks)
            if (!contains(k)) return false;
        return true;
    }
};

// A finite group given by generators, optionally with its full element set.
// After enumeration the element list is sorted into canonical order, so all
// downstream indexing is deterministic regardless of traversal order.
class EnumeratedGroup {
public:
    explicit EnumeratedGroup(GenSet gens) : gens_(std::move(gens)) {}

    const GenSet& gens() const { return gens_; }
    bool enumerated() const { return enumerated_; }
    uint64_t order() const {
        if (!enumerated_) throw unsupported("group order unknown (not enumerated)");
        return elems_.size();
    }
    const std::vector<GroupElement>& elements() const {
        if (!enumerated_) throw unsupported("group not enumerated");
        return elems_;
    }
    GroupElement identity() const { return gens_.generators.front().identity_like(); }

    bool contains(const GroupElement& x) const {
        if (!enumerated_) throw unsupported("membership needs enumeration");
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }
    uint32_t index_of(const GroupElement& x) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || !(*it == x)) throw input_error("element not in group");
        return uint32_t(it - elems_.begin());
    }

    void set_elements(std::vector<GroupElement> elems) {
        std::sort(elems.begin(), elems.end());
        elems_ = std::move(elems);
        enumerated_ = true;
    }

private:
    GenSet gens_;
    std::vector<GroupElement> elems_;
    bool enumerated_ = false;
};

// Breadth-first closure under generator multiplication from the identity.
// On hitting the cap the group is returned non-enumerated, order unknown.
inline EnumeratedGroup enumerate_group(const GenSet& gens,
                                       uint64_t cap = kDefaultEnumerationCap) {
    if (cap < 1) throw input_error("enumerate_group: cap >= 1 required");
    EnumeratedGroup g(gens);
    std::unordered_set<GroupElement, GroupElementHash> seen;
    std::deque<const GroupElement*> frontier;
    GroupElement id = gens.generators.front().identity_like();
    frontier.push_back(&*seen.insert(id).first);
    bool capped = false;
    while (!frontier.empty() && !capped) {
        const GroupElement* x = frontier.front();
        frontier.pop_front();
        for (const GroupElement& gen : gens.generators) {
            GroupElement y = *x * gen;
            auto [it, fresh] = seen.insert(std::move(y));
            if (fresh) {
                if (seen.size() > cap) { capped = true; break; }
                frontier.push_back(&*it);
            }
        }
    }
    if (capped) return g; // non-enumerated
    std::vector<GroupElement> elems(seen.begin(), seen.end());
    g.set_elements(std::move(elems));
    return g;
}

// Product-replacement walk. Deterministic for a fixed seed; outputs lie in
// the generated subgroup by construction.
class RandomWalk {
public:
    RandomWalk(const GenSet& gens, uint64_t seed, uint32_t slate_size = 10,
               uint32_t burn_in = 50)
        : rng_(seed) {
        for (uint32_t i = 0; i < std::max<size_t>(slate_size, gens.generators.size()); ++i)
            slate_.push_back(gens.generators[i % gens.generators.size()]);
        for (uint32_t i = 0; i < burn_in; ++i) step();
    }

    GroupElement next() {
        step();
        return slate_[last_];
    }

private:
    std::vector<GroupElement> slate_;
    SplitMix64 rng_;
    size_t last_ = 0;

    void step() {
        size_t i = size_t(rng_.below(slate_.size()));
        size_t j = size_t(rng_.below(slate_.size() - 1));
        if (j >= i) ++j;
        slate_[i] = rng_.below(2) ? slate_[i] * slate_[j] : slate_[j] * slate_[i];
        last_ = i;
    }
};

inline std::vector<GroupElement> random_elements(const GenSet& gens, uint64_t n, uint64_t seed) {
    if (n < 1) throw input_error("random_elements: n >= 1 required");
    RandomWalk walk(gens, seed);
    std::vector<GroupElement> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i) out.push_back(walk.next());
    return out;
}

// Exact spectrum when enumerated, otherwise a sampled subset of the true
// spectrum from `sample_budget` random elements.
inline Spectrum order_spectrum(const EnumeratedGroup& g, uint64_t sample_budget = 0,
                               uint64_t seed = 1) {
    Spectrum s;
    std::unordered_set<uint64_t> orders;
    if (g.enumerated()) {
        for (const GroupElement& x : g.elements()) orders.insert(element_order(x));
        s.exact = true;
    } else {
        if (sample_budget == 0) throw unsupported("sampled spectrum needs a budget");
        RandomWalk walk(g.gens(), seed);
        for (uint64_t i = 0; i < sample_budget; ++i)
            orders.insert(element_order(walk.next()));
        s.exact = false;
    }
    s.orders.assign(orders.begin(), orders.end());
    std::sort(s.orders.begin(), s.orders.end());
    return s;
}

struct CosetAction {
    uint32_t degree = 0;                     // [G:H]
    std::vector<Perm> generator_images;      // one per generator of G
    std::vector<uint32_t> coset_of_element;  // indexed like G.elements()
    std::vector<uint32_t> coset_rep;         // minimal element index per coset
};

// Left cosets gH with canonical indexing: cosets are numbered in order of
// their minimal element (elements are scanned in canonical sorted order, so
// the first unassigned element is its coset's minimal representative).
inline CosetAction coset_action(const EnumeratedGroup& g, const GenSet& h_gens) {
    if (!g.enumerated()) throw unsupported("coset_action: G must be enumerated");
    for (const auto& x : h_gens.generators)
        if (!g.contains(x)) throw input_error("coset_action: H generator outside G");
    EnumeratedGroup h = enumerate_group(h_gens, g.order());
    if (!h.enumerated()) throw internal_inconsistency("coset_action: H closure failed");

    const auto& elems = g.elements();
    CosetAction act;
    act.coset_of_element.assign(elems.size(), UINT32_MAX);
    uint32_t next_coset = 0;
    for (uint32_t i = 0; i < elems.size(); ++i) {
        if (act.coset_of_element[i] != UINT32_MAX) continue;
        for (const GroupElement& hh : h.elements()) {
            uint32_t j = g.index_of(elems[i] * hh);
            act.coset_of_element[j] = next_coset;
        }
        ++next_coset;
    }
    act.degree = next_coset;
    if (uint64_t(act.degree) * h.order() != g.order())
        throw internal_inconsistency("coset_action: |G| != [G:H]|H|");

    // coset representatives: minimal element of each coset
    act.coset_rep.assign(act.degree, UINT32_MAX);
    for (uint32_t i = 0; i < elems.size(); ++i)
        if (act.coset_rep[act.coset_of_element[i]] == UINT32_MAX)
            act.coset_rep[act.coset_of_element[i]] = i;

    for (const GroupElement& gen : g.gens().generators) {
        std::vector<uint16_t> img(act.degree);
        for (uint32_t c = 0; c < act.degree; ++c) {
            uint32_t j = g.index_of(gen * elems[act.coset_rep[c]]);
            img[c] = uint16_t(act.coset_of_element[j]);
        }
        act.generator_images.emplace_back(std::move(img));
    }
    return act;
}

// Image of an arbitrary element of G under the coset action.
inline Perm coset_image(const EnumeratedGroup& g, const CosetAction& act,
                        const GroupElement& x) {
    const auto& elems = g.elements();
    std::vector<uint16_t> img(act.degree);
    for (uint32_t c = 0; c < act.degree; ++c)
        img[c] = uint16_t(act.coset_of_element[g.index_of(x * elems[act.coset_rep[c]])]);
    return Perm(std::move(img));
}

} // namespace mfq
