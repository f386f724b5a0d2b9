#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mfq/group.hpp"

namespace mfq {

inline std::vector<GroupElement> elements_of_order(const EnumeratedGroup& g, uint64_t k) {
    std::vector<GroupElement> out;
    for (const GroupElement& x : g.elements())
        if (element_order(x) == k) out.push_back(x);
    return out;
}

// Conjugacy class of x as the orbit of x under conjugation by generators.
inline std::vector<GroupElement> conjugacy_class(const EnumeratedGroup& g,
                                                 const GroupElement& x) {
    std::unordered_set<GroupElement, GroupElementHash> seen{x};
    std::deque<GroupElement> frontier{x};
    std::vector<GroupElement> inverses;
    for (const auto& gen : g.gens().generators) inverses.push_back(gen.inverse());
    while (!frontier.empty()) {
        GroupElement y = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i < g.gens().generators.size(); ++i) {
            GroupElement z = g.gens().generators[i] * y * inverses[i];
            if (seen.insert(z).second) frontier.push_back(z);
        }
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Representatives (canonical-least element of each class) of the conjugacy
// classes meeting the given element order.
inline std::vector<GroupElement> class_reps_of_order(const EnumeratedGroup& g, uint64_t k) {
    std::vector<GroupElement> pool = elements_of_order(g, k); // sorted (elements() sorted)
    std::vector<GroupElement> reps;
    std::unordered_set<GroupElement, GroupElementHash> assigned;
    for (const GroupElement& x : pool) {
        if (assigned.count(x)) continue;
        reps.push_back(x);
        for (const GroupElement& y : conjugacy_class(g, x)) assigned.insert(y);
    }
    return reps;
}

enum class SearchVerdict { Found, Absent, Indeterminate };

struct SubgroupWitness {
    SearchVerdict verdict = SearchVerdict::Indeterminate;
    std::vector<GroupElement> generators; // filled iff Found
    std::string note;
};

enum class TargetKind { PSL27, S5, Q8, Zn };

struct TargetSpec {
    TargetKind kind;
    uint64_t n = 0; // for Zn
};

namespace detail {

inline bool closure_has_order(const std::vector<GroupElement>& gens, uint64_t want) {
    EnumeratedGroup h = enumerate_group(GenSet(gens), want + 1);
    return h.enumerated() && h.order() == want;
}

// Pair search with the first coordinate reduced to conjugacy-class
// representatives: any conjugate pair generates a conjugate subgroup.
template <typename Check>
SubgroupWitness pair_search(const EnumeratedGroup& g, uint64_t ord_a, uint64_t ord_b,
                            Check&& accept, uint64_t budget) {
    SubgroupWitness w;
    std::vector<GroupElement> reps = class_reps_of_order(g, ord_a);
    std::vector<GroupElement> bs = elements_of_order(g, ord_b);
    uint64_t tried = 0;
    for (const GroupElement& a : reps)
        for (const GroupElement& b : bs) {
            if (budget && ++tried > budget) {
                w.verdict = SearchVerdict::Indeterminate;
                w.note = "search budget exceeded";
                return w;
            }
            if (accept(a, b)) {
                w.verdict = SearchVerdict::Found;
                w.generators = {a, b};
                return w;
            }
        }
    w.verdict = SearchVerdict::Absent;
    w.note = "exhaustive over class representatives of the first coordinate";
    return w;
}

} // namespace detail

// Exhaustive witness search for the named subgroup types. Absence is only
// certified when the scan ran to completion; a budget stop is Indeterminate.
inline SubgroupWitness find_subgroup_by_type(const EnumeratedGroup& g, const TargetSpec& spec,
                                             uint64_t budget = 0) {
    if (!g.enumerated()) throw unsupported("find_subgroup_by_type: G must be enumerated");
    switch (spec.kind) {
        case TargetKind::Zn: {
            SubgroupWitness w;
            for (const GroupElement& x : g.elements())
                if (element_order(x) == spec.n) {
                    w.verdict = SearchVerdict::Found;
                    w.generators = {x};
                    return w;
                }
            w.verdict = SearchVerdict::Absent;
            return w;
        }
        case TargetKind::PSL27:
            // (2,3,7) pair generating a group of order 168. A group of order
            // 168 generated by such a pair is a Hurwitz group, hence PSL(2,7).
            return detail::pair_search(
                g, 2, 3,
                [&](const GroupElement& a, const GroupElement& b) {
                    GroupElement ab = a * b;
                    uint64_t o;
                    try { o = element_order(ab, 200); } catch (const cap_exceeded&) { return false; }
                    return o == 7 && detail::closure_has_order({a, b}, 168);
                },
                budget);
        case TargetKind::S5:
            // (2,4,5) pair generating order 120 forces S5: the only order-120
            // group generated by an involution and an order-4 element whose
            // product has order 5.
            return detail::pair_search(
                g, 2, 4,
                [&](const GroupElement& a, const GroupElement& b) {
                    GroupElement ab = a * b;
                    uint64_t o;
                    try { o = element_order(ab, 200); } catch (const cap_exceeded&) { return false; }
                    return o == 5 && detail::closure_has_order({a, b}, 120);
                },
                budget);
        case TargetKind::Q8:
            return detail::pair_search(
                g, 4, 4,
                [&](const GroupElement& a, const GroupElement& b) {
                    GroupElement a2 = a * a;
                    if (!(a2 == b * b)) return false;
                    if (!(b * a * b.inverse() == a.inverse())) return false;
                    return detail::closure_has_order({a, b}, 8);
                },
                budget);
    }
    throw input_error("find_subgroup_by_type: unknown target");
}

inline TargetSpec target_psl27() { return {TargetKind::PSL27, 0}; }
inline TargetSpec target_s5() { return {TargetKind::S5, 0}; }
inline TargetSpec target_q8() { return {TargetKind::Q8, 0}; }
inline TargetSpec target_zn(uint64_t n) { return {TargetKind::Zn, n}; }

// Normal closure of x in G.
inline EnumeratedGroup normal_closure(const EnumeratedGroup& g, const GroupElement& x) {
    std::vector<GroupElement> cls = conjugacy_class(g, x);
    return enumerate_group(GenSet(std::move(cls)), g.order());
}

// No proper nontrivial normal subgroup; checked via normal closures of
// conjugacy-class representatives. Meant for enumerated groups of modest
// order (the artifact needs it up to a few thousand elements).
inline bool is_simple(const EnumeratedGroup& g) {
    if (!g.enumerated()) throw unsupported("is_simple: G must be enumerated");
    if (g.order() == 1) return false;
    std::unordered_set<GroupElement, GroupElementHash> assigned;
    for (const GroupElement& x : g.elements()) {
        if (x.is_identity() || assigned.count(x)) continue;
        std::vector<GroupElement> cls = conjugacy_class(g, x);
        for (const GroupElement& y : cls) assigned.insert(y);
        EnumeratedGroup n = enumerate_group(GenSet(std::move(cls)), g.order());
        if (!n.enumerated() || n.order() != g.order()) return false;
    }
    return true;
}

struct CenterInfo {
    std::vector<GroupElement> center; // scalar matrices in G
    uint64_t projective_order = 0;    // |G| / |center|
};

// Scalar-matrix center of an enumerated matrix group and the order of its
// central quotient.
inline CenterInfo center_and_projective(const EnumeratedGroup& g) {
    if (!g.enumerated()) throw unsupported("center_and_projective: G must be enumerated");
    CenterInfo info;
    for (const GroupElement& x : g.elements()) {
        if (!x.is_mat()) throw unsupported("center_and_projective: matrix groups only");
        if (x.mat().is_scalar()) info.center.push_back(x);
    }
    info.projective_order = g.order() / info.center.size();
    return info;
}

} // namespace mfq
