#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace mfq {

// Structured verdict for one catalog record under an exclusion cascade.
struct ExclusionVerdict {
    std::string name;
    std::string rule; // small-index | no-S5 | no-PSL27 | missing-order | not-excluded
    std::vector<uint64_t> missing_orders; // populated for missing-order
    std::vector<std::string> evidence;    // provenance-tagged facts consumed

    std::string summary() const {
        std::string s = name + ": " + rule;
        if (!missing_orders.empty()) {
            s += "(";
            for (size_t i = 0; i < missing_orders.size(); ++i)
                s += (i ? "," : "") + std::to_string(missing_orders[i]);
            s += ")";
        }
        return s;
    }
};

// Machine- and human-readable run record. Contains no timestamps or
// durations: reruns from the same inputs must be byte-identical.
struct Report {
    std::string pipeline;
    std::map<std::string, std::string> inputs; // bounds, catalog hash, seeds
    std::vector<ExclusionVerdict> verdicts;
    std::vector<std::string> survivors;
    std::vector<std::string> checks;        // re-verifications that ran and passed
    std::vector<std::string> assumptions;   // cited external facts (axioms)
    std::vector<std::string> trusted_facts; // tier-(c)/ATLAS data consumed
    std::vector<std::string> findings;      // discrepancies and notable facts
    std::string conclusion;
    int exit_code = 0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["pipeline"] = pipeline;
        j["inputs"] = inputs;
        j["verdicts"] = nlohmann::json::array();
        for (const auto& v : verdicts) {
            nlohmann::json vj;
            vj["name"] = v.name;
            vj["rule"] = v.rule;
            vj["missing_orders"] = v.missing_orders;
            vj["evidence"] = v.evidence;
            j["verdicts"].push_back(vj);
        }
        j["survivors"] = survivors;
        j["checks"] = checks;
        j["assumption_ledger"] = assumptions;
        j["trusted_facts"] = trusted_facts;
        j["findings"] = findings;
        j["conclusion"] = conclusion;
        j["exit_code"] = exit_code;
        return j;
    }

    std::string to_text() const {
        std::string s;
        s += "== " + pipeline + " ==\n";
        for (const auto& [k, v] : inputs) s += k + ": " + v + "\n";
        if (!checks.empty()) {
            s += "\nchecks:\n";
            for (const auto& c : checks) s += "  [ok] " + c + "\n";
        }
        if (!verdicts.empty()) {
            s += "\nverdicts (" + std::to_string(verdicts.size()) + "):\n";
            for (const auto& v : verdicts) s += "  " + v.summary() + "\n";
        }
        s += "\nsurvivors: ";
        if (survivors.empty()) {
            s += "none\n";
        } else {
            for (size_t i = 0; i < survivors.size(); ++i) s += (i ? ", " : "") + survivors[i];
            s += "\n";
        }
        if (!findings.empty()) {
            s += "\nfindings:\n";
            for (const auto& f : findings) s += "  [!] " + f + "\n";
        }
        if (!trusted_facts.empty()) {
            s += "\ntrusted external facts:\n";
            for (const auto& f : trusted_facts) s += "  [ext] " + f + "\n";
        }
        s += "\nassumption ledger:\n";
        for (const auto& a : assumptions) s += "  [axiom] " + a + "\n";
        s += "\nconclusion: " + conclusion + "\n";
        s += "exit: " + std::to_string(exit_code) + "\n";
        return s;
    }
};

// The cited external facts every replay rests on, phrased as used.
inline std::vector<std::string> standard_assumptions(uint32_t genus) {
    std::string g = std::to_string(genus);
    std::vector<std::string> a = {
        "perfectness: the genus-" + g +
            " mapping class group is perfect, so a minimal nontrivial finite quotient is a "
            "nonabelian simple group",
        "normal generation by involutions: an involution of type ((g-1)/2;2^4) for odd g, "
        "resp. (g/2;2,2) for even g, normally generates the genus-g mapping class group",
        "small index: every proper subgroup of the genus-" + g +
            " mapping class group has index larger than " + std::to_string(4 * genus + 4) +
            "; no surjection onto a transitive subgroup of A_n for n <= " +
            std::to_string(4 * genus + 4),
        "maximal cyclic pieces: powers h^k (1 <= k <= 2g) of a periodic mapping class of "
        "maximal order 4g+2 normally generate; the normal closure of the hyperelliptic "
        "involution h^(2g+1) is the kernel of the reduction to PSp_2g(Z)",
        "congruence subgroup property for Sp_2g(Z), g >= 2: finite quotients factor "
        "through some Sp_2g(Z_k)",
        "classification of finite simple groups: the catalog scan (families plus 26 "
        "sporadic groups) is complete below the bound",
        "the type-(0;2^(2g+2)) hyperelliptic involution lies in the kernel of the "
        "symplectic reduction (mapping-class-level fact, recorded not checked)",
    };
    return a;
}

} // namespace mfq
