// mfq: minimal-finite-quotient verifier CLI.
//
// Replays the genus-3/4 minimal-quotient computations against the shipped
// simple-group catalog, and exposes the underlying machinery (orders,
// spectra, Fuchsian signatures, epimorphism search, congruence checks).

#include <iostream>

#include <CLI11.hpp>

#include "mfq/congruence.hpp"
#include "mfq/replay.hpp"

using namespace mfq;

namespace {

int run_order(const std::string& spec_text) {
    GroupSpec s = parse_group_spec(spec_text);
    std::cout << spec_order(s).to_string() << "\n";
    return 0;
}

int run_spectrum(const std::string& spec_text, uint64_t sample, uint64_t seed) {
    GroupSpec s = parse_group_spec(spec_text);
    GenSet gens = standard_generators(s);
    Spectrum sp;
    if (sample == 0) {
        EnumeratedGroup g = enumerate_group(gens);
        if (!g.enumerated()) {
            std::cerr << "group exceeds the enumeration cap; use --sample N\n";
            return 2;
        }
        sp = order_spectrum(g);
    } else {
        EnumeratedGroup g(gens); // not enumerated: sampled mode
        sp = order_spectrum(g, sample, seed);
    }
    std::cout << (sp.exact ? "exact" : "sampled") << " {";
    for (size_t i = 0; i < sp.orders.size(); ++i)
        std::cout << (i ? "," : "") << sp.orders[i];
    std::cout << "}\n";
    return 0;
}

int run_preimage(const std::string& sig_text, const std::string& group_text,
                 const std::string& sub_text) {
    Signature sig = parse_signature(sig_text);
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec(group_text)));
    if (!g.enumerated()) throw unsupported("group exceeds the enumeration cap");
    auto epis = find_epimorphisms(sig, g, true, true);
    if (epis.empty()) {
        std::cerr << "no surface-kernel epimorphism " << sig.to_string() << " -> "
                  << group_text << "\n";
        return 1;
    }
    GroupSpec sub = parse_group_spec(sub_text);
    if (sub.kind != GroupKind::Cyclic)
        throw unsupported("preimage subgroups: cyclic z(n) only");
    GroupElement x = g.identity();
    bool found = false;
    for (const GroupElement& cand : g.elements())
        if (element_order(cand) == sub.n) { x = cand; found = true; break; }
    if (!found) throw input_error("no subgroup of order " + std::to_string(sub.n));
    Signature pre = preimage_signature(epis.front(), GenSet({x}));
    std::cout << pre.to_string() << "\n";
    return 0;
}

int run_epi_find(const std::string& sig_text, const std::string& group_text,
                 bool surface_kernel, bool all_pairs, size_t show) {
    Signature sig = parse_signature(sig_text);
    EnumeratedGroup g = enumerate_group(standard_generators(parse_group_spec(group_text)));
    if (!g.enumerated()) throw unsupported("group exceeds the enumeration cap");
    auto epis = find_epimorphisms(sig, g, surface_kernel, !all_pairs);
    std::cout << epis.size() << " epimorphism(s) " << sig.to_string() << " -> " << group_text
              << (all_pairs ? "" : " (first generator up to conjugacy)") << "\n";
    for (size_t i = 0; i < std::min(show, epis.size()); ++i) {
        std::cout << "  images:";
        for (const auto& x : epis[i].elliptic_images()) std::cout << " " << x.to_string();
        std::cout << "\n";
    }
    return epis.empty() ? 1 : 0;
}

int run_ledger(uint32_t genus) {
    for (const auto& entry : injected_subgroup_ledger(genus)) {
        for (const std::string& line : verify_ledger_entry(entry))
            std::cout << "[ok] " << line << "\n";
        std::cout << "     carried by: " << entry.justification << "\n";
    }
    std::cout << "ledger for genus " << genus << " fully re-verified\n";
    return 0;
}

int emit_report(const Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.to_json().dump(1) << "\n";
    else
        std::cout << rep.to_text();
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mfq: replay the minimal finite quotient computations for mapping class "
                 "groups of genus 3 and 4"};
    app.require_subcommand(1);

    std::string spec_text, sig_text, group_text, sub_text;
    std::string catalog_path = "data/catalog.json";
    std::string format = "text";
    uint64_t sample = 0, seed = 1;
    uint32_t genus = 3;
    bool no_surface_kernel = false, all_pairs = false;
    size_t show = 4;

    auto* order_cmd = app.add_subcommand("order", "exact order of a group spec");
    order_cmd->add_option("spec", spec_text, "e.g. psp(6,2), sl(3,2), a(9), q8")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "element-order spectrum");
    spectrum_cmd->add_option("spec", spec_text)->required();
    spectrum_cmd->add_option("--sample", sample, "sample size (0 = exact enumeration)");
    spectrum_cmd->add_option("--seed", seed, "sampling seed");

    auto* signature_cmd = app.add_subcommand("signature", "Fuchsian signature computations");
    auto* preimage_cmd = signature_cmd->add_subcommand("preimage", "Singerman preimage");
    preimage_cmd->add_option("--sig", sig_text)->required();
    preimage_cmd->add_option("--group", group_text)->required();
    preimage_cmd->add_option("--subgroup", sub_text)->required();

    auto* epi_cmd = app.add_subcommand("epi", "epimorphism search");
    auto* epi_find = epi_cmd->add_subcommand("find", "search surface-kernel epimorphisms");
    epi_find->add_option("--sig", sig_text)->required();
    epi_find->add_option("--group", group_text)->required();
    epi_find->add_flag("--no-surface-kernel", no_surface_kernel);
    epi_find->add_flag("--all", all_pairs, "do not reduce by conjugacy");
    epi_find->add_option("--show", show, "image tuples to print");

    auto* ledger_cmd = app.add_subcommand("ledger", "re-verify the injected-subgroup ledger");
    ledger_cmd->add_option("--genus", genus, "3 or 4")->required();

    auto* replay_cmd = app.add_subcommand("replay", "replay pipelines");
    auto* g3_cmd = replay_cmd->add_subcommand("g3", "genus-3 minimality");
    auto* g4_cmd = replay_cmd->add_subcommand("g4", "genus-4 minimality");
    auto* frontier_cmd = replay_cmd->add_subcommand("frontier-g3", "genus-3 frontier scan");
    for (auto* c : {g3_cmd, g4_cmd, frontier_cmd}) {
        c->add_option("--catalog", catalog_path, "catalog file");
        c->add_option("--format", format, "text | json");
    }

    auto* congruence_cmd = app.add_subcommand("congruence", "desk-scale congruence checks");
    std::string cg_type = "sl";
    uint32_t cg_n = 2, cg_k = 6, cg_p = 2, cg_r = 2;
    auto* crt_cmd = congruence_cmd->add_subcommand("crt", "CRT factorization check");
    crt_cmd->add_option("--type", cg_type, "sl | sp");
    crt_cmd->add_option("--n", cg_n, "matrix dimension")->required();
    crt_cmd->add_option("--k", cg_k, "modulus")->required();
    auto* kernel_cmd = congruence_cmd->add_subcommand("kernel", "reduction kernel check");
    kernel_cmd->add_option("--type", cg_type);
    kernel_cmd->add_option("--n", cg_n)->required();
    kernel_cmd->add_option("--p", cg_p)->required();
    kernel_cmd->add_option("--r", cg_r)->required();
    auto* chain_cmd = congruence_cmd->add_subcommand("chain", "minimal-quotient chain");
    chain_cmd->add_option("--type", cg_type);
    chain_cmd->add_option("--n", cg_n)->required();
    chain_cmd->add_option("--p", cg_p)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
    std::string verify_name;
    auto* cverify = catalog_cmd->add_subcommand("verify", "verify one record");
    cverify->add_option("name", verify_name)->required();
    cverify->add_option("--catalog", catalog_path);
    auto* clist = catalog_cmd->add_subcommand("scan", "simple groups below a bound");
    std::string bound_text = "1451520";
    clist->add_option("bound", bound_text);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*order_cmd) return run_order(spec_text);
        if (*spectrum_cmd) return run_spectrum(spec_text, sample, seed);
        if (*preimage_cmd) return run_preimage(sig_text, group_text, sub_text);
        if (*epi_find) return run_epi_find(sig_text, group_text, !no_surface_kernel,
                                           all_pairs, show);
        if (*ledger_cmd) return run_ledger(genus);
        if (*g3_cmd) return emit_report(replay_g3(load_catalog(catalog_path)), format);
        if (*g4_cmd) return emit_report(replay_g4(load_catalog(catalog_path)), format);
        if (*frontier_cmd)
            return emit_report(frontier_g3(load_catalog(catalog_path)), format);
        if (*crt_cmd) {
            ModGroupType t = cg_type == "sp" ? ModGroupType::Sp : ModGroupType::SL;
            CrtReport r = crt_check({t, cg_n, cg_k});
            std::cout << r.spec.to_string() << ": order " << r.order << " =";
            for (size_t i = 0; i < r.factor_orders.size(); ++i)
                std::cout << (i ? " * " : " ") << r.factor_orders[i];
            std::cout << "\n  homomorphism: " << (r.homomorphism ? "ok" : "FAIL")
                      << ", injective: " << (r.injective ? "ok" : "FAIL")
                      << ", orders match: " << (r.orders_match ? "ok" : "FAIL") << " ("
                      << r.pairs_checked << " pairs checked)\n";
            return r.passed() ? 0 : 1;
        }
        if (*kernel_cmd) {
            ModGroupType t = cg_type == "sp" ? ModGroupType::Sp : ModGroupType::SL;
            KernelReport r = reduction_kernel_check(t, cg_n, cg_p, cg_r);
            std::cout << r.spec.to_string() << " -> mod " << r.p << ": |K| = "
                      << r.kernel_size << " (expected " << r.expected_size << ")\n"
                      << "  p-power orders: " << (r.all_p_power_orders ? "ok" : "FAIL")
                      << ", I+pA form: " << (r.all_one_plus_pa ? "ok" : "FAIL")
                      << ", (I+pA)^(p^(r-1)) = I: " << (r.binomial_identity ? "ok" : "FAIL")
                      << "\n";
            return r.passed() ? 0 : 1;
        }
        if (*chain_cmd) {
            ModGroupType t = cg_type == "sp" ? ModGroupType::Sp : ModGroupType::SL;
            ChainReport r = minimal_quotient_chain(t, cg_n, cg_p);
            std::cout << (t == ModGroupType::Sp ? "sp" : "sl") << "(" << cg_n << ") chain at p = "
                      << cg_p << ":\n"
                      << "  reduction surjective: " << (r.reduction_surjective ? "ok" : "FAIL")
                      << "\n  center size " << r.center_size << ", projective order "
                      << r.projective_order
                      << (r.projective_order_matches_formula ? " (matches formula)" : " (FAIL)")
                      << "\n  kernel onto projective quotient solvable: "
                      << (r.kernel_k0_solvable ? "ok" : "FAIL") << "\n  projective quotient "
                      << (r.projective_simple ? "simple" : "not simple") << ", expected "
                      << (r.simplicity_expected ? "simple" : "not simple") << "\n";
            if (!r.exception_note.empty()) std::cout << "  note: " << r.exception_note << "\n";
            return r.passed() ? 0 : 1;
        }
        if (*cverify) {
            Catalog cat = load_catalog(catalog_path);
            const SimpleGroupRecord* r = cat.find(verify_name);
            if (!r) throw input_error("no record named " + verify_name);
            VerificationReport vr = verify_record(*r);
            std::cout << vr.name << ": tier " << vr.tier << ", order "
                      << (vr.order_ok ? "ok" : "FAIL") << ", spectrum "
                      << (vr.spectrum_ok ? "ok" : "FAIL") << ", markers "
                      << (vr.markers_ok ? "ok" : "FAIL") << "\n";
            for (const auto& n : vr.notes) std::cout << "  " << n << "\n";
            return vr.passed() ? 0 : 1;
        }
        if (*clist) {
            for (const auto& [name, ord] : enumerate_simple_orders(BigUint::from_string(bound_text)))
                std::cout << name << " " << ord.to_string() << "\n";
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const load_error& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
