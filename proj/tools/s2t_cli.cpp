// Command-line surface of the workbench: validation, translation,
// construction, round trips, and the exhaustive search, over the shared
// JSON table formats.
//
// Exit codes: 0 pass - 1 axiom or round-trip failure - 2 structural or
// usage error.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "s2t/s2t.hpp"

namespace {

using namespace s2t;

struct Options {
    bool json = false;
    bool verbose = false;
    bool timings = false;
};

constexpr const char* kF4Note =
    "note: the functional equation is checked for x in B and y in B1 \\ {e}; "
    "y = e is excluded because phi(e) = 0 leaves its right-hand side undefined.\n";

int exit_code(const Report& rep) {
    if (rep.ok()) return 0;
    return rep.structural_failure() ? 2 : 1;
}

void print_report(const Options& opt, const std::string& command, const std::string& input,
                  const Report& rep, const std::string& summary) {
    if (opt.json) {
        json j = report_to_json(rep);
        j["command"] = command;
        j["input"] = input;
        j["summary"] = summary;
        std::cout << dump(j);
        return;
    }
    std::cout << command << ": " << input << "\n" << rep.to_text() << summary << "\n";
}

void emit_payload(const json& payload, const std::string& out_path) {
    if (out_path.empty())
        std::cout << dump(payload);
    else
        write_text_file(out_path, dump(payload));
}

PhiSystem load_phi(const std::string& path) {
    json j = load_json_file(path);
    if (detect_kind(j) != InputKind::phi_system)
        throw ParseError(path + ": expected a phi-system file (n, mul, inv, phi)");
    return phi_system_from_json(j);
}

NearDomain load_nd(const std::string& path) {
    json j = load_json_file(path);
    if (detect_kind(j) != InputKind::near_domain)
        throw ParseError(path + ": expected a near-domain file (n, mul, inv, add, sub, L)");
    return near_domain_from_json(j);
}

Family parse_family(const std::string& name) {
    if (name == "scaling") return Family::scaling;
    if (name == "inverse") return Family::inverse;
    throw ParseError("unknown family \"" + name + "\" (expected scaling or inverse)");
}

std::string phi_summary(const Report& rep, int n) {
    if (rep.ok()) return "F1..F4 pass (n=" + std::to_string(n) + ")";
    const CheckResult& f = rep.first_failure();
    return "FAIL: " + f.name + (f.detail.empty() ? "" : " (" + f.detail + ")");
}

std::string nd_summary(const Report& rep, int n) {
    if (rep.ok()) return "A1..A7 pass (n=" + std::to_string(n) + ")";
    const CheckResult& f = rep.first_failure();
    return "FAIL: " + f.name + (f.detail.empty() ? "" : " (" + f.detail + ")");
}

std::string flag_str(bool b) { return b ? "yes" : "no"; }

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    try {
        for (const auto& tok : CLI::detail::split(text, ',')) out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": expected comma-separated integers");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite workbench for right near-domains, phi-systems, and their pair groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit machine-readable reports");
    app.add_flag("--verbose", opt.verbose, "print interpretation notes with validation output");
    app.add_flag("--timings", opt.timings, "append wall-clock timing after the report");

    std::function<int()> run;

    // ---- check-phi ----
    auto* c_phi = app.add_subcommand("check-phi", "validate a phi-system (F1-F4)");
    std::string phi_in;
    c_phi->add_option("input", phi_in, "phi-system JSON file")->required();
    c_phi->callback([&]() {
        run = [&]() {
            PhiSystem s = load_phi(phi_in);
            Report rep = validate_phi(s);
            if (rep.ok()) {
                Report derived = check_derived_identities(s);
                for (const auto& c : derived.checks()) {
                    bool already = false;
                    for (const auto& e : rep.checks()) already = already || e.name == c.name;
                    if (!already) rep.add(c.name, c.passed, c.detail);
                }
            }
            if (opt.verbose && !opt.json) std::cout << kF4Note;
            print_report(opt, "check-phi", phi_in, rep, phi_summary(rep, s.n()));
            return exit_code(rep);
        };
    });

    // ---- check-nd ----
    auto* c_nd = app.add_subcommand("check-nd", "validate a right near-domain (A1-A7)");
    std::string nd_in;
    c_nd->add_option("input", nd_in, "near-domain JSON file")->required();
    c_nd->callback([&]() {
        run = [&]() {
            NearDomain d = load_nd(nd_in);
            NdValidation v = validate_near_domain(d);
            print_report(opt, "check-nd", nd_in, v.report, nd_summary(v.report, d.n()));
            return exit_code(v.report);
        };
    });

    // ---- lemma ----
    auto* c_lemma = app.add_subcommand("lemma", "check the derived witness identities");
    std::string lemma_in;
    c_lemma->add_option("input", lemma_in, "near-domain JSON file")->required();
    c_lemma->callback([&]() {
        run = [&]() {
            NearDomain d = load_nd(lemma_in);
            NdValidation v = validate_near_domain(d);
            if (!v.report.ok()) {
                print_report(opt, "lemma", lemma_in, v.report, nd_summary(v.report, d.n()));
                return exit_code(v.report);
            }
            Report rep = lemma_closed_forms(d, *v.witnesses);
            print_report(opt, "lemma", lemma_in, rep,
                         rep.ok() ? "witness identities and cocycle pass (n=" +
                                        std::to_string(d.n()) + ")"
                                  : "FAIL: " + rep.first_failure().name);
            return exit_code(rep);
        };
    });

    // ---- classify ----
    auto* c_cls = app.add_subcommand("classify", "classification flags of a near-domain");
    std::string cls_in;
    c_cls->add_option("input", cls_in, "near-domain JSON file")->required();
    c_cls->callback([&]() {
        run = [&]() {
            NearDomain d = load_nd(cls_in);
            NdValidation v = validate_near_domain(d);
            if (!v.report.ok()) {
                print_report(opt, "classify", cls_in, v.report, nd_summary(v.report, d.n()));
                return exit_code(v.report);
            }
            Classification c = classify(d);
            if (opt.json) {
                std::cout << dump(json{{"command", "classify"},
                                       {"input", cls_in},
                                       {"additive_associative", c.additive_associative},
                                       {"right_distributive", c.right_distributive},
                                       {"left_distributive", c.left_distributive},
                                       {"symmetric_zero", c.symmetric_zero},
                                       {"L_additive", c.l_additive},
                                       {"zero_extension_loop", c.zero_extension_loop},
                                       {"near_field_candidate", c.near_field_candidate},
                                       {"skipped",
                                        {{"associativity", c.assoc_skipped},
                                         {"left_distributivity", c.left_distrib_skipped},
                                         {"L_additivity", c.l_additive_skipped}}}});
                return 0;
            }
            std::cout << "classify: " << cls_in << "\n"
                      << "  additive-associative: " << flag_str(c.additive_associative) << " ("
                      << c.assoc_skipped << " undefined triples skipped)\n"
                      << "  right-distributive: " << flag_str(c.right_distributive) << "\n"
                      << "  left-distributive: " << flag_str(c.left_distributive) << " ("
                      << c.left_distrib_skipped << " cells outside the partial domain)\n"
                      << "  symmetric-zero: " << flag_str(c.symmetric_zero) << "\n"
                      << "  L-additive: " << flag_str(c.l_additive) << " ("
                      << c.l_additive_skipped << " cells skipped)\n"
                      << "  zero-extension-loop: " << flag_str(c.zero_extension_loop) << "\n"
                      << "near-field candidate: " << flag_str(c.near_field_candidate) << "\n";
            return 0;
        };
    });

    // ---- a-map ----
    auto* c_amap = app.add_subcommand("a-map", "translate a near-domain to its phi-system");
    std::string amap_in, amap_out;
    c_amap->add_option("input", amap_in, "near-domain JSON file")->required();
    c_amap->add_option("-o,--output", amap_out, "output path (stdout when omitted)");
    c_amap->callback([&]() {
        run = [&]() {
            NearDomain d = load_nd(amap_in);
            NdValidation v = validate_near_domain(d);
            if (!v.report.ok()) {
                print_report(opt, "a-map", amap_in, v.report, nd_summary(v.report, d.n()));
                return exit_code(v.report);
            }
            PhiSystem s = a_map(d);
            Report rep;
            rep.absorb("translated system validates", validate_phi(s));
            if (!rep.ok()) {
                print_report(opt, "a-map", amap_in, rep, "FAIL: translation did not validate");
                return exit_code(rep);
            }
            emit_payload(phi_system_to_json(s), amap_out);
            if (!amap_out.empty())
                std::cerr << "a-map: wrote phi-system (n=" << s.n() << ") to " << amap_out
                          << "\n";
            return 0;
        };
    });

    // ---- f-map ----
    auto* c_fmap = app.add_subcommand("f-map", "build the near-domain of a phi-system and L");
    std::string fmap_in, fmap_out, fmap_l;
    c_fmap->add_option("input", fmap_in, "phi-system JSON file")->required();
    c_fmap->add_option("--L", fmap_l, "bijection of B1 as comma-separated images of 1..n-1")
        ->required();
    c_fmap->add_option("-o,--output", fmap_out, "output path (stdout when omitted)");
    c_fmap->callback([&]() {
        run = [&]() {
            PhiSystem s = load_phi(fmap_in);
            Report val = validate_phi(s);
            if (!val.ok()) {
                print_report(opt, "f-map", fmap_in, val, phi_summary(val, s.n()));
                return exit_code(val);
            }
            NearDomain d = f_l_map(s, parse_int_list(fmap_l, "--L"));
            Report rep;
            rep.absorb("constructed near-domain validates", validate_near_domain(d).report);
            if (!rep.ok()) {
                print_report(opt, "f-map", fmap_in, rep, "FAIL: construction did not validate");
                return exit_code(rep);
            }
            emit_payload(near_domain_to_json(d), fmap_out);
            if (!fmap_out.empty())
                std::cerr << "f-map: wrote near-domain (n=" << d.n() << ") to " << fmap_out
                          << "\n";
            return 0;
        };
    });

    // ---- build-group ----
    auto* c_build =
        app.add_subcommand("build-group", "materialize the pair group of a phi-system");
    std::string build_in, build_out;
    bool build_perms = false;
    c_build->add_option("input", build_in, "phi-system JSON file")->required();
    c_build->add_option("-o,--output", build_out, "export the pair group as JSON");
    c_build->add_flag("--perms", build_perms, "include the expanded permutation per element");
    c_build->callback([&]() {
        run = [&]() {
            PhiSystem s = load_phi(build_in);
            Report val = validate_phi(s);
            if (!val.ok()) {
                print_report(opt, "build-group", build_in, val, phi_summary(val, s.n()));
                return exit_code(val);
            }
            BuildResult b = build_group(s);
            std::string summary =
                b.report.ok() ? "|G|=" + std::to_string(b.group.size()) +
                                    ", sharply 2-transitive on " + std::to_string(s.n()) +
                                    " points"
                              : "FAIL: " + b.report.first_failure().name;
            print_report(opt, "build-group", build_in, b.report, summary);
            if (b.report.ok() && !build_out.empty()) {
                write_text_file(build_out, dump(pair_group_to_json(b.group, build_perms)));
                std::cerr << "build-group: wrote " << build_out << "\n";
            }
            return exit_code(b.report);
        };
    });

    // ---- from-group ----
    auto* c_from =
        app.add_subcommand("from-group", "recover a phi-system from a permutation group");
    std::string from_in, from_out, from_base;
    bool from_saturate = false;
    c_from->add_option("input", from_in, "permutation-group JSON file")->required();
    c_from->add_option("--base", from_base, "base pair e1,e2 (overrides the file)");
    c_from->add_flag("--saturate", from_saturate, "close the listed maps under composition first");
    c_from->add_option("-o,--output", from_out, "output path (stdout when omitted)");
    c_from->callback([&]() {
        run = [&]() {
            json j = load_json_file(from_in);
            if (detect_kind(j) != InputKind::permutation_action)
                throw ParseError(from_in +
                                 ": expected a permutation-group file (degree, perms, base)");
            PermutationAction p = action_from_json(j);
            if (!from_base.empty()) {
                auto base = parse_int_list(from_base, "--base");
                if (base.size() != 2) throw ParseError("--base expects e1,e2");
                p.base1 = base[0];
                p.base2 = base[1];
            }
            if (from_saturate) p.perms = saturate(p.perms);
            Report val = validate_action(p);
            if (!val.ok()) {
                print_report(opt, "from-group", from_in, val,
                             "FAIL: " + val.first_failure().name);
                return exit_code(val);
            }
            Recovered rec = from_group(p);
            if (!rec.report.ok()) {
                print_report(opt, "from-group", from_in, rec.report,
                             "FAIL: " + rec.report.first_failure().name);
                return exit_code(rec.report);
            }
            emit_payload(phi_system_to_json(rec.system), from_out);
            if (!from_out.empty())
                std::cerr << "from-group: wrote phi-system (n=" << rec.system.n() << ") to "
                          << from_out << "\n";
            return 0;
        };
    });

    // ---- roundtrip1 ----
    auto* c_rt1 = app.add_subcommand("roundtrip1", "near-domain <-> phi-system round trips");
    std::string rt1_in;
    c_rt1->add_option("input", rt1_in, "phi-system or near-domain JSON file")->required();
    c_rt1->callback([&]() {
        run = [&]() {
            json j = load_json_file(rt1_in);
            Report rep;
            if (detect_kind(j) == InputKind::near_domain) {
                NearDomain d = near_domain_from_json(j);
                NdValidation v = validate_near_domain(d);
                if (!v.report.ok()) {
                    print_report(opt, "roundtrip1", rt1_in, v.report,
                                 nd_summary(v.report, d.n()));
                    return exit_code(v.report);
                }
                rep = roundtrip_near_domain_phi(d);
            } else if (detect_kind(j) == InputKind::phi_system) {
                PhiSystem s = phi_system_from_json(j);
                Report val = validate_phi(s);
                if (!val.ok()) {
                    print_report(opt, "roundtrip1", rt1_in, val, phi_summary(val, s.n()));
                    return exit_code(val);
                }
                rep = roundtrip_phi_near_domain(s);
            } else {
                throw ParseError(rt1_in + ": expected a phi-system or near-domain file");
            }
            print_report(opt, "roundtrip1", rt1_in, rep,
                         rep.ok() ? "round trips pass" : "FAIL: " + rep.first_failure().name);
            return exit_code(rep);
        };
    });

    // ---- roundtrip2 ----
    auto* c_rt2 = app.add_subcommand("roundtrip2", "phi-system <-> pair-group round trips");
    std::string rt2_in;
    c_rt2->add_option("input", rt2_in, "phi-system or permutation-group JSON file")->required();
    c_rt2->callback([&]() {
        run = [&]() {
            json j = load_json_file(rt2_in);
            Report rep;
            std::string summary;
            if (detect_kind(j) == InputKind::phi_system) {
                PhiSystem s = phi_system_from_json(j);
                Report val = validate_phi(s);
                if (!val.ok()) {
                    print_report(opt, "roundtrip2", rt2_in, val, phi_summary(val, s.n()));
                    return exit_code(val);
                }
                rep = roundtrip_pair_group(s);
                BuildResult b = build_group(s);
                rep.absorb("group direction (rebuild matches element-by-element)",
                           roundtrip_action(to_action(b.group, Carrier::unit, Carrier::zero)));
                summary = rep.ok() ? "|G|=" + std::to_string(b.group.size()) +
                                         ", both round trips pass"
                                   : "FAIL: " + rep.first_failure().name;
            } else if (detect_kind(j) == InputKind::permutation_action) {
                PermutationAction p = action_from_json(j);
                rep = roundtrip_action(p);
                summary = rep.ok()
                              ? "|G|=" + std::to_string(p.perms.size()) + ", round trip passes"
                              : "FAIL: " + rep.first_failure().name;
            } else {
                throw ParseError(rt2_in + ": expected a phi-system or permutation-group file");
            }
            print_report(opt, "roundtrip2", rt2_in, rep, summary);
            return exit_code(rep);
        };
    });

    // ---- example ----
    auto* c_ex = app.add_subcommand("example", "build a family example over GF(q)");
    int ex_q = 0, ex_a = 0;
    std::string ex_family, ex_out;
    c_ex->add_option("--q", ex_q, "prime power carrier size")->required();
    c_ex->add_option("--family", ex_family, "scaling or inverse")->required();
    c_ex->add_option("--a", ex_a, "scaling parameter (nonzero field element)");
    c_ex->add_option("-o,--output", ex_out, "output path (stdout when omitted)");
    c_ex->callback([&]() {
        run = [&]() {
            ExampleSpec spec{ex_q, parse_family(ex_family), ex_a};
            NearDomain d = make_example(spec);
            Report rep;
            rep.absorb("example validates", validate_near_domain(d).report);
            if (!rep.ok()) {
                print_report(opt, "example", "q=" + std::to_string(ex_q), rep,
                             "FAIL: construction did not validate");
                return exit_code(rep);
            }
            emit_payload(near_domain_to_json(d), ex_out);
            if (!ex_out.empty())
                std::cerr << "example: wrote near-domain (n=" << d.n() << ") to " << ex_out
                          << "\n";
            return 0;
        };
    });

    // ---- verify-example ----
    auto* c_vex = app.add_subcommand("verify-example", "check the family's closed witness forms");
    int vex_q = 0, vex_a = 0;
    std::string vex_family;
    c_vex->add_option("--q", vex_q, "prime power carrier size")->required();
    c_vex->add_option("--family", vex_family, "scaling or inverse")->required();
    c_vex->add_option("--a", vex_a, "scaling parameter (nonzero field element)");
    c_vex->callback([&]() {
        run = [&]() {
            ExampleSpec spec{vex_q, parse_family(vex_family), vex_a};
            const std::string label = "q=" + std::to_string(vex_q) + " family=" + vex_family +
                                      (spec.family == Family::scaling
                                           ? " a=" + std::to_string(vex_a)
                                           : "");
            NearDomain d = make_example(spec);
            NdValidation v = validate_near_domain(d);
            Report rep;
            rep.absorb("example validates", v.report);
            if (!rep.ok()) {
                print_report(opt, "verify-example", label, rep,
                             "FAIL: example did not validate");
                return exit_code(rep);
            }
            Report forms = verify_example_formulas(spec, d, *v.witnesses);
            for (const auto& c : forms.checks()) rep.add(c.name, c.passed, c.detail);
            print_report(opt, "verify-example", label, rep,
                         rep.ok() ? "closed forms verified (q=" + std::to_string(vex_q) + ")"
                                  : "FAIL: " + rep.first_failure().name);
            return exit_code(rep);
        };
    });

    // ---- search ----
    auto* c_search = app.add_subcommand("search", "enumerate all phi maps over a group table");
    int search_q = 0, search_cap = 7;
    std::string search_group, search_out, search_csv;
    c_search->add_option("--q", search_q, "use the multiplicative group of GF(q)");
    c_search->add_option("--group", search_group, "group-table JSON file");
    c_search->add_option("--cap", search_cap, "largest carrier the sweep will accept");
    c_search->add_option("-o,--output", search_out, "write survivors and flags as JSON");
    c_search->add_option("--csv", search_csv, "write the classification table as CSV");
    c_search->callback([&]() {
        run = [&]() {
            GroupTable g;
            std::string label;
            if ((search_q == 0) == search_group.empty())
                throw ParseError("search: give exactly one of --q or --group");
            if (search_q != 0) {
                auto pk = GaloisField::factor_prime_power(search_q);
                if (!pk) throw ParseError("search: q must be a prime power");
                g = mul_group_of_field(GaloisField::make(pk->first, pk->second));
                label = "GF(" + std::to_string(search_q) + ") multiplicative group";
            } else {
                g = group_from_json(load_json_file(search_group));
                label = search_group;
            }
            SearchResult res = search_phi(g, search_cap);
            CensusSummary sum = nearfield_census(res);
            if (opt.verbose && !opt.json) std::cout << kF4Note;
            if (opt.json) {
                json reps = json::array();
                for (std::size_t r = 0; r < res.representatives.size(); ++r) {
                    json recs = json::array();
                    for (const auto& rec : res.per_rep[r])
                        recs.push_back({{"L", rec.lmap},
                                        {"valid", rec.valid},
                                        {"additive_associative", rec.flags.additive_associative},
                                        {"near_field_candidate", rec.flags.near_field_candidate}});
                    reps.push_back({{"phi", res.survivors[res.representatives[r]]},
                                    {"records", std::move(recs)}});
                }
                std::cout << dump(json{{"command", "search"},
                                       {"group", label},
                                       {"n", g.n()},
                                       {"survivors", res.survivors},
                                       {"representatives", std::move(reps)},
                                       {"census",
                                        {{"total_pairs", sum.total_pairs},
                                         {"valid_pairs", sum.valid_pairs},
                                         {"nonassociative_pairs", sum.nonassociative_pairs},
                                         {"highlights", sum.highlights}}}});
            } else {
                std::cout << "search: " << label << " (n=" << g.n() << ")\n"
                          << "  valid phi maps: " << res.survivors.size() << "\n"
                          << "  isomorphism classes: " << res.representatives.size() << "\n";
                for (std::size_t r = 0; r < res.representatives.size(); ++r) {
                    std::cout << "  class " << r << ": phi = [";
                    const auto& phi = res.survivors[res.representatives[r]];
                    for (std::size_t i = 0; i < phi.size(); ++i)
                        std::cout << (i ? " " : "") << phi[i];
                    std::cout << "]\n";
                }
                std::cout << "  census: " << sum.valid_pairs << "/" << sum.total_pairs
                          << " (phi, L) pairs valid, " << sum.nonassociative_pairs
                          << " without additive associativity\n";
                if (sum.highlights.empty()) {
                    std::cout << "  near-domain flags without additive associativity: none\n";
                } else {
                    for (const auto& h : sum.highlights)
                        std::cout << "  HIGHLIGHT: " << h << "\n";
                }
            }
            if (!search_out.empty()) {
                json survivors = json::array();
                for (const auto& phi : res.survivors)
                    survivors.push_back(json{{"n", g.n()}, {"phi", phi}});
                write_text_file(search_out, dump(json{{"group", group_to_json(g)},
                                                      {"survivors", std::move(survivors)}}));
                std::cerr << "search: wrote " << search_out << "\n";
            }
            if (!search_csv.empty()) {
                write_text_file(search_csv, census_csv(res));
                std::cerr << "search: wrote " << search_csv << "\n";
            }
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are structural
    }

    const auto t0 = std::chrono::steady_clock::now();
    int rc;
    try {
        rc = run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    }
    if (opt.timings) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        std::cout << "timing: "
                  << std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1000.0
                  << " ms\n";
    }
    return rc;
}
