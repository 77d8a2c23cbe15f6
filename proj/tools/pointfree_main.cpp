// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface of the verification laboratory. Subcommands:
//   check        axiom checks on a finite or interval model file
//   greps        G-representatives, classes and G-points of a finite model
//   enumerate    isomorphism-reduced model streams
//   search       first-countermodel search for a property
//   interval     interval-backend checks, nests and the demo walkthrough
//   verify-paper the one-shot reproduction table
//
// Exit codes: 0 all checks hold, 1 a property failed (witness printed),
// 2 input or capability error.

#include <CLI11.hpp>

#include "pointfree/model_io.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace pointfree;

constexpr unsigned default_seed = 0xC0FFEE;

int emit(const ReportDocument& doc, bool as_json) {
    if (as_json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.render_text();
    return doc.overall_ok() ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------- check

int cmd_check(const std::string& model_path, const std::string& axioms, bool as_json,
              unsigned seed, int budget) {
    const std::string text = read_file(model_path);
    ModelFile model = parse_model_json(text);
    ReportDocument doc;
    doc.input_digest = digest_hex(text);

    if (model.is_interval()) {
        auto requested = axioms.empty()
                             ? std::vector<std::string>{"C0", "C1", "C2", "C3", "C4",
                                                        "C5", "C6", "IA", "atomless"}
                             : split_list(axioms);
        auto reports = check_axioms_interval(*model.ambient, budget, seed);
        for (const std::string& name : requested) {
            bool found = false;
            for (const auto& r : reports)
                if (r.property == name) {
                    doc.entries.push_back(ReportEntry::from_check(r));
                    found = true;
                }
            if (!found)
                throw capability_error("axiom \"" + name +
                                       "\" is not decided on the interval backend");
        }
        return emit(doc, as_json);
    }

    auto requested = axioms.empty() ? std::vector<std::string>{"C0", "C1", "C2", "C3", "C4"}
                                    : split_list(axioms);
    for (const std::string& name : requested) {
        auto id = axiom_from_name(name);
        if (!id) throw parse_error("unknown axiom \"" + name + "\"");
        doc.entries.push_back(ReportEntry::from_check(check_axiom(*model.structure, *id)));
    }
    return emit(doc, as_json);
}

// ---------------------------------------------------------------------- greps

int cmd_greps(const std::string& model_path, bool as_json) {
    const std::string text = read_file(model_path);
    ModelFile model = parse_model_json(text);
    if (model.is_interval())
        throw capability_error("greps enumerates finite models; use `interval nest` for "
                               "certified nest checks");
    const ContactStructure& cs = *model.structure;
    ReportDocument doc;
    doc.input_digest = digest_hex(text);

    auto reps = enumerate_g_representatives(cs);
    {
        ReportEntry e;
        e.property = "G-representatives";
        e.status = std::to_string(reps.size()) + " found";
        for (const auto& q : reps) e.witness.push_back(q.name());
        doc.entries.push_back(std::move(e));
    }
    auto classes = equivalence_classes(cs);
    auto points = g_points(cs);
    for (std::size_t i = 0; i < classes.classes.size(); ++i) {
        ReportEntry e;
        e.property = "class-" + std::to_string(i + 1);
        e.status = std::to_string(classes.classes[i].size()) + " representatives";
        for (const auto& q : classes.classes[i]) e.witness.push_back(q.name());
        GFilter f = filter_of(cs, classes.classes[i].front());
        std::string filt = "filter: {";
        bool first = true;
        for (const Region& r : f.elements()) {
            if (!first) filt += ", ";
            filt += r.name();
            first = false;
        }
        e.note = filt + "}";
        doc.entries.push_back(std::move(e));
    }
    {
        ReportEntry e;
        e.property = "class-filter-bijection";
        const bool ok = classes.classes.size() == points.size();
        e.status = ok ? "holds" : "fails";
        e.ok = ok;
        e.note = std::to_string(classes.classes.size()) + " classes, " +
                 std::to_string(points.size()) + " G-points";
        doc.entries.push_back(std::move(e));
    }
    return emit(doc, as_json);
}

// ------------------------------------------------------------------ enumerate

int cmd_enumerate(int atoms, int universe, bool as_json) {
    if ((atoms > 0) == (universe > 0))
        throw usage_error("enumerate needs exactly one of --atoms or --universe");
    ReportDocument doc;
    std::vector<ContactStructure> models =
        atoms > 0 ? enumerate_bca(atoms) : enumerate_bwca(universe);
    ReportEntry head;
    head.property = atoms > 0 ? "atom-graph contact algebras with " + std::to_string(atoms) +
                                    " atoms, up to isomorphism"
                              : "weak contact algebras on universe " +
                                    std::to_string(universe) + ", up to isomorphism";
    head.status = std::to_string(models.size()) + " classes";
    doc.entries.push_back(std::move(head));
    for (std::size_t i = 0; i < models.size(); ++i) {
        ReportEntry e;
        e.property = "#" + std::to_string(i + 1);
        e.status = describe_structure(models[i]);
        doc.entries.push_back(std::move(e));
    }
    return emit(doc, as_json);
}

// --------------------------------------------------------------------- search

int cmd_search(const std::string& property, const std::string& family, int universe, int atoms,
               bool as_json) {
    EnumerationTask task;
    if (family == "bwca") {
        task.family = EnumerationTask::Family::bwca_universe;
        task.size = universe;
    } else if (family == "bca") {
        task.family = EnumerationTask::Family::bca_atom_graph;
        task.size = atoms;
    } else if (family == "d-contact") {
        task.family = EnumerationTask::Family::d_contact;
        task.size = atoms;
    } else {
        throw usage_error("unknown family \"" + family + "\" (bwca | bca | d-contact)");
    }
    SearchOutcome outcome = search_countermodel(property, task);
    ReportDocument doc;
    doc.entries.push_back(ReportEntry::from_outcome(outcome));
    if (outcome.model) {
        ReportEntry m;
        m.property = "countermodel-file";
        m.status = model_to_json(*outcome.model).dump();
        doc.entries.push_back(std::move(m));
    }
    return emit(doc, as_json);
}

// ------------------------------------------------------------------- interval

int cmd_interval_check(const std::string& ambient_text, const std::string& axioms, bool as_json,
                       unsigned seed, int budget) {
    AmbientSpace ambient = parse_ambient(ambient_text);
    ReportDocument doc;
    doc.input_digest = digest_hex(ambient_text);
    auto reports = check_axioms_interval(ambient, budget, seed);
    auto requested = axioms.empty() ? std::vector<std::string>{} : split_list(axioms);
    for (const auto& r : reports) {
        if (!requested.empty()) {
            bool wanted = false;
            for (const auto& name : requested)
                if (name == r.property) wanted = true;
            if (!wanted) continue;
        }
        doc.entries.push_back(ReportEntry::from_check(r));
    }
    return emit(doc, as_json);
}

int cmd_interval_nest(const std::string& ambient_text, const std::string& nest_text,
                      const std::string& point_text, const std::string& check,
                      const std::string& versus, int depth, unsigned seed, bool as_json) {
    AmbientSpace ambient = parse_ambient(ambient_text);
    Nest nest = parse_nest_literal(ambient, nest_text);
    const Rat point = point_text.empty() ? nest.center() : parse_rational(point_text);
    ReportDocument doc;
    doc.input_digest = digest_hex(ambient_text + "|" + nest_text);

    const bool want_all = check == "all";
    if (want_all || check == "prefix") {
        NestPrefixReport prefix = nest_prefix_check(nest, depth);
        for (const DepthReport* r :
             {&prefix.r0, &prefix.chain, &prefix.r2, &prefix.strict, &prefix.lower_bound})
            doc.entries.push_back(ReportEntry::from_depth(*r));
    }
    if (want_all || check == "wrep")
        doc.entries.push_back(ReportEntry::from_depth(local_basis_certificate(nest, point, depth)));
    if (want_all || check == "grep")
        doc.entries.push_back(ReportEntry::from_depth(g_rep_certified(nest, point, depth, seed)));
    if (check == "covering" || (!versus.empty() && want_all)) {
        if (versus.empty()) throw usage_error("covering checks need --vs NEST");
        Nest other = parse_nest_literal(ambient, versus);
        auto [ab, ba] = nest_mutual_covering(nest, other, depth);
        ReportEntry e1 = ReportEntry::from_depth(ab);
        e1.property = "covering:" + nest.describe() + " over " + other.describe();
        doc.entries.push_back(std::move(e1));
        ReportEntry e2 = ReportEntry::from_depth(ba);
        e2.property = "covering:" + other.describe() + " over " + nest.describe();
        doc.entries.push_back(std::move(e2));
    }
    return emit(doc, as_json);
}

int cmd_interval_demo(int depth, unsigned seed, bool as_json) {
    ReportDocument doc;
    auto expect = [&](ReportEntry e, bool expected_ok, const char* why) {
        if (e.ok != expected_ok) {
            e.note += std::string(" [UNEXPECTED: ") + why + "]";
            e.ok = false;
        } else {
            e.ok = true;
            e.note += std::string(" (expected: ") + why + ")";
        }
        doc.entries.push_back(std::move(e));
    };

    AmbientSpace r = AmbientSpace::real_line();
    Nest h = Nest::harmonic(r, 0, 1);
    expect(ReportEntry::from_depth(local_basis_certificate(h, 0, depth)), true,
           "shrinking balls at 0 form a certified W-representative");
    expect(ReportEntry::from_depth(g_rep_certified(h, 0, depth, seed)), true,
           "and a certified G-representative");
    Nest odd = Nest::odd_harmonic(r, 0, 1);
    auto [ab, ba] = nest_mutual_covering(h, odd, depth);
    expect(ReportEntry::from_depth(ab), true, "odd subsequence covers");
    expect(ReportEntry::from_depth(ba), true, "and is covered: same point");

    AmbientSpace two = parse_ambient("[0,1]+[2,3]");
    for (const auto& rep : check_axioms_interval(two, 120, seed))
        if (rep.property == "C6")
            expect(ReportEntry::from_check(rep), false, "disconnected ambient fails coherence");
    Nest pinched = harmonic_pair_prefix(two, 0, 2, 1, depth + 8);
    expect(ReportEntry::from_depth(g_rep_certified(pinched, 0, depth, seed)), false,
           "two-center chain pins no single location: the piece traces refute r3");
    SeparationRefinement refinement =
        separation_refinement(pinched, piece_trace(two, 0), piece_trace(two, 1), depth);
    expect(ReportEntry::from_depth(refinement.report), true,
           "interpolant refinement is covered by the chain but never covers it back");

    AmbientSpace y = parse_ambient("[0,1]+{2}");
    for (const auto& rep : check_axioms_interval(y, 120, seed))
        if (rep.property == "atomless")
            expect(ReportEntry::from_check(rep), false, "the isolated point {2} is an atom");

    if (as_json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.render_text();
    return doc.overall_ok() ? 0 : 1;
}

// --------------------------------------------------------------- verify-paper

std::string suite_category(const std::string& id) {
    if (id.rfind("fact-", 0) == 0) return "facts";
    if (id.rfind("equiv-", 0) == 0) return "equiv";
    if (id.rfind("ll-meet", 0) == 0) return "llmeet";
    if (id.rfind("gia-", 0) == 0) return "gia";
    if (id.rfind("d-contact-", 0) == 0) return "dcontact";
    if (id.rfind("atom", 0) == 0) return "atomic";
    if (id.rfind("QG-", 0) == 0 || id.rfind("lemma-", 0) == 0 || id.rfind("G-rep-", 0) == 0 ||
        id.rfind("covered-", 0) == 0 || id.rfind("separated-", 0) == 0)
        return "structure";
    if (id.rfind("product-", 0) == 0) return "product";
    if (id.rfind("open:", 0) == 0) return "open";
    if (id.rfind("interval-", 0) == 0) return "interval";
    return "misc";
}

int cmd_verify_paper(const std::string& only, int depth, unsigned seed, bool as_json) {
    using Status = SearchOutcome::Status;
    // Expected statuses of the reproduction table. Entries expected to be
    // countermodel-found are genuine findings: claims whose stated scope
    // does not survive the finite/desk-scale instances, each carrying its
    // witness.
    const std::map<std::string, Status> expected = {
        {"fact-1-ll-implies-below", Status::theorem_confirmed},
        {"fact-2-ll-antisymmetric", Status::theorem_confirmed},
        {"fact-3-ll-below-chain", Status::theorem_confirmed},
        {"fact-4-below-ll-chain", Status::theorem_confirmed},
        {"fact-5-ll-transitive", Status::theorem_confirmed},
        {"fact-6-ll-contraposition", Status::theorem_confirmed},
        {"equiv-C5-DISC-EXT", Status::theorem_confirmed},
        {"equiv-C6-ll-strict", Status::theorem_confirmed},
        {"equiv-C6-product-form", Status::theorem_confirmed},
        {"ll-meet-compatible-in-BCA", Status::theorem_confirmed},
        {"ll-meet-compatible-without-C4", Status::countermodel_found},
        {"gia-implies-meet-form", Status::theorem_confirmed},
        {"gia-direct-vs-meet-form", Status::countermodel_found},
        {"d-contact-C0-C4", Status::theorem_confirmed},
        {"d-contact-d-ll-d", Status::theorem_confirmed},
        {"d-contact-C5-iff-no-proper-part", Status::theorem_confirmed},
        {"d-contact-GIA", Status::theorem_confirmed},
        {"d-contact-singleton-G-rep", Status::theorem_confirmed},
        {"d-contact-G-point-structure", Status::theorem_confirmed},
        {"d-contact-unique-G-point", Status::countermodel_found},
        {"atom-singleton-G-rep-under-C5", Status::theorem_confirmed},
        {"atomic-C5-refutes-G-in-W", Status::theorem_confirmed},
        {"QG-covering-equivalence", Status::theorem_confirmed},
        {"QG-class-filter-bijection", Status::theorem_confirmed},
        {"lemma-mutual-contact-iff-covering", Status::theorem_confirmed},
        {"G-rep-covered-subset-closure", Status::theorem_confirmed},
        {"covered-by-G-rep-implies-r3", Status::theorem_confirmed},
        {"separated-parts-implication", Status::theorem_confirmed},
        {"product-disjunctive-C0-C4", Status::theorem_confirmed},
        {"product-conjunctive-first-failure", Status::countermodel_found},
        {"open:incomplete-overlap-BCA-with-W-representative", Status::inconclusive},
        {"open:QW-omega-in-QG-independence-from-BCA+IA", Status::inconclusive},
        {"open:GIA+C6-BCA-with-W-representative", Status::inconclusive},
    };

    ReportDocument doc;
    const auto categories = only.empty() ? std::vector<std::string>{} : split_list(only);
    auto in_scope = [&](const std::string& id) {
        if (categories.empty()) return true;
        const std::string cat = suite_category(id);
        for (const auto& c : categories)
            if (c == cat) return true;
        return false;
    };
    auto push = [&](ReportEntry e, bool matches, const char* expect_text) {
        e.ok = matches;
        e.note += std::string(e.note.empty() ? "" : "; ") + "expected: " + expect_text;
        doc.entries.push_back(std::move(e));
    };

    bool need_finite = categories.empty();
    for (const auto& [id, st] : expected)
        if (in_scope(id)) need_finite = true;
    if (need_finite) {
        for (const SearchOutcome& o : run_paper_suite()) {
            if (!in_scope(o.property)) continue;
            auto it = expected.find(o.property);
            const Status want = it == expected.end() ? Status::theorem_confirmed : it->second;
            push(ReportEntry::from_outcome(o), o.status == want, status_name(want));
        }
    }

    if (in_scope("interval-anything")) {
        // RO laws, 10^4 seeded cases across the reference ambients
        for (const char* amb_text : {"R", "[0,1]+[2,3]", "[0,1]+{2}"}) {
            AmbientSpace amb = parse_ambient(amb_text);
            CheckReport laws = check_ro_laws(amb, 3400, seed);
            ReportEntry e = ReportEntry::from_check(laws);
            e.property = std::string("interval-ro-laws:") + amb_text;
            push(std::move(e), laws.holds, "holds");
        }
        {
            bool all = true;
            for (const auto& r : check_axioms_interval(AmbientSpace::real_line(), 200, seed))
                all = all && r.holds;
            ReportEntry e;
            e.property = "interval-R-axioms";
            e.status = all ? "holds" : "fails";
            e.note = "C0-C6, IA and atomlessness on the full line";
            push(std::move(e), all, "holds");
        }
        {
            AmbientSpace two = parse_ambient("[0,1]+[2,3]");
            CheckReport c6;
            for (const auto& r : check_axioms_interval(two, 200, seed))
                if (r.property == "C6") c6 = r;
            ReportEntry e = ReportEntry::from_check(c6);
            e.property = "interval-disconnected-C6";
            push(std::move(e), !c6.holds && !c6.witness.empty(),
                 "fails with a component witness");
        }
        {
            AmbientSpace y = parse_ambient("[0,1]+{2}");
            CheckReport atoms;
            for (const auto& r : check_axioms_interval(y, 200, seed))
                if (r.property == "atomless") atoms = r;
            ReportEntry e = ReportEntry::from_check(atoms);
            e.property = "interval-isolated-atom";
            push(std::move(e), !atoms.holds && atoms.witness == std::vector<std::string>{"{2}"},
                 "atom {2} reported");
        }
        {
            AmbientSpace r = AmbientSpace::real_line();
            Nest h = Nest::harmonic(r, 0, 1);
            DepthReport w = local_basis_certificate(h, 0, depth);
            ReportEntry we = ReportEntry::from_depth(w);
            we.property = "interval-harmonic-W-rep";
            push(std::move(we), w.certified, "certified");
            DepthReport g = g_rep_certified(h, 0, depth, seed);
            ReportEntry ge = ReportEntry::from_depth(g);
            ge.property = "interval-harmonic-G-rep";
            push(std::move(ge), g.certified, "certified");
            auto [ab, ba] = nest_mutual_covering(h, Nest::odd_harmonic(r, 0, 1), depth);
            ReportEntry ce;
            ce.property = "interval-harmonic-odd-coinitial";
            ce.status = (ab.certified && ba.certified) ? "certified" : "incomplete";
            push(std::move(ce), ab.certified && ba.certified, "mutual covering certified");
        }
        {
            AmbientSpace two = parse_ambient("[0,1]+[2,3]");
            Nest pinched = harmonic_pair_prefix(two, 0, 2, 1, depth + 8);
            DepthReport g = g_rep_certified(pinched, 0, depth, seed);
            ReportEntry ge = ReportEntry::from_depth(g);
            ge.property = "interval-two-center-r3-refuted";
            push(std::move(ge), g.failed, "r3 refuted by the clopen piece traces");
            SeparationRefinement refinement =
                separation_refinement(pinched, piece_trace(two, 0), piece_trace(two, 1), depth);
            ReportEntry se = ReportEntry::from_depth(refinement.report);
            se.property = "interval-separation-refinement";
            push(std::move(se), refinement.report.ok(), "covered-but-not-covering prefix");
        }
    }

    if (as_json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.render_text();
    return doc.overall_ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointfree: a verification laboratory for region-based theories of space"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string model_path, axioms, property, family = "bwca", ambient_text, nest_text,
                point_text, check_kind = "all", versus, only;
    int atoms = 0, universe = 0, depth = default_nest_depth, budget = 200;
    int search_atoms = 3, search_universe = 8;
    unsigned seed = default_seed;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "axiom checks on a model file");
    check->add_option("--model", model_path, "model file (JSON)")->required();
    check->add_option("--axioms", axioms, "comma-separated axiom list");
    check->add_option("--seed", seed, "seed for sampled interval checks");
    check->add_option("--budget", budget, "sample budget for interval checks");
    check->add_flag("--json", as_json, "emit the report as JSON");
    check->callback([&] { run = [&] { return cmd_check(model_path, axioms, as_json, seed, budget); }; });

    auto* greps = app.add_subcommand("greps", "G-representatives, classes and G-points");
    greps->add_option("--model", model_path, "model file (JSON)")->required();
    greps->add_flag("--json", as_json, "emit the report as JSON");
    greps->callback([&] { run = [&] { return cmd_greps(model_path, as_json); }; });

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism-reduced model streams");
    enumerate->add_option("--atoms", atoms, "atom-graph contact algebras on this many atoms");
    enumerate->add_option("--universe", universe, "weak contact algebras on this universe size");
    enumerate->add_flag("--json", as_json, "emit the report as JSON");
    enumerate->callback([&] { run = [&] { return cmd_enumerate(atoms, universe, as_json); }; });

    auto* search = app.add_subcommand("search", "first-countermodel search for a property");
    search->add_option("--property", property, "property expression")->required();
    search->add_option("--family", family, "bwca | bca | d-contact");
    search->add_option("--universe", search_universe, "universe bound for bwca");
    search->add_option("--atoms", search_atoms, "atom bound for bca / d-contact");
    search->add_flag("--json", as_json, "emit the report as JSON");
    search->callback([&] {
        run = [&] { return cmd_search(property, family, search_universe, search_atoms, as_json); };
    });

    auto* interval = app.add_subcommand("interval", "interval-backend checks and nests");
    interval->require_subcommand(1);
    auto* icheck = interval->add_subcommand("check", "axiom checks on an ambient");
    icheck->add_option("--ambient", ambient_text, "ambient literal, e.g. R or [0,1]+{2}")
        ->required();
    icheck->add_option("--axioms", axioms, "comma-separated subset of C0..C6,IA,atomless");
    icheck->add_option("--seed", seed, "sampling seed");
    icheck->add_option("--budget", budget, "sample budget");
    icheck->add_flag("--json", as_json, "emit the report as JSON");
    icheck->callback([&] {
        run = [&] { return cmd_interval_check(ambient_text, axioms, as_json, seed, budget); };
    });
    auto* inest = interval->add_subcommand("nest", "certified nest checks");
    inest->add_option("--ambient", ambient_text, "ambient literal")->required();
    inest->add_option("--nest", nest_text, "nest literal, e.g. harmonic:0:1")->required();
    inest->add_option("--point", point_text, "base point (defaults to the nest center)");
    inest->add_option("--check", check_kind, "all | prefix | grep | wrep | covering");
    inest->add_option("--vs", versus, "second nest literal for covering checks");
    inest->add_option("--depth", depth, "prefix depth");
    inest->add_option("--seed", seed, "sampling seed");
    inest->add_flag("--json", as_json, "emit the report as JSON");
    inest->callback([&] {
        run = [&] {
            return cmd_interval_nest(ambient_text, nest_text, point_text, check_kind, versus,
                                     depth, seed, as_json);
        };
    });
    auto* idemo = interval->add_subcommand("demo", "walk through the interval-backend examples");
    idemo->add_option("--depth", depth, "prefix depth");
    idemo->add_option("--seed", seed, "sampling seed");
    idemo->add_flag("--json", as_json, "emit the report as JSON");
    idemo->callback([&] { run = [&] { return cmd_interval_demo(depth, seed, as_json); }; });

    auto* verify = app.add_subcommand("verify-paper", "the one-shot reproduction table");
    verify->add_option("--only", only,
                       "comma-separated categories: facts, equiv, llmeet, gia, dcontact, "
                       "atomic, structure, product, open, interval");
    verify->add_option("--depth", depth, "nest prefix depth");
    verify->add_option("--seed", seed, "seed for the randomized interval suites");
    verify->add_flag("--json", as_json, "emit the report as JSON");
    verify->callback([&] { run = [&] { return cmd_verify_paper(only, depth, seed, as_json); }; });

    try {
        app.parse(argc, argv);
        return run();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
