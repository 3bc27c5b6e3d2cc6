// sepsplit: construct, verify, count and search separating / splitting
// families from the command line. Exit codes: 0 = pass, 1 = property
// violated or construction gave up, 2 = usage or guard error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sepsplit/census.hpp"
#include "sepsplit/experiments.hpp"
#include "sepsplit/io.hpp"
#include "sepsplit/search.hpp"
#include "sepsplit/separate.hpp"
#include "sepsplit/split.hpp"

namespace {

using namespace sepsplit;

struct Options {
    int k = 0, n = 2, m = 0, i = 1, j = 1, i2 = 0, j2 = 0;
    int s = 0, t = 0, b = 0;
    int rounds = 500, samples = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool unverified = false;
    bool unsafe_limits = false;
    std::string format = "sets";
    std::string out;
    std::string input;  // family file, "-" or empty = stdin
    std::string kind;   // implication kind
    std::string spec_file;
    std::string property;
};

Guards effective_guards(const Options& opt) {
    return opt.unsafe_limits ? Guards::unlimited() : Guards();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SetFamily load_family(const Options& opt) {
    return parse_family(read_input(opt.input), format_from_name(opt.format));
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + opt.out + "' for writing", 0);
    out << text;
}

void print_family(const Options& opt, const SetFamily& family) {
    write_output(opt, emit_family(family, format_from_name(opt.format)));
}

void print_bound(const BoundReport& rep) {
    std::cerr << "bounds: lower " << rep.lower << ", upper " << rep.upper
              << ", achieved "
              << (rep.achieved ? std::to_string(*rep.achieved) : "-") << "\n";
}

// Writes the counterexample where the caller wants the family itself to go.
void report_counterexample(const Options& opt, const std::string& text) {
    if (opt.out.empty())
        std::cout << text;
    else
        write_output(opt, text);
}

int cmd_verify_sep(const Options& opt) {
    SetFamily f = load_family(opt);
    bool ok = is_separating_family(f);
    std::cout << "separating: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_verify_nsep(const Options& opt) {
    SetFamily f = load_family(opt);
    SetCollection cex(std::vector<SubsetMask>{SubsetMask(f.k())});
    bool ok = is_n_separating(f, opt.n, effective_guards(opt), &cex);
    std::cout << opt.n << "-separating: " << (ok ? "true" : "false") << "\n";
    if (!ok)
        report_counterexample(opt, "counterexample: " + cex.to_string() + "\n");
    return ok ? 0 : 1;
}

int cmd_verify_ijsep(const Options& opt) {
    SetFamily f = load_family(opt);
    std::pair<SubsetMask, SubsetMask> witness{SubsetMask(f.k()), SubsetMask(f.k())};
    bool ok = is_ij_separating(f, opt.i, opt.j, effective_guards(opt), &witness);
    std::cout << "(" << opt.i << "," << opt.j << ")-separating: "
              << (ok ? "true" : "false") << "\n";
    if (!ok)
        report_counterexample(opt, "unseparated pair: P=" +
                                       witness.first.to_string() +
                                       " Q=" + witness.second.to_string() + "\n");
    return ok ? 0 : 1;
}

int cmd_verify_split(const Options& opt) {
    SetFamily f = load_family(opt);
    SubsetMask unsplit(f.k());
    bool ok = is_splitting_family(f, effective_guards(opt), &unsplit);
    std::cout << "splitting: " << (ok ? "true" : "false") << "\n";
    if (!ok) report_counterexample(opt, "unsplit: " + unsplit.to_string() + "\n");
    return ok ? 0 : 1;
}

int cmd_verify_nsplit(const Options& opt) {
    SetFamily f = load_family(opt);
    SetCollection cex(std::vector<SubsetMask>{SubsetMask(f.k())});
    bool ok = is_n_splitting(f, opt.n, effective_guards(opt), &cex);
    std::cout << opt.n << "-splitting: " << (ok ? "true" : "false") << "\n";
    if (!ok)
        report_counterexample(opt, "counterexample: " + cex.to_string() + "\n");
    return ok ? 0 : 1;
}

int cmd_count_census(const Options& opt) {
    Guards guards = effective_guards(opt);
    std::ostringstream csv;
    csv << "m,k,count\n";
    for (int k = 0; k <= (1 << opt.m); ++k)
        csv << opt.m << "," << k << "," << count_sep(opt.m, k, guards) << "\n";
    write_output(opt, csv.str());
    return 0;
}

int cmd_count_splitters(const Options& opt) {
    auto rep = count_simultaneous_splitters(opt.s, opt.t, opt.b, opt.k,
                                            effective_guards(opt));
    std::cout << "count(s=" << rep.s << ",t=" << rep.t << ",b=" << rep.b
              << ",k=" << rep.k << ") = " << rep.count << "\n";
    return 0;
}

int cmd_count_volume(const Options& opt) {
    Rational bound = volume_lower_bound(opt.n, opt.k, effective_guards(opt));
    std::cout << "N/v = " << bound.num << "/" << bound.den << " = "
              << bound.value() << ", any " << opt.n
              << "-splitting family needs >= " << bound.ceil() << " sets\n";
    return 0;
}

int cmd_search_min(const Options& opt) {
    MinProperty prop;
    if (opt.property == "sep") prop = MinProperty::Separating;
    else if (opt.property == "nsep") prop = MinProperty::NSeparating;
    else if (opt.property == "split") prop = MinProperty::Splitting;
    else if (opt.property == "nsplit") prop = MinProperty::NSplitting;
    else throw DomainError("unknown property '" + opt.property +
                           "' (expected sep|nsep|split|nsplit)");
    SearchResult res = exact_min_family_size(prop, opt.n, opt.k, effective_guards(opt));
    std::cout << res.objective << ": minimum size " << res.value
              << (res.exhausted ? " (exhaustive)" : " (not exhausted)") << "\n";
    std::cout << "certificate:\n" << emit_family(res.certificate, Format::Sets);
    return 0;
}

int cmd_check_implications(const Options& opt) {
    static const ImplicationKind kinds[] = {
        ImplicationKind::MonotoneIJ,    ImplicationKind::NNImpliesN,
        ImplicationKind::SumImpliesIJ,  ImplicationKind::NSepNotNN,
        ImplicationKind::NSepNotIJ,     ImplicationKind::IJNotNSep,
        ImplicationKind::NSepNotSuccN,  ImplicationKind::IJNotSuccI,
        ImplicationKind::IJNotSuccJ,    ImplicationKind::IJNotInnerBox,
        ImplicationKind::InnerBoxNotIJ,
    };
    const ImplicationKind* kind = nullptr;
    for (const auto& cand : kinds)
        if (opt.kind == implication_kind_name(cand)) kind = &cand;
    if (kind == nullptr)
        throw DomainError("unknown implication kind '" + opt.kind + "'");
    ImplicationParams params;
    params.n = opt.n;
    params.i = opt.i;
    params.j = opt.j;
    params.i2 = opt.i2;
    params.j2 = opt.j2;
    params.rounds = opt.rounds;
    params.seed = opt.seed_given ? opt.seed : 1;
    VerdictReport verdict = check_implication(*kind, opt.k, params, effective_guards(opt));
    std::cout << verdict.kind << ": " << (verdict.pass ? "pass" : "FAIL") << " ("
              << verdict.details << ")\n";
    return verdict.pass ? 0 : 1;
}

int cmd_check_identities(const Options& opt) {
    VerdictReport verdict =
        counting_identities_check(opt.s, opt.t, opt.k, effective_guards(opt));
    std::cout << verdict.kind << ": " << (verdict.pass ? "pass" : "FAIL") << " ("
              << verdict.details << ")\n";
    return verdict.pass ? 0 : 1;
}

int cmd_check_parity_oracle(const Options& opt) {
    Guards guards = effective_guards(opt);
    if (!opt.unsafe_limits && opt.k > 6)
        throw GuardExceeded("parity-oracle sweeps 8^k triples; k <= 6");
    if (opt.k < 1) throw DomainError("parity-oracle requires k >= 1");
    const std::uint64_t total = std::uint64_t{1} << opt.k;
    std::uint64_t mismatches = 0;
    std::string first;
    for (std::uint64_t a = 0; a < total; ++a)
        for (std::uint64_t b = 0; b < total; ++b)
            for (std::uint64_t c = 0; c < total; ++c) {
                SubsetMask ba = SubsetMask::from_bits(opt.k, a);
                SubsetMask bb = SubsetMask::from_bits(opt.k, b);
                SubsetMask bc = SubsetMask::from_bits(opt.k, c);
                bool parity = triple_splittable_parity(ba, bb, bc);
                bool brute =
                    is_splittable(SetCollection({ba, bb, bc}), guards).has_value();
                bool built = build_triple_splitter(ba, bb, bc).has_value();
                if (parity != brute || built != brute) {
                    if (mismatches == 0)
                        first = ba.to_string() + " " + bb.to_string() + " " +
                                bc.to_string();
                    ++mismatches;
                }
            }
    std::cout << "parity-oracle over [" << opt.k << "]: " << mismatches
              << " mismatches in " << (total * total * total) << " triples\n";
    if (mismatches > 0) std::cout << "first mismatch: " << first << "\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating / splitting family toolkit"};
    app.require_subcommand(1);
    Options opt;

    app.add_flag("--unsafe-limits", opt.unsafe_limits,
                 "lift all brute-force guards (may run very long)");

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "sets|matrix|json")
            ->default_str("sets");
        cmd->add_option("--out", opt.out, "output file (default stdout)");
    };
    auto add_family_input = [&](CLI::App* cmd) {
        cmd->add_option("family", opt.input, "family file ('-' = stdin)");
        add_io(cmd);
    };

    int rc = 0;
    auto set = [&](auto fn) { return [&opt, &rc, fn]() { rc = fn(opt); }; };

    // construct
    auto* construct = app.add_subcommand("construct", "build a family");
    construct->require_subcommand(1);
    auto* minsep = construct->add_subcommand("min-sep",
                                             "minimum separating family (binary rows)");
    minsep->add_option("--k", opt.k, "ground set size")->required();
    add_io(minsep);
    minsep->callback(set([](const Options& o) {
        print_family(o, build_min_separating(o.k));
        return 0;
    }));

    auto* twosep = construct->add_subcommand(
        "2-sep", "separating family + pairwise symmetric differences");
    add_family_input(twosep);
    twosep->callback(set([](const Options& o) {
        print_family(o, build_2_separating(load_family(o)));
        return 0;
    }));

    auto* interval = construct->add_subcommand("interval-split",
                                               "interval splitting family");
    interval->add_option("--k", opt.k, "ground set size")->required();
    add_io(interval);
    interval->callback(set([](const Options& o) {
        print_family(o, build_interval_splitting(o.k));
        return 0;
    }));

    auto* randnsep = construct->add_subcommand("rand-nsep",
                                               "randomized n-separating family");
    randnsep->add_option("--n", opt.n, "n")->required();
    randnsep->add_option("--k", opt.k, "ground set size")->required();
    randnsep->add_option("--seed", opt.seed, "rng seed")->required();
    randnsep->add_flag("--unverified", opt.unverified,
                       "stop at the bound ceiling without certification");
    add_io(randnsep);
    randnsep->callback(set([](const Options& o) {
        BoundReport rep;
        SetFamily f = build_n_separating_randomized(o.n, o.k, o.seed, &rep,
                                                    !o.unverified,
                                                    effective_guards(o));
        print_bound(rep);
        print_family(o, f);
        return 0;
    }));

    auto* rand2split = construct->add_subcommand("rand-2split",
                                                 "randomized 2-splitting family");
    rand2split->add_option("--k", opt.k, "ground set size")->required();
    rand2split->add_option("--seed", opt.seed, "rng seed")->required();
    rand2split->add_flag("--unverified", opt.unverified,
                         "stop at the bound ceiling without certification");
    add_io(rand2split);
    rand2split->callback(set([](const Options& o) {
        BoundReport rep;
        SetFamily f = build_2_splitting_randomized(o.k, o.seed, &rep, !o.unverified,
                                                   effective_guards(o));
        print_bound(rep);
        print_family(o, f);
        return 0;
    }));

    // verify
    auto* verify = app.add_subcommand("verify", "test a family property");
    verify->require_subcommand(1);
    auto* vsep = verify->add_subcommand("sep", "separating?");
    add_family_input(vsep);
    vsep->callback(set(cmd_verify_sep));
    auto* vnsep = verify->add_subcommand("nsep", "n-separating?");
    vnsep->add_option("--n", opt.n, "n (default 2)");
    add_family_input(vnsep);
    vnsep->callback(set(cmd_verify_nsep));
    auto* vijsep = verify->add_subcommand("ijsep", "(i,j)-separating?");
    vijsep->add_option("--i", opt.i, "i")->required();
    vijsep->add_option("--j", opt.j, "j")->required();
    add_family_input(vijsep);
    vijsep->callback(set(cmd_verify_ijsep));
    auto* vsplit = verify->add_subcommand("split", "splitting?");
    add_family_input(vsplit);
    vsplit->callback(set(cmd_verify_split));
    auto* vnsplit = verify->add_subcommand("nsplit", "n-splitting?");
    vnsplit->add_option("--n", opt.n, "n (default 2)");
    add_family_input(vnsplit);
    vnsplit->callback(set(cmd_verify_nsplit));

    // count
    auto* count = app.add_subcommand("count", "exact counts");
    count->require_subcommand(1);
    auto* census = count->add_subcommand("sep-census",
                                         "inequivalent separating families (CSV)");
    census->add_option("--m", opt.m, "rows")->required();
    census->add_option("--out", opt.out, "output file (default stdout)");
    census->callback(set(cmd_count_census));
    auto* splitters = count->add_subcommand("splitters",
                                            "simultaneous splitters of (S,T)");
    splitters->add_option("--s", opt.s, "|S|")->required();
    splitters->add_option("--t", opt.t, "|T|")->required();
    splitters->add_option("--b", opt.b, "|S and T|")->required();
    splitters->add_option("--k", opt.k, "ground set size")->required();
    splitters->callback(set(cmd_count_splitters));
    auto* volume = count->add_subcommand("volume", "volume-method lower bound");
    volume->add_option("--n", opt.n, "n")->required();
    volume->add_option("--k", opt.k, "ground set size")->required();
    volume->callback(set(cmd_count_volume));

    // search
    auto* search = app.add_subcommand("search", "exact minimum sizes");
    search->require_subcommand(1);
    auto* smin = search->add_subcommand("min", "minimum family size");
    smin->add_option("property", opt.property, "sep|nsep|split|nsplit")->required();
    smin->add_option("--k", opt.k, "ground set size")->required();
    smin->add_option("--n", opt.n, "n for nsep/nsplit (default 2)");
    smin->callback(set(cmd_search_min));

    // check
    auto* check = app.add_subcommand("check", "verified claims");
    check->require_subcommand(1);
    auto* impl = check->add_subcommand("implications",
                                       "one implication-lattice item");
    impl->add_option("--kind", opt.kind, "implication kind name")->required();
    impl->add_option("--k", opt.k, "ground set size")->required();
    impl->add_option("--n", opt.n, "n");
    impl->add_option("--i", opt.i, "i");
    impl->add_option("--j", opt.j, "j");
    impl->add_option("--i2", opt.i2, "inner i'");
    impl->add_option("--j2", opt.j2, "inner j'");
    impl->add_option("--rounds", opt.rounds, "random families (default 500)");
    impl->add_option("--seed", opt.seed, "rng seed (default 1)");
    impl->callback([&opt, &rc, impl]() {
        opt.seed_given = impl->count("--seed") > 0;
        rc = cmd_check_implications(opt);
    });
    auto* ident = check->add_subcommand("identities", "splitter-counting identities");
    ident->add_option("--s", opt.s, "|S|")->required();
    ident->add_option("--t", opt.t, "|T|")->required();
    ident->add_option("--k", opt.k, "ground set size")->required();
    ident->callback(set(cmd_check_identities));
    auto* parity = check->add_subcommand("parity-oracle",
                                         "triple parity rule vs brute force");
    parity->add_option("--k", opt.k, "ground set size")->required();
    parity->callback(set(cmd_check_parity_oracle));

    // experiment
    auto* experiment = app.add_subcommand("experiment", "scripted sweeps");
    experiment->require_subcommand(1);
    auto* run = experiment->add_subcommand("run", "run a JSON experiment spec");
    run->add_option("spec", opt.spec_file, "spec file")->required();
    run->add_option("--out", opt.out, "override output directory");
    run->callback(set([](const Options& o) {
        ExperimentSpec spec = ExperimentSpec::from_file(o.spec_file);
        if (!o.out.empty()) spec.out_dir = o.out;
        return run_experiment(spec, effective_guards(o));
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
