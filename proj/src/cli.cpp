#include "superhowe/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superhowe/decompose.hpp"
#include "superhowe/report_io.hpp"
#include "superhowe/verify.hpp"

namespace superhowe::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + out_path + "'");
    os << text;
}

struct DecomposeArgs {
    int n = 0;
    int d = -1;
    int dmax = -1;
    std::string format = "table";
    std::string out;
};

int cmd_decompose(const DecomposeArgs& args) {
    if (args.n < 1) {
        std::cerr << "decompose: requires --n >= 1\n";
        return kExitUsage;
    }
    if ((args.d < 0) == (args.dmax < 0)) {
        std::cerr << "decompose: exactly one of --d or --dmax is required\n";
        return kExitUsage;
    }
    const int lo = args.d >= 0 ? args.d : 0;
    const int hi = args.d >= 0 ? args.d : args.dmax;
    std::vector<DecompositionReport> reports;
    for (int d = lo; d <= hi; ++d) reports.push_back(decompose_harmonic(args.n, d));
    write_output(render_reports(reports, args.n, hi, parse_format(args.format)), args.out);
    return kExitOk;
}

struct EnumerateArgs {
    int n = 0;
    int d = 0;
    std::string pair = "spo";
    bool no_harmonic = false;
    std::string format = "table";
    std::string out;
};

int cmd_enumerate(const EnumerateArgs& args) {
    if (args.n < 1 || args.d < 0) {
        std::cerr << "enumerate: requires --n >= 1 and --d >= 0\n";
        return kExitUsage;
    }
    AlgebraSpec a = args.pair == "gl" ? build_gl_big(args.n) : build_spo(args.n);
    AlgebraSpec b = args.pair == "gl" ? build_gl_small(args.n) : build_osp22(args.n);
    // The gl pair is enumerated in all of S^d; the spo pair defaults to the
    // harmonic subspace (the osp(2|2) Borel contains n'+ anyway).
    const bool harmonic = args.pair != "gl" && !args.no_harmonic;
    const auto hwvs = joint_hwv_enumerate(args.n, args.d, a, b, harmonic);

    const OutputFormat format = parse_format(args.format);
    std::ostringstream os;
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = args.n;
        j["degree"] = args.d;
        j["pair"] = args.pair;
        j["harmonic"] = harmonic;
        j["hwvs"] = ordered_json::array();
        for (const JointHwv& h : hwvs) {
            ordered_json e;
            e["weight_a"] = ordered_json::array();
            for (const Rational& c : h.weight_a.coords) e["weight_a"].push_back(c.str());
            e["weight_b"] = ordered_json::array();
            for (const Rational& c : h.weight_b.coords) e["weight_b"].push_back(c.str());
            e["hwv"] = to_string(h.v);
            j["hwvs"].push_back(e);
        }
        os << j.dump(2) << "\n";
    } else if (format == OutputFormat::Csv) {
        os << "weight_a,weight_b,hwv\n";
        for (const JointHwv& h : hwvs)
            os << '"' << h.weight_a.str() << "\",\"" << h.weight_b.str() << "\",\""
               << to_string(h.v) << "\"\n";
    } else {
        os << hwvs.size() << " joint highest weight vector(s) in S^" << args.d
           << (harmonic ? "(E)^{n'+}" : "(E)") << ", n=" << args.n << "\n";
        for (const JointHwv& h : hwvs)
            os << "  " << h.weight_a.str() << " x " << h.weight_b.str() << " : "
               << to_string(h.v) << "\n";
    }
    write_output(os.str(), args.out);
    return kExitOk;
}

struct FamilyArgs {
    std::string family;
    int n = 0;
    int d = 0;
    int k = 0;
    bool zeta_weights = false;
    std::string out;
};

void annihilation_ledger(std::ostream& os, const SuperPoly& v, const AlgebraSpec& alg,
                         const std::string& label) {
    os << "annihilated by " << label << " raising operators:";
    bool all = true;
    for (const DiffOp& r : alg.raising)
        if (!apply(r, v).is_zero()) all = false;
    os << (all ? " yes" : " no") << "\n";
}

int cmd_family(const FamilyArgs& args) {
    if (args.n < 1 || args.d < 0 || args.k < 0) {
        std::cerr << "family: requires --n >= 1, --d >= 0, --k >= 0\n";
        return kExitUsage;
    }
    const int n = args.n;
    const int k = args.k;
    const int d = args.d;
    std::ostringstream os;
    const auto family = family_from_name(args.family);
    if (!family) {
        std::cerr << "unknown family '" << args.family
                  << "' (expected omega|omega_tilde|nu|gamma|s|delta|p)\n";
        return kExitUsage;
    }
    SuperPoly v;
    try {
        v = build_family({*family, d, k}, n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "family " << args.family << ": " << e.what() << "\n";
        return kExitUsage;
    }

    os << "family " << args.family << "  n=" << n;
    if (args.family == "omega" || args.family == "omega_tilde" || args.family == "p")
        os << " d=" << d;
    os << " k=" << k << "\n";
    os << "vector: " << to_string(v) << "\n";
    if (v.is_zero()) {
        write_output(os.str(), args.out);
        return kExitOk;
    }
    os << "degree: " << v.degree() << "\n";

    const AlgebraSpec gl_big = build_gl_big(n);
    const AlgebraSpec gl_small = build_gl_small(n);
    const AlgebraSpec spo = build_spo(n);
    const AlgebraSpec osp = build_osp22(n);
    auto weight_line = [&os](const char* label, const std::optional<Weight>& w) {
        os << label << ": " << (w ? w->str() : std::string("not a weight vector")) << "\n";
    };
    if (args.family == "omega" || args.family == "nu" || args.family == "gamma") {
        weight_line("gl(2n|1) b-weight", weight_of(v, gl_big));
        weight_line("gl(1|1) weight", weight_of(v, gl_small));
        annihilation_ledger(os, v, gl_big, "b");
        annihilation_ledger(os, v, gl_small, "b'");
    } else if (args.family == "omega_tilde") {
        const AlgebraSpec tilde = with_borel_step(gl_big, n);
        weight_line("gl(2n|1) b~-weight", weight_of(v, gl_big));
        weight_line("gl(1|1) weight", weight_of(v, gl_small));
        weight_line("spo(2n|1) weight", weight_of(v, spo));
        annihilation_ledger(os, v, tilde, "b~");
        annihilation_ledger(os, v, gl_small, "b'");
    } else {
        weight_line("spo(2n|1) weight", weight_of(v, spo));
        weight_line("osp(2|2) weight", weight_of(v, osp));
        if (args.zeta_weights) weight_line("gl(1|1) zeta-weight", weight_of(v, gl_small));
        annihilation_ledger(os, v, spo, "b^spo");
        annihilation_ledger(os, v, osp, "osp(2|2)");
    }
    write_output(os.str(), args.out);
    return kExitOk;
}

struct VerifyArgs {
    std::string target;
    int n = 0;
    int dmax = -1;
    unsigned long long seed = 12345;
    bool list = false;
};

int print_ledger(const CheckLedger& ledger) {
    for (const Check& c : ledger.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
    return ledger.all_pass() ? kExitOk : kExitAuditFailure;
}

int cmd_verify(const VerifyArgs& args) {
    if (args.n < 0) {
        std::cerr << "verify: requires --n >= 1\n";
        return kExitUsage;
    }
    if (args.list) {
        for (const VerifyTarget& t : verify_targets())
            std::cout << t.id << "  " << t.description << "\n";
        return kExitOk;
    }
    if (!is_verify_target(args.target)) {
        std::cerr << "unknown verify target '" << args.target << "' (see verify --list)\n";
        return kExitUsage;
    }
    VerifyOptions opts;
    opts.n = args.n;
    opts.dmax = args.dmax;
    opts.seed = args.seed;
    try {
        return print_ledger(run_verify(args.target, opts));
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify " << args.target << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_audit(int n, int dmax, unsigned long long seed) {
    const std::vector<std::string> battery = {"A1",   "A2",   "T62",  "PLP",   "GLGL", "TWRB",
                                              "SHIFT", "CLOS", "DUAL", "KDIR", "HDEC", "PROPS"};
    bool all = true;
    for (const std::string& id : battery) {
        VerifyOptions opts;
        opts.n = n;
        opts.dmax = dmax;
        opts.seed = seed;
        std::cout << "== " << id << " ==\n";
        const CheckLedger ledger = run_verify(id, opts);
        if (print_ledger(ledger) != kExitOk) all = false;
    }
    return all ? kExitOk : kExitAuditFailure;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact spinor-oscillator engine for the spo(2n|1) / osp(2|2) duality on S(E)"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    CLI::App* decompose = app.add_subcommand("decompose", "harmonic decomposition tables");
    decompose->add_option("--n", dec.n, "half rank n (2n+1 variables of each parity)")
        ->required();
    decompose->add_option("--d", dec.d, "single degree");
    decompose->add_option("--dmax", dec.dmax, "degrees 0..dmax");
    decompose->add_option("--format", dec.format, "json|csv|table")->default_val("table");
    decompose->add_option("--out", dec.out, "output path (default stdout)");

    EnumerateArgs en;
    CLI::App* enumerate = app.add_subcommand("enumerate", "joint highest weight vectors");
    enumerate->add_option("--n", en.n, "half rank n")->required();
    enumerate->add_option("--d", en.d, "degree")->required();
    enumerate->add_option("--pair", en.pair, "gl = (gl(2n|1), gl(1|1)); spo = (spo(2n|1), osp(2|2))")
        ->check(CLI::IsMember({"gl", "spo"}))
        ->default_val("spo");
    enumerate->add_flag("--no-harmonic", en.no_harmonic,
                        "spo pair only: enumerate in all of S^d instead of the harmonic subspace");
    enumerate->add_option("--format", en.format, "json|csv|table")->default_val("table");
    enumerate->add_option("--out", en.out, "output path (default stdout)");

    FamilyArgs fam;
    CLI::App* family = app.add_subcommand("family", "print a closed-form vector family member");
    family->add_option("name", fam.family, "omega|omega_tilde|nu|gamma|s|delta|p")->required();
    family->add_option("--n", fam.n, "half rank n")->required();
    family->add_option("--d", fam.d, "power of x_1");
    family->add_option("--k", fam.k, "family index k");
    family->add_flag("--zeta-weights", fam.zeta_weights,
                     "also print unshifted gl(1|1) zeta-weights");
    family->add_option("--out", fam.out, "output path (default stdout)");

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand("verify", "run a named claim suite");
    verify->add_option("target", ver.target, "suite id (see --list)");
    verify->add_option("--n", ver.n, "override n");
    verify->add_option("--dmax", ver.dmax, "override degree bound");
    verify->add_option("--seed", ver.seed, "seed for randomized checks");
    verify->add_flag("--list", ver.list, "list available targets");

    int audit_n = 0, audit_dmax = -1;
    unsigned long long audit_seed = 12345;
    CLI::App* audit = app.add_subcommand("audit", "run the full audit battery");
    audit->add_option("--n", audit_n, "override n");
    audit->add_option("--dmax", audit_dmax, "override degree bound");
    audit->add_option("--seed", audit_seed, "seed for randomized checks");

    std::vector<const char*> argv;
    argv.push_back("superhowe");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(dec);
        if (enumerate->parsed()) return cmd_enumerate(en);
        if (family->parsed()) return cmd_family(fam);
        if (verify->parsed()) {
            if (!ver.list && ver.target.empty()) {
                std::cerr << "verify: missing target\n";
                return kExitUsage;
            }
            return cmd_verify(ver);
        }
        if (audit->parsed()) return cmd_audit(audit_n, audit_dmax, audit_seed);
    } catch (const AuditError& e) {
        std::cerr << "audit failure: " << e.what() << "\n";
        return kExitAuditFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAuditFailure;
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace superhowe::cli
