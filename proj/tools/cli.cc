#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "syscodes/chain_complex.h"
#include "syscodes/complex_io.h"
#include "syscodes/css.h"
#include "syscodes/error.h"
#include "syscodes/hyperbolic.h"
#include "syscodes/random_codes.h"
#include "syscodes/stabilizer.h"
#include "syscodes/surface_family.h"

namespace syscodes {

namespace {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string format_rational(const Rational &r) {
    return format_double(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
}

std::string format_support(const BitVector &v) {
    std::string s;
    for (size_t i : v.support()) {
        s += (s.empty() ? "" : ",") + std::to_string(i);
    }
    return s.empty() ? "-" : s;
}

std::string pass_fail(bool ok) {
    return ok ? "PASS" : "FAIL";
}

struct CodeArgs {
    std::string input;
    size_t i = 1;
    std::optional<size_t> max_weight;
    bool witness = false;
};

int cmd_code(const CodeArgs &a, std::ostream &out) {
    bool is_file = std::filesystem::exists(a.input) || a.input.ends_with(".json");
    InputFile file;
    std::string descriptor = a.input;
    if (is_file) {
        file = load_input(a.input);
    } else {
        file.complex = parse_family(a.input).complex;
    }
    out << "input: " << descriptor << "\n";
    if (file.css) {
        CssDistance dist = css_distance(*file.css, a.max_weight);
        CodeParameters params{file.css->num_qubits(), file.css->num_logical(), std::nullopt};
        if (dist.found) {
            params.d = dist.weight;
        }
        out << "code: " << params.str() << "\n";
        out << "n=" << params.n << " k=" << params.k << " d=" << (params.d ? std::to_string(*params.d) : "?") << "\n";
        if (dist.x_sector.found) {
            out << "x_sector_weight=" << dist.x_sector.weight << "\n";
        }
        if (dist.z_sector.found) {
            out << "z_sector_weight=" << dist.z_sector.weight << "\n";
        }
        if (a.witness && dist.found) {
            out << "witness=" << dist.witness.str() << "\n";
        }
        return EXIT_OK;
    }
    HomologicalCodeOptions options;
    if (a.max_weight) {
        options.max_weight = *a.max_weight;
    }
    HomologicalCode code = homological_code(*file.complex, a.i, options);
    const CodeParameters &params = code.parameters;
    out << "code: " << params.str() << "\n";
    out << "n=" << params.n << " k=" << params.k << " d=" << (params.d ? std::to_string(*params.d) : "?") << "\n";
    auto systole_text = [](const SearchResult &r) {
        return r.found ? std::to_string(r.weight) : std::string("?");
    };
    out << "csys_primal=" << systole_text(code.primal_systole) << "\n";
    if (code.dual_systole) {
        out << "csys_dual=" << systole_text(*code.dual_systole) << "\n";
    } else {
        out << "csys_dual=n/a\n";
    }
    if (params.d) {
        Rational ratio(static_cast<int64_t>(*params.d * *params.d), static_cast<int64_t>(params.n));
        out << "d2_over_n=" << ratio.numerator() << "/" << ratio.denominator() << " (" << format_rational(ratio)
            << ")\n";
    }
    out << "css_cross_check=" << (code.css_check ? "agree" : "skipped") << "\n";
    if (a.witness) {
        if (code.primal_systole.found) {
            out << "witness_primal=" << format_support(code.primal_systole.witness) << "\n";
        }
        if (code.dual_systole && code.dual_systole->found) {
            out << "witness_dual=" << format_support(code.dual_systole->witness) << "\n";
        }
    }
    return EXIT_OK;
}

struct ScanArgs {
    std::vector<std::string> descriptors;
    std::string output;
};

int cmd_scan(const ScanArgs &a, std::ostream &out, std::ostream &err, const std::string &usage) {
    if (a.descriptors.empty()) {
        err << "scan: no family descriptors given\n" << usage;
        return EXIT_USAGE;
    }
    std::ofstream file;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file) {
            err << "scan: cannot write '" << a.output << "'\n";
            return EXIT_USAGE;
        }
    }
    std::vector<FamilyMember> members;
    for (const auto &d : a.descriptors) {
        members.push_back(parse_family(d));
    }
    std::vector<BoundReport> reports = bound_scan(members);
    std::ostringstream csv;
    csv << "descriptor,n,k,d,d2_over_n,R_delta2_n2,bound36,csys_primal,csys_dual,triangulation\n";
    for (const auto &r : reports) {
        csv << r.descriptor << ',' << r.n << ',' << r.k << ',' << r.d << ',' << format_rational(r.d2_over_n) << ','
            << format_rational(r.r_delta2_n2) << ',' << (r.bound_36_satisfied ? "true" : "false") << ','
            << r.csys_primal << ',' << (r.csys_dual ? std::to_string(*r.csys_dual) : "") << ','
            << (r.is_triangulation ? "true" : "false") << '\n';
    }
    (a.output.empty() ? out : file) << csv.str();
    if (!triangulation_bound_holds(reports)) {
        err << "scan: a triangulation violates d^2 <= 36 n\n";
        return EXIT_ASSERTION;
    }
    return EXIT_OK;
}

struct FuchsianArgs {
    std::optional<int64_t> p;
    std::optional<int64_t> N;
    std::optional<int64_t> B;
    bool csv = false;
};

int cmd_verify_fuchsian(const FuchsianArgs &a, std::ostream &out) {
    std::vector<int64_t> primes = a.p ? std::vector<int64_t>{*a.p} : std::vector<int64_t>{3, 7, 11};
    std::vector<int64_t> levels;
    if (a.N) {
        levels.push_back(*a.N);
    } else {
        for (int64_t n = 2; n <= 6; n++) {
            levels.push_back(n);
        }
    }
    bool all_ok = true;
    if (a.csv) {
        out << trace_report_csv_header() << "\n";
    }
    for (int64_t p : primes) {
        for (int64_t N : levels) {
            int64_t B = a.B ? *a.B : 2 * N * N;
            TraceBoundReport r = min_trace_verify(p, N, B);
            all_ok = all_ok && r.satisfied;
            if (a.csv) {
                out << trace_report_csv_row(r) << "\n";
                continue;
            }
            out << pass_fail(r.satisfied) << " trace bound p=" << p << " N=" << N << " B=" << B
                << " elements=" << r.element_count << " nontrivial=" << r.nontrivial_count;
            if (r.vacuous) {
                out << " (vacuous: no nontrivial element in the box)\n";
                continue;
            }
            const CongruenceElement &w = *r.minimizer;
            out << " min_trace=" << *r.min_nontrivial_trace << " >= " << r.bound << " witness=(" << w.a << ','
                << w.b << ',' << w.c << ',' << w.d << ")\n";
            if (p == 3 && N == 2) {
                std::vector<CongruenceElement> all = enumerate_congruence_elements(p, N, B);
                CongruenceElement expected{1, 1, 1, 0, 6, 1};
                bool found = std::find(all.begin(), all.end(), expected) != all.end();
                all_ok = all_ok && found;
                out << pass_fail(found) << " element (1,1,1,0) at p=3 N=2 has norm 1 and trace 6\n";
            }
        }
    }
    return all_ok ? EXIT_OK : EXIT_ASSERTION;
}

int cmd_verify_metric(const std::vector<std::string> &etas, std::ostream &out) {
    bool all_ok = true;
    for (const auto &text : etas) {
        BigRational eta = parse_rational(text);
        MetricBoundReport r = metric_area_bounds(eta);
        std::string tag = " [eta=" + text + "]";
        out << pass_fail(r.sigma1_below_1_77) << " inner sector area 2pi/(3888 eta^3) = "
            << format_double(r.area_sigma1) << " < 1/77" << tag << "\n";
        out << pass_fail(r.sigma2_constant_below_1_150) << " transition sector constant pi/486 = "
            << format_double(r.area_sigma2_constant) << " < 1/150" << tag << "\n";
        out << pass_fail(r.total_below_half) << " triangle area sqrt(3)/4 + 3(1/150 + 1/77) = "
            << format_double(r.total_triangle_area) << " < 1/2" << tag << "\n";
        out << pass_fail(r.coefficient_within_4_81) << " transition coefficient max = " << r.coefficient_max
            << " <= 4/81" << tag << "\n";
        out << "INFO transition sector area at this eta pi/(486 eta) = " << format_double(r.area_sigma2)
            << (r.sigma2_below_1_150 ? " < 1/150" : " >= 1/150") << tag << "\n";
        all_ok = all_ok && r.sigma1_below_1_77 && r.sigma2_constant_below_1_150 && r.total_below_half &&
                 r.coefficient_within_4_81;
    }
    return all_ok ? EXIT_OK : EXIT_ASSERTION;
}

struct OracleArgs {
    size_t n = 5;
    size_t trials = 200;
    size_t css_n = 12;
    size_t css_trials = 50;
    uint64_t seed = DEFAULT_SEED;
};

int cmd_verify_oracle(const OracleArgs &a, std::ostream &out) {
    if (a.n < 1 || a.n > DENSE_QUBIT_LIMIT) {
        throw Error(ErrorKind::InvalidArgument, "--n must be between 1 and " + std::to_string(DENSE_QUBIT_LIMIT));
    }
    if (a.css_n < 2) {
        throw Error(ErrorKind::InvalidArgument, "--css-n must be at least 2");
    }
    Rng rng(a.seed);
    size_t dense_failures = 0;
    for (size_t t = 0; t < a.trials; t++) {
        size_t n = std::uniform_int_distribution<size_t>(1, a.n)(rng);
        size_t l = std::uniform_int_distribution<size_t>(0, n)(rng);
        StabilizerCode code = random_stabilizer_code(n, l, rng);
        size_t dim = dense_fixed_dim(code);
        if (dim != (size_t{1} << (n - l))) {
            if (dense_failures++ == 0) {
                out << "mismatch: n=" << n << " l=" << l << " fixed dim " << dim << "\n";
            }
        }
    }
    out << pass_fail(dense_failures == 0) << " fixed-space dimension = 2^(n-l) on " << a.trials
        << " random stabilizer groups (n <= " << a.n << ", seed " << a.seed << ")\n";
    size_t css_failures = 0;
    for (size_t t = 0; t < a.css_trials; t++) {
        size_t n = std::uniform_int_distribution<size_t>(2, a.css_n)(rng);
        size_t k1 = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
        size_t k2 = std::uniform_int_distribution<size_t>(0, n - 1 - k1)(rng);
        CssCode code = random_css_code(n, k1, k2, rng);
        CssDistance split = css_distance(code);
        SearchResult full = distance(code.stabilizer());
        if (split.found != full.found || split.weight != full.weight) {
            if (css_failures++ == 0) {
                out << "mismatch: n=" << n << " css " << split.weight << " symplectic " << full.weight << "\n";
            }
        }
    }
    out << pass_fail(css_failures == 0) << " CSS distance = symplectic distance on " << a.css_trials
        << " random CSS codes (n <= " << a.css_n << ", seed " << a.seed << ")\n";
    return dense_failures == 0 && css_failures == 0 ? EXIT_OK : EXIT_ASSERTION;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Homological and stabilizer code toolkit", "syscodes"};
    app.require_subcommand(1);

    CodeArgs code_args;
    auto *code = app.add_subcommand("code", "Parameters of the homological code of a family member or JSON file");
    code->add_option("input", code_args.input, "family descriptor (torus:L, tritorus:L, genus:g, rp2, sphere, "
                                               "subdiv:<descriptor>:rounds=R) or JSON file")
        ->required();
    code->add_option("--i", code_args.i, "homology dimension")->capture_default_str();
    code->add_option("--max-weight", code_args.max_weight, "give up on distances above this weight");
    code->add_flag("--witness", code_args.witness, "print minimum-weight witnesses");

    ScanArgs scan_args;
    auto *scan = app.add_subcommand("scan", "CSV of [[n,k,d]] and d^2/n over family members");
    scan->add_option("descriptors", scan_args.descriptors, "family descriptors");
    scan->add_option("--output,-o", scan_args.output, "CSV path (default: stdout)");

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    FuchsianArgs fuchsian_args;
    auto *fuchsian = verify->add_subcommand("fuchsian", "Trace bound on congruence subgroup elements");
    fuchsian->add_option("--p", fuchsian_args.p, "prime p = 3 mod 4 (default: 3, 7, 11)");
    fuchsian->add_option("--N", fuchsian_args.N, "level N >= 2 (default: 2..6)");
    fuchsian->add_option("--B", fuchsian_args.B, "coefficient bound (default: 2 N^2)");
    fuchsian->add_flag("--csv", fuchsian_args.csv, "print one CSV row per (p, N) instead of check lines");
    std::vector<std::string> etas{"1/2"};
    auto *metric = verify->add_subcommand("metric", "Area bounds for the smoothed triangle metric");
    metric->add_option("--eta", etas, "eta >= 1/2, decimal or fraction; repeatable")->capture_default_str();
    OracleArgs oracle_args;
    auto *oracle = verify->add_subcommand("oracle", "Dense-matrix and CSS/symplectic distance oracles");
    oracle->add_option("--n", oracle_args.n, "maximum qubits for the dense check")->capture_default_str();
    oracle->add_option("--trials", oracle_args.trials, "random stabilizer groups")->capture_default_str();
    oracle->add_option("--css-n", oracle_args.css_n, "maximum qubits for CSS codes")->capture_default_str();
    oracle->add_option("--css-trials", oracle_args.css_trials, "random CSS codes")->capture_default_str();
    oracle->add_option("--seed", oracle_args.seed, "random seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code_from_cli = app.exit(e, out, err);
        return code_from_cli == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (code->parsed()) {
            return cmd_code(code_args, out);
        }
        if (scan->parsed()) {
            return cmd_scan(scan_args, out, err, scan->help());
        }
        if (fuchsian->parsed()) {
            return cmd_verify_fuchsian(fuchsian_args, out);
        }
        if (metric->parsed()) {
            return cmd_verify_metric(etas, out);
        }
        if (oracle->parsed()) {
            return cmd_verify_oracle(oracle_args, out);
        }
    } catch (const Error &e) {
        err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return is_precondition_failure(e.kind()) ? EXIT_PRECONDITION : EXIT_USAGE;
    } catch (const std::logic_error &e) {
        err << "assertion failed: " << e.what() << "\n";
        return EXIT_ASSERTION;
    }
    err << app.help();
    return EXIT_USAGE;
}

}  // namespace syscodes
