/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEFSCHETZ_CLI_HPP
#define LEFSCHETZ_CLI_HPP

// Command-line front end. run_command is stream-parameterized so the whole
// surface is testable in-process. Exit codes: 0 success, 1 computational
// failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefschetz/report_json.hpp"
#include "lefschetz/verify.hpp"

namespace lefschetz {

namespace cli_detail {

struct CliOptions {
    std::string field = "32003";
    std::vector<int> ci;           // hilbert/expected-codim --ci
    std::vector<int> monomial_ci;  // locus/wlp/slp2 --monomial-ci
    std::vector<int> random_ci;    // locus/wlp/slp2 --random-ci
    std::uint64_t seed = 1;
    int trials = 3;
    std::string ideal_src;
    std::string module_file;
    std::string conic_src;
    std::string mode = "full";
    bool slicing = false;
    bool json = false;
    bool with_locus = false;
    int socle_degree = 1;
    std::string suite;
    int workers = 1;
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string hf_str(const HilbertFunction& hf) {
    std::string s = "(";
    for (std::size_t i = 0; i < hf.size(); ++i) {
        s += std::to_string(hf[i]);
        if (i + 1 < hf.size()) s += ", ";
    }
    return s + ")";
}

inline std::string field_label(const std::string& field) {
    if (field == "q" || field == "Q") return "Q";
    return "F_" + field;
}

template <Field K>
struct Env {
    K unit;
    RingPtr<K> R;  // k[x1,x2,x3]
    RingPtr<K> S;  // k[a1..a6]
};

template <Field K>
Env<K> make_env(const K& unit) {
    return {unit, make_ring<K>(numbered_names("x", 3), MonomialOrder::grevlex(), unit),
            conic_parameter_ring<K>(unit)};
}

template <Field K>
QuotientAlgebra<K> input_algebra(const Env<K>& env, const CliOptions& o) {
    int sources = (o.monomial_ci.size() == 3 ? 1 : 0) + (o.random_ci.size() == 3 ? 1 : 0) +
                  (o.ideal_src.empty() ? 0 : 1);
    if (sources != 1)
        throw std::invalid_argument("give exactly one of --monomial-ci, --random-ci, --ideal");
    if (o.monomial_ci.size() == 3)
        return monomial_ci(env.R, CIType(o.monomial_ci[0], o.monomial_ci[1], o.monomial_ci[2]));
    if (o.random_ci.size() == 3)
        return random_ci(env.R, CIType(o.random_ci[0], o.random_ci[1], o.random_ci[2]), o.seed);
    return make_quotient(env.R, parse_polynomial_list<K>(env.R, o.ideal_src));
}

template <Field K>
void print_locus_text(std::ostream& out, const LocusReport<K>& rep) {
    if (rep.type)
        out << "type (" << rep.type->d1 << "," << rep.type->d2 << "," << rep.type->d3 << ")\n";
    out << "h = " << hf_str(rep.hf) << ", socle degree " << rep.e << "\n";
    out << "mode " << (rep.mode == LocusMode::middle ? "middle" : "full")
        << (rep.wlp_certified ? " (WLP certified)" : "") << "\n";
    for (const auto& [i, I] : rep.ideals)
        out << "I_" << i << ": " << I.gens.size() << " generator" << (I.gens.size() == 1 ? "" : "s")
            << "\n";
    out << "total ideal (";
    for (std::size_t k = 0; k < rep.total.gens.size(); ++k) {
        out << rep.total.gens[k].to_string();
        if (k + 1 < rep.total.gens.size()) out << ", ";
    }
    out << ")\n";
    out << "codim " << rep.codim << (rep.codim == 6 ? " (empty locus)" : "") << "\n";
    if (rep.degree) out << "degree " << rep.degree->str() << "\n";
    if (rep.expected_codim) out << "expected codim " << *rep.expected_codim << "\n";
}

template <Field K>
int cmd_hilbert(const Env<K>& env, const CliOptions& o, std::ostream& out) {
    HilbertFunction hf;
    bool gorenstein = false;
    if (o.ci.size() == 3) {
        hf = ci_hilbert_function(CIType(o.ci[0], o.ci[1], o.ci[2]));
        gorenstein = true;
    } else if (!o.ideal_src.empty()) {
        auto A = make_quotient(env.R, parse_polynomial_list<K>(env.R, o.ideal_src));
        hf = A.hilbert_function();
        gorenstein = A.is_gorenstein();
    } else {
        throw std::invalid_argument("give --ci d1 d2 d3 or --ideal <generators>");
    }
    out << "h = " << hf_str(hf) << "\n";
    out << "socle degree " << static_cast<int>(hf.size()) - 1 << "\n";
    out << "gorenstein: " << (gorenstein ? "yes" : "no") << "\n";
    return 0;
}

template <Field K>
int cmd_locus(const Env<K>& env, const CliOptions& o, std::ostream& out) {
    LocusOptions lo;
    lo.mode = o.mode == "middle" ? LocusMode::middle : LocusMode::full;
    lo.wlp_seed = o.seed;
    lo.wlp_trials = o.trials;
    LocusReport<K> rep;
    std::optional<int> slicing_codim;
    std::vector<std::uint64_t> seeds;
    if (!o.module_file.empty()) {
        auto M = parse_module_presentation<K>(env.R, read_text_file(o.module_file));
        rep = locus_ideal(M, env.S, lo);
        if (o.slicing) slicing_codim = codim_via_slicing(rep.total, o.seed);
    } else {
        auto A = input_algebra(env, o);
        if (o.random_ci.size() == 3) seeds.push_back(o.seed);
        rep = locus_ideal(A, env.S, lo);
        if (o.slicing) slicing_codim = locus_codim_via_slicing(A, env.S, o.seed);
    }
    if (o.json) {
        Json j = locus_report_json(rep, field_label(o.field), seeds);
        if (slicing_codim) j["slicing_codim"] = *slicing_codim;
        out << j.dump(2) << "\n";
    } else {
        print_locus_text(out, rep);
        if (slicing_codim) out << "slicing codim " << *slicing_codim << "\n";
    }
    return 0;
}

template <Field K>
int cmd_conic_test(const Env<K>& env, const CliOptions& o, std::ostream& out) {
    if (o.ideal_src.empty()) throw std::invalid_argument("conic-test requires --ideal");
    auto A = make_quotient(env.R, parse_polynomial_list<K>(env.R, o.ideal_src));
    auto C = parse_polynomial<K>(env.R, o.conic_src);
    auto res = is_lefschetz_conic(A, C);
    if (res.lefschetz)
        out << "Lefschetz: all multiplication maps have maximal rank\n";
    else
        out << "non-Lefschetz, failing at i = " << res.first_failure << "\n";
    return 0;
}

template <Field K>
int cmd_lefschetz_search(const Env<K>& env, const CliOptions& o, std::ostream& out, int power) {
    LefschetzCertificate<K> cert;
    if (!o.module_file.empty()) {
        auto M = parse_module_presentation<K>(env.R, read_text_file(o.module_file));
        cert = power == 1 ? wlp_check(M, o.seed, o.trials) : slp_range2_check(M, o.seed, o.trials);
    } else {
        auto A = input_algebra(env, o);
        cert = power == 1 ? wlp_check(A, o.seed, o.trials) : slp_range2_check(A, o.seed, o.trials);
    }
    if (cert.found) {
        out << "certified with ell = " << cert.ell.to_string() << " (trial " << cert.trials_used
            << " of " << o.trials << ", seed " << o.seed << ")\n";
        return 0;
    }
    out << "no certificate in " << o.trials << " trials (inconclusive)\n";
    return 1;
}

inline int cmd_gorenstein(const CliOptions& o, std::ostream& out) {
    auto A = random_gorenstein(o.socle_degree, o.seed);
    PrimeField unit = PrimeField::make_unit(kDefaultPrime);
    auto S = conic_parameter_ring<PrimeField>(unit);
    if (!o.with_locus) {
        out << "h = " << hf_str(A.hilbert_function()) << "\n";
        out << "socle degree " << A.socle_degree() << "\n";
        out << "ideal (";
        const auto& gens = A.ideal().gens;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            out << gens[k].to_string();
            if (k + 1 < gens.size()) out << ", ";
        }
        out << ")\n";
        return 0;
    }
    auto rep = locus_ideal(A, S, LocusOptions{});
    if (o.json) {
        out << locus_report_json(rep, "F_" + std::to_string(kDefaultPrime), {o.seed}).dump(2)
            << "\n";
    } else {
        print_locus_text(out, rep);
    }
    return 0;
}

inline int cmd_verify(const CliOptions& o, std::ostream& out) {
    auto results = verify_suite(o.suite, o.workers);
    out << format_check_table(results);
    return all_passed(results) ? 0 : 1;
}

// Runs fn with the selected coefficient field; fn is a generic lambda taking
// the field unit.
template <typename Fn>
int with_field(const std::string& field, Fn&& fn) {
    if (field == "q" || field == "Q") return fn(Rational(1));
    std::uint32_t p = 0;
    try {
        unsigned long v = std::stoul(field);
        if (v == 0 || v >= (1ul << 31)) throw std::out_of_range("range");
        p = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("--field expects q or a prime below 2^31");
    }
    if (!is_prime_u32(p)) throw std::invalid_argument("--field " + field + " is not prime");
    return fn(PrimeField::make_unit(p));
}

}  // namespace cli_detail

// Parses argv (without the program name) and executes one subcommand against
// the given output streams.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out,
                       std::ostream& err) {
    using namespace cli_detail;
    CliOptions o;
    CLI::App app{"non-Lefschetz locus of conics for Artinian algebras and graded modules",
                 "lefschetz"};
    app.require_subcommand(1);

    auto add_field = [&o](CLI::App* sub) {
        sub->add_option("--field", o.field, "coefficient field: q or a prime (default 32003)");
    };
    auto add_inputs = [&o](CLI::App* sub, bool with_module) {
        sub->add_option("--monomial-ci", o.monomial_ci,
                        "monomial complete intersection degrees d1 d2 d3")
            ->expected(3);
        sub->add_option("--random-ci", o.random_ci,
                        "random complete intersection degrees d1 d2 d3")
            ->expected(3);
        sub->add_option("--ideal", o.ideal_src, "comma-separated homogeneous generators");
        if (with_module) sub->add_option("--module", o.module_file, "module presentation file");
        sub->add_option("--seed", o.seed, "random seed (default 1)");
    };

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and socle degree");
    hilbert->add_option("--ci", o.ci, "complete intersection degrees d1 d2 d3")->expected(3);
    hilbert->add_option("--ideal", o.ideal_src, "comma-separated homogeneous generators");
    add_field(hilbert);

    auto* locus = app.add_subcommand("locus", "defining ideal of the non-Lefschetz locus of conics");
    add_inputs(locus, true);
    locus->add_option("--mode", o.mode, "full (default) or middle")
        ->check(CLI::IsMember({"full", "middle"}));
    locus->add_flag("--slicing", o.slicing, "also report the random-slicing codimension");
    locus->add_flag("--json", o.json, "emit the JSON report");
    locus->add_option("--trials", o.trials, "WLP trials for middle mode (default 3)");
    add_field(locus);

    auto* expected = app.add_subcommand("expected-codim", "classifier for complete intersections");
    expected->add_option("--ci", o.ci, "complete intersection degrees d1 d2 d3")
        ->expected(3)
        ->required();

    auto* conic = app.add_subcommand("conic-test", "test one conic for the Lefschetz property");
    conic->add_option("--ideal", o.ideal_src, "comma-separated homogeneous generators")
        ->required();
    conic->add_option("--conic", o.conic_src, "degree-2 form in x1,x2,x3")->required();
    add_field(conic);

    auto* wlp = app.add_subcommand("wlp", "randomized weak Lefschetz certificate");
    add_inputs(wlp, true);
    wlp->add_option("--trials", o.trials, "number of random linear forms (default 3)");
    add_field(wlp);

    auto* slp2 = app.add_subcommand("slp2", "randomized strong Lefschetz certificate at range 2");
    add_inputs(slp2, true);
    slp2->add_option("--trials", o.trials, "number of random linear forms (default 3)");
    add_field(slp2);

    auto* gorenstein =
        app.add_subcommand("gorenstein", "random Gorenstein algebra from a dual form");
    gorenstein->add_option("--socle-degree", o.socle_degree, "socle degree e >= 1")->required();
    gorenstein->add_option("--seed", o.seed, "random seed (default 1)");
    gorenstein->add_flag("--locus", o.with_locus, "also compute the locus report");
    gorenstein->add_flag("--json", o.json, "emit the JSON locus report (with --locus)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "paper-examples, theorem-main-ci, properties, module")
        ->required();
    verify->add_option("--workers", o.workers, "worker threads (default 1)");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*hilbert)
            return with_field(o.field,
                              [&](auto unit) { return cmd_hilbert(make_env(unit), o, out); });
        if (*locus)
            return with_field(o.field,
                              [&](auto unit) { return cmd_locus(make_env(unit), o, out); });
        if (*expected) {
            out << expected_codim_ci(CIType(o.ci[0], o.ci[1], o.ci[2])) << "\n";
            return 0;
        }
        if (*conic)
            return with_field(o.field,
                              [&](auto unit) { return cmd_conic_test(make_env(unit), o, out); });
        if (*wlp)
            return with_field(o.field, [&](auto unit) {
                return cmd_lefschetz_search(make_env(unit), o, out, 1);
            });
        if (*slp2)
            return with_field(o.field, [&](auto unit) {
                return cmd_lefschetz_search(make_env(unit), o, out, 2);
            });
        if (*gorenstein) return cmd_gorenstein(o, out);
        if (*verify) return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_CLI_HPP
