// sparsedisc: exact discriminants of sparse polynomials over Q(i).
//
// Subcommands:
//   disc     one polynomial or family instance -> exact discriminant
//   compare  closed form vs resultant oracle on one family instance
//   fuzz     seeded random instances across all families, formula vs oracle
//   bench    formula-vs-oracle timing ladder, CSV output

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <sparsedisc/closed_form.hpp>
#include <sparsedisc/instance_gen.hpp>

using namespace sparsedisc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

enum class Method { Auto, Formula, Oracle, Both };
enum class Format { Text, Json, Csv };

struct CommonOpts {
    std::string input;       // polynomial text (disc)
    std::string family;      // family tag
    std::string a, b, c, t;  // coefficients, canonical Q(i) text
    unsigned long n = 0, k = 0, l = 0;
    Method method = Method::Auto;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    unsigned long trials = 0;
    unsigned long oracle_cutoff = 400;
};

GaussianRational parse_coeff(const std::string& text, const char* flag) {
    try {
        return GaussianRational::parse(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError(std::string(flag) + ": " + e.what());
    }
}

// Builds the instance a family-flag invocation denotes.
FamilyInstance instance_from_flags(const CommonOpts& o) {
    const auto tag = family_tag_from_name(o.family);
    if (!tag) throw CLI::ValidationError("--family: unknown family '" + o.family + "'");
    FamilyInstance inst;
    inst.tag = *tag;
    inst.n = o.n;
    inst.k = o.k;
    inst.l = o.l;
    if (!o.a.empty()) inst.a = parse_coeff(o.a, "--a");
    if (!o.b.empty()) inst.b = parse_coeff(o.b, "--b");
    if (!o.c.empty()) inst.c = parse_coeff(o.c, "--c");
    if (!o.t.empty()) inst.t = parse_coeff(o.t, "--t");
    return inst;
}

json result_json(const std::string& input, const DiscriminantResult& r) {
    return json{{"input", input},
                {"method", disc_method_name(r.method)},
                {"value", r.value.to_string()},
                {"sign_exponent_audit", r.sign_exponent_audit.get_str()}};
}

void print_result(const CommonOpts& o, const std::string& input, const DiscriminantResult& r) {
    if (o.format == Format::Json) {
        std::cout << result_json(input, r).dump() << "\n";
    } else {
        std::cout << "disc = " << r.value << "\n";
        std::cout << "method = " << disc_method_name(r.method) << "\n";
    }
}

int cmd_disc(const CommonOpts& o) {
    std::string input;
    DiscriminantResult formula{GaussianRational(), DiscMethod::OracleSylvester, BigInt(0)};
    Polynomial f;
    bool have_formula = false;

    if (!o.family.empty()) {
        const FamilyInstance inst = instance_from_flags(o);
        f = inst.expand();
        input = inst.describe();
        if (o.method == Method::Auto || o.method == Method::Formula || o.method == Method::Both) {
            formula = closed_form_value(inst);
            have_formula = true;
        }
    } else {
        f = Polynomial::parse(o.input);
        input = o.input;
        if (f.degree() < 1) {
            std::cerr << "error: degree must be >= 1\n";
            return kExitUsage;
        }
        if (o.method == Method::Auto || o.method == Method::Formula || o.method == Method::Both) {
            formula = dispatch(f);
            have_formula = true;
            if (o.method == Method::Formula && (formula.method == DiscMethod::OracleSylvester ||
                                                formula.method == DiscMethod::OraclePrs)) {
                std::cerr << "error: no closed form matches this input\n";
                return kExitUsage;
            }
        }
    }

    switch (o.method) {
        case Method::Auto:
        case Method::Formula:
            print_result(o, input, formula);
            return kExitOk;
        case Method::Oracle:
            print_result(o, input, discriminant_oracle(f));
            return kExitOk;
        case Method::Both: {
            const DiscriminantResult oracle = discriminant_oracle(f);
            print_result(o, input, formula);
            print_result(o, input, oracle);
            if (have_formula && formula.value != oracle.value) {
                std::cerr << "MISMATCH\n";
                return kExitMismatch;
            }
            return kExitOk;
        }
    }
    return kExitOk;
}

int cmd_compare(const CommonOpts& o) {
    if (o.family.empty()) throw CLI::ValidationError("compare requires --family");
    const FamilyInstance inst = instance_from_flags(o);
    const Polynomial f = inst.expand();

    DiscriminantResult formula{GaussianRational(), DiscMethod::OracleSylvester, BigInt(0)};
    try {
        formula = closed_form_value(inst);
    } catch (const DegenerateFormulaError& e) {
        // vanishing internal divisor: the formula path legitimately defers
        std::cout << "formula degenerate (" << e.what() << "); oracle value: "
                  << discriminant_oracle(f).value << "\n";
        return kExitOk;
    }
    const DiscriminantResult oracle = discriminant_oracle(f);
    if (formula.value == oracle.value) {
        std::cout << "equal: " << formula.value << " (" << disc_method_name(formula.method)
                  << " vs " << disc_method_name(oracle.method) << ")\n";
        return kExitOk;
    }
    std::cout << "MISMATCH on " << inst.describe() << "\n";
    std::cout << "formula = " << formula.value << "\n";
    std::cout << "oracle  = " << oracle.value << "\n";
    return kExitMismatch;
}

int cmd_fuzz(const CommonOpts& o) {
    InstanceGenerator gen(o.seed);
    const std::optional<FamilyTag> only =
        o.family.empty() ? std::nullopt : family_tag_from_name(o.family);
    if (!o.family.empty() && !only)
        throw CLI::ValidationError("--family: unknown family '" + o.family + "'");

    unsigned long pass = 0, fail = 0;
    for (unsigned long i = 0; i < o.trials; ++i) {
        FamilyInstance inst = only ? gen.generate(*only) : gen.generate_any();
        GaussianRational formula;
        for (;;) {
            try {
                formula = closed_form_value(inst).value;
                break;
            } catch (const DegenerateFormulaError&) {
                inst = only ? gen.generate(*only) : gen.generate(inst.tag);
            }
        }
        const GaussianRational oracle = discriminant_oracle(inst.expand()).value;
        if (formula == oracle) {
            ++pass;
        } else {
            ++fail;
            std::cout << "MISMATCH seed=" << o.seed << " trial=" << i << " " << inst.describe()
                      << "\n  formula = " << formula << "\n  oracle  = " << oracle << "\n";
        }
    }
    std::cout << "fuzz: " << pass << "/" << o.trials << " pass, " << fail << " fail (seed "
              << o.seed << ")\n";
    return fail == 0 ? kExitOk : kExitMismatch;
}

// Best-of-`trials` wall time of fn(), in nanoseconds.
template <typename F>
std::uint64_t time_best(unsigned long trials, F&& fn) {
    std::uint64_t best = UINT64_MAX;
    for (unsigned long i = 0; i < trials; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        best = std::min(best, static_cast<std::uint64_t>(ns));
    }
    return best;
}

unsigned long value_digits(const GaussianRational& v) {
    return std::max(decimal_digits(v.re_num()), decimal_digits(v.im_num()));
}

int cmd_bench(const CommonOpts& o) {
    const std::string family = o.family.empty() ? "k2" : o.family;
    const auto tag = family_tag_from_name(family);
    if (!tag || *tag == FamilyTag::TwoN)
        throw CLI::ValidationError("bench supports the fixed-shape families (not two_n)");
    const unsigned long cap = o.n ? o.n : 256;

    InstanceGenerator gen(o.seed);
    std::cout << "family,n,method,nanos,digits\n";
    for (unsigned long n = 8; n <= cap; n *= 2) {
        // one instance per ladder point, degree pinned to n
        FamilyInstance inst = gen.generate(*tag);
        inst.n = n;
        if (inst.tag == FamilyTag::Trinomial && inst.k >= n) inst.k = n - 1;

        GaussianRational formula_value;
        const std::uint64_t formula_ns = time_best(o.trials, [&] {
            formula_value = closed_form_value(inst).value;
        });
        std::cout << family << "," << n << ",formula," << formula_ns << ","
                  << value_digits(formula_value) << "\n";

        if (n <= o.oracle_cutoff) {
            GaussianRational oracle_value;
            const std::uint64_t oracle_ns = time_best(o.trials, [&] {
                oracle_value = discriminant_oracle(inst.expand()).value;
            });
            if (oracle_value != formula_value) {
                std::cerr << "MISMATCH at n=" << n << ": " << inst.describe() << "\n";
                return kExitMismatch;
            }
            std::cout << family << "," << n << ",oracle," << oracle_ns << ","
                      << value_digits(oracle_value) << "\n";
        } else {
            std::cout << family << "," << n << ",oracle,skipped,0\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discriminants of sparse polynomials over Q(i)"};
    app.require_subcommand(1);

    CommonOpts o;
    const std::map<std::string, Method> method_map{{"auto", Method::Auto},
                                                   {"formula", Method::Formula},
                                                   {"oracle", Method::Oracle},
                                                   {"both", Method::Both}};
    const std::map<std::string, Format> format_map{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto add_family_flags = [&o](CLI::App* cmd) {
        cmd->add_option("--family", o.family,
                        "family: binomial|trinomial|k2|k3|knm1|recip2|recip3|two_n|os");
        cmd->add_option("--n", o.n, "degree parameter n");
        cmd->add_option("--k", o.k, "trinomial middle exponent");
        cmd->add_option("--l", o.l, "two_n low exponent");
        cmd->add_option("--a", o.a, "coefficient a (canonical Q(i) text)");
        cmd->add_option("--b", o.b, "coefficient b");
        cmd->add_option("--c", o.c, "coefficient c");
        cmd->add_option("--t", o.t, "Otake-Shaska scale t");
    };

    CLI::App* disc = app.add_subcommand("disc", "discriminant of one input");
    disc->add_option("input", o.input, "polynomial, e.g. \"x^7 + (2-3i)*x^2 - 1/2\"");
    add_family_flags(disc);
    disc->add_option("--method", o.method, "auto|formula|oracle|both")
        ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
    disc->add_option("--format", o.format, "text|json")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));

    CLI::App* compare = app.add_subcommand("compare", "closed form vs oracle, exit 0 iff equal");
    add_family_flags(compare);

    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random formula-vs-oracle sweep");
    fuzz->add_option("--seed", o.seed, "PRNG seed")->required();
    fuzz->add_option("--trials", o.trials, "number of instances")
        ->required()
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--family", o.family, "restrict to one family");

    CLI::App* bench = app.add_subcommand("bench", "timing ladder, CSV on stdout");
    bench->add_option("--seed", o.seed, "PRNG seed")->required();
    bench->add_option("--trials", o.trials, "repetitions per point (best-of)")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--family", o.family, "family to bench (default k2)");
    bench->add_option("--n", o.n, "ladder cap (default 256)");
    bench->add_option("--oracle-cutoff", o.oracle_cutoff,
                      "skip the oracle above this degree (default 400)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(disc)) {
            if (o.input.empty() && o.family.empty()) {
                std::cerr << "error: disc needs a polynomial or --family\n";
                return kExitUsage;
            }
            return cmd_disc(o);
        }
        if (app.got_subcommand(compare)) return cmd_compare(o);
        if (app.got_subcommand(fuzz)) return cmd_fuzz(o);
        if (app.got_subcommand(bench)) return cmd_bench(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
