#include "gf2q/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gf2q/berlekamp.hpp"
#include "gf2q/irreducible.hpp"
#include "gf2q/json_io.hpp"
#include "gf2q/properties.hpp"
#include "gf2q/selfcheck.hpp"

namespace gf2q::cli {

namespace {

// Argument problems found after CLI11 parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t max_degree = kDefaultMaxDegree;
    bool json = false;

    std::string poly_text;

    std::string irred_verb;
    std::uint64_t degree = 0;
    std::uint64_t k = 0;

    bool p1 = false;
    bool p2 = false;
    std::uint64_t m = 0;
    std::string method = "search";
    bool materialize = false;

    std::uint64_t from = 0;
    std::uint64_t to = 0;
    unsigned jobs = 1;
    std::uint64_t scan_cap = 10000;
};

Poly parse_arg(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid polynomial: ") + e.what());
    }
}

Property property_of(const Options& o) {
    if (o.p1 == o.p2) throw UsageError("exactly one of --p1 or --p2 is required");
    return o.p1 ? Property::P1 : Property::P2;
}

Method method_of(const std::string& name) {
    static const std::map<std::string, Method> kMethods = {
        {"search", Method::Search}, {"theorem", Method::Theorem}, {"corollary", Method::Corollary}, {"brute", Method::Brute}};
    return kMethods.at(name);
}

void add_property_flags(CLI::App* cmd, Options& o) {
    auto* p1 = cmd->add_flag("--p1", o.p1, "decide property P1 (Q^m = I iff irreducible)");
    auto* p2 = cmd->add_flag("--p2", o.p2, "decide property P2 (o(Q) = m iff irreducible)");
    p1->excludes(p2);
}

void add_method_option(CLI::App* cmd, Options& o) {
    cmd->add_option("--method", o.method, "search | theorem | corollary | brute")
        ->check(CLI::IsMember({"search", "theorem", "corollary", "brute"}))
        ->capture_default_str();
}

std::string verdict_line(const PropertyVerdict& v) {
    std::string line = to_string(v.property) + " m=" + std::to_string(v.m) + ": " + (v.holds ? "holds" : "fails") +
                       " (" + to_string(v.method) + ")";
    if (v.witness) line += " witness " + v.witness->to_string();
    if (v.witness_poly) line += " poly " + to_hex(*v.witness_poly);
    return line;
}

void materialize(PropertyVerdict& v) {
    if (!v.witness_poly && v.witness) v.witness_poly = materialize_witness(*v.witness);
}

int cmd_factor(const Options& o, std::ostream& out) {
    const Poly f = parse_arg(o.poly_text);
    const Factorization fac = factor(f, o.max_degree);
    if (o.json) {
        out << factorization_json(f, fac).dump() << '\n';
        return kExitOk;
    }
    out << format(f) << " [" << to_hex(f) << "]\n";
    for (const auto& [poly, mult] : fac.factors) {
        out << "  " << format(poly) << " [" << to_hex(poly) << "]";
        if (mult > 1) out << " ^" << mult;
        out << '\n';
    }
    const auto order = order_of(fac);
    out << "order: " << (order ? std::to_string(order->value) : std::string("undefined (repeated factor)")) << '\n';
    return kExitOk;
}

int cmd_qmatrix(const Options& o, std::ostream& out) {
    const BitMatrix q = build_q(parse_arg(o.poly_text), o.max_degree);
    if (o.json) {
        out << matrix_json(q).dump() << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < q.size(); ++i) out << q.row_string(i) << '\n';
    return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out) {
    const Poly f = parse_arg(o.poly_text);
    const PolyOrder order = poly_order(f, o.max_degree);
    if (o.json) {
        out << nlohmann::ordered_json{{"input", to_hex(f)}, {"order", order.value}}.dump() << '\n';
    } else {
        out << order.value << '\n';
    }
    return kExitOk;
}

int cmd_irred(const Options& o, std::ostream& out) {
    if (o.irred_verb == "test") {
        const Poly f = parse_arg(o.poly_text);
        const bool irreducible = is_irreducible(f);
        if (o.json) {
            out << nlohmann::ordered_json{{"poly", to_hex(f)}, {"irreducible", irreducible}}.dump() << '\n';
        } else {
            out << (irreducible ? "irreducible" : "reducible") << '\n';
        }
    } else if (o.irred_verb == "count") {
        const IrreducibleCount c = count_irreducible(o.degree);
        if (o.json) {
            out << count_json(c).dump() << '\n';
        } else {
            out << c.count << '\n';
        }
    } else {
        const auto polys = first_k_irreducibles(o.degree, o.k);
        if (o.json) {
            out << poly_list_json(polys).dump() << '\n';
        } else {
            for (const auto& p : polys) out << format(p) << " [" << to_hex(p) << "]\n";
        }
    }
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Property prop = property_of(o);
    const Method method = method_of(o.method);
    if (method == Method::Brute && o.m > 12) throw UsageError("--method brute supports m <= 12");
    PropertyVerdict v = classify(prop, o.m, method);
    if (o.materialize) materialize(v);
    out << (o.json ? verdict_json(v).dump() : verdict_line(v)) << '\n';
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const Property prop = property_of(o);
    const Method method = method_of(o.method);
    if (o.to < o.from) throw UsageError("--to must be >= --from");
    if (o.to > o.scan_cap) {
        throw UsageError("--to " + std::to_string(o.to) + " exceeds the scan cap " + std::to_string(o.scan_cap) +
                         " (raise with --scan-cap)");
    }
    if (method == Method::Brute && o.to > 12) throw UsageError("--method brute supports m <= 12");
    for (const auto& v : scan(prop, o.from, o.to, method, o.jobs)) {
        out << (o.json ? verdict_json(v).dump() : verdict_line(v)) << '\n';
    }
    return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const Property prop = property_of(o);
    const Method method = method_of(o.method);
    if (method == Method::Brute && o.m > 12) throw UsageError("--method brute supports m <= 12");
    PropertyVerdict v = classify(prop, o.m, method);
    materialize(v);
    if (o.json) {
        out << verdict_json(v).dump() << '\n';
    } else if (v.holds) {
        out << "property holds, no witness\n";
    } else {
        out << format(*v.witness_poly) << " [" << to_hex(*v.witness_poly) << "] parts " << v.witness->to_string()
            << '\n';
    }
    return kExitOk;
}

int cmd_selfcheck(std::ostream& out) {
    bool all = true;
    for (const auto& r : run_selfcheck()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << " -- " << r.detail;
        out << '\n';
        all = all && r.passed;
    }
    return all ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Polynomials over GF(2): Berlekamp matrix, factorization, order and the P1/P2 degree properties",
                 "gf2q"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--max-degree", o.max_degree, "cap on the Q-matrix dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--json", o.json, "emit JSON instead of text");

    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial into irreducibles");
    factor_cmd->add_option("poly", o.poly_text, "polynomial, e.g. x^3+x+1 or 0xB")->required();

    auto* qmatrix_cmd = app.add_subcommand("qmatrix", "print the Berlekamp matrix rows");
    qmatrix_cmd->add_option("poly", o.poly_text, "polynomial")->required();

    auto* order_cmd = app.add_subcommand("order", "order o(f) of a squarefree polynomial");
    order_cmd->add_option("poly", o.poly_text, "polynomial")->required();

    auto* irred_cmd = app.add_subcommand("irred", "irreducibility test, count and enumeration");
    irred_cmd->require_subcommand(1, 1);
    auto* irred_test = irred_cmd->add_subcommand("test", "test a polynomial for irreducibility");
    irred_test->add_option("poly", o.poly_text, "polynomial")->required();
    auto* irred_count = irred_cmd->add_subcommand("count", "number N(l) of irreducibles of degree l");
    irred_count->add_option("degree", o.degree, "degree l")->required()->check(CLI::PositiveNumber);
    auto* irred_list = irred_cmd->add_subcommand("list", "the k smallest irreducibles of degree l");
    irred_list->add_option("degree", o.degree, "degree l")->required()->check(CLI::PositiveNumber);
    irred_list->add_option("k", o.k, "how many")->required()->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "decide P1 or P2 for degree m");
    add_property_flags(classify_cmd, o);
    classify_cmd->add_option("m", o.m, "degree m >= 2")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    add_method_option(classify_cmd, o);
    classify_cmd->add_flag("--materialize", o.materialize, "also build the witness polynomial");

    auto* scan_cmd = app.add_subcommand("scan", "decide P1 or P2 for a range of degrees");
    add_property_flags(scan_cmd, o);
    scan_cmd->add_option("--from", o.from, "first degree")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    scan_cmd->add_option("--to", o.to, "last degree")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    scan_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    scan_cmd->add_option("--scan-cap", o.scan_cap, "largest --to accepted")->capture_default_str();
    add_method_option(scan_cmd, o);

    auto* witness_cmd = app.add_subcommand("witness", "materialize a counterexample polynomial");
    add_property_flags(witness_cmd, o);
    witness_cmd->add_option("m", o.m, "degree m >= 2")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    add_method_option(witness_cmd, o);

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the built-in invariant suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (irred_cmd->parsed()) {
            o.irred_verb = irred_test->parsed() ? "test" : irred_count->parsed() ? "count" : "list";
        }
        if (factor_cmd->parsed()) return cmd_factor(o, out);
        if (qmatrix_cmd->parsed()) return cmd_qmatrix(o, out);
        if (order_cmd->parsed()) return cmd_order(o, out);
        if (irred_cmd->parsed()) return cmd_irred(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out);
        if (witness_cmd->parsed()) return cmd_witness(o, out);
        if (selfcheck_cmd->parsed()) return cmd_selfcheck(out);
        throw UsageError("no command given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace gf2q::cli
