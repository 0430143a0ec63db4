#include "ncalg/cli.hpp"

#include "ncalg/conjugation.hpp"
#include "ncalg/division.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/identities.hpp"
#include "ncalg/io.hpp"
#include "ncalg/parser.hpp"
#include "ncalg/solvers.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>

namespace ncalg::cli {

namespace {

struct Globals {
    std::string algebra = "quaternion";
    std::string backend;  // empty: subcommand default
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tol = 1e-10;
    bool json_out = true;
};

Backend backend_of(const Globals& g, Backend fallback) {
    if (g.backend.empty()) return fallback;
    return g.backend == "float" ? Backend::Float : Backend::Rational;
}

json poly_result(const NcPolynomial& p) {
    json r;
    r["degree"] = p.degree();
    r["text"] = format_polynomial(p);
    r["monomials"] = polynomial_to_json(p);
    return r;
}

json to_json(const ConjugationProfile& profile) {
    json r;
    r["algebra"] = profile.algebra->name();
    r["is_unital"] = profile.is_unital;
    r["is_conjugation_algebra"] = profile.is_conjugation_algebra;
    r["violation"] = profile.violation ? json(*profile.violation) : json(nullptr);
    return r;
}

json to_json(const IdentityReport& report, std::size_t samples, std::uint64_t seed) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        item["failed"] = c.failed;
        if (c.failed > 0) item["first_failure"] = c.first_failure;
        checks.push_back(std::move(item));
    }
    json r;
    r["samples"] = samples;
    r["seed"] = seed;
    r["checks"] = std::move(checks);
    r["all_passed"] = report.all_passed();
    return r;
}

void emit(std::ostream& out, const std::string& command, json result) {
    json doc;
    doc["command"] = command;
    doc["result"] = std::move(result);
    out << doc.dump() << '\n';
}

void emit_error(std::ostream& out, const std::string& command, const std::string& kind, const std::string& message) {
    json doc;
    doc["command"] = command;
    doc["error"] = {{"kind", kind}, {"message", message}};
    out << doc.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ncalg: quadratic equations and noncommutative polynomials over finite-dimensional algebras",
                 "ncalg"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--algebra", g.algebra, "builtin name (quaternion, complex) or path to a JSON spec");
    app.add_option("--backend", g.backend, "scalar backend")->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--samples", g.samples, "sphere members to list / identity samples");
    app.add_option("--tol", g.tol, "residual tolerance (float backend, scanner)");
    app.add_flag("--json", g.json_out, "emit JSON (default)");

    std::vector<std::string> mul_args;
    auto* mul_cmd = app.add_subcommand("mul", "multiply elements left to right");
    mul_cmd->add_option("elements", mul_args, "element literals")->required()->expected(2, -1);

    std::string poly, at, divisor_text, a_text, b_text, method = "auto";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at an element");
    eval_cmd->add_option("--poly", poly)->required();
    eval_cmd->add_option("--at", at)->required();

    std::string square_a, cube_a;
    std::vector<std::string> prod_ab;
    auto* expand_cmd = app.add_subcommand("expand", "canonical expansion of a polynomial or identity");
    auto* expand_group = expand_cmd->add_option_group("source");
    expand_group->add_option("--poly", poly);
    expand_group->add_option("--square", square_a, "(x+a)^2");
    expand_group->add_option("--cube", cube_a, "(x+a)^3");
    expand_group->add_option("--prod", prod_ab, "(x+a)(x+b)")->expected(2);
    expand_group->require_option(1);

    auto* divide_cmd = app.add_subcommand("divide", "divide by a degree-1 polynomial");
    divide_cmd->add_option("--poly", poly)->required();
    divide_cmd->add_option("--divisor", divisor_text)->required();

    auto* sqrt_cmd = app.add_subcommand("solve-sqrt", "roots of x^2 = a");
    sqrt_cmd->add_option("--a", a_text)->required();
    sqrt_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "quaternion", "conjugation"}));

    auto* shifted_cmd = app.add_subcommand("solve-shifted", "roots of (a+x)^2 = a^2");
    shifted_cmd->add_option("--a", a_text)->required();

    auto* sylvester_cmd = app.add_subcommand("solve-sylvester", "solutions of ax - xa = b");
    sylvester_cmd->add_option("--a", a_text)->required();
    sylvester_cmd->add_option("--b", b_text)->required();

    ScanConfig scan;
    auto* scan_cmd = app.add_subcommand("scan-roots", "multistart Newton scan for roots of a polynomial");
    scan_cmd->add_option("--poly", poly)->required();
    scan_cmd->add_option("--starts", scan.starts);
    scan_cmd->add_option("--max-iters", scan.newton_max_iters);
    scan_cmd->add_option("--dedup", scan.dedup_radius);
    scan_cmd->add_option("--box", scan.search_box);

    auto* conj_cmd = app.add_subcommand("check-conjugation", "test the structure constants for a conjugation");
    auto* ident_cmd = app.add_subcommand("verify-identities", "seeded identity sweep");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();

    try {
        const Algebra alg = resolve_algebra(g.algebra);

        if (chosen == mul_cmd) {
            const Backend be = backend_of(g, Backend::Rational);
            Element acc = parse_element(mul_args.front(), alg, be);
            for (std::size_t i = 1; i < mul_args.size(); ++i) acc = mul(acc, parse_element(mul_args[i], alg, be));
            emit(out, command, element_to_json(acc));
        } else if (chosen == eval_cmd) {
            const Backend be = backend_of(g, Backend::Rational);
            const NcPolynomial p = parse_polynomial(poly, alg, be);
            emit(out, command, element_to_json(p.eval(parse_element(at, alg, be))));
        } else if (chosen == expand_cmd) {
            const Backend be = backend_of(g, Backend::Rational);
            if (!poly.empty())
                emit(out, command, poly_result(parse_polynomial(poly, alg, be)));
            else if (!square_a.empty())
                emit(out, command, poly_result(expand_square(parse_element(square_a, alg, be))));
            else if (!cube_a.empty())
                emit(out, command, poly_result(expand_cube(parse_element(cube_a, alg, be))));
            else
                emit(out, command,
                     poly_result(expand_prod(parse_element(prod_ab[0], alg, be), parse_element(prod_ab[1], alg, be))));
        } else if (chosen == divide_cmd) {
            const Backend be = backend_of(g, Backend::Rational);
            const NcPolynomial r = parse_polynomial(poly, alg, be);
            const LinearDivisor d = LinearDivisor::from_polynomial(parse_polynomial(divisor_text, alg, be));
            const DivisionResult result = divide_linear(r, d);
            json j = division_to_json(result);
            j["recomposes"] = recompose(result, d) == r;
            emit(out, command, std::move(j));
        } else if (chosen == sqrt_cmd) {
            const Element a = parse_element(a_text, alg, backend_of(g, Backend::Rational));
            const bool use_h = method == "quaternion" || (method == "auto" && same_algebra(alg, builtin_quaternion()));
            const RootSet roots = use_h ? sqrt_quaternion(a) : sqrt_conjugation(analyze(alg), a);
            emit(out, command, rootset_to_json(roots, g.samples, g.seed));
        } else if (chosen == shifted_cmd) {
            const Element a = parse_element(a_text, alg, backend_of(g, Backend::Rational));
            emit(out, command, rootset_to_json(shifted_square(a), g.samples, g.seed));
        } else if (chosen == sylvester_cmd) {
            const Backend be = backend_of(g, Backend::Rational);
            const RootSet roots = sylvester_linear(parse_element(a_text, alg, be), parse_element(b_text, alg, be), g.tol);
            emit(out, command, rootset_to_json(roots));
        } else if (chosen == scan_cmd) {
            scan.seed = g.seed;
            scan.residual_tol = g.tol;
            const NcPolynomial p = parse_polynomial(poly, alg, backend_of(g, Backend::Float));
            json points = json::array();
            for (const auto& pt : newton_root_scan(p, scan)) {
                json item;
                item["x"] = element_to_json(pt.x);
                item["residual"] = pt.residual;
                points.push_back(std::move(item));
            }
            json r;
            r["starts"] = scan.starts;
            r["seed"] = scan.seed;
            r["clusters"] = points.size();
            r["points"] = std::move(points);
            emit(out, command, std::move(r));
        } else if (chosen == conj_cmd) {
            emit(out, command, to_json(analyze(alg)));
        } else if (chosen == ident_cmd) {
            const std::size_t n = g.samples > 0 ? g.samples : 100;
            emit(out, command, to_json(run_identity_suite(alg, n, g.seed), n, g.seed));
        }
        return 0;
    } catch (const ParseError& e) {
        emit_error(out, command, "parse", e.what());
        return 2;
    } catch (const DomainError& e) {
        emit_error(out, command, "domain", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit_error(out, command, "usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(out, command, "error", e.what());
        return 1;
    }
}

} // namespace ncalg::cli
