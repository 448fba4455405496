#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "supersym/bases.hpp"
#include "supersym/inner.hpp"
#include "supersym/report.hpp"
#include "supersym/serialize.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/transform.hpp"

namespace supersym::cli {

namespace {

using nlohmann::json;

struct Context {
    std::ostream& out;
    bool json_output = false;
};

std::string relation(const SuperPartition& a, const SuperPartition& b,
                     const std::function<bool(const SuperPartition&, const SuperPartition&)>& leq)
{
    if (a == b) {
        return "=";
    }
    if (leq(a, b)) {
        return "<=";
    }
    if (leq(b, a)) {
        return ">=";
    }
    return "incomparable";
}

void print_expansion(const Context& ctx, const std::string& title, const BasisExpansion& x, json extra = {})
{
    if (ctx.json_output) {
        json j = to_json(x);
        for (auto& [k, v] : extra.items()) {
            j[k] = v;
        }
        ctx.out << j.dump() << '\n';
        return;
    }
    ctx.out << "# " << title << ", basis " << to_string(x.basis) << ", degree (" << x.n << "|" << x.m << ")\n";
    if (x.is_zero()) {
        ctx.out << "0\n";
    }
    ctx.out << to_text(x);
}

int print_report(const Context& ctx, const Report& report)
{
    if (ctx.json_output) {
        ctx.out << report.to_json().dump() << '\n';
    } else {
        ctx.out << "check: " << report.check << '\n';
        ctx.out << "params: " << report.params.dump() << '\n';
        ctx.out << "result: " << (report.pass ? "PASS" : "FAIL") << '\n';
        if (report.first_failure) {
            ctx.out << "first failure: " << *report.first_failure << '\n';
        }
        if (!report.notes.empty()) {
            ctx.out << "notes: " << report.notes.dump() << '\n';
        }
    }
    return report.pass ? kExitOk : kExitFailed;
}

struct VerifyOptions {
    std::string suite;
    std::optional<int> n_max;
    std::optional<int> m_max;
    std::optional<std::size_t> nvars;
    std::optional<int> degree;
};

Report run_suite(const VerifyOptions& o)
{
    const auto n_max = [&](int fallback) { return o.n_max.value_or(fallback); };
    if (o.suite == "recursions") {
        return verify_recursions(n_max(6), o.nvars);
    }
    if (o.suite == "determinants") {
        return determinant_formulas(n_max(6), o.nvars);
    }
    if (o.suite == "generating") {
        const SeriesTruncation trunc{o.degree.value_or(4), true};
        const std::size_t N = o.nvars.value_or(5);
        return combine("generating", {{"degree", trunc.max_t_degree}, {"nvars", N}},
                       {generating_check(GeneratingKind::E, trunc, N), generating_check(GeneratingKind::H, trunc, N),
                        generating_check(GeneratingKind::P, trunc, N)});
    }
    if (o.suite == "kernel") {
        return kernel_check(o.nvars.value_or(4), o.degree.value_or(3));
    }
    if (o.suite == "duality") {
        const int n = n_max(5);
        const int m = o.m_max.value_or(3);
        return combine("duality", {{"n_max", n}, {"m_max", m}}, {orthogonality_check(n, m), eh_in_p_check(n)});
    }
    if (o.suite == "orders") {
        return order_check(n_max(6));
    }
    if (o.suite == "counting") {
        return count_check(n_max(12));
    }
    if (o.suite == "triangularity") {
        return triangularity_check(n_max(6));
    }
    if (o.suite == "products") {
        return products_check(n_max(5), o.m_max.value_or(3));
    }
    throw std::invalid_argument("unknown suite '" + o.suite + "'");
}

const std::vector<std::string> kSuites = {"recursions", "determinants", "generating", "kernel",  "duality",
                                          "orders",     "counting",     "triangularity", "products"};

json polynomial_terms(const SuperPolynomial& f)
{
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    json out = json::array();
    for (const auto& [mono, c] : terms) {
        json thetas = json::array();
        for (const std::size_t i : mono.theta_indices()) {
            thetas.push_back(i + 1);
        }
        json exps = json::array();
        for (std::size_t v = 0; v < f.nvars(); ++v) {
            exps.push_back(mono.exponent(v));
        }
        out.push_back({{"theta", thetas}, {"x", exps}, {"coeff", c.to_string()}});
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Symmetric functions in superspace: superpartitions, bases and identities", "supersym"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->envname("SUPERSYM_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));

    int list_n = 0;
    int list_m = 0;
    std::optional<int> list_max_len;
    auto* list = app.add_subcommand("list", "Enumerate SPar(n|m)");
    list->add_option("--n", list_n, "Bosonic degree")->required()->check(CLI::NonNegativeNumber);
    list->add_option("--m", list_m, "Fermionic degree")->required()->check(CLI::NonNegativeNumber);
    list->add_option("--max-len", list_max_len, "Longest allowed length");

    std::string conj_spar;
    auto* conj = app.add_subcommand("conj", "Conjugate a superpartition");
    conj->add_option("spar", conj_spar, "Superpartition, e.g. \"(3,1,0;4,3,2,1)\"")->required();

    std::string order_a;
    std::string order_b;
    auto* order = app.add_subcommand("order", "Compare two superpartitions in Bruhat and dominance order");
    order->add_option("first", order_a)->required();
    order->add_option("second", order_b)->required();

    std::string build_basis;
    std::string build_spar;
    std::optional<std::size_t> build_nvars;
    bool build_arrow = false;
    auto* build = app.add_subcommand("build", "Construct a basis element as a polynomial");
    build->add_option("--basis", build_basis, "m, e, h or p")->required();
    build->add_option("spar", build_spar)->required();
    build->add_option("--nvars", build_nvars, "Number of variables (default n+m)");
    build->add_flag("--arrow", build_arrow, "Multiply by (-1)^{m(m-1)/2}");

    std::string mult_basis = "m";
    std::string mult_a;
    std::string mult_b;
    auto* mult = app.add_subcommand("mult", "Expand the product of two basis elements");
    mult->add_option("--basis", mult_basis, "Basis of both factors and of the result");
    mult->add_option("first", mult_a)->required();
    mult->add_option("second", mult_b)->required();

    std::string convert_from;
    std::string convert_to;
    std::string convert_spar;
    auto* convert = app.add_subcommand("convert", "Expand a basis element in another basis");
    convert->add_option("--from", convert_from)->required();
    convert->add_option("--to", convert_to)->required();
    convert->add_option("spar", convert_spar)->required();

    std::string inner_a;
    std::string inner_b;
    bool inner_raw = false;
    auto* inner = app.add_subcommand("inner", "Scalar product of two expressions such as \"2*p(2,1) + h(;1,1)\"");
    inner->add_option("first", inner_a)->required();
    inner->add_option("second", inner_b)->required();
    inner->add_flag("--raw", inner_raw, "Do not absorb the arrow sign into the left argument");

    std::string omega_basis;
    std::string omega_spar;
    auto* omega_cmd = app.add_subcommand("omega", "Apply the involution to a basis element");
    omega_cmd->add_option("--basis", omega_basis)->required();
    omega_cmd->add_option("spar", omega_spar)->required();

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
    verify->add_option("--suite", verify_opts.suite)->required()->check(CLI::IsMember(kSuites));
    verify->add_option("--n-max", verify_opts.n_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--m-max", verify_opts.m_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--nvars", verify_opts.nvars);
    verify->add_option("--degree", verify_opts.degree)->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (e.get_exit_code() != 0) {
            err << "run with --help for usage\n";
            return kExitUsage;
        }
        return kExitOk;
    }

    const Context ctx{out, format == "json"};
    try {
        if (*list) {
            const auto sps = enumerate(list_n, list_m, list_max_len);
            if (ctx.json_output) {
                json arr = json::array();
                for (const auto& sp : sps) {
                    arr.push_back(to_json(sp));
                }
                json j = {{"n", list_n}, {"m", list_m}, {"count", sps.size()}, {"superpartitions", arr}};
                if (list_max_len) {
                    j["max_len"] = *list_max_len;
                }
                out << j.dump() << '\n';
            } else {
                out << "# SPar(" << list_n << "|" << list_m << ")";
                if (list_max_len) {
                    out << " with length <= " << *list_max_len;
                }
                out << ": " << sps.size() << '\n';
                for (const auto& sp : sps) {
                    out << to_string(sp) << '\n';
                }
            }
        } else if (*conj) {
            const SuperPartition sp = parse_superpartition(conj_spar);
            const SuperPartition c = conjugate(sp);
            if (ctx.json_output) {
                out << json{{"spar", to_json(sp)}, {"conjugate", to_json(c)}}.dump() << '\n';
            } else {
                out << to_string(c) << '\n';
            }
        } else if (*order) {
            const SuperPartition a = parse_superpartition(order_a);
            const SuperPartition b = parse_superpartition(order_b);
            const std::string bruhat = relation(a, b, bruhat_leq);
            const std::string dominance = relation(a, b, dominance_leq);
            if (ctx.json_output) {
                out << json{{"first", to_json(a)}, {"second", to_json(b)}, {"bruhat", bruhat}, {"dominance", dominance}}
                           .dump()
                    << '\n';
            } else {
                out << "bruhat: " << to_string(a) << ' ' << bruhat << ' ' << to_string(b) << '\n';
                out << "dominance: " << to_string(a) << ' ' << dominance << ' ' << to_string(b) << '\n';
            }
        } else if (*build) {
            const BasisName b = parse_basis(build_basis);
            const SuperPartition sp = parse_superpartition(build_spar);
            const std::size_t N = build_nvars.value_or(default_nvars(sp));
            if (N > kMaxVariables) {
                throw std::invalid_argument("--nvars must be at most " + std::to_string(kMaxVariables));
            }
            const SuperPolynomial f = multiplicative(b, sp, N, build_arrow);
            if (ctx.json_output) {
                out << json{{"basis", to_string(b)},  {"spar", to_json(sp)},           {"nvars", N},
                            {"arrow", build_arrow},   {"polynomial", f.to_string()}, {"terms", polynomial_terms(f)}}
                           .dump()
                    << '\n';
            } else {
                out << "# " << (build_arrow ? "<-" : "") << to_string(b) << to_string(sp) << " in N = " << N
                    << " variables\n";
                out << f.to_string() << '\n';
            }
        } else if (*mult) {
            const BasisName b = parse_basis(mult_basis);
            const SuperPartition sa = parse_superpartition(mult_a);
            const SuperPartition sb = parse_superpartition(mult_b);
            const BasisExpansion x =
                b == BasisName::m ? mono_product(sa, sb) : product(basis_element(b, sa), basis_element(b, sb));
            print_expansion(ctx, to_string(b) + to_string(sa) + " * " + to_string(b) + to_string(sb), x);
        } else if (*convert) {
            const BasisName from = parse_basis(convert_from);
            const BasisName to = parse_basis(convert_to);
            const SuperPartition sp = parse_superpartition(convert_spar);
            print_expansion(ctx, to_string(from) + to_string(sp), change_basis(basis_element(from, sp), to));
        } else if (*inner) {
            const auto fa = parse_expression(inner_a);
            const auto fb = parse_expression(inner_b);
            Rational value;
            for (const auto& x : fa) {
                for (const auto& y : fb) {
                    value += scalar_product(x, y, inner_raw);
                }
            }
            if (ctx.json_output) {
                out << json{{"value", value.to_string()}, {"raw", inner_raw}}.dump() << '\n';
            } else {
                out << value.to_string() << '\n';
            }
        } else if (*omega_cmd) {
            const BasisName b = parse_basis(omega_basis);
            const SuperPartition sp = parse_superpartition(omega_spar);
            print_expansion(ctx, "omega " + to_string(b) + to_string(sp), omega(basis_element(b, sp)));
        } else if (*verify) {
            return print_report(ctx, run_suite(verify_opts));
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace supersym::cli
