#include "supersym/bases.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace supersym {

std::string to_string(BasisName b)
{
    switch (b) {
    case BasisName::m:
        return "m";
    case BasisName::e:
        return "e";
    case BasisName::h:
        return "h";
    case BasisName::p:
        return "p";
    }
    return "?";
}

BasisName parse_basis(std::string_view text)
{
    if (text == "m") {
        return BasisName::m;
    }
    if (text == "e") {
        return BasisName::e;
    }
    if (text == "h") {
        return BasisName::h;
    }
    if (text == "p") {
        return BasisName::p;
    }
    throw std::invalid_argument("unknown basis '" + std::string(text) + "' (expected m, e, h or p)");
}

std::size_t default_nvars(const SuperPartition& sp)
{
    return static_cast<std::size_t>(sp.bosonic_degree() + sp.fermionic_degree());
}

namespace {

// m_Λ, or zero when the ring is too small to hold it.
SuperPolynomial monomial_or_zero(const SuperPartition& sp, std::size_t nvars)
{
    SuperPolynomial out(nvars);
    const std::size_t m = sp.antisym().size();
    if (static_cast<std::size_t>(sp.length()) > nvars) {
        return out;
    }
    // Symmetric parts padded with zeros to fill the non-fermionic slots,
    // ascending so that next_permutation visits every distinct arrangement.
    std::vector<unsigned> sym(nvars - m, 0);
    std::copy(sp.sym().begin(), sp.sym().end(), sym.begin());
    std::sort(sym.begin(), sym.end());

    std::vector<std::size_t> slots;
    std::vector<bool> used(nvars, false);
    std::function<void()> place = [&]() {
        if (slots.size() == m) {
            std::vector<std::size_t> free_slots;
            for (std::size_t k = 0; k < nvars; ++k) {
                if (!used[k]) {
                    free_slots.push_back(k);
                }
            }
            std::vector<unsigned> exps(nvars, 0);
            for (std::size_t i = 0; i < m; ++i) {
                exps[slots[i]] = static_cast<unsigned>(sp.antisym()[i]);
            }
            std::vector<unsigned> arrangement = sym;
            do {
                for (std::size_t k = 0; k < free_slots.size(); ++k) {
                    exps[free_slots[k]] = arrangement[k];
                }
                const auto mono = Monomial::make(slots, exps);
                out.add_term(mono->second, mono->first);
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            return;
        }
        for (std::size_t k = 0; k < nvars; ++k) {
            if (!used[k]) {
                used[k] = true;
                slots.push_back(k);
                place();
                slots.pop_back();
                used[k] = false;
            }
        }
    };
    place();
    return out;
}

void check_index(int n)
{
    if (n < 0) {
        throw std::domain_error("generator index must be non-negative");
    }
}

} // namespace

SuperPolynomial monomial(const SuperPartition& sp, std::size_t nvars)
{
    if (static_cast<std::size_t>(sp.length()) > nvars) {
        std::ostringstream os;
        os << "m" << to_string(sp) << " needs at least " << sp.length() << " variables, got " << nvars;
        throw std::domain_error(os.str());
    }
    return monomial_or_zero(sp, nvars);
}

SuperPolynomial elementary(int n, bool fermionic, std::size_t nvars)
{
    check_index(n);
    SuperPolynomial out(nvars);
    const auto k = static_cast<std::size_t>(n);
    if (k > nvars) {
        return out;
    }
    // Walk all k-subsets J of the variables in lexicographic order.
    std::vector<bool> pick(nvars, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        Monomial base;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (pick[j]) {
                base.set_exponent(j, 1);
            }
        }
        if (!fermionic) {
            out.add_term(base, 1);
            continue;
        }
        for (std::size_t i = 0; i < nvars; ++i) {
            if (!pick[i]) {
                Monomial mono = base;
                mono.set_theta_mask(1u << i);
                out.add_term(mono, 1);
            }
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

SuperPolynomial complete(int n, bool fermionic, std::size_t nvars)
{
    check_index(n);
    SuperPolynomial out(nvars);
    for (const auto& sp : enumerate(n, fermionic ? 1 : 0)) {
        const Rational weight = fermionic ? Rational(sp.antisym().front() + 1) : Rational(1);
        out += monomial_or_zero(sp, nvars) * weight;
    }
    return out;
}

SuperPolynomial powersum(int n, bool fermionic, std::size_t nvars)
{
    check_index(n);
    SuperPolynomial out(nvars);
    if (n == 0 && !fermionic) {
        return out;
    }
    for (std::size_t i = 0; i < nvars; ++i) {
        Monomial mono;
        mono.set_exponent(i, static_cast<unsigned>(n));
        if (fermionic) {
            mono.set_theta_mask(1u << i);
        }
        out.add_term(mono, 1);
    }
    return out;
}

SuperPolynomial generator(BasisName b, int n, bool fermionic, std::size_t nvars)
{
    switch (b) {
    case BasisName::e:
        return elementary(n, fermionic, nvars);
    case BasisName::h:
        return complete(n, fermionic, nvars);
    case BasisName::p:
        return powersum(n, fermionic, nvars);
    case BasisName::m:
        break;
    }
    throw std::invalid_argument("the monomial basis has no generators");
}

SuperPolynomial multiplicative(BasisName b, const SuperPartition& sp, std::size_t nvars, bool arrowed)
{
    SuperPolynomial out(nvars);
    if (b == BasisName::m) {
        out = monomial(sp, nvars);
    } else {
        out = SuperPolynomial::constant(nvars, 1);
        for (int part : sp.antisym()) {
            out = out * generator(b, part, true, nvars);
        }
        for (int part : sp.sym()) {
            out = out * generator(b, part, false, nvars);
        }
    }
    if (arrowed && arrow_sign(sp.fermionic_degree()) < 0) {
        out *= Rational(-1);
    }
    return out;
}

namespace {

// Coefficient of t^n (with_tau false) or of τ t^n, τ moved to the far left,
// as a polynomial in the first N variables. t is x_N and τ is θ_N.
SuperPolynomial series_coefficient(const SuperPolynomial& series, std::size_t nvars, int n, bool with_tau)
{
    SuperPolynomial out(nvars);
    for (const auto& [mono, c] : series.terms()) {
        if (static_cast<int>(mono.exponent(nvars)) != n || mono.has_theta(nvars) != with_tau) {
            continue;
        }
        Monomial rest = mono;
        rest.set_exponent(nvars, 0);
        rest.set_theta_mask(mono.theta_mask() & ~(1u << nvars));
        // θ_J τ = (-1)^{|J|} τ θ_J
        const bool flip = with_tau && (rest.fermionic_degree() % 2 == 1);
        out.add_term(rest, flip ? -c : c);
    }
    return out;
}

// f(-t, -τ)
SuperPolynomial negate_parameters(const SuperPolynomial& series, std::size_t nvars)
{
    SuperPolynomial out(series.nvars());
    for (const auto& [mono, c] : series.terms()) {
        const int weight = static_cast<int>(mono.exponent(nvars)) + (mono.has_theta(nvars) ? 1 : 0);
        out.add_term(mono, weight % 2 ? -c : c);
    }
    return out;
}

// (t ∂_t + τ ∂_τ) f
SuperPolynomial euler_operator(const SuperPolynomial& series, std::size_t nvars)
{
    SuperPolynomial out(series.nvars());
    for (const auto& [mono, c] : series.terms()) {
        const int weight = static_cast<int>(mono.exponent(nvars)) + (mono.has_theta(nvars) ? 1 : 0);
        out.add_term(mono, c * Rational(weight));
    }
    return out;
}

struct Series {
    SuperPolynomial e;
    SuperPolynomial h;
    SuperPolynomial p;
};

Series build_series(std::size_t nvars, int degree, bool need_h, bool need_p)
{
    const std::size_t ring = nvars + 1;
    const DegreeLimit limit{degree, nvars, nvars + 1};
    const SuperPolynomial one = SuperPolynomial::constant(ring, 1);
    const SuperPolynomial t = SuperPolynomial::x(ring, nvars);
    const SuperPolynomial tau = SuperPolynomial::theta(ring, nvars);

    Series s{one, one, SuperPolynomial(ring)};
    for (std::size_t i = 0; i < nvars; ++i) {
        // u_i = t x_i + τ θ_i
        const SuperPolynomial u =
            multiply(t, SuperPolynomial::x(ring, i)) + multiply(tau, SuperPolynomial::theta(ring, i));
        s.e = multiply(s.e, one + u, limit);
        if (need_h || need_p) {
            // Σ_{k>=1} u_i^k, truncated
            SuperPolynomial geometric(ring);
            SuperPolynomial pw = one;
            for (int k = 1; k <= degree + 1; ++k) {
                pw = multiply(pw, u, limit);
                if (pw.is_zero()) {
                    break;
                }
                geometric += pw;
            }
            if (need_h) {
                s.h = multiply(s.h, one + geometric, limit);
            }
            if (need_p) {
                s.p += geometric;
            }
        }
    }
    return s;
}

} // namespace

Report generating_check(GeneratingKind kind, SeriesTruncation trunc, std::size_t nvars)
{
    Report report;
    const char* name = kind == GeneratingKind::E ? "E" : kind == GeneratingKind::H ? "H" : "P";
    report.check = std::string("generating-") + name;
    report.params = {{"max_t_degree", trunc.max_t_degree}, {"with_tau", trunc.with_tau}, {"nvars", nvars}};
    if (trunc.max_t_degree < 0) {
        report.fail("max_t_degree must be non-negative");
        return report;
    }
    if (nvars + 1 > kMaxVariables) {
        report.fail("too many variables");
        return report;
    }
    const int d = trunc.max_t_degree;
    const std::size_t ring = nvars + 1;
    const DegreeLimit limit{d, nvars, nvars + 1};
    const Series s = build_series(nvars, d, kind != GeneratingKind::E, kind == GeneratingKind::P);

    auto compare = [&](const SuperPolynomial& got, const SuperPolynomial& want, const std::string& what) {
        if (!(got == want)) {
            report.fail(what + " mismatch: series gives " + got.to_string() + ", expected " + want.to_string());
        }
    };

    long compared = 0;
    for (int n = 0; n <= d; ++n) {
        const std::string tag = std::to_string(n);
        switch (kind) {
        case GeneratingKind::E:
            compare(series_coefficient(s.e, nvars, n, false), elementary(n, false, nvars), "[t^" + tag + "]E vs e");
            if (trunc.with_tau) {
                compare(series_coefficient(s.e, nvars, n, true), elementary(n, true, nvars),
                        "[tau t^" + tag + "]E vs e~");
            }
            break;
        case GeneratingKind::H:
            compare(series_coefficient(s.h, nvars, n, false), complete(n, false, nvars), "[t^" + tag + "]H vs h");
            if (trunc.with_tau) {
                compare(series_coefficient(s.h, nvars, n, true), complete(n, true, nvars),
                        "[tau t^" + tag + "]H vs h~");
            }
            break;
        case GeneratingKind::P:
            compare(series_coefficient(s.p, nvars, n, false), powersum(n, false, nvars), "[t^" + tag + "]P vs p");
            if (trunc.with_tau) {
                compare(series_coefficient(s.p, nvars, n, true), powersum(n, true, nvars) * Rational(n + 1),
                        "[tau t^" + tag + "]P vs (n+1)p~");
            }
            break;
        }
        compared += trunc.with_tau ? 2 : 1;
    }

    auto drop_tau = [&](const SuperPolynomial& f) {
        if (trunc.with_tau) {
            return f;
        }
        SuperPolynomial out(f.nvars());
        for (const auto& [mono, c] : f.terms()) {
            if (!mono.has_theta(nvars)) {
                out.add_term(mono, c);
            }
        }
        return out;
    };

    if (kind == GeneratingKind::H) {
        const SuperPolynomial product = drop_tau(multiply(s.h, negate_parameters(s.e, nvars), limit));
        compare(product, SuperPolynomial::constant(ring, 1), "H(t,tau)E(-t,-tau)");
        ++compared;
    }
    if (kind == GeneratingKind::P) {
        compare(drop_tau(multiply(s.h, s.p, limit)), drop_tau(euler_operator(s.h, nvars)), "H P = (t d_t + tau d_tau) H");
        compare(drop_tau(multiply(s.e, negate_parameters(s.p, nvars), limit)), drop_tau(-euler_operator(s.e, nvars)),
                "E(t,tau) P(-t,-tau) = -(t d_t + tau d_tau) E");
        compared += 2;
    }
    report.notes["identities_compared"] = compared;
    return report;
}

} // namespace supersym
