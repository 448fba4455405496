#include "supersym/inner.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace supersym {

ZNormalization z_normalization(const SuperPartition& sp)
{
    ZNormalization z{Rational(1), arrow_sign(sp.fermionic_degree())};
    const auto& s = sp.sym();
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) {
            ++j;
        }
        const auto mult = static_cast<unsigned>(j - i);
        for (unsigned k = 0; k < mult; ++k) {
            z.value *= Rational(s[i]);
        }
        z.value *= factorial(mult);
        i = j;
    }
    return z;
}

int omega_sign(const SuperPartition& sp)
{
    const int e = sp.bosonic_degree() + sp.fermionic_degree() - sp.length();
    return e % 2 == 0 ? 1 : -1;
}

Rational scalar_product(const BasisExpansion& f, const BasisExpansion& g, bool raw)
{
    if (f.is_zero() || g.is_zero() || f.n != g.n || f.m != g.m) {
        return Rational{};
    }
    const BasisExpansion fp = change_basis(f, BasisName::p);
    const BasisExpansion gp = change_basis(g, BasisName::p);
    Rational out;
    for (const auto& [sp, c] : fp.coeffs) {
        const Rational d = gp.coefficient(sp);
        if (!d.is_zero()) {
            out += z_normalization(sp).value * c * d;
        }
    }
    if (raw && arrow_sign(f.m) < 0) {
        out = -out;
    }
    return out;
}

namespace {

std::map<std::pair<int, int>, SuperPolynomial> components(const SuperPolynomial& f)
{
    std::map<std::pair<int, int>, SuperPolynomial> out;
    for (const auto& [mono, c] : f.terms()) {
        const auto key = std::make_pair(mono.bosonic_degree(), mono.fermionic_degree());
        auto it = out.try_emplace(key, SuperPolynomial(f.nvars())).first;
        it->second.add_term(mono, c);
    }
    return out;
}

} // namespace

Rational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g, bool raw)
{
    if (!is_symmetric(f) || !is_symmetric(g)) {
        throw std::domain_error("scalar product of a non-symmetric polynomial");
    }
    const auto fc = components(f);
    const auto gc = components(g);
    Rational out;
    for (const auto& [deg, part] : fc) {
        const auto it = gc.find(deg);
        if (it == gc.end()) {
            continue;
        }
        out += scalar_product(expand_in_monomials(part, deg.first, deg.second),
                              expand_in_monomials(it->second, deg.first, deg.second), raw);
    }
    return out;
}

BasisExpansion omega(const BasisExpansion& x)
{
    BasisExpansion p = change_basis(x, BasisName::p);
    for (auto& [sp, c] : p.coeffs) {
        if (omega_sign(sp) < 0) {
            c = -c;
        }
    }
    return change_basis(p, x.basis);
}

BasisExpansion eh_in_p(int n, bool fermionic, EH which)
{
    if (n < 0) {
        throw std::domain_error("eh_in_p: negative degree");
    }
    const int m = fermionic ? 1 : 0;
    BasisExpansion out{BasisName::p, n, m, {}};
    for (const auto& sp : enumerate(n, m)) {
        Rational c = Rational(1) / z_normalization(sp).value;
        if (which == EH::e && omega_sign(sp) < 0) {
            c = -c;
        }
        out.add(sp, c);
    }
    return out;
}

std::vector<std::vector<Rational>> gram_matrix(int n, int m, BasisName u, BasisName v)
{
    const auto block = enumerate(n, m);
    const std::size_t N = stable_nvars(n, m);
    std::vector<BasisExpansion> left;
    std::vector<BasisExpansion> right;
    for (const auto& sp : block) {
        left.push_back(expand_in_monomials(multiplicative(u, sp, N), n, m));
        right.push_back(expand_in_monomials(multiplicative(v, sp, N), n, m));
    }
    std::vector<std::vector<Rational>> gram(block.size(), std::vector<Rational>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = 0; j < block.size(); ++j) {
            gram[i][j] = scalar_product(left[i], right[j]);
        }
    }
    return gram;
}

bool dual_bases_check(int n, int m, BasisName u, BasisName v)
{
    const auto gram = gram_matrix(n, m, u, v);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            if (gram[i][j] != Rational(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

Report orthogonality_check(int n_max, int m_max)
{
    Report report;
    report.check = "duality";
    report.params = {{"n_max", n_max}, {"m_max", m_max}};
    long blocks = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= m_max; ++m) {
            const auto block = enumerate(n, m);
            if (block.empty()) {
                continue;
            }
            ++blocks;
            const std::string where = " on (" + std::to_string(n) + "|" + std::to_string(m) + ")";
            const auto pp = gram_matrix(n, m, BasisName::p, BasisName::p);
            for (std::size_t i = 0; i < block.size(); ++i) {
                for (std::size_t j = 0; j < block.size(); ++j) {
                    const Rational want = i == j ? z_normalization(block[i]).value : Rational{};
                    if (pp[i][j] != want) {
                        report.fail("<p" + to_string(block[i]) + ", p" + to_string(block[j]) + "> = " +
                                    pp[i][j].to_string() + where);
                    }
                }
            }
            if (!dual_bases_check(n, m, BasisName::h, BasisName::m)) {
                report.fail("<h, m> is not the identity" + where);
            }
            for (const auto& sp : block) {
                if (change_basis(omega(basis_element(BasisName::e, sp)), BasisName::h) != basis_element(BasisName::h, sp)) {
                    report.fail("omega(e" + to_string(sp) + ") != h" + to_string(sp));
                }
                for (const BasisName b : {BasisName::m, BasisName::e, BasisName::h, BasisName::p}) {
                    const BasisExpansion x = basis_element(b, sp);
                    if (omega(omega(x)) != x) {
                        report.fail("omega is not an involution on " + to_string(b) + to_string(sp));
                    }
                }
            }
            std::vector<BasisExpansion> images;
            for (const auto& sp : block) {
                images.push_back(omega(basis_element(BasisName::e, sp)));
            }
            const auto ee = gram_matrix(n, m, BasisName::e, BasisName::e);
            for (std::size_t i = 0; i < block.size(); ++i) {
                for (std::size_t j = 0; j < block.size(); ++j) {
                    if (scalar_product(images[i], images[j]) != ee[i][j]) {
                        report.fail("omega is not an isometry on e" + to_string(block[i]) + ", e" +
                                    to_string(block[j]));
                    }
                }
            }
        }
    }
    report.notes["blocks_checked"] = blocks;
    return report;
}

Report eh_in_p_check(int n_max)
{
    Report report;
    report.check = "eh_in_p";
    report.params = {{"n_max", n_max}};
    for (int n = 0; n <= n_max; ++n) {
        for (const bool fermionic : {false, true}) {
            if (!fermionic && n == 0) {
                continue;
            }
            const SuperPartition sp = fermionic ? SuperPartition({n}, {}) : SuperPartition({}, {n});
            for (const EH which : {EH::e, EH::h}) {
                const BasisName b = which == EH::e ? BasisName::e : BasisName::h;
                const std::size_t N = stable_nvars(n, sp.fermionic_degree());
                const BasisExpansion direct = change_basis(
                    expand_in_monomials(generator(b, n, fermionic, N), n, sp.fermionic_degree()), BasisName::p);
                if (direct != eh_in_p(n, fermionic, which)) {
                    report.fail("closed form of " + to_string(b) + (fermionic ? "~_" : "_") + std::to_string(n) +
                                " in power sums");
                }
            }
        }
    }
    return report;
}

namespace {

// Double alphabet: x_i, θ_i are variables 0..N-1 and y_j, φ_j are N..2N-1.
struct Alphabets {
    std::size_t n;
    std::size_t total() const { return 2 * n; }
    SuperPolynomial x_side(const SuperPolynomial& f) const { return embed(f, total(), 0); }
    SuperPolynomial y_side(const SuperPolynomial& f) const { return embed(f, total(), n); }
    DegreeLimit limit(int d) const { return DegreeLimit{d, 0, n}; }
};

// Π_i Π_j g(x_i y_j + θ_i φ_j), g a truncated series in u given by its
// coefficients; factors are grouped by i.
SuperPolynomial product_kernel(const Alphabets& ab, int d, const std::vector<Rational>& series)
{
    const std::size_t T = ab.total();
    const DegreeLimit limit = ab.limit(d);
    SuperPolynomial out = SuperPolynomial::constant(T, 1);
    for (std::size_t i = 0; i < ab.n; ++i) {
        SuperPolynomial row = SuperPolynomial::constant(T, 1);
        for (std::size_t j = 0; j < ab.n; ++j) {
            const SuperPolynomial u = SuperPolynomial::x(T, i) * SuperPolynomial::x(T, ab.n + j) +
                                      SuperPolynomial::theta(T, i) * SuperPolynomial::theta(T, ab.n + j);
            SuperPolynomial g(T);
            SuperPolynomial pw = SuperPolynomial::constant(T, 1);
            for (std::size_t k = 0; k < series.size(); ++k) {
                if (k > 0) {
                    pw = multiply(pw, u, limit);
                }
                g += pw * series[k];
            }
            row = multiply(row, g, limit);
        }
        out = multiply(out, row, limit);
    }
    return out;
}

// Σ over |Λ| <= d of weight(Λ) · u_Λ(x) v_Λ(y).
template <typename Weight>
SuperPolynomial basis_sum(const Alphabets& ab, int d, BasisName u, BasisName v, Weight weight)
{
    SuperPolynomial out(ab.total());
    for (int n = 0; n <= d; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            for (const auto& sp : enumerate(n, m)) {
                if (u == BasisName::m && static_cast<std::size_t>(sp.length()) > ab.n) {
                    continue;
                }
                const Rational w = weight(sp);
                const SuperPolynomial left = ab.x_side(multiplicative(u, sp, ab.n));
                const SuperPolynomial right = ab.y_side(multiplicative(v, sp, ab.n));
                out += (left * right) * w;
            }
        }
    }
    return out;
}

Monomial leading(const SuperPartition& sp)
{
    Monomial mono;
    const Composition c = sp.composition();
    for (std::size_t k = 0; k < c.size(); ++k) {
        mono.set_exponent(k, static_cast<unsigned>(c[k]));
    }
    const auto m = static_cast<std::size_t>(sp.fermionic_degree());
    mono.set_theta_mask(m == 0 ? 0u : static_cast<std::uint32_t>((1ull << m) - 1));
    return mono;
}

// Splits each term of K into its x-part and y-part. Since every θ_i precedes
// every φ_j in the canonical order, the coefficient needs no sign change.
std::map<std::pair<std::uint32_t, std::vector<unsigned>>, SuperPolynomial> split_kernel(const SuperPolynomial& k,
                                                                                        std::size_t n)
{
    std::map<std::pair<std::uint32_t, std::vector<unsigned>>, SuperPolynomial> out;
    const std::uint32_t low = static_cast<std::uint32_t>((1ull << n) - 1);
    for (const auto& [mono, c] : k.terms()) {
        std::vector<unsigned> xe(n);
        Monomial ypart;
        for (std::size_t v = 0; v < n; ++v) {
            xe[v] = mono.exponent(v);
            ypart.set_exponent(v, mono.exponent(n + v));
        }
        ypart.set_theta_mask(mono.theta_mask() >> n);
        auto key = std::make_pair(mono.theta_mask() & low, std::move(xe));
        auto it = out.try_emplace(std::move(key), SuperPolynomial(n)).first;
        it->second.add_term(ypart, c);
    }
    return out;
}

} // namespace

Report kernel_check(std::size_t nvars, int degree)
{
    Report report;
    report.check = "kernel";
    report.params = {{"nvars", nvars}, {"degree", degree}};
    if (nvars == 0 || 2 * nvars > kMaxVariables || degree < 0) {
        report.fail("need 1 <= nvars <= " + std::to_string(kMaxVariables / 2) + " and degree >= 0");
        return report;
    }
    const Alphabets ab{nvars};
    const int d = degree;

    // u^k still has a part of x-degree k - 1, so the series runs to k = d + 1.
    std::vector<Rational> geometric(static_cast<std::size_t>(d) + 2, Rational(1));
    const SuperPolynomial kernel = product_kernel(ab, d, geometric);
    const SuperPolynomial inverse = product_kernel(ab, d, {Rational(1), Rational(1)});
    report.notes["kernel_terms"] = kernel.size();

    const auto pz = [](const SuperPartition& sp) {
        const ZNormalization z = z_normalization(sp);
        return Rational(z.arrow_sign) / z.value;
    };
    const auto arrow_only = [](const SuperPartition& sp) { return Rational(arrow_sign(sp.fermionic_degree())); };
    const auto pz_omega = [&](const SuperPartition& sp) { return pz(sp) * Rational(omega_sign(sp)); };

    if (!(kernel == basis_sum(ab, d, BasisName::p, BasisName::p, pz))) {
        report.fail("K != sum z^-1 <-p(x) p(y)");
    }
    if (!(kernel == basis_sum(ab, d, BasisName::m, BasisName::h, arrow_only))) {
        report.fail("K != sum <-m(x) h(y)");
    }
    if (!(inverse == basis_sum(ab, d, BasisName::p, BasisName::p, pz_omega))) {
        report.fail("prod (1 + x y + theta phi) != sum omega z^-1 <-p(x) p(y)");
    }
    if (!(inverse == basis_sum(ab, d, BasisName::m, BasisName::e, arrow_only))) {
        report.fail("prod (1 + x y + theta phi) != sum <-m(x) e(y)");
    }

    // Reproducing property ⟨K | m_Λ⟩ = m_Λ(y): write K = Σ_Ω m_Ω(x) D_Ω(y),
    // so that ⟨K | f⟩ = Σ_Ω (-1)^{m(m-1)/2} ⟨m_Ω, f⟩ D_Ω(y).
    const int r = std::min(d, 3);
    bool fits = true;
    for (int n = 0; n <= r; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            fits = fits && max_length(n, m) <= static_cast<int>(nvars);
        }
    }
    if (!fits) {
        report.notes["reproducing"] = "skipped: too few variables";
        return report;
    }
    const auto parts = split_kernel(kernel, nvars);
    long reproduced = 0;
    for (int n = 0; n <= r; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const auto block = enumerate(n, m);
            for (const auto& lam : block) {
                SuperPolynomial acc(nvars);
                for (const auto& om : block) {
                    const Rational pairing =
                        scalar_product(basis_element(BasisName::m, om), basis_element(BasisName::m, lam));
                    if (pairing.is_zero()) {
                        continue;
                    }
                    const Monomial lead = leading(om);
                    std::vector<unsigned> xe(nvars);
                    for (std::size_t v = 0; v < nvars; ++v) {
                        xe[v] = lead.exponent(v);
                    }
                    const auto it = parts.find({lead.theta_mask(), xe});
                    if (it == parts.end()) {
                        continue;
                    }
                    acc += it->second * (pairing * Rational(arrow_sign(m)));
                }
                ++reproduced;
                if (!(acc == monomial(lam, nvars))) {
                    report.fail("<K | m" + to_string(lam) + "> != m" + to_string(lam) + "(y)");
                }
            }
        }
    }
    report.notes["reproduced"] = reproduced;
    return report;
}

} // namespace supersym
