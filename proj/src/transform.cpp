#include "supersym/transform.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace supersym {

Rational BasisExpansion::coefficient(const SuperPartition& sp) const
{
    const auto it = coeffs.find(sp);
    return it == coeffs.end() ? Rational{} : it->second;
}

void BasisExpansion::add(const SuperPartition& sp, const Rational& c)
{
    if (sp.bosonic_degree() != n || sp.fermionic_degree() != m) {
        std::ostringstream os;
        os << to_string(sp) << " is not a superpartition of (" << n << "|" << m << ")";
        throw std::domain_error(os.str());
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs.try_emplace(sp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs.erase(it);
        }
    }
}

std::vector<std::pair<SuperPartition, Rational>> BasisExpansion::ordered() const
{
    std::vector<std::pair<SuperPartition, Rational>> out(coeffs.begin(), coeffs.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return enumeration_before(a.first, b.first); });
    return out;
}

BasisExpansion basis_element(BasisName b, const SuperPartition& sp)
{
    BasisExpansion x{b, sp.bosonic_degree(), sp.fermionic_degree(), {}};
    x.add(sp, 1);
    return x;
}

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b)
{
    if (a.is_zero()) {
        return b.basis == a.basis ? b : change_basis(b, a.basis);
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.n != b.n || a.m != b.m) {
        throw std::domain_error("cannot add expansions of different bidegrees");
    }
    BasisExpansion out = a;
    const BasisExpansion rhs = b.basis == a.basis ? b : change_basis(b, a.basis);
    for (const auto& [sp, c] : rhs.coeffs) {
        out.add(sp, c);
    }
    return out;
}

BasisExpansion operator*(const Rational& c, const BasisExpansion& a)
{
    BasisExpansion out{a.basis, a.n, a.m, {}};
    for (const auto& [sp, v] : a.coeffs) {
        out.add(sp, c * v);
    }
    return out;
}

std::size_t stable_nvars(int n, int /*m*/)
{
    return static_cast<std::size_t>(n) + 1;
}

namespace {

// θ_1···θ_m x^Λ, the leading monomial of m_Λ.
Monomial leading_monomial(const SuperPartition& sp)
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

} // namespace

BasisExpansion expand_in_monomials(const SuperPolynomial& f, int n, int m)
{
    if (const auto deg = f.bidegree(); !f.is_zero() && (!deg || *deg != std::make_pair(n, m))) {
        throw std::domain_error("polynomial is not homogeneous of bidegree (" + std::to_string(n) + "|" +
                                std::to_string(m) + ")");
    }
    if (static_cast<int>(f.nvars()) < max_length(n, m)) {
        throw std::domain_error("need at least " + std::to_string(max_length(n, m)) +
                                " variables to expand in degree (" + std::to_string(n) + "|" + std::to_string(m) +
                                ")");
    }
    if (!is_symmetric(f)) {
        throw std::domain_error("polynomial is not symmetric");
    }
    BasisExpansion out{BasisName::m, n, m, {}};
    for (const auto& sp : enumerate(n, m)) {
        out.add(sp, f.coefficient(leading_monomial(sp)));
    }
    return out;
}

BasisExpansion expand_in_monomials(const SuperPolynomial& f)
{
    if (f.is_zero()) {
        return BasisExpansion{};
    }
    const auto deg = f.bidegree();
    if (!deg) {
        throw std::domain_error("polynomial is not homogeneous");
    }
    return expand_in_monomials(f, deg->first, deg->second);
}

SuperPolynomial to_polynomial(const BasisExpansion& x, std::size_t nvars)
{
    SuperPolynomial out(nvars);
    for (const auto& [sp, c] : x.coeffs) {
        if (x.basis == BasisName::m && static_cast<std::size_t>(sp.length()) > nvars) {
            continue;
        }
        out += multiplicative(x.basis, sp, nvars) * c;
    }
    return out;
}

BasisExpansion mono_product(const SuperPartition& a, const SuperPartition& b)
{
    const int n = a.bosonic_degree() + b.bosonic_degree();
    const int m = a.fermionic_degree() + b.fermionic_degree();
    BasisExpansion out{BasisName::m, n, m, {}};
    for (const auto& g : enumerate(n, m, a.length() + b.length())) {
        out.add(g, mono_product_fillings(a, b, g));
    }
    return out;
}

namespace {

struct ProductCache {
    std::mutex lock;
    std::map<std::pair<SuperPartition, SuperPartition>, BasisExpansion> entries;
};

const BasisExpansion& cached_mono_product(const SuperPartition& a, const SuperPartition& b)
{
    static ProductCache cache;
    const auto key = std::make_pair(a, b);
    {
        std::lock_guard guard(cache.lock);
        if (const auto it = cache.entries.find(key); it != cache.entries.end()) {
            return it->second;
        }
    }
    BasisExpansion x = mono_product(a, b);
    std::lock_guard guard(cache.lock);
    return cache.entries.try_emplace(key, std::move(x)).first->second;
}

// Both factors in the monomial basis.
BasisExpansion multiply_monomial_expansions(const BasisExpansion& a, const BasisExpansion& b)
{
    BasisExpansion out{BasisName::m, a.n + b.n, a.m + b.m, {}};
    for (const auto& [sa, ca] : a.coeffs) {
        for (const auto& [sb, cb] : b.coeffs) {
            const Rational w = ca * cb;
            for (const auto& [g, c] : cached_mono_product(sa, sb).coeffs) {
                out.add(g, w * c);
            }
        }
    }
    return out;
}

BasisExpansion generator_in_monomials(BasisName b, int k, bool fermionic)
{
    const int m = fermionic ? 1 : 0;
    BasisExpansion out{BasisName::m, k, m, {}};
    const std::vector<int> fermion = fermionic ? std::vector<int>{0} : std::vector<int>{};
    switch (b) {
    case BasisName::m:
        throw std::invalid_argument("the monomial basis has no generators");
    case BasisName::e:
        // e_k = m_{(1^k)}, ẽ_k = m_{(0;1^k)}
        out.add(SuperPartition(fermion, std::vector<int>(static_cast<std::size_t>(k), 1)), 1);
        break;
    case BasisName::p:
        // p_k = m_{(k)} with p_0 = 0, p̃_k = m_{(k;)}
        if (fermionic) {
            out.add(SuperPartition({k}, {}), 1);
        } else if (k > 0) {
            out.add(SuperPartition({}, {k}), 1);
        }
        break;
    case BasisName::h:
        // h_k = Σ m_λ, h̃_k = Σ (Λ_1 + 1) m_Λ
        for (const auto& sp : enumerate(k, m)) {
            out.add(sp, fermionic ? Rational(sp.antisym()[0] + 1) : Rational(1));
        }
        break;
    }
    return out;
}

} // namespace

BasisExpansion multiplicative_in_monomials(BasisName b, const SuperPartition& sp)
{
    if (b == BasisName::m) {
        return basis_element(BasisName::m, sp);
    }
    BasisExpansion acc = basis_element(BasisName::m, SuperPartition{});
    for (const int part : sp.antisym()) {
        acc = multiply_monomial_expansions(acc, generator_in_monomials(b, part, true));
    }
    for (const int part : sp.sym()) {
        acc = multiply_monomial_expansions(acc, generator_in_monomials(b, part, false));
    }
    return acc;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix build_transition(BasisName b, int n, int m)
{
    const auto block = enumerate(n, m);
    Matrix mat(block.size(), std::vector<Rational>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) {
        const BasisExpansion row = multiplicative_in_monomials(b, block[i]);
        for (std::size_t j = 0; j < block.size(); ++j) {
            mat[i][j] = row.coefficient(block[j]);
        }
    }
    return mat;
}

// Gauss-Jordan over Q. Throws if the matrix is singular.
Matrix invert(const Matrix& a)
{
    const std::size_t size = a.size();
    Matrix work = a;
    Matrix inv(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && work[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == size) {
            throw std::domain_error("transition matrix is singular");
        }
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = Rational(1) / work[col][col];
        for (std::size_t k = 0; k < size; ++k) {
            work[col][k] *= scale;
            inv[col][k] *= scale;
        }
        for (std::size_t row = 0; row < size; ++row) {
            if (row == col || work[row][col].is_zero()) {
                continue;
            }
            const Rational factor = work[row][col];
            for (std::size_t k = 0; k < size; ++k) {
                if (!work[col][k].is_zero()) {
                    work[row][k] -= factor * work[col][k];
                }
                if (!inv[col][k].is_zero()) {
                    inv[row][k] -= factor * inv[col][k];
                }
            }
        }
    }
    return inv;
}

struct MatrixCache {
    std::mutex lock;
    std::map<std::tuple<BasisName, int, int>, Matrix> forward;
    std::map<std::tuple<BasisName, int, int>, Matrix> inverse;
};

MatrixCache& cache()
{
    static MatrixCache instance;
    return instance;
}

const Matrix& inverse_transition(BasisName b, int n, int m)
{
    const Matrix& fwd = transition_matrix(b, n, m);
    auto& c = cache();
    const auto key = std::make_tuple(b, n, m);
    {
        std::lock_guard guard(c.lock);
        if (const auto it = c.inverse.find(key); it != c.inverse.end()) {
            return it->second;
        }
    }
    Matrix inv = invert(fwd);
    std::lock_guard guard(c.lock);
    return c.inverse.try_emplace(key, std::move(inv)).first->second;
}

} // namespace

const std::vector<std::vector<Rational>>& transition_matrix(BasisName b, int n, int m)
{
    auto& c = cache();
    const auto key = std::make_tuple(b, n, m);
    {
        std::lock_guard guard(c.lock);
        if (const auto it = c.forward.find(key); it != c.forward.end()) {
            return it->second;
        }
    }
    Matrix mat = build_transition(b, n, m);
    std::lock_guard guard(c.lock);
    // std::map never invalidates references, so handing one out is safe.
    return c.forward.try_emplace(key, std::move(mat)).first->second;
}

BasisExpansion change_basis(const BasisExpansion& x, BasisName to)
{
    if (x.basis == to) {
        return x;
    }
    const auto block = enumerate(x.n, x.m);
    std::vector<Rational> mono(block.size());
    std::vector<Rational> source(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
        source[i] = x.coefficient(block[i]);
    }
    if (x.basis == BasisName::m) {
        mono = source;
    } else {
        const Matrix& fwd = transition_matrix(x.basis, x.n, x.m);
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (source[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < block.size(); ++j) {
                if (!fwd[i][j].is_zero()) {
                    mono[j].add_product(source[i], fwd[i][j]);
                }
            }
        }
    }
    BasisExpansion out{to, x.n, x.m, {}};
    if (to == BasisName::m) {
        for (std::size_t j = 0; j < block.size(); ++j) {
            out.add(block[j], mono[j]);
        }
        return out;
    }
    // y^T M = c^T  =>  y^T = c^T M^{-1}
    const Matrix& inv = inverse_transition(to, x.n, x.m);
    std::vector<Rational> target(block.size());
    for (std::size_t j = 0; j < block.size(); ++j) {
        if (mono[j].is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (!inv[j][i].is_zero()) {
                target[i].add_product(mono[j], inv[j][i]);
            }
        }
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
        out.add(block[i], target[i]);
    }
    return out;
}

BasisExpansion product(const BasisExpansion& a, const BasisExpansion& b)
{
    const BasisExpansion out =
        multiply_monomial_expansions(change_basis(a, BasisName::m), change_basis(b, BasisName::m));
    return change_basis(out, a.basis);
}

Report verify_recursions(int n_max, std::optional<std::size_t> nvars)
{
    Report report;
    report.check = "recursions";
    const std::size_t N = nvars.value_or(static_cast<std::size_t>(std::max(n_max, 0)) + 2);
    report.params = {{"n_max", n_max}, {"nvars", N}};
    if (n_max < 1) {
        report.fail("n_max must be at least 1");
        return report;
    }
    std::vector<SuperPolynomial> e, et, h, ht, p, pt;
    for (int k = 0; k <= n_max; ++k) {
        e.push_back(elementary(k, false, N));
        et.push_back(elementary(k, true, N));
        h.push_back(complete(k, false, N));
        ht.push_back(complete(k, true, N));
        p.push_back(powersum(k, false, N));
        pt.push_back(powersum(k, true, N));
    }
    auto sign = [](int r) { return Rational(r % 2 == 0 ? 1 : -1); };
    auto expect = [&](const SuperPolynomial& lhs, const SuperPolynomial& rhs, const std::string& name, int n) {
        if (!(lhs == rhs)) {
            report.fail(name + " fails at n=" + std::to_string(n));
        }
    };
    const auto u = [](std::size_t k) { return k; };
    long checked = 0;
    for (int n = 0; n <= n_max; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        SuperPolynomial zero(N);
        if (n >= 1) {
            // Σ (-1)^r e_r h_{n-r} = 0
            SuperPolynomial s(N);
            for (int r = 0; r <= n; ++r) {
                s += sign(r) * (e[u(r)] * h[nn - u(r)]);
            }
            expect(s, zero, "sum (-1)^r e_r h_{n-r} = 0", n);
            // n h_n = Σ p_r h_{n-r}
            SuperPolynomial rhs(N);
            for (int r = 1; r <= n; ++r) {
                rhs += p[u(r)] * h[nn - u(r)];
            }
            expect(h[nn] * Rational(n), rhs, "n h_n = sum p_r h_{n-r}", n);
            // n e_n = Σ (-1)^{r+1} p_r e_{n-r}
            SuperPolynomial rhs_e(N);
            for (int r = 1; r <= n; ++r) {
                rhs_e += sign(r + 1) * (p[u(r)] * e[nn - u(r)]);
            }
            expect(e[nn] * Rational(n), rhs_e, "n e_n = sum (-1)^(r+1) p_r e_{n-r}", n);
            checked += 3;
        }
        // Σ (-1)^r (e_r h̃_{n-r} - ẽ_r h_{n-r}) = 0
        SuperPolynomial s(N);
        for (int r = 0; r <= n; ++r) {
            s += sign(r) * (e[u(r)] * ht[nn - u(r)] - et[u(r)] * h[nn - u(r)]);
        }
        expect(s, zero, "sum (-1)^r (e_r h~_{n-r} - e~_r h_{n-r}) = 0", n);
        // (n+1) h̃_n = Σ [p_r h̃_{n-r} + (r+1) p̃_r h_{n-r}]
        SuperPolynomial rhs_h(N);
        for (int r = 0; r <= n; ++r) {
            rhs_h += p[u(r)] * ht[nn - u(r)] + Rational(r + 1) * (pt[u(r)] * h[nn - u(r)]);
        }
        expect(ht[nn] * Rational(n + 1), rhs_h, "(n+1) h~_n = sum [p_r h~_{n-r} + (r+1) p~_r h_{n-r}]", n);
        // (n+1) ẽ_n = Σ (-1)^{r+1} [p_r ẽ_{n-r} - (r+1) p̃_r e_{n-r}]
        SuperPolynomial rhs_et(N);
        for (int r = 0; r <= n; ++r) {
            rhs_et += sign(r + 1) * (p[u(r)] * et[nn - u(r)] - Rational(r + 1) * (pt[u(r)] * e[nn - u(r)]));
        }
        expect(et[nn] * Rational(n + 1), rhs_et, "(n+1) e~_n = sum (-1)^(r+1) [p_r e~_{n-r} - (r+1) p~_r e_{n-r}]",
               n);
        checked += 3;
    }
    report.notes["identities_checked"] = checked;
    return report;
}

Report triangularity_check(int n_max)
{
    Report report;
    report.check = "triangularity";
    report.params = {{"n_max", n_max}};
    bool nonnegative = true;
    long elements = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const auto N = static_cast<std::size_t>(max_length(n, m));
            for (const auto& sp : enumerate(n, m)) {
                const SuperPartition lead = conjugate(sp);
                const BasisExpansion x = expand_in_monomials(multiplicative(BasisName::e, sp, N, true), n, m);
                ++elements;
                if (x.coefficient(lead) != Rational(1)) {
                    report.fail("coefficient of m" + to_string(lead) + " in <-e" + to_string(sp) + " is " +
                                x.coefficient(lead).to_string());
                }
                for (const auto& [omega, c] : x.coeffs) {
                    if (!c.is_integer()) {
                        report.fail("non-integer coefficient in <-e" + to_string(sp));
                    }
                    if (c.sign() < 0) {
                        nonnegative = false;
                    }
                    if (omega != lead && !bruhat_leq(omega, lead)) {
                        report.fail("<-e" + to_string(sp) + " contains m" + to_string(omega) +
                                    " which is not below " + to_string(lead));
                    }
                }
            }
        }
    }
    report.notes["elements_checked"] = elements;
    report.notes["all_coefficients_nonnegative"] = nonnegative;
    return report;
}

Report products_check(int n_max, int m_max)
{
    Report report;
    report.check = "products";
    report.params = {{"n_max", n_max}, {"m_max", m_max}};
    long pairs = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= m_max; ++m) {
            if (enumerate(n, m).empty()) {
                continue;
            }
            for (int n1 = 0; n1 <= n; ++n1) {
                for (int m1 = 0; m1 <= m; ++m1) {
                    const auto left = enumerate(n1, m1);
                    const auto right = enumerate(n - n1, m - m1);
                    const auto N = static_cast<std::size_t>(n + m);
                    for (const auto& a : left) {
                        const SuperPolynomial ma = monomial(a, N);
                        for (const auto& b : right) {
                            ++pairs;
                            const BasisExpansion rule = mono_product(a, b);
                            const BasisExpansion engine = expand_in_monomials(ma * monomial(b, N), n, m);
                            if (!(rule == engine)) {
                                report.fail("m" + to_string(a) + " * m" + to_string(b) +
                                            ": filling rule disagrees with direct expansion");
                            }
                        }
                    }
                }
            }
        }
    }
    report.notes["pairs_checked"] = pairs;
    return report;
}

} // namespace supersym
