#include "supersym/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace supersym {

std::optional<std::pair<int, Monomial>> Monomial::make(const std::vector<std::size_t>& thetas,
                                                       const std::vector<unsigned>& exps)
{
    if (exps.size() > kMaxVariables) {
        throw std::out_of_range("too many variables for a monomial");
    }
    Monomial mono;
    int sign = 1;
    for (std::size_t a = 0; a < thetas.size(); ++a) {
        if (thetas[a] >= kMaxVariables) {
            throw std::out_of_range("θ index out of range");
        }
        for (std::size_t b = a + 1; b < thetas.size(); ++b) {
            if (thetas[a] == thetas[b]) {
                return std::nullopt;
            }
            if (thetas[a] > thetas[b]) {
                sign = -sign;
            }
        }
        mono.theta_ |= 1u << thetas[a];
    }
    for (std::size_t k = 0; k < exps.size(); ++k) {
        mono.set_exponent(k, exps[k]);
    }
    return std::make_pair(sign, mono);
}

std::vector<std::size_t> Monomial::theta_indices() const
{
    std::vector<std::size_t> out;
    for (std::uint32_t m = theta_; m != 0; m &= m - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

int Monomial::fermionic_degree() const
{
    return std::popcount(theta_);
}

int Monomial::bosonic_degree() const
{
    return bosonic_degree(0, kMaxVariables);
}

int Monomial::bosonic_degree(std::size_t first, std::size_t last) const
{
    int d = 0;
    for (std::size_t k = first; k < last && k < kMaxVariables; ++k) {
        d += exps_[k];
    }
    return d;
}

std::size_t Monomial::support_bound() const
{
    std::size_t bound = theta_ == 0 ? 0 : 32u - static_cast<std::size_t>(std::countl_zero(theta_));
    for (std::size_t k = kMaxVariables; k > bound; --k) {
        if (exps_[k - 1] != 0) {
            return k;
        }
    }
    return bound;
}

void Monomial::set_exponent(std::size_t var, unsigned e)
{
    if (var >= kMaxVariables) {
        throw std::out_of_range("variable index out of range");
    }
    if (e > 255) {
        throw std::overflow_error("exponent exceeds 255");
    }
    exps_[var] = static_cast<std::uint8_t>(e);
}

std::optional<std::pair<int, Monomial>> Monomial::multiply(const Monomial& a, const Monomial& b)
{
    if ((a.theta_ & b.theta_) != 0) {
        return std::nullopt;
    }
    // Each θ_k of b must move left past the θ_j of a with j > k.
    int swaps = 0;
    for (std::uint32_t m = b.theta_; m != 0; m &= m - 1) {
        const int k = std::countr_zero(m);
        swaps += std::popcount(k >= 31 ? 0u : (a.theta_ >> (k + 1)));
    }
    Monomial out;
    out.theta_ = a.theta_ | b.theta_;
    for (std::size_t k = 0; k < kMaxVariables; ++k) {
        const unsigned e = static_cast<unsigned>(a.exps_[k]) + b.exps_[k];
        if (e > 255) {
            throw std::overflow_error("exponent exceeds 255");
        }
        out.exps_[k] = static_cast<std::uint8_t>(e);
    }
    return std::make_pair((swaps & 1) ? -1 : 1, out);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::uint64_t words[kMaxVariables / 8];
    std::memcpy(words, m.exponents().data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ m.theta_mask();
    for (std::uint64_t w : words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

bool display_before(const Monomial& a, const Monomial& b)
{
    if (a.fermionic_degree() != b.fermionic_degree()) {
        return a.fermionic_degree() < b.fermionic_degree();
    }
    const auto ta = a.theta_indices();
    const auto tb = b.theta_indices();
    if (ta != tb) {
        return ta < tb;
    }
    return a.exponents() > b.exponents();
}

SuperPolynomial::SuperPolynomial(std::size_t nvars) : nvars_(nvars)
{
    if (nvars > kMaxVariables) {
        throw std::out_of_range("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
}

SuperPolynomial SuperPolynomial::constant(std::size_t nvars, const Rational& c)
{
    SuperPolynomial f(nvars);
    f.add_term(Monomial{}, c);
    return f;
}

SuperPolynomial SuperPolynomial::x(std::size_t nvars, std::size_t var)
{
    if (var >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Monomial mono;
    mono.set_exponent(var, 1);
    return term(nvars, mono, 1);
}

SuperPolynomial SuperPolynomial::theta(std::size_t nvars, std::size_t var)
{
    if (var >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Monomial mono;
    mono.set_theta_mask(1u << var);
    return term(nvars, mono, 1);
}

SuperPolynomial SuperPolynomial::term(std::size_t nvars, const Monomial& mono, const Rational& c)
{
    SuperPolynomial f(nvars);
    if (mono.support_bound() > nvars) {
        throw std::out_of_range("monomial uses variables beyond the ring");
    }
    f.add_term(mono, c);
    return f;
}

Rational SuperPolynomial::coefficient(const Monomial& mono) const
{
    const auto it = terms_.find(mono);
    return it == terms_.end() ? Rational{} : it->second;
}

void SuperPolynomial::add_term(const Monomial& mono, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void SuperPolynomial::check_same_ring(const SuperPolynomial& other) const
{
    if (nvars_ != other.nvars_) {
        throw std::invalid_argument("polynomials live in rings with " + std::to_string(nvars_) + " and " +
                                    std::to_string(other.nvars_) + " variables");
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other)
{
    check_same_ring(other);
    for (const auto& [mono, c] : other.terms_) {
        add_term(mono, c);
    }
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other)
{
    check_same_ring(other);
    for (const auto& [mono, c] : other.terms_) {
        add_term(mono, -c);
    }
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

SuperPolynomial SuperPolynomial::operator-() const
{
    SuperPolynomial out(*this);
    out *= Rational(-1);
    return out;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b)
{
    return multiply(a, b);
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b)
{
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::optional<std::pair<int, int>> SuperPolynomial::bidegree() const
{
    std::optional<std::pair<int, int>> deg;
    for (const auto& [mono, c] : terms_) {
        const std::pair<int, int> d{mono.bosonic_degree(), mono.fermionic_degree()};
        if (deg && *deg != d) {
            return std::nullopt;
        }
        deg = d;
    }
    return deg;
}

std::string SuperPolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) {
        sorted.push_back(&t);
    }
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return display_before(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        const Rational& c = t->second;
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        first = false;
        os << (c.sign() < 0 ? -c : c).to_string();
        for (std::size_t k = 0; k < nvars_; ++k) {
            const unsigned e = t->first.exponent(k);
            if (e == 1) {
                os << " * x" << k + 1;
            } else if (e > 1) {
                os << " * x" << k + 1 << '^' << e;
            }
        }
        const auto thetas = t->first.theta_indices();
        if (!thetas.empty()) {
            os << " *";
            for (std::size_t j : thetas) {
                os << " t{" << j + 1 << '}';
            }
        }
    }
    return os.str();
}

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g, std::optional<DegreeLimit> limit)
{
    if (f.nvars() != g.nvars()) {
        throw std::invalid_argument("cannot multiply polynomials over different variable sets");
    }
    SuperPolynomial out(f.nvars());
    if (f.is_zero() || g.is_zero()) {
        return out;
    }
    struct Term {
        const Monomial* mono;
        const Rational* coeff;
        int degree;
    };
    auto flatten = [&](const SuperPolynomial& p) {
        std::vector<Term> v;
        v.reserve(p.size());
        for (const auto& [mono, c] : p.terms()) {
            const int d = limit ? mono.bosonic_degree(limit->first, limit->last) : 0;
            if (!limit || d <= limit->max_degree) {
                v.push_back({&mono, &c, d});
            }
        }
        std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.degree < b.degree; });
        return v;
    };
    const auto lhs = flatten(f);
    const auto rhs = flatten(g);

    SuperPolynomial::TermMap acc;
    acc.reserve(std::min<std::size_t>(lhs.size() * rhs.size(), 1u << 22));
    Rational product;
    for (const auto& a : lhs) {
        for (const auto& b : rhs) {
            if (limit && a.degree + b.degree > limit->max_degree) {
                break;
            }
            const auto merged = Monomial::multiply(*a.mono, *b.mono);
            if (!merged) {
                continue;
            }
            auto [it, inserted] = acc.try_emplace(merged->second);
            if (merged->first > 0) {
                it->second.add_product(*a.coeff, *b.coeff);
            } else {
                product = *a.coeff;
                product *= *b.coeff;
                it->second -= product;
            }
        }
    }
    for (auto& [mono, c] : acc) {
        if (!c.is_zero()) {
            out.add_term(mono, c);
        }
    }
    return out;
}

SuperPolynomial truncate(const SuperPolynomial& f, int max_degree)
{
    return truncate(f, DegreeLimit{max_degree, 0, kMaxVariables});
}

SuperPolynomial truncate(const SuperPolynomial& f, const DegreeLimit& limit)
{
    SuperPolynomial out(f.nvars());
    for (const auto& [mono, c] : f.terms()) {
        if (mono.bosonic_degree(limit.first, limit.last) <= limit.max_degree) {
            out.add_term(mono, c);
        }
    }
    return out;
}

int arrow_sign(int m)
{
    return ((m * (m - 1) / 2) % 2 == 0) ? 1 : -1;
}

SuperPolynomial arrow(const SuperPolynomial& f)
{
    SuperPolynomial out(f.nvars());
    for (const auto& [mono, c] : f.terms()) {
        out.add_term(mono, arrow_sign(mono.fermionic_degree()) > 0 ? c : -c);
    }
    return out;
}

SuperPolynomial permute_variables(const SuperPolynomial& f, const std::vector<std::size_t>& perm)
{
    if (perm.size() != f.nvars()) {
        throw std::invalid_argument("permutation size does not match the number of variables");
    }
    SuperPolynomial out(f.nvars());
    for (const auto& [mono, c] : f.terms()) {
        std::vector<std::size_t> thetas;
        for (std::size_t j : mono.theta_indices()) {
            thetas.push_back(perm[j]);
        }
        std::vector<unsigned> exps(f.nvars(), 0);
        for (std::size_t k = 0; k < f.nvars(); ++k) {
            exps[perm[k]] = mono.exponent(k);
        }
        const auto relabelled = Monomial::make(thetas, exps);
        if (!relabelled) {
            throw std::invalid_argument("permutation is not a bijection");
        }
        out.add_term(relabelled->second, relabelled->first > 0 ? c : -c);
    }
    return out;
}

SuperPolynomial apply_exchange(std::size_t i, const SuperPolynomial& f)
{
    if (i < 1 || i >= f.nvars()) {
        throw std::out_of_range("exchange index " + std::to_string(i) + " outside 1.." +
                                std::to_string(f.nvars() == 0 ? 0 : f.nvars() - 1));
    }
    std::vector<std::size_t> perm(f.nvars());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        perm[k] = k;
    }
    std::swap(perm[i - 1], perm[i]);
    return permute_variables(f, perm);
}

bool is_symmetric(const SuperPolynomial& f)
{
    for (std::size_t i = 1; i < f.nvars(); ++i) {
        if (!(apply_exchange(i, f) == f)) {
            return false;
        }
    }
    return true;
}

Rational coefficient(const SuperPolynomial& f, const Monomial& mono)
{
    return f.coefficient(mono);
}

SuperPolynomial embed(const SuperPolynomial& f, std::size_t nvars, std::size_t offset)
{
    SuperPolynomial out(nvars);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.support_bound() + offset > nvars) {
            throw std::out_of_range("embedding does not fit in the target ring");
        }
        Monomial shifted;
        shifted.set_theta_mask(mono.theta_mask() << offset);
        for (std::size_t k = 0; k < f.nvars(); ++k) {
            shifted.set_exponent(k + offset, mono.exponent(k));
        }
        out.add_term(shifted, c);
    }
    return out;
}

SuperPolynomial power(const SuperPolynomial& f, unsigned k, std::optional<DegreeLimit> limit)
{
    SuperPolynomial out = SuperPolynomial::constant(f.nvars(), 1);
    for (unsigned i = 0; i < k; ++i) {
        out = multiply(out, f, limit);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& f)
{
    return os << f.to_string();
}

} // namespace supersym
