#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "supersym/bases.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/superpoly.hpp"

using namespace supersym;

namespace {

using Poly = SuperPolynomial;

Poly x(std::size_t n, std::size_t i)
{
    return Poly::x(n, i);
}

Poly t(std::size_t n, std::size_t i)
{
    return Poly::theta(n, i);
}

Monomial mono(const std::vector<std::size_t>& thetas, const std::vector<unsigned>& exps)
{
    const auto made = Monomial::make(thetas, exps);
    REQUIRE(made.has_value());
    REQUIRE(made->first == 1);
    return made->second;
}

// Random polynomial with small integer coefficients and up to max_terms terms.
Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_terms)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    std::bernoulli_distribution has_theta(0.4);
    std::uniform_int_distribution<int> count(0, max_terms);
    Poly f(nvars);
    const int terms = count(rng);
    for (int k = 0; k < terms; ++k) {
        std::vector<std::size_t> thetas;
        std::vector<unsigned> exps(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            exps[i] = static_cast<unsigned>(expo(rng));
            if (has_theta(rng)) {
                thetas.push_back(i);
            }
        }
        const auto made = Monomial::make(thetas, exps);
        f.add_term(made->second, Rational(coeff(rng)));
    }
    return f;
}

// Fermionic degree of each homogeneous part, or -1 for mixed input.
int parity(const Poly& f)
{
    int p = -1;
    for (const auto& [mono, c] : f.terms()) {
        const int q = mono.fermionic_degree() % 2;
        if (p >= 0 && p != q) {
            return -1;
        }
        p = q;
    }
    return p < 0 ? 0 : p;
}

// Product computed term by term: concatenate θ index lists and count
// adjacent transpositions while bubble sorting them.
Poly naive_multiply(const Poly& f, const Poly& g)
{
    Poly out(f.nvars());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            std::vector<std::size_t> idx = a.theta_indices();
            const auto bt = b.theta_indices();
            idx.insert(idx.end(), bt.begin(), bt.end());
            int sign = 1;
            bool zero = false;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
                    if (idx[j] == idx[j + 1]) {
                        zero = true;
                    }
                    if (idx[j] > idx[j + 1]) {
                        std::swap(idx[j], idx[j + 1]);
                        sign = -sign;
                    }
                }
            }
            for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
                zero = zero || idx[j] == idx[j + 1];
            }
            if (zero) {
                continue;
            }
            std::vector<unsigned> exps(f.nvars());
            for (std::size_t v = 0; v < f.nvars(); ++v) {
                exps[v] = a.exponent(v) + b.exponent(v);
            }
            const auto made = Monomial::make(idx, exps);
            out.add_term(made->second, Rational(sign) * ca * cb);
        }
    }
    return out;
}

} // namespace

TEST_CASE("multiply examples")
{
    const std::size_t n = 3;
    CHECK(t(n, 1) * t(n, 0) == -(t(n, 0) * t(n, 1)));
    CHECK((t(n, 0) * x(n, 0)) * (t(n, 0) * x(n, 1)) == Poly(n));
    CHECK((t(n, 0) + t(n, 1)) * (t(n, 0) * t(n, 1) * x(n, 2)) == Poly(n));
    const Poly a = x(n, 0) + t(n, 0) * t(n, 1);
    CHECK(a * a == x(n, 0) * x(n, 0) + Rational(2) * x(n, 0) * t(n, 0) * t(n, 1));
    CHECK(Poly::theta(n, 0).to_string() == "1 * t{1}");
}

TEST_CASE("monomial construction reorders thetas with a sign")
{
    const auto a = Monomial::make({2, 0}, {0, 1, 0});
    REQUIRE(a.has_value());
    CHECK(a->first == -1);
    CHECK(a->second.theta_indices() == std::vector<std::size_t>{0, 2});
    CHECK_FALSE(Monomial::make({1, 1}, {}).has_value());
    const auto b = Monomial::make({2, 1, 0}, {});
    CHECK(b->first == -1);
    const auto c = Monomial::make({3, 2, 1, 0}, {});
    CHECK(c->first == 1);
}

TEST_CASE("arrow examples")
{
    const std::size_t n = 4;
    CHECK(arrow(t(n, 0) * t(n, 1)) == -(t(n, 0) * t(n, 1)));
    const Poly b = x(n, 0) * x(n, 1) + x(n, 2) + t(n, 0) * x(n, 1);
    CHECK(arrow(b) == b);
    CHECK(arrow(t(n, 0) * t(n, 1) * t(n, 2)) == -(t(n, 0) * t(n, 1) * t(n, 2)));
    CHECK(arrow(t(n, 0) * t(n, 1) * t(n, 2) * t(n, 3)) == t(n, 0) * t(n, 1) * t(n, 2) * t(n, 3));
    const int expected[] = {1, 1, -1, -1, 1, 1, -1, -1};
    for (int m = 0; m < 8; ++m) {
        CHECK(arrow_sign(m) == expected[m]);
    }
}

TEST_CASE("exchange examples")
{
    const std::size_t n = 3;
    CHECK(apply_exchange(1, t(n, 0) * x(n, 1)) == t(n, 1) * x(n, 0));
    CHECK(apply_exchange(1, t(n, 0) * t(n, 1)) == -(t(n, 0) * t(n, 1)));
    const Poly m01 = monomial(parse_superpartition("(0;1)"), 3);
    CHECK(apply_exchange(1, m01) == m01);
    CHECK(apply_exchange(2, m01) == m01);
    CHECK_THROWS_AS(apply_exchange(0, m01), std::out_of_range);
    CHECK_THROWS_AS(apply_exchange(3, m01), std::out_of_range);
}

TEST_CASE("symmetry examples")
{
    const std::size_t n = 2;
    const Poly x1_4 = x(n, 0) * x(n, 0) * x(n, 0) * x(n, 0);
    const Poly x2_4 = x(n, 1) * x(n, 1) * x(n, 1) * x(n, 1);
    CHECK(is_symmetric(t(n, 0) * x1_4 + t(n, 1) * x2_4));
    CHECK(is_symmetric(t(n, 0) * x(n, 1) * x(n, 1) + t(n, 1) * x(n, 0) * x(n, 0)));
    CHECK_FALSE(is_symmetric(t(n, 0) * x(n, 0)));
    CHECK_FALSE(is_symmetric(t(n, 0) * t(n, 1)));
    CHECK_FALSE(is_symmetric(t(n, 0) * t(n, 1) * x(n, 0)));
    CHECK(is_symmetric(t(n, 0) * t(n, 1) * (x(n, 0) - x(n, 1))));
    CHECK(is_symmetric(Poly(n)));
}

TEST_CASE("coefficient examples")
{
    CHECK(coefficient(-(t(2, 0) * t(2, 1)), mono({0, 1}, {})) == Rational(-1));
    CHECK(coefficient(monomial(parse_superpartition("(;1,1)"), 3), mono({}, {1, 1, 0})) == Rational(1));
    CHECK(coefficient(monomial(parse_superpartition("(2;1,1)"), 3), mono({0}, {2, 1, 1})) == Rational(1));
    CHECK(coefficient(monomial(parse_superpartition("(2;1,1)"), 3), mono({1}, {1, 2, 1})) == Rational(1));
    CHECK(coefficient(monomial(parse_superpartition("(2;1,1)"), 3), mono({0}, {1, 2, 1})) == Rational(0));
}

TEST_CASE("coefficient functions of monomials are antisymmetric in the fermionic slots")
{
    // For σ exchanging the first two entries of (x^Λ with θ_1θ_2...) the
    // coefficient of θ_2θ_1... x^{σΛ} flips sign; equivalently
    // coeff(θ_1θ_2 x^{(a,b,..)}) = -coeff(θ_1θ_2 x^{(b,a,..)}).
    for (int n = 0; n <= 4; ++n) {
        for (int m = 2; m <= max_fermionic_degree(n); ++m) {
            for (const auto& lam : enumerate(n, m)) {
                const std::size_t nv = static_cast<std::size_t>(lam.length());
                const Poly f = monomial(lam, nv);
                std::vector<unsigned> e(nv);
                for (std::size_t i = 0; i < nv; ++i) {
                    e[i] = static_cast<unsigned>(lam.composition()[i]);
                }
                std::vector<std::size_t> th(static_cast<std::size_t>(m));
                std::iota(th.begin(), th.end(), 0);
                auto swapped = e;
                std::swap(swapped[0], swapped[1]);
                CHECK(coefficient(f, mono(th, e)) == Rational(1));
                CHECK(coefficient(f, mono(th, swapped)) == Rational(-1));
            }
        }
    }
}

TEST_CASE("algebra laws on random polynomials")
{
    std::mt19937 rng(20240611);
    const std::size_t n = 3;
    for (int trial = 0; trial < 60; ++trial) {
        const Poly f = random_poly(rng, n, 5);
        const Poly g = random_poly(rng, n, 5);
        const Poly h = random_poly(rng, n, 5);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == naive_multiply(f, g));
        CHECK(arrow(arrow(f)) == f);
        CHECK(f - f == Poly(n));
    }
}

TEST_CASE("grading, supercommutativity and nilpotence of odd elements")
{
    std::mt19937 rng(7);
    const std::size_t n = 3;
    int tested = 0;
    while (tested < 80) {
        const Poly f = random_poly(rng, n, 4);
        const Poly g = random_poly(rng, n, 4);
        const auto bf = f.bidegree();
        const auto bg = g.bidegree();
        const int pf = parity(f);
        const int pg = parity(g);
        if (pf < 0 || pg < 0) {
            continue;
        }
        ++tested;
        const Poly fg = f * g;
        const Rational sign(pf * pg == 1 ? -1 : 1);
        CHECK(fg == sign * (g * f));
        if (pf == 1) {
            CHECK((f * f).is_zero());
        }
        if (bf && bg && !fg.is_zero()) {
            const auto b = fg.bidegree();
            REQUIRE(b.has_value());
            CHECK(b->first == bf->first + bg->first);
            CHECK(b->second == bf->second + bg->second);
        }
    }
}

TEST_CASE("truncation, embedding and powers")
{
    const std::size_t n = 2;
    const Poly s = Poly::constant(n, Rational(1)) + x(n, 0) + t(n, 1);
    const Poly s3 = power(s, 3);
    CHECK(s3 == s * s * s);
    CHECK(power(s, 0) == Poly::constant(n, Rational(1)));
    CHECK(truncate(s3, 1) == power(s, 3, DegreeLimit{1}));
    CHECK(multiply(s, s, DegreeLimit{0}) == Poly::constant(n, Rational(1)) + Rational(2) * t(n, 1));
    CHECK(truncate(s3, 1) == Poly::constant(n, Rational(1)) + Rational(3) * x(n, 0) + Rational(3) * t(n, 1) +
                                 Rational(6) * x(n, 0) * t(n, 1));

    const Poly e = embed(t(n, 0) * x(n, 1), 4, 2);
    CHECK(e == t(4, 2) * x(4, 3));
    CHECK(e.nvars() == 4);
    CHECK_THROWS(x(2, 0) + x(3, 0));
    CHECK_THROWS(x(2, 0) * x(3, 0));
    CHECK_THROWS(Poly::x(2, 2));
}

TEST_CASE("bidegree")
{
    const std::size_t n = 3;
    CHECK_FALSE(Poly(n).bidegree().has_value());
    CHECK(*(t(n, 0) * x(n, 1) * x(n, 1)).bidegree() == std::pair{2, 1});
    CHECK_FALSE((x(n, 0) + t(n, 0)).bidegree().has_value());
}
