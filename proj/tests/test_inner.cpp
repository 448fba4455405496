#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "supersym/bases.hpp"
#include "supersym/inner.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/superpoly.hpp"
#include "supersym/transform.hpp"

using namespace supersym;

namespace {

using Poly = SuperPolynomial;

SuperPartition sp(const char* text)
{
    return parse_superpartition(text);
}

constexpr BasisName kBases[] = {BasisName::m, BasisName::e, BasisName::h, BasisName::p};

BasisExpansion random_expansion(std::mt19937& rng, BasisName b, int n, int m)
{
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    BasisExpansion x{b, n, m, {}};
    for (const auto& lam : enumerate(n, m)) {
        x.add(lam, Rational(num(rng), den(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("normalisation constants")
{
    CHECK(z_normalization(sp("(;2)")).value == Rational(2));
    CHECK(z_normalization(sp("(;1,1)")).value == Rational(2));
    CHECK(z_normalization(sp("(;3,1,1)")).value == Rational(6));
    CHECK(z_normalization(sp("(2,0;2,2,1)")).value == Rational(8));
    CHECK(z_normalization(sp("(1;)")).value == Rational(1));
    CHECK(z_normalization(sp("(1,0;)")).arrow_sign == -1);
    CHECK(z_normalization(sp("(2,1,0;)")).arrow_sign == -1);
    CHECK(z_normalization(sp("(3,2,1,0;)")).arrow_sign == 1);
    CHECK(omega_sign(sp("(3,0;1)")) == -1);
    CHECK(omega_sign(sp("(;1)")) == 1);
    CHECK(omega_sign(sp("(;2)")) == -1);
    CHECK(omega_sign(sp("(0;)")) == 1);
}

TEST_CASE("scalar product examples")
{
    const auto p = [](const char* s) { return basis_element(BasisName::p, sp(s)); };
    CHECK(scalar_product(p("(;2)"), p("(;2)")) == Rational(2));
    CHECK(scalar_product(p("(1;)"), p("(1;)")) == Rational(1));
    CHECK(scalar_product(p("(1;)"), p("(0;1)")) == Rational(0));
    CHECK(scalar_product(p("(1;)"), p("(;1)")) == Rational(0));
    CHECK(scalar_product(p("(1,0;)"), p("(1,0;)")) == Rational(1));
    CHECK(scalar_product(p("(1,0;)"), p("(1,0;)"), true) == Rational(-1));
    CHECK(scalar_product(p("(0;1)"), p("(0;1)"), true) == Rational(1));

    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const auto block = enumerate(n, m);
            for (const auto& a : block) {
                for (const auto& b : block) {
                    const Rational hm =
                        scalar_product(basis_element(BasisName::h, a), basis_element(BasisName::m, b));
                    CHECK(hm == Rational(a == b ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("scalar product of polynomials")
{
    std::mt19937 rng(99);
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const std::size_t nv = stable_nvars(n, m);
            const BasisExpansion f = random_expansion(rng, BasisName::e, n, m);
            const BasisExpansion g = random_expansion(rng, BasisName::h, n, m);
            CHECK(scalar_product(to_polynomial(f, nv), to_polynomial(g, nv)) == scalar_product(f, g));
            CHECK(scalar_product(to_polynomial(f, nv), to_polynomial(g, nv), true) ==
                  Rational(arrow_sign(m)) * scalar_product(f, g));
        }
    }
    // Mixed bidegrees pair component by component.
    const std::size_t nv = 3;
    const Poly a = powersum(2, false, nv) + powersum(1, true, nv);
    const Poly b = Rational(3) * powersum(2, false, nv) + powersum(1, true, nv);
    CHECK(scalar_product(a, b) == Rational(7));
    CHECK_THROWS_AS(scalar_product(Poly::x(2, 0), Poly::x(2, 0)), std::domain_error);
}

TEST_CASE("omega examples")
{
    const SuperPartition lam = sp("(3,0;4,1)");
    CHECK(change_basis(omega(basis_element(BasisName::e, lam)), BasisName::h) == basis_element(BasisName::h, lam));
    CHECK(omega(basis_element(BasisName::p, sp("(3,0;1)"))) == Rational(-1) * basis_element(BasisName::p, sp("(3,0;1)")));
    const BasisExpansion w = omega(basis_element(BasisName::m, sp("(1;1)")));
    CHECK(w.basis == BasisName::m);
}

TEST_CASE("e and h in power sums")
{
    const BasisExpansion h2 = eh_in_p(2, false, EH::h);
    CHECK(h2.coeffs == std::map<SuperPartition, Rational>{{sp("(;2)"), Rational(1, 2)}, {sp("(;1,1)"), Rational(1, 2)}});
    CHECK(eh_in_p(0, true, EH::e).coeffs == std::map<SuperPartition, Rational>{{sp("(0;)"), Rational(1)}});

    const std::map<SuperPartition, Rational> ht2{{sp("(2;)"), Rational(1)},
                                                 {sp("(1;1)"), Rational(1)},
                                                 {sp("(0;2)"), Rational(1, 2)},
                                                 {sp("(0;1,1)"), Rational(1, 2)}};
    CHECK(eh_in_p(2, true, EH::h).coeffs == ht2);
    CHECK(change_basis(basis_element(BasisName::h, sp("(2;)")), BasisName::p).coeffs == ht2);
    CHECK(eh_in_p(2, false, EH::e) == change_basis(basis_element(BasisName::e, sp("(;2)")), BasisName::p));
    CHECK(eh_in_p_check(6).pass);
    CHECK_THROWS_AS(eh_in_p(-1, false, EH::h), std::domain_error);
}

TEST_CASE("Gram matrices and dual bases")
{
    CHECK(dual_bases_check(3, 1, BasisName::h, BasisName::m));
    CHECK(dual_bases_check(3, 1, BasisName::m, BasisName::h));
    const auto g = gram_matrix(2, 0, BasisName::p, BasisName::p);
    CHECK(g == std::vector<std::vector<Rational>>{{Rational(2), Rational(0)}, {Rational(0), Rational(2)}});
    CHECK_FALSE(dual_bases_check(2, 1, BasisName::m, BasisName::m));
    CHECK_FALSE(dual_bases_check(2, 0, BasisName::p, BasisName::p));
}

TEST_CASE("orthogonality report")
{
    const Report r = orthogonality_check(5, 3);
    CHECK_MESSAGE(r.pass, r.to_json().dump());
}

TEST_CASE("positivity, symmetry and isometry on random elements")
{
    std::mt19937 rng(31337);
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            for (int trial = 0; trial < 50; ++trial) {
                const BasisName bf = kBases[trial % 4];
                const BasisName bg = kBases[(trial / 4) % 4];
                const BasisExpansion f = random_expansion(rng, bf, n, m);
                const BasisExpansion g = random_expansion(rng, bg, n, m);
                const Rational ff = scalar_product(f, f);
                CHECK((ff.sign() > 0) == !f.is_zero());
                CHECK(ff.sign() >= 0);
                CHECK(scalar_product(f, g) == scalar_product(g, f));
                CHECK(scalar_product(omega(f), omega(g)) == scalar_product(f, g));
                CHECK(change_basis(omega(omega(f)), bf) == f);
            }
        }
    }
}

TEST_CASE("kernels")
{
    // At x-degree 0 the product kernel is 1 + Σ θ_i φ_j; quartic terms cancel.
    const std::size_t n = 2;
    Poly prod = Poly::constant(2 * n, Rational(1));
    Poly expected = Poly::constant(2 * n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Poly tp = Poly::theta(2 * n, i) * Poly::theta(2 * n, n + j);
            prod = prod * (Poly::constant(2 * n, Rational(1)) + tp);
            expected += tp;
        }
    }
    CHECK(prod == expected);

    CHECK(kernel_check(1, 0).pass);
    CHECK(kernel_check(2, 0).pass);
    CHECK(kernel_check(2, 1).pass);
    CHECK(kernel_check(3, 2).pass);
    const Report r = kernel_check(4, 3);
    CHECK_MESSAGE(r.pass, r.to_json().dump());
}
