#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "supersym/bases.hpp"
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

// Variable count at which every monomial of SPar(n|m) is nonzero.
std::size_t enough_nvars(int n, int m)
{
    return static_cast<std::size_t>(std::max(max_length(n, m), 1));
}

// Classical z_λ = Π_k k^{n_k} n_k!
Rational z_classical(const std::vector<int>& parts)
{
    std::map<int, int> mult;
    for (int p : parts) {
        ++mult[p];
    }
    Rational z(1);
    for (const auto& [k, c] : mult) {
        for (int i = 1; i <= c; ++i) {
            z *= Rational(k) * Rational(i);
        }
    }
    return z;
}

} // namespace

TEST_CASE("expansion in monomials")
{
    const BasisExpansion ht1 = expand_in_monomials(complete(1, true, 3));
    CHECK(ht1.basis == BasisName::m);
    CHECK(ht1.coeffs == std::map<SuperPartition, Rational>{{sp("(1;)"), Rational(2)}, {sp("(0;1)"), Rational(1)}});
    CHECK(expand_in_monomials(monomial(sp("(2,0;1)"), 4)).coeffs ==
          std::map<SuperPartition, Rational>{{sp("(2,0;1)"), Rational(1)}});
    CHECK(expand_in_monomials(elementary(2, true, 3)).coeffs ==
          std::map<SuperPartition, Rational>{{sp("(0;1,1)"), Rational(1)}});
    CHECK(expand_in_monomials(Poly(3), 2, 1).is_zero());

    CHECK_THROWS_AS(expand_in_monomials(Poly::theta(2, 0)), std::domain_error);
    CHECK_THROWS_AS(expand_in_monomials(Poly::x(2, 0) + Poly::theta(2, 0) + Poly::theta(2, 1)), std::domain_error);
    CHECK(expand_in_monomials(Poly(3)).is_zero());
    // (;1,1,1) needs three variables, so N = 2 cannot separate the block.
    CHECK_THROWS_AS(expand_in_monomials(complete(3, false, 2)), std::domain_error);
}

TEST_CASE("monomials are recovered from their polynomials at every admissible N")
{
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            for (const auto& lam : enumerate(n, m)) {
                const BasisExpansion x = expand_in_monomials(monomial(lam, enough_nvars(n, m)), n, m);
                CHECK(x == basis_element(BasisName::m, lam));
                CHECK(to_polynomial(x, enough_nvars(n, m)) == monomial(lam, enough_nvars(n, m)));
            }
        }
    }
}

TEST_CASE("monomial product worked examples")
{
    const SuperPartition a = sp("(1,0;1)");
    const SuperPartition b = sp("(0;2,1,1)");
    CHECK(mono_product_fillings(a, b, sp("(2,1,0;1,1,1)")) == Rational(-3));
    CHECK(mono_product_fillings(a, b, sp("(3,1,0;1,1)")) == Rational(1));
    const BasisExpansion ab = mono_product(a, b);
    CHECK(ab.coefficient(sp("(2,1,0;1,1,1)")) == Rational(-3));
    CHECK(ab.coefficient(sp("(3,1,0;1,1)")) == Rational(1));
    CHECK(mono_product_fillings(a, b, sp("(2,1;3)")) == Rational(0));

    const SuperPartition omega = sp("(2,0;2,1)");
    CHECK(mono_product_fillings(SuperPartition{}, omega, omega) == Rational(1));
    CHECK(mono_product(SuperPartition{}, omega) == basis_element(BasisName::m, omega));
    CHECK(mono_product_fillings(a, b, sp("(1,0;1)")) == Rational(0));
}

TEST_CASE("filling rule agrees with the polynomial engine")
{
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= std::min(3, max_fermionic_degree(n)); ++m) {
            // Factors can be longer than anything in the product's block.
            const std::size_t nv = static_cast<std::size_t>(std::max(n + m, 1));
            for (int na = 0; na <= n; ++na) {
                for (int ma = 0; ma <= m; ++ma) {
                    const auto left = enumerate(na, ma);
                    const auto right = enumerate(n - na, m - ma);
                    for (const auto& a : left) {
                        for (const auto& b : right) {
                            const BasisExpansion engine = expand_in_monomials(monomial(a, nv) * monomial(b, nv), n, m);
                            CHECK_MESSAGE(mono_product(a, b) == engine, to_string(a), " * ", to_string(b));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("structure constants are supersymmetric")
{
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= std::min(3, max_fermionic_degree(n)); ++m) {
            const auto block = enumerate(n, m);
            for (int na = 0; na <= n; ++na) {
                for (int ma = 0; ma <= m; ++ma) {
                    const Rational sign(ma * (m - ma) % 2 == 0 ? 1 : -1);
                    for (const auto& a : enumerate(na, ma)) {
                        for (const auto& b : enumerate(n - na, m - ma)) {
                            for (const auto& g : block) {
                                CHECK(mono_product_fillings(a, b, g) == sign * mono_product_fillings(b, a, g));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("multiplicative elements in monomials agree with the engine")
{
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const std::size_t nv = enough_nvars(n, m);
            for (const auto& lam : enumerate(n, m)) {
                for (const BasisName b : kBases) {
                    CHECK_MESSAGE(multiplicative_in_monomials(b, lam) ==
                                      expand_in_monomials(multiplicative(b, lam, nv), n, m),
                                  to_string(b), to_string(lam));
                }
            }
        }
    }
}

TEST_CASE("classical power-sum expansions")
{
    const BasisExpansion e2 = change_basis(basis_element(BasisName::e, sp("(;2)")), BasisName::p);
    CHECK(e2.coeffs == std::map<SuperPartition, Rational>{{sp("(;2)"), Rational(-1, 2)}, {sp("(;1,1)"), Rational(1, 2)}});

    for (int n = 1; n <= 5; ++n) {
        const BasisExpansion h = change_basis(basis_element(BasisName::h, SuperPartition({}, {n})), BasisName::p);
        BasisExpansion expected{BasisName::p, n, 0, {}};
        for (const auto& lam : enumerate(n, 0)) {
            expected.add(lam, Rational(1) / z_classical(lam.sym()));
        }
        CHECK(h == expected);
    }
}

TEST_CASE("basis changes round-trip")
{
    for (int n = 0; n <= 5; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            for (const auto& lam : enumerate(n, m)) {
                for (const BasisName from : kBases) {
                    const BasisExpansion x = basis_element(from, lam);
                    for (const BasisName to : kBases) {
                        const BasisExpansion y = change_basis(x, to);
                        CHECK(y.basis == to);
                        CHECK(change_basis(y, from) == x);
                    }
                }
            }
        }
    }
}

TEST_CASE("conversions agree with polynomial evaluation")
{
    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const std::size_t nv = stable_nvars(n, m);
            for (const auto& lam : enumerate(n, m)) {
                const Poly f = multiplicative(BasisName::h, lam, nv);
                for (const BasisName to : kBases) {
                    const BasisExpansion y = change_basis(basis_element(BasisName::h, lam), to);
                    CHECK(to_polynomial(y, nv) == f);
                }
            }
        }
    }
}

TEST_CASE("products of expansions")
{
    const BasisExpansion a = basis_element(BasisName::e, sp("(1;)"));
    const BasisExpansion b = basis_element(BasisName::e, sp("(0;2)"));
    const BasisExpansion ab = product(a, b);
    CHECK(ab.basis == BasisName::e);
    CHECK(ab == basis_element(BasisName::e, sp("(1,0;2)")));
    const BasisExpansion ba = product(b, a);
    CHECK(ba == Rational(-1) * basis_element(BasisName::e, sp("(1,0;2)")));

    const BasisExpansion pm = product(basis_element(BasisName::p, sp("(;1)")), basis_element(BasisName::m, sp("(;1)")));
    CHECK(pm == basis_element(BasisName::p, sp("(;1,1)")));
    CHECK_THROWS_AS(basis_element(BasisName::m, sp("(;1)")) + basis_element(BasisName::m, sp("(;2)")),
                    std::domain_error);
}

TEST_CASE("triangularity of arrowed elementary functions")
{
    bool nonnegative = true;
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            for (const auto& lam : enumerate(n, m)) {
                const BasisExpansion x = Rational(arrow_sign(m)) * multiplicative_in_monomials(BasisName::e, lam);
                const SuperPartition lead = conjugate(lam);
                CHECK(x.coefficient(lead) == Rational(1));
                for (const auto& [omega, c] : x.coeffs) {
                    CHECK(c.is_integer());
                    nonnegative = nonnegative && c.sign() >= 0;
                    if (omega != lead) {
                        CHECK_MESSAGE(bruhat_leq(omega, lead), to_string(lam), " has ", to_string(omega));
                    }
                }
            }
        }
    }
    MESSAGE("all coefficients non-negative up to n = 6: ", nonnegative);

    const Report r = triangularity_check(5);
    CHECK(r.pass);
}

TEST_CASE("monomials in the elementary basis have integer coefficients; power sums span")
{
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const auto block = enumerate(n, m);
            const auto& mat = transition_matrix(BasisName::e, n, m);
            CHECK(mat.size() == block.size());
            for (const auto& lam : block) {
                const BasisExpansion x = change_basis(basis_element(BasisName::m, lam), BasisName::e);
                for (const auto& [omega, c] : x.coeffs) {
                    CHECK(c.is_integer());
                }
                if (n <= 5) {
                    const BasisExpansion p = change_basis(basis_element(BasisName::m, lam), BasisName::p);
                    CHECK(change_basis(p, BasisName::m) == basis_element(BasisName::m, lam));
                }
            }
        }
    }
}

TEST_CASE("recursions")
{
    const Report r = verify_recursions(6);
    CHECK_MESSAGE(r.pass, r.to_json().dump());
    CHECK(verify_recursions(1, 2).pass);
}

TEST_CASE("determinants")
{
    const std::size_t nv = 3;
    const Poly h1 = complete(1, false, nv);
    CHECK(determinant({{h1}}) == h1);
    CHECK(determinant({{complete(0, true, nv)}}) == elementary(0, true, nv));
    const auto c = [](int v) { return Poly::constant(2, Rational(v)); };
    CHECK(determinant({{c(1), c(2)}, {c(3), c(4)}}) == c(-2));
    CHECK(determinant({{c(2), c(0), c(1)}, {c(1), c(3), c(2)}, {c(1), c(1), c(2)}}) == c(6));
    CHECK(determinant({{Poly::theta(2, 0), Poly::theta(2, 1)}, {c(1), c(1)}}) ==
          Poly::theta(2, 0) - Poly::theta(2, 1));
    CHECK_THROWS_AS(determinant({{c(1), c(1)}, {Poly::theta(2, 0), c(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(determinant({{c(1), c(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(determinant({}), std::invalid_argument);

    for (const auto which : kAllDeterminants) {
        for (const bool omega_image : {false, true}) {
            const int n0 = (which == DeterminantFormula::et_from_h || which == DeterminantFormula::pt_from_e ||
                            which == DeterminantFormula::nfact_et_from_p)
                               ? 0
                               : 1;
            const Report r = determinant_formula(n0, which, omega_image, 4);
            CHECK_MESSAGE(r.pass, to_string(which));
        }
    }
    const Report all = determinant_formulas(6);
    CHECK_MESSAGE(all.pass, all.to_json().dump());
}

TEST_CASE("products report")
{
    CHECK(products_check(3, 2).pass);
}
