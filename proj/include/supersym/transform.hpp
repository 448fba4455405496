#ifndef SUPERSYM_TRANSFORM_HPP
#define SUPERSYM_TRANSFORM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supersym/bases.hpp"
#include "supersym/rational.hpp"
#include "supersym/report.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/superpoly.hpp"

namespace supersym {

/// Finitely supported map SPar(n|m) -> Q in one of the four bases.
/// Zero coefficients are never stored.
struct BasisExpansion {
    BasisName basis = BasisName::m;
    int n = 0;
    int m = 0;
    std::map<SuperPartition, Rational> coeffs;

    Rational coefficient(const SuperPartition& sp) const;
    // Adds c to the coefficient of sp; throws std::domain_error if sp ⊬ (n|m).
    void add(const SuperPartition& sp, const Rational& c);
    bool is_zero() const { return coeffs.empty(); }

    // Entries in enumeration order.
    std::vector<std::pair<SuperPartition, Rational>> ordered() const;

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// The single basis element b_Λ as an expansion.
BasisExpansion basis_element(BasisName b, const SuperPartition& sp);

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b);
BasisExpansion operator*(const Rational& c, const BasisExpansion& a);

// Smallest N at which the four bases of SPar(n|m) are bases of the
// degree-(n|m) symmetric polynomials: N = n + 1.
std::size_t stable_nvars(int n, int m);

/// Coefficients c_Λ of θ_1···θ_m x^Λ in a symmetric homogeneous f, so that
/// f = Σ c_Λ m_Λ. Throws std::domain_error for non-symmetric or mixed-degree
/// input, or when N < max ℓ over the block (the monomials would not be
/// independent). Without an explicit bidegree the zero polynomial gives the
/// empty expansion of bidegree (0|0).
BasisExpansion expand_in_monomials(const SuperPolynomial& f);
BasisExpansion expand_in_monomials(const SuperPolynomial& f, int n, int m);

// Σ c_Λ b_Λ as a polynomial in N variables.
SuperPolynomial to_polynomial(const BasisExpansion& x, std::size_t nvars);

/// Structure constant N^Γ_{Λ,Ω} of m_Λ m_Ω = Σ N^Γ_{Λ,Ω} m_Γ as a signed
/// count of fillings of D[Γ] by the rows of D[Λ] and D[Ω]. Zero when the
/// bidegrees do not add up.
Rational mono_product_fillings(const SuperPartition& a, const SuperPartition& b, const SuperPartition& g);

// m_a m_b in the monomial basis via fillings.
BasisExpansion mono_product(const SuperPartition& a, const SuperPartition& b);

/// b_Λ in the monomial basis, folding the filling rule over the m-expansions
/// of its generators (e_k = m_{(1^k)}, h̃_k = Σ (Λ_1 + 1) m_Λ, ...).
BasisExpansion multiplicative_in_monomials(BasisName b, const SuperPartition& sp);

/// Transition matrix of basis b on SPar(n|m): row i holds the monomial
/// coefficients of b_{Λ_i}, both indices in enumeration order. Cached.
const std::vector<std::vector<Rational>>& transition_matrix(BasisName b, int n, int m);

// Re-expands x in the target basis, pivoting through monomials.
BasisExpansion change_basis(const BasisExpansion& x, BasisName to);

// Product of two expansions, expressed in the basis of the left factor.
BasisExpansion product(const BasisExpansion& a, const BasisExpansion& b);

/// The six recursions relating e, h, p and their fermionic partners, checked
/// as polynomial identities for n <= n_max at N = n_max + 2.
Report verify_recursions(int n_max, std::optional<std::size_t> nvars = std::nullopt);

enum class DeterminantFormula {
    e_from_h,          // e_n as a determinant in h
    et_from_h,         // ẽ_n = (1/n!) det(h̃, h)
    p_from_e,          // p_n as a determinant in e
    nfact_e_from_p,    // n! e_n as a determinant in p
    pt_from_e,         // p̃_n as a determinant in ẽ, e
    nfact_et_from_p,   // n! ẽ_n as a determinant in p̃, p
};

inline constexpr DeterminantFormula kAllDeterminants[] = {
    DeterminantFormula::e_from_h,   DeterminantFormula::et_from_h,   DeterminantFormula::p_from_e,
    DeterminantFormula::nfact_e_from_p, DeterminantFormula::pt_from_e, DeterminantFormula::nfact_et_from_p,
};

const char* to_string(DeterminantFormula which);

// Determinant over the commutative span of the entries; the first row may be
// fermionic, the rest must be bosonic. Cofactor expansion along the first row.
SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& matrix);

/// Evaluates one determinantal formula at index n and compares it with the
/// direct construction. With omega_image set, every entry and the left-hand
/// side are replaced by their images under ω̂.
Report determinant_formula(int n, DeterminantFormula which, bool omega_image = false,
                           std::optional<std::size_t> nvars = std::nullopt);
// All formulas and their ω̂-images for n <= n_max.
Report determinant_formulas(int n_max, std::optional<std::size_t> nvars = std::nullopt);

/// For every Λ ⊢ (n|m), checks that ←e_Λ = m_{Λ'} + Σ_{Ω<Λ'} N m_Ω with
/// integer N. Also records (in notes) whether every N was non-negative.
Report triangularity_check(int n_max);

/// Filling rule against engine multiply-and-expand for all pairs whose
/// combined bidegree (n|m) has n <= n_max and m <= m_max.
Report products_check(int n_max, int m_max);

} // namespace supersym

#endif
