#ifndef SUPERSYM_BASES_HPP
#define SUPERSYM_BASES_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "supersym/report.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/superpoly.hpp"

namespace supersym {

enum class BasisName { m, e, h, p };

std::string to_string(BasisName b);
// Throws std::invalid_argument for anything but "m", "e", "h", "p".
BasisName parse_basis(std::string_view text);

// Default variable count n + m for objects indexed by Λ ⊢ (n|m).
std::size_t default_nvars(const SuperPartition& sp);

/// Supermonomial m_Λ in N variables. The coefficient of θ_1···θ_m x^Λ is +1.
/// Throws std::domain_error when N < ℓ(Λ).
SuperPolynomial monomial(const SuperPartition& sp, std::size_t nvars);

// e_n (fermionic = false) or ẽ_n; e_0 = 1 and ẽ_0 = Σ θ_i.
SuperPolynomial elementary(int n, bool fermionic, std::size_t nvars);
// h_n = Σ_{λ⊢n} m_λ, h̃_n = Σ_{Λ⊢(n|1)} (Λ_1 + 1) m_Λ.
SuperPolynomial complete(int n, bool fermionic, std::size_t nvars);
// p_n = Σ x_i^n with p_0 = 0; p̃_n = Σ θ_i x_i^n.
SuperPolynomial powersum(int n, bool fermionic, std::size_t nvars);

// The single generator of basis b (e, h or p) of index n.
SuperPolynomial generator(BasisName b, int n, bool fermionic, std::size_t nvars);

/// Multiplicative element b_Λ = Π_i b̃_{Λ_i} Π_j b_{Λ_j}, fermionic factors
/// first in the order of Λ^a, multiplied left to right. With arrowed set, the
/// result is multiplied by (-1)^{m(m-1)/2}, which equals reversing the
/// fermionic factors. For b = m this returns the monomial m_Λ (arrowed alike).
SuperPolynomial multiplicative(BasisName b, const SuperPartition& sp, std::size_t nvars, bool arrowed = false);

enum class GeneratingKind { E, H, P };

struct SeriesTruncation {
    int max_t_degree = 4;
    bool with_tau = true;
};

/// Expands E(t,τ), H(t,τ) or P(t,τ) with t and τ adjoined as x_{N+1} and
/// θ_{N+1}, truncated in t, and compares the t^n and τ t^n coefficients with
/// e_n/ẽ_n, h_n/h̃_n, p_n/(n+1)p̃_n. The H check also verifies
/// H(t,τ)E(-t,-τ) = 1 and the P check the two Euler-operator relations.
Report generating_check(GeneratingKind kind, SeriesTruncation trunc, std::size_t nvars);

} // namespace supersym

#endif
