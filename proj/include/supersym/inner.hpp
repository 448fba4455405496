#ifndef SUPERSYM_INNER_HPP
#define SUPERSYM_INNER_HPP

#include <cstddef>
#include <vector>

#include "supersym/bases.hpp"
#include "supersym/rational.hpp"
#include "supersym/report.hpp"
#include "supersym/superpartition.hpp"
#include "supersym/superpoly.hpp"
#include "supersym/transform.hpp"

namespace supersym {

struct ZNormalization {
    Rational value;      // z_Λ = Π_k k^{n_k} n_k! over the parts of Λ^s
    int arrow_sign = 1;  // (-1)^{m(m-1)/2}
};

ZNormalization z_normalization(const SuperPartition& sp);

// ω_Λ = (-1)^{|Λ| + m - ℓ(Λ)}
int omega_sign(const SuperPartition& sp);

/// Σ_Λ z_Λ f_Λ g_Λ with f_Λ, g_Λ the coefficients in the (unarrowed) power
/// sum basis. Expansions of different bidegrees pair to 0. With raw set, the
/// result is further multiplied by (-1)^{m(m-1)/2}, i.e. the arrow is not
/// absorbed into the left argument.
Rational scalar_product(const BasisExpansion& f, const BasisExpansion& g, bool raw = false);

/// Same for polynomials: each argument is split into bidegree components,
/// expanded in monomials and converted to power sums. Throws
/// std::domain_error for non-symmetric input or too few variables.
Rational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g, bool raw = false);

// ω̂ applied to x; the result stays in x's basis.
BasisExpansion omega(const BasisExpansion& x);

enum class EH { e, h };

/// h_n, e_n (fermionic = false) or h̃_n, ẽ_n as Σ z_Λ^{-1} p_Λ, with an extra
/// ω_Λ for the elementary ones, over SPar(n|0) or SPar(n|1).
BasisExpansion eh_in_p(int n, bool fermionic, EH which);

/// Gram matrix ⟨u_Λ, v_Ω⟩ over SPar(n|m) in enumeration order, computed
/// from the polynomials u_Λ, v_Ω built at the stable variable count.
std::vector<std::vector<Rational>> gram_matrix(int n, int m, BasisName u, BasisName v);

// True iff gram_matrix(n, m, u, v) is the identity.
bool dual_bases_check(int n, int m, BasisName u, BasisName v);

/// ⟨p_Λ, p_Ω⟩ = z_Λ δ and ⟨h_Λ, m_Ω⟩ = δ on every block n <= n_max,
/// m <= m_max; ω̂(e_Λ) = h_Λ, ω̂ is an involution on all four bases and
/// preserves the e-basis Gram matrix.
Report orthogonality_check(int n_max, int m_max);

/// Closed forms of eh_in_p against change_basis of the direct construction.
Report eh_in_p_check(int n_max);

/// Builds Π_{i,j} (1 - x_i y_j - θ_i φ_j)^{-1} and Π_{i,j} (1 + x_i y_j + θ_i φ_j)
/// in a double alphabet of N variables each, truncated at total x-degree d,
/// and compares them with Σ z^{-1} ←p(x) p(y), Σ ←m(x) h(y), and
/// Σ ω z^{-1} ←p(x) p(y), Σ ←m(x) e(y) respectively. Also checks that K
/// reproduces m_Λ(y) under the scalar product in x for |Λ| <= min(d, 3),
/// when N is large enough for those degrees.
Report kernel_check(std::size_t nvars, int degree);

} // namespace supersym

#endif
