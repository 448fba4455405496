#ifndef SUPERSYM_SUPERPOLY_HPP
#define SUPERSYM_SUPERPOLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supersym/rational.hpp"

namespace supersym {

// Upper bound on N for a single polynomial ring (double alphabets use 2N).
inline constexpr std::size_t kMaxVariables = 32;

/// θ_J x^μ with J stored as a bit set (so always in increasing order) and μ
/// stored densely in a fixed-width array of small exponents.
class Monomial {
public:
    using Exponents = std::array<std::uint8_t, kMaxVariables>;

    Monomial() = default;

    /// Builds θ_{thetas[0]} θ_{thetas[1]} ... x^exps and brings the θ factors
    /// into increasing order. Returns the sign picked up by the reordering, or
    /// nullopt when an index repeats (θ_i² = 0). Indices are 0-based.
    static std::optional<std::pair<int, Monomial>> make(const std::vector<std::size_t>& thetas,
                                                        const std::vector<unsigned>& exps);

    std::uint32_t theta_mask() const { return theta_; }
    std::vector<std::size_t> theta_indices() const;
    unsigned exponent(std::size_t var) const { return exps_[var]; }
    const Exponents& exponents() const { return exps_; }

    int fermionic_degree() const;
    int bosonic_degree() const;
    // Total exponent over variables [first, last).
    int bosonic_degree(std::size_t first, std::size_t last) const;
    bool has_theta(std::size_t var) const { return (theta_ >> var) & 1u; }
    // Highest variable index in use plus one.
    std::size_t support_bound() const;

    void set_exponent(std::size_t var, unsigned e);
    void set_theta_mask(std::uint32_t mask) { theta_ = mask; }

    /// Product of two monomials: nullopt if they share a θ, otherwise the
    /// sign from merging θ_J θ_K into increasing order and the product.
    static std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents exps_{};
    std::uint32_t theta_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// Orders terms for display: by fermionic degree, then θ indices, then
// exponents lexicographically decreasing.
bool display_before(const Monomial& a, const Monomial& b);

/// Bound on a degree used to truncate products: terms whose total exponent
/// over variables [first, last) exceeds max_degree are dropped.
struct DegreeLimit {
    int max_degree;
    std::size_t first = 0;
    std::size_t last = kMaxVariables;
};

/// Polynomial in N commuting variables x_1..x_N and N anticommuting
/// variables θ_1..θ_N with exact rational coefficients. Zero coefficients are
/// never stored; the zero polynomial has no terms.
class SuperPolynomial {
public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

    explicit SuperPolynomial(std::size_t nvars = 0);

    static SuperPolynomial constant(std::size_t nvars, const Rational& c);
    // x_var (0-based)
    static SuperPolynomial x(std::size_t nvars, std::size_t var);
    // θ_var (0-based)
    static SuperPolynomial theta(std::size_t nvars, std::size_t var);
    static SuperPolynomial term(std::size_t nvars, const Monomial& mono, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& mono) const;
    // Adds c to the coefficient of mono, dropping it if the result is zero.
    void add_term(const Monomial& mono, const Rational& c);

    SuperPolynomial& operator+=(const SuperPolynomial& other);
    SuperPolynomial& operator-=(const SuperPolynomial& other);
    SuperPolynomial& operator*=(const Rational& c);
    SuperPolynomial operator-() const;

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

    // Bidegree (n|m) if every term shares it; nullopt for mixed or zero input.
    std::optional<std::pair<int, int>> bidegree() const;

    // "c * x1^a1 ... * t{j1} t{j2} ..." with 1-based indices, canonical term order.
    std::string to_string() const;

private:
    void check_same_ring(const SuperPolynomial& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

// Product with terms exceeding the degree limit discarded as they are formed.
SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g,
                         std::optional<DegreeLimit> limit = std::nullopt);

// Drops every term whose bosonic degree exceeds max_degree.
SuperPolynomial truncate(const SuperPolynomial& f, int max_degree);
SuperPolynomial truncate(const SuperPolynomial& f, const DegreeLimit& limit);

// Multiplies each term of fermionic degree m by (-1)^{m(m-1)/2}.
SuperPolynomial arrow(const SuperPolynomial& f);
// ±1 for the arrow involution in the m-fermion sector.
int arrow_sign(int m);

/// Simultaneous exchange x_i <-> x_{i+1}, θ_i <-> θ_{i+1} (i is 1-based,
/// 1 <= i < N), with the θ order renormalised.
SuperPolynomial apply_exchange(std::size_t i, const SuperPolynomial& f);
// General relabelling: variable k goes to perm[k] (0-based).
SuperPolynomial permute_variables(const SuperPolynomial& f, const std::vector<std::size_t>& perm);
bool is_symmetric(const SuperPolynomial& f);

Rational coefficient(const SuperPolynomial& f, const Monomial& mono);

// Embeds f into a ring with more variables, shifting indices by offset.
SuperPolynomial embed(const SuperPolynomial& f, std::size_t nvars, std::size_t offset = 0);

// Repeated product f^k.
SuperPolynomial power(const SuperPolynomial& f, unsigned k, std::optional<DegreeLimit> limit = std::nullopt);

std::ostream& operator<<(std::ostream& os, const SuperPolynomial& f);

} // namespace supersym

#endif
