#ifndef SUPERSYM_SUPERPARTITION_HPP
#define SUPERSYM_SUPERPARTITION_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supersym/report.hpp"

namespace supersym {

// Weakly decreasing, no zero parts.
using Partition = std::vector<int>;
// Arbitrary non-negative entries.
using Composition = std::vector<int>;

/// A superpartition (Λ^a; Λ^s).
///
/// The antisymmetric part is strictly decreasing and may end in 0; the
/// symmetric part is weakly decreasing and is stored without trailing zeros,
/// so two superpartitions are equal iff their stored parts are equal.
class SuperPartition {
public:
    SuperPartition() = default;
    SuperPartition(std::vector<int> antisym, std::vector<int> sym);

    const std::vector<int>& antisym() const { return antisym_; }
    const std::vector<int>& sym() const { return sym_; }

    int fermionic_degree() const { return static_cast<int>(antisym_.size()); }
    int bosonic_degree() const;
    // ℓ(Λ): every antisymmetric part counts, including a zero.
    int length() const { return static_cast<int>(antisym_.size() + sym_.size()); }

    // Λ^c: the parts read left to right with the semicolon removed.
    Composition composition() const;
    // Λ^*: all parts sorted decreasingly, zeros dropped.
    Partition star() const;

    friend auto operator<=>(const SuperPartition&, const SuperPartition&) = default;
    friend bool operator==(const SuperPartition&, const SuperPartition&) = default;

private:
    std::vector<int> antisym_;
    std::vector<int> sym_;
};

/// Circled Ferrers diagram D[Λ]. Row i holds rows[i] boxes and, when
/// circled[i] is set, a trailing circle. Rows follow C[Λ]: the circle on a
/// repeated value goes on its leftmost (topmost) occurrence.
struct Diagram {
    std::vector<int> rows;
    std::vector<bool> circled;

    std::size_t circle_count() const;
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

Partition star(const SuperPartition& sp);
Diagram circled(const SuperPartition& sp);
// Row lengths of the diagram with each circle counted as a cell.
Partition shape(const Diagram& d);
SuperPartition conjugate(const SuperPartition& sp);

// Dominance on partitions (or compositions) of equal size, shorter inputs
// padded with zeros: true iff lo_1 + ... + lo_k <= hi_1 + ... + hi_k for all k.
bool dominance_le(const std::vector<int>& lo, const std::vector<int>& hi);

/// Bruhat order on SPar(n|m), decided through Λ^* and sh(D[Λ]).
/// Throws std::domain_error when the bidegrees differ.
bool bruhat_leq(const SuperPartition& a, const SuperPartition& b);
/// The coarser ≤_D order (partial sums of the composition form once the
/// reordered partitions agree). Throws std::domain_error on mismatched bidegree.
bool dominance_leq(const SuperPartition& a, const SuperPartition& b);

enum class Move { S, T };
// S_ij moves one unit from i to j when c_i - c_j > 1; T_ij swaps when c_i > c_j.
// Otherwise the composition is returned unchanged. Indices are 0-based, i < j.
Composition apply_move(Move kind, std::size_t i, std::size_t j, Composition c);

/// All Λ ⊢ (n|m) with ℓ(Λ) <= max_len, sorted lexicographically decreasing on
/// C[Λ], where a circled entry b ranks strictly between b and b+1.
std::vector<SuperPartition> enumerate(int n, int m, std::optional<int> max_len = std::nullopt);

// Longest ℓ(Λ) over SPar(n|m); 0 when the set is empty.
int max_length(int n, int m);
// Largest m with SPar(n|m) non-empty.
int max_fermionic_degree(int n);

// Strict "comes before" in the enumeration order.
bool enumeration_before(const SuperPartition& a, const SuperPartition& b);

/// Compares exact-length counts from the enumerator with the coefficients of
/// (-z;q)_∞ / (yq;q)_∞ for all n <= n_max.
Report count_check(int n_max);

/// On every SPar(n|m) with n <= n_max: Ω <= Λ in Bruhat order iff Λ' <= Ω',
/// and Bruhat comparability implies the same ≤_D relation.
Report order_check(int n_max);

// Text form "(a1,...,am;s1,...,sk)"; either side may be empty.
std::string to_string(const SuperPartition& sp);
// Accepts the text form (a missing ';' means m = 0). Throws
// std::invalid_argument naming the offending token.
SuperPartition parse_superpartition(std::string_view text);
std::ostream& operator<<(std::ostream& os, const SuperPartition& sp);

} // namespace supersym

#endif
