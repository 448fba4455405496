#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "supersym/transform.hpp"

namespace supersym {

namespace {

// Fills the rows of D[Γ] top to bottom. Each target row takes at most one
// row from each factor; uncircled source rows of equal length are
// interchangeable and tracked by multiplicity, circled ones by label.
class FillingCounter {
public:
    FillingCounter(const SuperPartition& a, const SuperPartition& b, const SuperPartition& g)
        : a_fermions_(a.antisym()), b_fermions_(b.antisym()), target_(circled(g))
    {
        const int n = g.bosonic_degree();
        a_counts_.assign(static_cast<std::size_t>(n) + 1, 0);
        b_counts_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const int v : a.sym()) {
            ++a_counts_[static_cast<std::size_t>(v)];
        }
        for (const int v : b.sym()) {
            ++b_counts_[static_cast<std::size_t>(v)];
        }
        a_open_ = mask_of(a_fermions_.size());
        b_open_ = mask_of(b_fermions_.size());
    }

    long long count() { return solve(0); }

private:
    static std::uint32_t mask_of(std::size_t k) { return k == 0 ? 0u : static_cast<std::uint32_t>((1ull << k) - 1); }

    // One side of a target row: nothing, an uncircled row of some length, or
    // the circled row with a given label.
    struct Piece {
        int boxes = 0;
        int uncircled = -1;
        int label = -1;
    };

    std::vector<Piece> pieces(const std::vector<int>& counts, const std::vector<int>& fermions,
                              std::uint32_t open) const
    {
        std::vector<Piece> out{Piece{}};
        for (std::size_t v = 1; v < counts.size(); ++v) {
            if (counts[v] > 0) {
                out.push_back(Piece{static_cast<int>(v), static_cast<int>(v), -1});
            }
        }
        for (std::size_t i = 0; i < fermions.size(); ++i) {
            if ((open >> i) & 1u) {
                out.push_back(Piece{fermions[i], -1, static_cast<int>(i)});
            }
        }
        return out;
    }

    // Number of circle labels already placed that exceed `label`.
    int inversions(int label) const
    {
        const std::uint32_t placed_a = mask_of(a_fermions_.size()) & ~a_open_;
        const std::uint32_t placed_b = mask_of(b_fermions_.size()) & ~b_open_;
        const std::uint64_t placed = placed_a | (static_cast<std::uint64_t>(placed_b) << a_fermions_.size());
        return std::popcount(placed >> (label + 1));
    }

    long long solve(std::size_t row)
    {
        if (row == target_.rows.size()) {
            return a_open_ == 0 && b_open_ == 0 ? 1 : 0;
        }
        std::vector<int> key{static_cast<int>(row), static_cast<int>(a_open_), static_cast<int>(b_open_)};
        key.insert(key.end(), a_counts_.begin(), a_counts_.end());
        key.insert(key.end(), b_counts_.begin(), b_counts_.end());
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        const int boxes = target_.rows[row];
        const bool wants_circle = target_.circled[row];
        long long total = 0;
        for (const Piece& pa : pieces(a_counts_, a_fermions_, a_open_)) {
            for (const Piece& pb : pieces(b_counts_, b_fermions_, b_open_)) {
                const bool empty = pa.uncircled < 0 && pa.label < 0 && pb.uncircled < 0 && pb.label < 0;
                const int circles = (pa.label >= 0) + (pb.label >= 0);
                if (empty || pa.boxes + pb.boxes != boxes || circles != (wants_circle ? 1 : 0)) {
                    continue;
                }
                int sign = 1;
                if (pa.label >= 0) {
                    sign = inversions(pa.label) % 2 == 0 ? 1 : -1;
                }
                if (pb.label >= 0) {
                    sign = inversions(static_cast<int>(a_fermions_.size()) + pb.label) % 2 == 0 ? 1 : -1;
                }
                take(pa, a_counts_, a_open_, -1);
                take(pb, b_counts_, b_open_, -1);
                total += sign * solve(row + 1);
                take(pa, a_counts_, a_open_, +1);
                take(pb, b_counts_, b_open_, +1);
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    static void take(const Piece& p, std::vector<int>& counts, std::uint32_t& open, int delta)
    {
        if (p.uncircled >= 0) {
            counts[static_cast<std::size_t>(p.uncircled)] += delta;
        }
        if (p.label >= 0) {
            open ^= 1u << p.label;
        }
    }

    std::vector<int> a_fermions_;
    std::vector<int> b_fermions_;
    Diagram target_;
    std::vector<int> a_counts_;
    std::vector<int> b_counts_;
    std::uint32_t a_open_ = 0;
    std::uint32_t b_open_ = 0;
    std::map<std::vector<int>, long long> memo_;
};

} // namespace

Rational mono_product_fillings(const SuperPartition& a, const SuperPartition& b, const SuperPartition& g)
{
    if (a.bosonic_degree() + b.bosonic_degree() != g.bosonic_degree() ||
        a.fermionic_degree() + b.fermionic_degree() != g.fermionic_degree()) {
        return Rational{};
    }
    if (g.length() < std::max(a.length(), b.length()) || g.length() > a.length() + b.length()) {
        return Rational{};
    }
    FillingCounter counter(a, b, g);
    return Rational(static_cast<long>(counter.count()));
}

} // namespace supersym
