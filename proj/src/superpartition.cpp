#include "supersym/superpartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace supersym {

SuperPartition::SuperPartition(std::vector<int> antisym, std::vector<int> sym)
    : antisym_(std::move(antisym)), sym_(std::move(sym))
{
    for (std::size_t i = 0; i < antisym_.size(); ++i) {
        if (antisym_[i] < 0) {
            throw std::invalid_argument("negative part in antisymmetric component");
        }
        if (i > 0 && antisym_[i - 1] <= antisym_[i]) {
            throw std::invalid_argument("antisymmetric component must be strictly decreasing");
        }
    }
    for (std::size_t i = 0; i < sym_.size(); ++i) {
        if (sym_[i] < 0) {
            throw std::invalid_argument("negative part in symmetric component");
        }
        if (i > 0 && sym_[i - 1] < sym_[i]) {
            throw std::invalid_argument("symmetric component must be weakly decreasing");
        }
    }
    while (!sym_.empty() && sym_.back() == 0) {
        sym_.pop_back();
    }
}

int SuperPartition::bosonic_degree() const
{
    return std::accumulate(antisym_.begin(), antisym_.end(), 0) + std::accumulate(sym_.begin(), sym_.end(), 0);
}

Composition SuperPartition::composition() const
{
    Composition c(antisym_);
    c.insert(c.end(), sym_.begin(), sym_.end());
    return c;
}

Partition SuperPartition::star() const
{
    Partition p = composition();
    std::sort(p.begin(), p.end(), std::greater<>());
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    return p;
}

std::size_t Diagram::circle_count() const
{
    return static_cast<std::size_t>(std::count(circled.begin(), circled.end(), true));
}

Partition star(const SuperPartition& sp)
{
    return sp.star();
}

Diagram circled(const SuperPartition& sp)
{
    // Sort the parts decreasingly; on ties the antisymmetric part goes first,
    // which puts the circle on the leftmost occurrence.
    std::vector<std::pair<int, bool>> parts;
    for (int a : sp.antisym()) {
        parts.emplace_back(a, true);
    }
    for (int s : sp.sym()) {
        parts.emplace_back(s, false);
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) {
            return x.first > y.first;
        }
        return x.second && !y.second;
    });
    Diagram d;
    for (const auto& [value, circle] : parts) {
        d.rows.push_back(value);
        d.circled.push_back(circle);
    }
    return d;
}

Partition shape(const Diagram& d)
{
    Partition sh(d.rows.size());
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        sh[i] = d.rows[i] + (d.circled[i] ? 1 : 0);
    }
    return sh;
}

SuperPartition conjugate(const SuperPartition& sp)
{
    const Diagram d = circled(sp);
    const Partition sh = shape(d);
    const int width = sh.empty() ? 0 : sh.front();
    // Transposed shape.
    std::vector<int> cols(static_cast<std::size_t>(width), 0);
    for (int len : sh) {
        for (int c = 0; c < len; ++c) {
            ++cols[static_cast<std::size_t>(c)];
        }
    }
    // A circle closing row i (with v boxes) sits in column v; after
    // transposition it closes row v.
    std::vector<bool> circ(cols.size(), false);
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        if (d.circled[i]) {
            circ[static_cast<std::size_t>(d.rows[i])] = true;
        }
    }
    std::vector<int> antisym;
    std::vector<int> sym;
    for (std::size_t r = 0; r < cols.size(); ++r) {
        if (circ[r]) {
            antisym.push_back(cols[r] - 1);
        } else {
            sym.push_back(cols[r]);
        }
    }
    return SuperPartition(std::move(antisym), std::move(sym));
}

bool dominance_le(const std::vector<int>& lo, const std::vector<int>& hi)
{
    const std::size_t len = std::max(lo.size(), hi.size());
    long a = 0;
    long b = 0;
    for (std::size_t k = 0; k < len; ++k) {
        a += k < lo.size() ? lo[k] : 0;
        b += k < hi.size() ? hi[k] : 0;
        if (a > b) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_bidegree(const SuperPartition& a, const SuperPartition& b)
{
    if (a.bosonic_degree() != b.bosonic_degree() || a.fermionic_degree() != b.fermionic_degree()) {
        throw std::domain_error("superpartitions " + to_string(a) + " and " + to_string(b) +
                                " have different bidegrees");
    }
}

} // namespace

bool bruhat_leq(const SuperPartition& a, const SuperPartition& b)
{
    require_same_bidegree(a, b);
    const Partition sa = a.star();
    const Partition sb = b.star();
    if (sa != sb) {
        return dominance_le(sa, sb);
    }
    return dominance_le(shape(circled(a)), shape(circled(b)));
}

bool dominance_leq(const SuperPartition& a, const SuperPartition& b)
{
    require_same_bidegree(a, b);
    const Partition sa = a.star();
    const Partition sb = b.star();
    if (sa != sb) {
        return dominance_le(sa, sb);
    }
    return dominance_le(a.composition(), b.composition());
}

Composition apply_move(Move kind, std::size_t i, std::size_t j, Composition c)
{
    if (i >= j || j >= c.size()) {
        throw std::out_of_range("apply_move needs i < j < length");
    }
    if (kind == Move::S) {
        if (c[i] - c[j] > 1) {
            --c[i];
            ++c[j];
        }
    } else if (c[i] - c[j] > 0) {
        std::swap(c[i], c[j]);
    }
    return c;
}

namespace {

// Strictly decreasing sequences of exactly `count` non-negative parts, each
// below `bound`, summing to `total`.
void distinct_parts(int total, int count, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (count == 0) {
        if (total == 0) {
            out.push_back(cur);
        }
        return;
    }
    // The smallest possible tail below `part` is (count-1) + ... + 0.
    const int tail_min = (count - 1) * (count - 2) / 2;
    for (int part = std::min(bound - 1, total); part >= count - 1; --part) {
        if (total - part < tail_min + 0) {
            continue;
        }
        // Largest possible tail below `part`: (part-1) + ... + (part-count+1).
        const long tail_max = static_cast<long>(count - 1) * (2L * part - count) / 2;
        if (total - part > tail_max) {
            break;
        }
        cur.push_back(part);
        distinct_parts(total - part, count - 1, part, cur, out);
        cur.pop_back();
    }
}

// Partitions of `total` with parts <= bound and at most max_parts parts.
void partitions(int total, int bound, int max_parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) {
        return;
    }
    for (int part = std::min(bound, total); part >= 1; --part) {
        cur.push_back(part);
        partitions(total - part, part, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<int> c_order_key(const SuperPartition& sp)
{
    const Diagram d = circled(sp);
    std::vector<int> key(d.rows.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = 2 * d.rows[i] + (d.circled[i] ? 1 : 0);
    }
    return key;
}

} // namespace

bool enumeration_before(const SuperPartition& a, const SuperPartition& b)
{
    return c_order_key(a) > c_order_key(b);
}

std::vector<SuperPartition> enumerate(int n, int m, std::optional<int> max_len)
{
    std::vector<SuperPartition> out;
    if (n < 0 || m < 0 || n < m * (m - 1) / 2) {
        return out;
    }
    const int len_cap = max_len.value_or(n + m);
    if (len_cap < m) {
        return out;
    }
    for (int fermionic_total = m * (m - 1) / 2; fermionic_total <= n; ++fermionic_total) {
        std::vector<std::vector<int>> antis;
        std::vector<int> cur;
        distinct_parts(fermionic_total, m, fermionic_total + 1, cur, antis);
        std::vector<std::vector<int>> syms;
        partitions(n - fermionic_total, n - fermionic_total, len_cap - m, cur, syms);
        for (const auto& a : antis) {
            for (const auto& s : syms) {
                out.emplace_back(a, s);
            }
        }
    }
    std::vector<std::pair<std::vector<int>, SuperPartition>> keyed;
    keyed.reserve(out.size());
    for (auto& sp : out) {
        keyed.emplace_back(c_order_key(sp), std::move(sp));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    out.clear();
    for (auto& [k, sp] : keyed) {
        out.push_back(std::move(sp));
    }
    return out;
}

int max_length(int n, int m)
{
    if (n < m * (m - 1) / 2) {
        return 0;
    }
    // (m-1,...,1,0; 1^(n - m(m-1)/2)) is the longest.
    return m + (n - m * (m - 1) / 2);
}

int max_fermionic_degree(int n)
{
    int m = 0;
    while ((m + 1) * m / 2 <= n) {
        ++m;
    }
    return m;
}

Report count_check(int n_max)
{
    Report report;
    report.check = "counting";
    report.params = {{"n_max", n_max}};
    if (n_max < 0) {
        report.fail("n_max must be non-negative");
        return report;
    }
    const int zmax = max_fermionic_degree(n_max);
    const std::size_t nz = static_cast<std::size_t>(zmax) + 1;
    const std::size_t ny = static_cast<std::size_t>(n_max) + 1;
    const std::size_t nq = static_cast<std::size_t>(n_max) + 1;
    // coeff[z][y][q], truncated in every variable.
    using Series = std::vector<std::vector<std::vector<long>>>;
    Series series(nz, std::vector<std::vector<long>>(ny, std::vector<long>(nq, 0)));
    series[0][0][0] = 1;

    // (-z;q)_∞ = Π_{k>=0} (1 + z q^k)
    for (int k = 0; k <= n_max; ++k) {
        Series next = series;
        for (std::size_t z = 0; z + 1 < nz; ++z) {
            for (std::size_t y = 0; y < ny; ++y) {
                for (std::size_t q = 0; q + static_cast<std::size_t>(k) < nq; ++q) {
                    next[z + 1][y][q + static_cast<std::size_t>(k)] += series[z][y][q];
                }
            }
        }
        series = std::move(next);
    }
    // 1/(yq;q)_∞ = Π_{k>=1} 1/(1 - y q^k); multiplying by 1/(1-u) is a running sum.
    for (int k = 1; k <= n_max; ++k) {
        const auto step = static_cast<std::size_t>(k);
        for (std::size_t z = 0; z < nz; ++z) {
            for (std::size_t y = 1; y < ny; ++y) {
                for (std::size_t q = step; q < nq; ++q) {
                    series[z][y][q] += series[z][y - 1][q - step];
                }
            }
        }
    }

    long compared = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= zmax; ++m) {
            long previous = 0;
            long cumulative = 0;
            for (int p = 0; p <= n; ++p) {
                const long bounded = static_cast<long>(enumerate(n, m, m + p).size());
                const long exact = bounded - previous;
                const long expected =
                    series[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
                cumulative += expected;
                ++compared;
                if (exact != expected || bounded != cumulative) {
                    std::ostringstream os;
                    os << "n=" << n << " m=" << m << " p=" << p << ": enumeration gives " << exact
                       << " with exactly " << p << " symmetric parts, series coefficient is " << expected;
                    report.fail(os.str());
                    return report;
                }
                previous = bounded;
            }
            if (previous != static_cast<long>(enumerate(n, m).size())) {
                report.fail("length-unbounded enumeration disagrees at n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
                return report;
            }
        }
    }
    report.notes["coefficients_compared"] = compared;
    return report;
}

Report order_check(int n_max)
{
    Report report;
    report.check = "orders";
    report.params = {{"n_max", n_max}};
    long pairs = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= max_fermionic_degree(n); ++m) {
            const auto block = enumerate(n, m);
            std::vector<SuperPartition> conj;
            conj.reserve(block.size());
            for (const auto& sp : block) {
                conj.push_back(conjugate(sp));
            }
            for (std::size_t i = 0; i < block.size(); ++i) {
                for (std::size_t j = 0; j < block.size(); ++j) {
                    ++pairs;
                    const bool below = bruhat_leq(block[i], block[j]);
                    if (below != bruhat_leq(conj[j], conj[i])) {
                        report.fail(to_string(block[i]) + " <= " + to_string(block[j]) +
                                    " is not reversed by conjugation");
                    }
                    if (below && !dominance_leq(block[i], block[j])) {
                        report.fail(to_string(block[i]) + " <= " + to_string(block[j]) +
                                    " in Bruhat order but not in dominance");
                    }
                }
            }
        }
    }
    report.notes["pairs_checked"] = pairs;
    return report;
}

std::string to_string(const SuperPartition& sp)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sp.antisym().size(); ++i) {
        os << (i ? "," : "") << sp.antisym()[i];
    }
    os << ';';
    for (std::size_t i = 0; i < sp.sym().size(); ++i) {
        os << (i ? "," : "") << sp.sym()[i];
    }
    os << ')';
    return os.str();
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<int> parse_parts(std::string_view side, std::string_view whole)
{
    std::vector<int> parts;
    side = trim(side);
    if (side.empty()) {
        return parts;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = side.find(',', start);
        const std::string_view token = trim(side.substr(start, comma == std::string_view::npos ? side.npos : comma - start));
        if (token.empty() || token.size() > 9 ||
            !std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw std::invalid_argument("bad part '" + std::string(token) + "' in superpartition '" +
                                        std::string(whole) + "'");
        }
        parts.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

} // namespace

SuperPartition parse_superpartition(std::string_view text)
{
    const std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
        throw std::invalid_argument("superpartition '" + std::string(text) + "' must be enclosed in parentheses");
    }
    const std::string_view inner = body.substr(1, body.size() - 2);
    const std::size_t semi = inner.find(';');
    if (semi != std::string_view::npos && inner.find(';', semi + 1) != std::string_view::npos) {
        throw std::invalid_argument("more than one ';' in superpartition '" + std::string(text) + "'");
    }
    std::vector<int> antisym;
    std::vector<int> sym;
    if (semi == std::string_view::npos) {
        sym = parse_parts(inner, text);
    } else {
        antisym = parse_parts(inner.substr(0, semi), text);
        sym = parse_parts(inner.substr(semi + 1), text);
    }
    try {
        return SuperPartition(std::move(antisym), std::move(sym));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const SuperPartition& sp)
{
    return os << to_string(sp);
}

} // namespace supersym
