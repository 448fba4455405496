#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "supersym/transform.hpp"

namespace supersym {

const char* to_string(DeterminantFormula which)
{
    switch (which) {
    case DeterminantFormula::e_from_h:
        return "e_n from h";
    case DeterminantFormula::et_from_h:
        return "e~_n from h~, h";
    case DeterminantFormula::p_from_e:
        return "p_n from e";
    case DeterminantFormula::nfact_e_from_p:
        return "n! e_n from p";
    case DeterminantFormula::pt_from_e:
        return "p~_n from e~, e";
    case DeterminantFormula::nfact_et_from_p:
        return "n! e~_n from p~, p";
    }
    return "?";
}

namespace {

class Expansion {
public:
    explicit Expansion(const std::vector<std::vector<SuperPolynomial>>& a) : a_(a) {}

    // det of rows [row, size) restricted to the columns in mask.
    SuperPolynomial minor(std::size_t row, std::uint32_t mask)
    {
        const std::size_t nvars = a_[0][0].nvars();
        if (mask == 0) {
            return SuperPolynomial::constant(nvars, 1);
        }
        if (row > 0) {
            if (const auto it = memo_.find(mask); it != memo_.end()) {
                return it->second;
            }
        }
        SuperPolynomial out(nvars);
        int position = 0;
        for (std::size_t c = 0; c < a_.size(); ++c) {
            if (((mask >> c) & 1u) == 0) {
                continue;
            }
            const SuperPolynomial& entry = a_[row][c];
            if (!entry.is_zero()) {
                SuperPolynomial term = entry * minor(row + 1, mask & ~(1u << c));
                if (position % 2 == 0) {
                    out += term;
                } else {
                    out -= term;
                }
            }
            ++position;
        }
        if (row > 0) {
            memo_.emplace(mask, out);
        }
        return out;
    }

private:
    const std::vector<std::vector<SuperPolynomial>>& a_;
    std::unordered_map<std::uint32_t, SuperPolynomial> memo_;
};

} // namespace

SuperPolynomial determinant(const std::vector<std::vector<SuperPolynomial>>& matrix)
{
    if (matrix.empty()) {
        throw std::invalid_argument("determinant of an empty matrix");
    }
    const std::size_t size = matrix.size();
    if (size > 31) {
        throw std::invalid_argument("determinant: matrix too large");
    }
    for (std::size_t r = 0; r < size; ++r) {
        if (matrix[r].size() != size) {
            throw std::invalid_argument("determinant: matrix is not square");
        }
        if (r == 0) {
            continue;
        }
        for (const auto& entry : matrix[r]) {
            for (const auto& [mono, c] : entry.terms()) {
                if (mono.fermionic_degree() != 0) {
                    throw std::invalid_argument("determinant: only the first row may contain fermionic entries");
                }
            }
        }
    }
    Expansion expansion(matrix);
    return expansion.minor(0, static_cast<std::uint32_t>((1ull << size) - 1));
}

namespace {

// The generators as seen through ω̂ when requested.
struct Generators {
    std::size_t nvars;
    bool omega;

    SuperPolynomial e(int k, bool ferm) const
    {
        return omega ? complete(k, ferm, nvars) : elementary(k, ferm, nvars);
    }
    SuperPolynomial h(int k, bool ferm) const
    {
        return omega ? elementary(k, ferm, nvars) : complete(k, ferm, nvars);
    }
    SuperPolynomial p(int k, bool ferm) const
    {
        SuperPolynomial out = powersum(k, ferm, nvars);
        // ω̂(p_k) = (-1)^{k-1} p_k, ω̂(p̃_k) = (-1)^k p̃_k
        const int exponent = ferm ? k : k - 1;
        if (omega && exponent % 2 != 0) {
            out *= Rational(-1);
        }
        return out;
    }
    SuperPolynomial constant(long c) const { return SuperPolynomial::constant(nvars, c); }
};

} // namespace

Report determinant_formula(int n, DeterminantFormula which, bool omega_image, std::optional<std::size_t> nvars)
{
    Report report;
    report.check = "determinants";
    const std::size_t N = nvars.value_or(8);
    report.params = {{"n", n}, {"formula", to_string(which)}, {"omega_image", omega_image}, {"nvars", N}};
    const bool square_n = which == DeterminantFormula::e_from_h || which == DeterminantFormula::p_from_e ||
                          which == DeterminantFormula::nfact_e_from_p;
    if (n < (square_n ? 1 : 0)) {
        report.fail("index out of range for this formula");
        return report;
    }
    const Generators g{N, omega_image};
    const std::size_t size = static_cast<std::size_t>(n) + (square_n ? 0 : 1);
    std::vector<std::vector<SuperPolynomial>> mat(size, std::vector<SuperPolynomial>(size, SuperPolynomial(N)));
    SuperPolynomial lhs(N);
    Rational scale(1);

    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            const int ci = static_cast<int>(c);
            const int ri = static_cast<int>(r);
            // Subdiagonal index of entry (r, c) for r >= 1.
            const int k = ci - ri + 1;
            SuperPolynomial& entry = mat[r][c];
            switch (which) {
            case DeterminantFormula::e_from_h:
                if (r == 0) {
                    entry = g.h(ci + 1, false);
                } else if (k >= 0) {
                    entry = g.h(k, false);
                }
                break;
            case DeterminantFormula::et_from_h:
                if (r == 0) {
                    entry = g.h(ci, true);
                } else if (k >= 0) {
                    entry = g.h(k, false) * Rational(n - ri + 1 + k);
                }
                break;
            case DeterminantFormula::p_from_e:
                if (r == 0) {
                    entry = g.e(ci + 1, false) * Rational(ci + 1);
                } else if (k >= 0) {
                    entry = g.e(k, false);
                }
                break;
            case DeterminantFormula::nfact_e_from_p:
                if (r == 0) {
                    entry = g.p(ci + 1, false);
                } else if (k == 0) {
                    entry = g.constant(ri);
                } else if (k > 0) {
                    entry = g.p(k, false);
                }
                break;
            case DeterminantFormula::pt_from_e:
                if (r == 0) {
                    entry = g.e(ci, true);
                } else if (k >= 0) {
                    entry = g.e(k, false);
                }
                break;
            case DeterminantFormula::nfact_et_from_p:
                if (r == 0) {
                    entry = g.p(ci, true);
                } else if (k == 0) {
                    entry = g.constant(n - ri + 1);
                } else if (k > 0) {
                    entry = g.p(k, false);
                }
                break;
            }
        }
    }

    switch (which) {
    case DeterminantFormula::e_from_h:
        lhs = g.e(n, false);
        break;
    case DeterminantFormula::et_from_h:
        lhs = g.e(n, true);
        scale = Rational(1) / factorial(static_cast<unsigned>(n));
        break;
    case DeterminantFormula::p_from_e:
        lhs = g.p(n, false);
        break;
    case DeterminantFormula::nfact_e_from_p:
        lhs = g.e(n, false) * factorial(static_cast<unsigned>(n));
        break;
    case DeterminantFormula::pt_from_e:
        lhs = g.p(n, true);
        break;
    case DeterminantFormula::nfact_et_from_p:
        lhs = g.e(n, true) * factorial(static_cast<unsigned>(n));
        break;
    }

    const SuperPolynomial rhs = determinant(mat) * scale;
    if (!(lhs == rhs)) {
        report.fail(std::string(to_string(which)) + (omega_image ? " (omega image)" : "") +
                    " fails at n=" + std::to_string(n));
    }
    return report;
}

Report determinant_formulas(int n_max, std::optional<std::size_t> nvars)
{
    std::vector<Report> parts;
    for (const bool omega_image : {false, true}) {
        for (const DeterminantFormula which : kAllDeterminants) {
            const bool square_n = which == DeterminantFormula::e_from_h || which == DeterminantFormula::p_from_e ||
                                  which == DeterminantFormula::nfact_e_from_p;
            for (int n = square_n ? 1 : 0; n <= n_max; ++n) {
                parts.push_back(determinant_formula(n, which, omega_image, nvars));
            }
        }
    }
    Report out = combine("determinants", {{"n_max", n_max}, {"nvars", nvars.value_or(8)}}, parts);
    out.notes["formulas_checked"] = parts.size();
    return out;
}

} // namespace supersym
