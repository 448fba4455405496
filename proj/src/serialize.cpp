#include "supersym/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace supersym {

nlohmann::json to_json(const SuperPartition& sp)
{
    return {{"a", sp.antisym()}, {"s", sp.sym()}};
}

SuperPartition superpartition_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("s")) {
        throw std::invalid_argument("superpartition JSON needs keys \"a\" and \"s\"");
    }
    return SuperPartition(j.at("a").get<std::vector<int>>(), j.at("s").get<std::vector<int>>());
}

nlohmann::json to_json(const BasisExpansion& x)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [sp, c] : x.ordered()) {
        terms.push_back({{"spar", to_json(sp)}, {"coeff", c.to_string()}});
    }
    return {{"basis", to_string(x.basis)}, {"n", x.n}, {"m", x.m}, {"terms", std::move(terms)}};
}

BasisExpansion expansion_from_json(const nlohmann::json& j)
{
    BasisExpansion x{parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>(), j.at("m").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        x.add(superpartition_from_json(t.at("spar")), Rational::parse(t.at("coeff").get<std::string>()));
    }
    return x;
}

std::string to_text(const BasisExpansion& x)
{
    const auto rows = x.ordered();
    std::size_t width = 0;
    for (const auto& [sp, c] : rows) {
        width = std::max(width, to_string(sp).size());
    }
    std::ostringstream os;
    for (const auto& [sp, c] : rows) {
        const std::string label = to_string(sp);
        os << label << std::string(width - label.size() + 2, ' ') << c.to_string() << '\n';
    }
    return os.str();
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    std::vector<BasisExpansion> parse()
    {
        std::vector<BasisExpansion> groups;
        skip_space();
        if (at_end()) {
            throw std::invalid_argument("empty expression");
        }
        bool first = true;
        while (!at_end()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? Rational(-1) : Rational(1);
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            const Rational coeff = sign * coefficient();
            const BasisName basis = basis_letter();
            const SuperPartition sp = superpartition();
            add(groups, basis, sp, coeff);
            skip_space();
        }
        return groups;
    }

private:
    static void add(std::vector<BasisExpansion>& groups, BasisName basis, const SuperPartition& sp,
                    const Rational& c)
    {
        for (auto& g : groups) {
            if (g.n == sp.bosonic_degree() && g.m == sp.fermionic_degree()) {
                g = g + c * basis_element(basis, sp);
                return;
            }
        }
        groups.push_back(c * basis_element(basis, sp));
    }

    Rational coefficient()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            return Rational(1);
        }
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
            ++pos_;
        }
        const std::string_view token = text_.substr(start, pos_ - start);
        Rational c;
        try {
            c = Rational::parse(token);
        } catch (const std::exception&) {
            pos_ = start;
            fail("bad coefficient '" + std::string(token) + "'");
        }
        skip_space();
        if (peek() != '*') {
            fail("expected '*' after coefficient");
        }
        ++pos_;
        skip_space();
        return c;
    }

    BasisName basis_letter()
    {
        const char c = peek();
        if (c != 'm' && c != 'e' && c != 'h' && c != 'p') {
            fail("expected one of m, e, h, p");
        }
        ++pos_;
        skip_space();
        return parse_basis(std::string(1, c));
    }

    SuperPartition superpartition()
    {
        if (peek() != '(') {
            fail("expected '('");
        }
        const std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) {
            fail("missing ')'");
        }
        const std::string_view body = text_.substr(pos_, close - pos_ + 1);
        pos_ = close + 1;
        return parse_superpartition(body);
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::string near = at_end() ? "end of input" : "'" + std::string(text_.substr(pos_, 8)) + "'";
        throw std::invalid_argument(what + " at " + near + " in expression '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<BasisExpansion> parse_expression(std::string_view text)
{
    return ExpressionParser(text).parse();
}

} // namespace supersym
