#include "qgrowth/eta.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "qgrowth/arith.hpp"
#include "qgrowth/errors.hpp"

namespace qgrowth {

namespace {

std::int64_t ceil_div_pos(std::int64_t a, std::int64_t b) { return a <= 0 ? -((-a) / b) : (a + b - 1) / b; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<EtaFactor> factors()
    {
        std::vector<EtaFactor> out;
        skip();
        if (at_end())
            throw invalid_argument("empty eta-quotient expression");
        if (peek() == '1') {
            ++pos_;
            skip();
            if (at_end())
                return out;
            --pos_;
        }
        out.push_back(factor());
        skip();
        while (!at_end()) {
            expect('*');
            out.push_back(factor());
            skip();
        }
        return out;
    }

private:
    EtaFactor factor()
    {
        skip();
        for (char c : std::string_view("eta")) {
            if (at_end() || std::tolower(static_cast<unsigned char>(text_[pos_])) != c)
                fail("expected 'eta'");
            ++pos_;
        }
        expect('(');
        const std::int64_t delta = integer();
        skip();
        if (!at_end() && (peek() == 'z' || peek() == 'Z'))
            ++pos_;
        expect(')');
        std::int64_t exponent = 1;
        skip();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip();
            bool paren = !at_end() && peek() == '(';
            if (paren)
                ++pos_;
            exponent = integer();
            if (paren)
                expect(')');
        }
        return {delta, exponent};
    }

    std::int64_t integer()
    {
        skip();
        std::size_t start = pos_;
        if (!at_end() && (peek() == '-' || peek() == '+'))
            ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])))
            fail("expected an integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c)
    {
        skip();
        if (at_end() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw invalid_argument("eta-quotient '" + std::string(text_) + "': " + what + " at position " +
                               std::to_string(pos_));
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors, std::optional<std::int64_t> level)
{
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.delta < 1)
            throw invalid_argument("eta factor delta must be positive, got " + std::to_string(f.delta));
        merged[f.delta] += f.exponent;
    }
    std::int64_t l = 1;
    for (const auto& [delta, r] : merged) {
        if (r != 0) {
            factors_.push_back({delta, r});
            l = std::lcm(l, delta);
        }
    }
    level_ = level.value_or(l);
    if (level_ < 1)
        throw invalid_argument("level must be positive");
    for (const auto& f : factors_)
        if (level_ % f.delta != 0)
            throw invalid_argument("delta " + std::to_string(f.delta) + " does not divide level " +
                                   std::to_string(level_));
}

EtaQuotient EtaQuotient::parse(std::string_view text, std::optional<std::int64_t> level)
{
    return EtaQuotient(Parser(text).factors(), level);
}

std::int64_t EtaQuotient::weight_times_2() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s += f.exponent;
    return s;
}

std::int64_t EtaQuotient::order_at_infinity_24() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s += f.delta * f.exponent;
    return s;
}

std::string EtaQuotient::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty())
            out += " * ";
        out += "eta(" + std::to_string(f.delta) + ")^" + std::to_string(f.exponent);
    }
    return out;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b)
{
    std::vector<EtaFactor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return EtaQuotient(std::move(all), std::lcm(a.level_, b.level_));
}

QSeries euler_product(std::int64_t terms, const CoefficientRing& ring)
{
    if (terms < 1)
        throw invalid_argument("euler_product needs at least one term");
    std::vector<Integer> c(static_cast<std::size_t>(terms));
    // Exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ... carry sign (-1)^k.
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t e1 = k * (3 * k - 1) / 2;
        const std::int64_t e2 = k * (3 * k + 1) / 2;
        if (e1 >= terms)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] = sign;
        if (k > 0 && e2 < terms)
            c[static_cast<std::size_t>(e2)] = sign;
    }
    return QSeries(1, 0, std::move(c), ring);
}

QSeries eta_expansion(std::int64_t prec24, const CoefficientRing& ring)
{
    if (prec24 < 2)
        throw invalid_argument("eta_expansion needs prec >= 2 (the leading term is q^(1/24))");
    return eta_quotient_expansion(EtaQuotient({{1, 1}}), prec24, ring);
}

QSeries eta_quotient_expansion(const EtaQuotient& eq, std::int64_t prec24, const CoefficientRing& ring)
{
    const std::int64_t offset = eq.order_at_infinity_24();
    if (prec24 <= offset)
        throw precision_error("precision " + std::to_string(prec24) + "/24 does not reach the leading exponent " +
                              std::to_string(offset) + "/24 of " + eq.to_string());
    // Integral exponents j with offset + 24 j < prec24.
    const std::int64_t terms = ceil_div_pos(prec24 - offset, 24);
    QSeries product = QSeries::monomial(1, 0, Integer(1), terms, ring);
    for (const auto& f : eq.factors()) {
        const std::int64_t inner = ceil_div_pos(terms, f.delta);
        QSeries power = pow(euler_product(inner, ring), f.exponent);
        // q -> q^delta
        std::vector<Integer> spread(static_cast<std::size_t>(terms));
        for (std::int64_t n = 0; n < inner; ++n)
            if (n * f.delta < terms)
                spread[static_cast<std::size_t>(n * f.delta)] = power.coefficient_at(n);
        product = mul(product, QSeries(1, 0, std::move(spread), ring));
    }
    return product.rescaled(24).shifted(offset).truncated(prec24);
}

QSeries eta_quotient_integral(const EtaQuotient& eq, std::int64_t prec, const CoefficientRing& ring)
{
    return eta_quotient_expansion(eq, 24 * prec, ring).on_grain(1);
}

ModularityVerdict modularity_check(const EtaQuotient& eq)
{
    ModularityVerdict v;
    v.weight_times_2 = eq.weight_times_2();
    v.weight_is_integral = v.weight_times_2 % 2 == 0;
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    Integer num(1), den(1);
    for (const auto& f : eq.factors()) {
        sum_a += f.delta * f.exponent;
        sum_b += (eq.level() / f.delta) * f.exponent;
        if (f.exponent > 0)
            num *= ipow(f.delta, static_cast<unsigned long>(f.exponent));
        else
            den *= ipow(f.delta, static_cast<unsigned long>(-f.exponent));
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    v.s_num = num / g;
    v.s_den = den / g;
    v.cond_A = sum_a % 24 == 0;
    v.cond_B = sum_b % 24 == 0;
    v.character_top = v.s_num * v.s_den;
    if (v.weight_is_integral) {
        const std::int64_t k = v.weight_times_2 / 2;
        if (k % 2 != 0)
            v.character_top = -v.character_top;
    }
    return v;
}

EtaQuotient f_p_quotient(std::int64_t p)
{
    if (p % 2 == 0 || !is_prime(p))
        throw invalid_argument("F_p needs an odd prime, got " + std::to_string(p));
    if (p == 3)
        return EtaQuotient({{1, 27}, {9, -3}}, 9);
    return EtaQuotient({{1, p * p}, {p * p, -1}}, p * p);
}

} // namespace qgrowth
