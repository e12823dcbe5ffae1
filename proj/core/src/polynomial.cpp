#include "dcvopt/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dcvopt {

namespace {

Rational power(const Rational& base, unsigned exp)
{
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

std::string var_name(std::size_t in_dim, std::size_t var)
{
    return in_dim == 1 ? std::string("x") : "x" + std::to_string(var);
}

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t in_dim) : s_(text), in_dim_(in_dim) {}

    Polynomial parse()
    {
        std::vector<Monomial> terms;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Monomial m = parse_term();
            m.coeff *= sign;
            terms.push_back(std::move(m));
            first = false;
            skip_ws();
        }
        return Polynomial(in_dim_, std::move(terms));
    }

private:
    Monomial parse_term()
    {
        Monomial m{std::vector<unsigned>(in_dim_, 0), Rational(1)};
        bool any = false;
        while (!at_end()) {
            skip_ws();
            if (at_end())
                break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                m.coeff *= parse_number();
            } else if (c == 'x') {
                ++pos_;
                std::size_t var = 0;
                if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                    var = parse_uint();
                else if (in_dim_ != 1)
                    fail("bare 'x' is only allowed for one-dimensional inputs");
                if (var >= in_dim_)
                    fail("variable index out of range");
                unsigned exp = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    exp = static_cast<unsigned>(parse_uint());
                }
                m.exponents[var] += exp;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            if (at_end() || peek() == '+' || peek() == '-')
                break;
        }
        if (!any)
            fail("empty term");
        return m;
    }

    Rational parse_number()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
            ++pos_;
        if (!at_end() && peek() == '.')
            fail("decimal literals are not accepted; use p/q");
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::size_t parse_uint()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial '" + std::string(s_) + "': " + what);
    }

    std::string_view s_;
    std::size_t in_dim_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial::Polynomial(std::size_t in_dim, std::vector<Monomial> terms) : in_dim_(in_dim), terms_(std::move(terms))
{
    for (const auto& t : terms_)
        if (t.exponents.size() != in_dim_)
            throw DimensionMismatch("monomial exponent tuple length differs from input dimension");
    canonicalize();
}

Polynomial Polynomial::constant(std::size_t in_dim, const Rational& c)
{
    return Polynomial(in_dim, {Monomial{std::vector<unsigned>(in_dim, 0), c}});
}

Polynomial Polynomial::affine(const RationalVector& coeffs, const Rational& c)
{
    const std::size_t n = coeffs.dim();
    std::vector<Monomial> terms{Monomial{std::vector<unsigned>(n, 0), c}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        terms.push_back(Monomial{std::move(e), coeffs[i]});
    }
    return Polynomial(n, std::move(terms));
}

void Polynomial::canonicalize()
{
    std::map<std::vector<unsigned>, Rational, std::greater<>> merged;
    for (auto& t : terms_)
        merged[t.exponents] += t.coeff;
    terms_.clear();
    for (auto& [exps, c] : merged)
        if (c != 0)
            terms_.push_back(Monomial{exps, c});
}

Rational Polynomial::operator()(const RationalVector& x) const
{
    if (x.dim() != in_dim_)
        throw DimensionMismatch("polynomial evaluated at point of wrong dimension");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < in_dim_; ++i)
            if (t.exponents[i])
                v *= power(x[i], t.exponents[i]);
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        if (t.exponents[var] == 0)
            continue;
        Monomial d = t;
        d.coeff *= t.exponents[var];
        d.exponents[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(in_dim_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.in_dim_ != in_dim_)
        throw DimensionMismatch("adding polynomials over different input dimensions");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    canonicalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    for (auto& t : terms_)
        t.coeff *= s;
    canonicalize();
    return *this;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        const bool negative = t.coeff < 0;
        const Rational mag = abs(t.coeff);
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string factors;
        for (std::size_t i = 0; i < in_dim_; ++i) {
            if (!t.exponents[i])
                continue;
            if (!factors.empty())
                factors += "*";
            factors += var_name(in_dim_, i);
            if (t.exponents[i] > 1)
                factors += "^" + std::to_string(t.exponents[i]);
        }
        if (factors.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += to_string(mag) + "*" + factors;
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t in_dim)
{
    return PolyParser(text, in_dim).parse();
}

} // namespace dcvopt
