#include "dcvopt/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dcvopt {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
        throw Error("malformed rational literal '" + std::string(s) + "' (expected integer or p/q)");
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw Error("malformed rational literal '" + std::string(s) + "' (signed denominator)");

    if (num[0] == '+')
        num.remove_prefix(1);
    Integer p{std::string(num)};
    Integer q(1);
    if (!den.empty()) {
        q = Integer(std::string(den));
        if (q == 0)
            throw Error("rational literal '" + std::string(s) + "' has zero denominator");
    }
    return Rational(p, q);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

RationalVector RationalVector::from_ints(std::initializer_list<long> values)
{
    RationalVector v(values.size());
    std::size_t i = 0;
    for (long x : values)
        v[i++] = Rational(x);
    return v;
}

RationalVector RationalVector::constant(std::size_t dim, const Rational& value)
{
    return RationalVector(std::vector<Rational>(dim, value));
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t index)
{
    RationalVector v(dim);
    v[index] = 1;
    return v;
}

bool RationalVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& other)
{
    require_same_dim(*this, other, "vector addition");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other)
{
    require_same_dim(*this, other, "vector subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale)
{
    for (auto& c : coords_)
        c *= scale;
    return *this;
}

RationalVector RationalVector::operator-() const
{
    RationalVector r(*this);
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b)
{
    if (a.dim() != b.dim())
        return a.dim() <=> b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i])
            return std::strong_ordering::less;
        if (b[i] < a[i])
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string RationalVector::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(coords_[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v)
{
    return os << v.str();
}

void require_same_dim(const RationalVector& a, const RationalVector& b, std::string_view what)
{
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw DimensionMismatch(msg.str());
    }
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    require_same_dim(a, b, "dot product");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        sum += a[i] * b[i];
    return sum;
}

Rational max_norm(const RationalVector& v)
{
    Rational m = 0;
    for (const auto& c : v)
        m = std::max(m, Rational(abs(c)));
    return m;
}

RationalVector primitive_integer(const RationalVector& v)
{
    if (v.is_zero())
        return v;
    Integer den_lcm = 1;
    for (const auto& c : v) {
        const Integer d = denominator(c);
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Integer> ints;
    ints.reserve(v.dim());
    Integer g = 0;
    for (const auto& c : v) {
        Integer n = numerator(c) * (den_lcm / denominator(c));
        g = gcd(g, n);
        ints.push_back(std::move(n));
    }
    g = abs(g);
    RationalVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out[i] = Rational(ints[i] / g);
    return out;
}

RationalVector parse_vector(std::string_view text)
{
    std::vector<Rational> coords;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            coords.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else if (c == '(' || c == ')')
            flush();
        else
            token += c;
    }
    flush();
    if (coords.empty())
        throw Error("empty vector literal");
    return RationalVector(std::move(coords));
}

} // namespace dcvopt
