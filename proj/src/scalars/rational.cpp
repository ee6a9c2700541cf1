#include "dybx/rational.hpp"

#include "dybx/errors.hpp"

#include <cctype>

namespace dybx {

Rational parseRational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty rational");
    auto slash = s.find('/');
    auto validInt = [](const std::string& t) {
        std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!validInt(num) || !validInt(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(num, 10), d(den, 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string toString(const Rational& q)
{
    return q.get_str();
}

Rational factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

} // namespace dybx
