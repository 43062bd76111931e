#include "secgame/rational.hpp"

#include <cctype>

namespace secgame {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    const std::string original(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw InputError("malformed numeral \"" + original + "\"");
        const Integer den{std::string(q)};
        if (den == 0)
            throw InputError("zero denominator in numeral \"" + original + "\"");
        const Integer num{std::string(p)};
        value = Rational(num, den);
    } else {
        auto dot = s.find('.');
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw InputError("malformed numeral \"" + original + "\"");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw InputError("malformed numeral \"" + original + "\"");
        if (dot != std::string_view::npos && frac.empty())
            throw InputError("malformed numeral \"" + original + "\"");
        std::string digits = std::string(whole) + std::string(frac);
        Integer num(digits.empty() ? std::string("0") : digits);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rational(num, den);
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q)
{
    Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

VectorXr make_vector(const std::vector<Rational>& values)
{
    VectorXr v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

std::vector<Rational> to_std_vector(const VectorXr& v)
{
    return std::vector<Rational>(v.data(), v.data() + v.size());
}

}   // namespace secgame
