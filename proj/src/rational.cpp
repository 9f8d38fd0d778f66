#include "gdbialg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gdbialg {

namespace mp = boost::multiprecision;

Scalar::Scalar(long long num, long long den) : Scalar(BigInt(num), BigInt(den)) {}

Scalar::Scalar(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
    v_ = BigRational(std::move(num), std::move(den));
}

Scalar Scalar::parse(std::string_view s) {
    auto strip = [](std::string_view t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
        return t;
    };
    s = strip(s);
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty string");

    auto parse_int = [&](std::string_view t) -> BigInt {
        t = strip(t);
        if (t.empty()) throw std::invalid_argument("Scalar::parse: empty integer");
        std::size_t i = 0;
        if (t[0] == '+' || t[0] == '-') i = 1;
        if (i == t.size()) throw std::invalid_argument("Scalar::parse: sign without digits");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw std::invalid_argument("Scalar::parse: invalid character in '" +
                                            std::string(t) + "'");
        return BigInt(std::string(t));
    };

    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Scalar(parse_int(s), BigInt(1));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("Scalar::parse: zero denominator");
    return Scalar(std::move(num), std::move(den));
}

BigInt Scalar::numerator() const { return mp::numerator(v_); }
BigInt Scalar::denominator() const { return mp::denominator(v_); }

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Scalar: reciprocal of zero");
    return Scalar(BigRational(mp::denominator(v_), mp::numerator(v_)));
}

std::string Scalar::str() const {
    BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool rational_sqrt(const Scalar& s, Scalar& root) {
    if (s.sign() < 0) return false;
    if (s.is_zero()) { root = Scalar(0); return true; }
    BigInt num = s.numerator(), den = s.denominator();
    BigInt rn = mp::sqrt(num), rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    root = Scalar(rn, rd);
    return true;
}

}  // namespace gdbialg
