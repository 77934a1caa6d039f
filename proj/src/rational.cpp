#include "girthpath/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "girthpath/errors.hpp"

namespace girthpath {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }

bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
bool operator>(const Rat& a, const Rat& b) { return b < a; }
bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

Rat parse_rat(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rat(std::stoll(text));
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.size() > 12) frac.resize(12);
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long sign = (!whole.empty() && whole[0] == '-') ? -1 : 1;
        long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        long long f = frac.empty() ? 0 : std::stoll(frac);
        return Rat(w * den + sign * f, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("cannot parse rational: " + text);
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: " + text);
    }
}

}  // namespace girthpath
