#pragma once

#include <cstdint>
#include <string>

namespace girthpath {

// Small exact rational. The closed-form bounds in this library are all
// ratios of modest integers; comparing them against exact path lengths in
// integer arithmetic keeps every "tolerance 0" check away from floating
// point.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);  // normalizes; throws on d == 0

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);

bool operator==(const Rat& a, const Rat& b);
bool operator<(const Rat& a, const Rat& b);
bool operator<=(const Rat& a, const Rat& b);
bool operator>(const Rat& a, const Rat& b);
bool operator>=(const Rat& a, const Rat& b);

// Parses "3", "3/2" or a plain decimal like "1.5" / "0.3465".
Rat parse_rat(const std::string& text);

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace girthpath
