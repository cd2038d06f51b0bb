#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace rtf {

// Exact ratio. Thresholds, densities and formula values are compared in
// cross-multiplied integers, never in floating point.
struct Ratio {
    long long num = 0;
    long long den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(long long n) : num(n), den(1) {}
    Ratio(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("ratio: zero denominator");
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

    double value() const { return double(num) / double(den); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.num, a.den * b.den);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.num == 0) throw std::invalid_argument("ratio: division by zero");
        return Ratio(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a == b || a < b; }

    Ratio abs() const { return num < 0 ? Ratio(-num, den) : *this; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // "1/10", "0.1" or "2"
    static Ratio parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash != std::string::npos)
            return Ratio(std::stoll(text.substr(0, slash)),
                         std::stoll(text.substr(slash + 1)));
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            long long den = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return Ratio(std::stoll(digits), den);
        }
        return Ratio(std::stoll(text), 1);
    }
};

}  // namespace rtf
