#include "cumbound/numeric.hpp"

#include <cctype>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cumbound {

double to_double(const Rat& r) { return r.convert_to<double>(); }

double to_double(const Value& v) {
    if (const auto* r = std::get_if<Rat>(&v)) return to_double(*r);
    return std::get<double>(v);
}

long double to_long_double(const Rat& r) { return r.convert_to<long double>(); }

long double to_long_double(const Int& x) { return x.convert_to<long double>(); }

namespace {

// Factorials and the Pascal triangle are grown on demand and then shared
// read-only. Growth is single-writer, not reentrant.
std::vector<Int>& factorial_cache() {
    static std::vector<Int> cache{Int(1)};
    return cache;
}

std::vector<std::vector<Int>>& pascal_cache() {
    static std::vector<std::vector<Int>> cache{{Int(1)}};
    return cache;
}

}  // namespace

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    auto& cache = factorial_cache();
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * Int(cache.size()));
    }
    return cache[static_cast<std::size_t>(n)];
}

Int binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    auto& pascal = pascal_cache();
    while (static_cast<int>(pascal.size()) <= n) {
        const auto& prev = pascal.back();
        std::vector<Int> row(prev.size() + 1, Int(1));
        for (std::size_t j = 1; j + 1 < row.size(); ++j) {
            row[j] = prev[j - 1] + prev[j];
        }
        pascal.push_back(std::move(row));
    }
    return pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int double_factorial(int n) {
    if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
    Int result = 1;
    for (int i = n; i >= 2; i -= 2) result *= i;
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Int parse_unsigned_int(std::string_view s) {
    Int out = 0;
    for (char c : s) out = out * 10 + (c - '0');
    return out;
}

Int pow10(long e) {
    Int out = 1;
    for (long i = 0; i < e; ++i) out *= 10;
    return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        Int d = parse_unsigned_int(den);
        if (d == 0) fail();
        Rat r(parse_unsigned_int(num), d);
        return negative ? -r : r;
    }

    // Decimal form: digits[.digits][e[+-]digits], converted exactly.
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp_part = s.substr(e + 1);
        bool exp_neg = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_neg = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 4) fail();
        for (char c : exp_part) exponent = exponent * 10 + (c - '0');
        if (exp_neg) exponent = -exponent;
    }

    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) fail();
        if (!int_part.empty() && !all_digits(int_part)) fail();
        if (!frac_part.empty() && !all_digits(frac_part)) fail();
    } else if (!all_digits(int_part)) {
        fail();
    }

    Int digits = int_part.empty() ? Int(0) : parse_unsigned_int(int_part);
    for (char c : frac_part) digits = digits * 10 + (c - '0');
    long scale = exponent - static_cast<long>(frac_part.size());

    Rat r(digits);
    if (scale > 0) {
        r *= Rat(pow10(scale));
    } else if (scale < 0) {
        r /= Rat(pow10(-scale));
    }
    return negative ? -r : r;
}

std::string format_rational(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_double(double d) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

}  // namespace cumbound
