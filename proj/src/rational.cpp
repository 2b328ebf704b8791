#include "fujiki/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace fujiki {

using boost::multiprecision::gcd;

Rational::Rational(cpp_int num, cpp_int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    cpp_int g = gcd(num_ < 0 ? cpp_int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> cpp_int {
        if (s.empty()) throw std::invalid_argument("empty integer");
        size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("bare sign");
        for (size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("malformed rational: " + s);
        return cpp_int(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

cpp_int integer_kth_root(const cpp_int& x, int k) {
    assert(x >= 0 && k >= 1);
    if (x == 0 || x == 1 || k == 1) return x;
    cpp_int lo = 0, hi = x;
    while (lo < hi) {
        cpp_int mid = (lo + hi + 1) / 2;
        cpp_int p = 1;
        bool over = false;
        for (int i = 0; i < k; ++i) {
            p *= mid;
            if (p > x) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

bool is_perfect_kth_power(const cpp_int& x, int k) {
    if (x < 0) return false;
    cpp_int r = integer_kth_root(x, k);
    cpp_int p = 1;
    for (int i = 0; i < k; ++i) p *= r;
    return p == x;
}

std::optional<Rational> rational_root(const Rational& x, int k) {
    if (k < 1) throw std::invalid_argument("root index must be positive");
    bool negative = x.num() < 0;
    if (negative && k % 2 == 0) throw std::invalid_argument("even root of a negative number");
    cpp_int num = negative ? cpp_int(-x.num()) : x.num();
    if (!is_perfect_kth_power(num, k) || !is_perfect_kth_power(x.den(), k)) return std::nullopt;
    cpp_int rn = integer_kth_root(num, k);
    cpp_int rd = integer_kth_root(x.den(), k);
    return Rational(negative ? cpp_int(-rn) : rn, rd);
}

cpp_int squarefree_part(const cpp_int& n) {
    if (n <= 0) throw std::invalid_argument("squarefree part needs a positive integer");
    cpp_int rest = n, out = 1;
    for (cpp_int p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    return out * rest;  // whatever remains is prime (or 1)
}

}  // namespace fujiki
