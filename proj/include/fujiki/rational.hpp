#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fujiki {

using boost::multiprecision::cpp_int;

// Exact rational arithmetic: always reduced, denominator always positive.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}  // NOLINT: implicit conversion intended
    Rational(cpp_int v) : num_(std::move(v)), den_(1) {}
    Rational(cpp_int num, cpp_int den);

    const cpp_int& num() const { return num_; }
    const cpp_int& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws std::domain_error on zero divisor
    Rational operator-() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    // "p/q", or just "p" for integers
    std::string str() const;

  private:
    cpp_int num_, den_;
};

// Parses "p", "-p", or "p/q".  Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

// Exact k-th root when it exists.  Negative x is allowed for odd k; for even
// k it throws std::invalid_argument.  k must be >= 1.
std::optional<Rational> rational_root(const Rational& x, int k);

// Largest square divisor stripped: n = squarefree_part(n) * m^2 with the
// result squarefree.  Requires n > 0.
cpp_int squarefree_part(const cpp_int& n);

// Floor of the k-th root of a non-negative integer.
cpp_int integer_kth_root(const cpp_int& x, int k);

bool is_perfect_kth_power(const cpp_int& x, int k);

}  // namespace fujiki
