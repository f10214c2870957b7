#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace setdissim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Every distance value in the library is a Rat.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den) : Rat(BigInt(num), BigInt(den)) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        // boost rejects negative denominators
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text), BigInt(1));
        return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

}  // namespace setdissim
