#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setdissim/rational.hpp"

namespace setdissim {

/// A dissimilarity value: either a rational q or the square root of a
/// non-negative rational. Square roots stay symbolic; nothing is rounded.
class Value {
public:
    Value() = default;
    Value(Rat q) : base_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
    Value(std::int64_t n) : base_(n) {}     // NOLINT(google-explicit-constructor)

    static Value sqrt_of(Rat radicand) {
        if (radicand.sign() < 0) throw std::domain_error("Value: square root of a negative number");
        Value v;
        v.base_ = std::move(radicand);
        v.root_ = true;
        return v;
    }

    bool is_rational() const { return !root_; }
    bool is_root() const { return root_; }
    /// The rational value; throws for symbolic roots.
    const Rat& rational() const {
        if (root_) throw std::logic_error("Value: not rational: " + str());
        return base_;
    }
    /// For roots, the radicand; for rationals, the value itself.
    const Rat& base() const { return base_; }

    int sign() const { return base_.sign(); }

    std::string str() const { return root_ ? "sqrt(" + base_.str() + ")" : base_.str(); }

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
    Rat base_;
    bool root_ = false;
};

/// coef * value
struct Term {
    Rat coef;
    Value value;
};

namespace detail {

/// Integer square root with exactness flag.
inline std::pair<BigInt, bool> isqrt(const BigInt& n) {
    BigInt r = boost::multiprecision::sqrt(n);
    return {r, r * r == n};
}

/// sqrt(q) if q is the square of a rational.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q.sign() < 0) return std::nullopt;
    auto [sn, en] = isqrt(q.num());
    if (!en) return std::nullopt;
    auto [sd, ed] = isqrt(q.den());
    if (!ed) return std::nullopt;
    return Rat(sn, sd);
}

/// Lower and upper rational bounds on sqrt(q) with width about 2^-bits / den.
inline std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned bits) {
    // sqrt(p/d) = sqrt(p*d)/d
    BigInt pd = q.num() * q.den();
    BigInt scale = BigInt(1) << bits;
    BigInt r = boost::multiprecision::sqrt(BigInt(pd * scale * scale));
    BigInt denom = scale * q.den();
    return {Rat(r, denom), Rat(r + 1, denom)};
}

}  // namespace detail

/// Exact sign of sum(coef_i * value_i).
///
/// Rational terms are summed directly. Root terms are grouped by radicand
/// class (sqrt(x) and sqrt(y) are rationally dependent iff x*y is a rational
/// square); square roots of pairwise independent radicands are linearly
/// independent over Q, so the sum is zero iff every group coefficient is.
/// A non-zero sum is then resolved by refining rational enclosures.
inline int sign_of(std::span<const Term> terms) {
    Rat rational_part;
    bool any_root = false;
    for (const auto& t : terms) {
        if (t.value.is_rational()) {
            rational_part += t.coef * t.value.rational();
        } else {
            any_root = true;
        }
    }
    if (!any_root) return rational_part.sign();

    // groups: (representative radicand, coefficient of sqrt(representative))
    std::vector<std::pair<Rat, Rat>> groups;
    for (const auto& t : terms) {
        if (t.value.is_rational() || t.coef.is_zero()) continue;
        const Rat& x = t.value.base();
        if (x.is_zero()) continue;
        if (auto s = detail::exact_sqrt(x)) {
            rational_part += t.coef * *s;
            continue;
        }
        bool placed = false;
        for (auto& [rep, coef] : groups) {
            // sqrt(x) = sqrt(x*rep)/rep * sqrt(rep)
            if (auto s = detail::exact_sqrt(x * rep)) {
                coef += t.coef * (*s / rep);
                placed = true;
                break;
            }
        }
        if (!placed) groups.emplace_back(x, t.coef);
    }

    bool all_zero = rational_part.is_zero();
    for (const auto& g : groups) all_zero = all_zero && g.second.is_zero();
    if (all_zero) return 0;

    for (unsigned bits = 16;; bits *= 2) {
        Rat lo = rational_part;
        Rat hi = rational_part;
        for (const auto& [rep, coef] : groups) {
            if (coef.is_zero()) continue;
            auto [l, h] = detail::sqrt_bounds(rep, bits);
            if (coef.sign() > 0) {
                lo += coef * l;
                hi += coef * h;
            } else {
                lo += coef * h;
                hi += coef * l;
            }
        }
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
}

inline int sign_of(std::initializer_list<Term> terms) {
    return sign_of(std::span<const Term>(terms.begin(), terms.size()));
}

inline bool operator==(const Value& a, const Value& b) {
    if (a.root_ == b.root_) return a.base_ == b.base_;
    return sign_of({Term{Rat(1), a}, Term{Rat(-1), b}}) == 0;
}

inline std::strong_ordering operator<=>(const Value& a, const Value& b) {
    int s = 0;
    if (a.root_ == b.root_) {
        auto c = a.base_ <=> b.base_;
        s = c < 0 ? -1 : (c > 0 ? 1 : 0);
    } else {
        s = sign_of({Term{Rat(1), a}, Term{Rat(-1), b}});
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Quotient of two rational values; used by the gamma scan.
inline Rat ratio(const Value& num, const Value& den) {
    return num.rational() / den.rational();
}

}  // namespace setdissim
