#pragma once

// Exact dyadic rational arithmetic. Every quantity produced by the tree
// calculus (breakpoints, slopes, offsets, measures) is of the form
// num / 2^exp, so a dedicated dyadic type covers the whole exact layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// num / 2^exp, kept in lowest terms (num odd or zero, exp minimal).
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

    static Dyadic half_power(int k) {
        // 2^k as a dyadic (k may be negative)
        if (k >= 0) return Dyadic(BigInt(1) << k, 0);
        return Dyadic(1, static_cast<unsigned>(-k));
    }

    const BigInt& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    // Multiply by 2^k exactly.
    Dyadic shifted(int k) const {
        if (k >= 0) return Dyadic(num_ << k, exp_);
        return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        BigInt l = a.num_ << (e - a.exp_);
        BigInt r = b.num_ << (e - b.exp_);
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const;

    // Number of 1-bits of the numerator; for a point of [0,1) in lowest
    // terms this is the binary digit sum of its expansion.
    unsigned digit_sum() const;

    // "3/2^2", integers printed bare.
    std::string str() const;

    // Accepts "k/2^e", "k", and decimal dyadics ("0.75"). Throws parse_error.
    static Dyadic parse(const std::string& text);

private:
    void normalize() {
        if (num_ == 0) { exp_ = 0; return; }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_;
    unsigned exp_;
};

inline Dyadic abs(const Dyadic& d) { return d.num() < 0 ? -d : d; }

}  // namespace thompson
