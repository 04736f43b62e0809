#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>

namespace torlink {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact residue in Q/Z, stored as the unique reduced fraction num/den
/// with 0 <= num < den and gcd(num, den) = 1. Zero is 0/1.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}

    QmodZ(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static QmodZ from_rational(const Rat& r) {
        return QmodZ(numerator(r), denominator(r));
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    /// Rational representative in [0, 1).
    Rat representative() const { return Rat(num_, den_); }

    friend QmodZ operator+(const QmodZ& a, const QmodZ& b) {
        return QmodZ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    QmodZ operator-() const { return QmodZ(-num_, den_); }

    friend QmodZ operator-(const QmodZ& a, const QmodZ& b) {
        return a + (-b);
    }

    friend bool operator==(const QmodZ& a, const QmodZ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QmodZ& a, const QmodZ& b) { return !(a == b); }

    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QmodZ& q) {
        return os << q.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        num_ %= den_;
        if (num_ < 0) num_ += den_;
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline QmodZ qmodz_add(const QmodZ& a, const QmodZ& b) { return a + b; }

/// k * a in Q/Z.
inline QmodZ qmodz_int_scale(const Int& k, const QmodZ& a) {
    return QmodZ(k * a.num(), a.den());
}

}  // namespace torlink
