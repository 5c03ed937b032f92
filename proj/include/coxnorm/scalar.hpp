#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace coxnorm {

// a + b*sqrt(5) with a, b rational.  Ordered by the real embedding.
class Scalar {
public:
    Scalar() : a_(0), b_(0) {}
    Scalar(long v) : a_(v), b_(0) {}
    Scalar(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static Scalar frac(long p, long q) { return Scalar(mpq_class(p, q)); }
    static Scalar sqrt5() { return Scalar(0, 1); }
    static Scalar phi() { return Scalar(mpq_class(1, 2), mpq_class(1, 2)); }

    const mpq_class& rat() const { return a_; }
    const mpq_class& irr() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;

    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar& operator+=(const Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Scalar& operator-=(const Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar inverse() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

    double to_double() const;
    std::string str() const;

private:
    mpq_class a_, b_;
};

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

std::string key(const Vec& v);

} // namespace coxnorm
