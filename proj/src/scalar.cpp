#include "coxnorm/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace coxnorm {

int Scalar::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2
    mpq_class lhs = a_ * a_, rhs = 5 * b_ * b_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0; // impossible for rationals, sqrt5 irrational
    return c > 0 ? sa : sb;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class na = a_ * o.a_ + 5 * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n = a_ * a_ - 5 * b_ * b_;
    return Scalar(a_ / n, -b_ / n);
}

double Scalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(5.0);
}

std::string Scalar::str() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt5";
}

std::string key(const Vec& v) {
    std::string k;
    for (auto& x : v) {
        k += x.rat().get_str();
        if (!x.is_rational()) {
            k += '~';
            k += x.irr().get_str();
        }
        k += ',';
    }
    return k;
}

} // namespace coxnorm
