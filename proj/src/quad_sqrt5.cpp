#include "eo/quad_sqrt5.hpp"

namespace eo {

int QuadExtSqrt5::sign_as_real() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2
    Rational d = a_ * a_ - Rational(5) * b_ * b_;
    if (d.is_zero()) return 0;  // unreachable: sqrt5 is irrational
    return d.sign() > 0 ? sa : sb;
}

QuadExtSqrt5 QuadExtSqrt5::inverse() const {
    if (is_zero()) throw BadParameter("inverse of zero in Q(sqrt5)");
    Rational n = norm();
    return {a_ / n, -b_ / n};
}

std::string QuadExtSqrt5::str() const {
    if (b_.is_zero()) return a_.str();
    std::string bs = b_.abs().is_one() ? "sqrt5" : b_.abs().str() + "*sqrt5";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + bs;
}

}  // namespace eo
