#include "eo/gamma_poly.hpp"

#include <sstream>

namespace eo {

GammaPoly GammaPoly::operator-() const {
    GammaPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
    if (a.is_zero() || b.is_zero()) return GammaPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return GammaPoly(std::move(r));
}

bool GammaPoly::try_divide(GammaPoly& out, const GammaPoly& num, const GammaPoly& den) {
    if (den.is_zero()) return false;
    if (num.is_zero()) {
        out = GammaPoly();
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<Rational> rem = num.c_;
    std::vector<Rational> quot(static_cast<size_t>(num.degree() - den.degree()) + 1);
    const Rational& lead = den.c_.back();
    for (size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + den.c_.size() - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j < den.c_.size(); ++j) rem[k + j] -= q * den.c_[j];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    out = GammaPoly(std::move(quot));
    return true;
}

Rational GammaPoly::eval(const Rational& g) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + c_[i];
    return acc;
}

std::string GammaPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace eo
