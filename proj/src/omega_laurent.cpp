#include "eo/omega_laurent.hpp"

#include <sstream>

namespace eo {

OmegaLaurent OmegaLaurent::monomial(Rational c, int exp) {
    OmegaLaurent r;
    if (!c.is_zero()) r.c_[exp] = std::move(c);
    return r;
}

OmegaLaurent OmegaLaurent::omega_plus_inverse() {
    OmegaLaurent r;
    r.c_[1] = Rational(1);
    r.c_[-1] = Rational(1);
    return r;
}

OmegaLaurent OmegaLaurent::gamma_in_omega() {
    OmegaLaurent r;
    r.c_[2] = Rational(1);
    r.c_[-2] = Rational(1);
    return r;
}

bool OmegaLaurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

Rational OmegaLaurent::coef(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

int OmegaLaurent::min_exp() const {
    if (c_.empty()) throw BadParameter("min_exp of zero Laurent polynomial");
    return c_.begin()->first;
}

int OmegaLaurent::max_exp() const {
    if (c_.empty()) throw BadParameter("max_exp of zero Laurent polynomial");
    return c_.rbegin()->first;
}

OmegaLaurent OmegaLaurent::operator-() const {
    OmegaLaurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

OmegaLaurent& OmegaLaurent::operator+=(const OmegaLaurent& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

OmegaLaurent& OmegaLaurent::operator-=(const OmegaLaurent& o) { return *this += -o; }

OmegaLaurent operator*(const OmegaLaurent& a, const OmegaLaurent& b) {
    OmegaLaurent r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            Rational p = ca * cb;
            auto it = r.c_.find(ea + eb);
            if (it == r.c_.end()) {
                if (!p.is_zero()) r.c_[ea + eb] = std::move(p);
            } else {
                it->second += p;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

bool OmegaLaurent::try_divide(OmegaLaurent& out, const OmegaLaurent& num, const OmegaLaurent& den) {
    if (den.is_zero()) return false;
    OmegaLaurent rem = num;
    OmegaLaurent quot;
    const int dtop = den.max_exp();
    const Rational& dlead = den.c_.rbegin()->second;
    // eliminate the top term of the remainder until it drops below what the
    // divisor can reach; Laurent shifts make this well-founded on the span
    while (!rem.is_zero()) {
        int rtop = rem.max_exp();
        if (rem.max_exp() - rem.min_exp() < den.max_exp() - den.min_exp()) return false;
        Rational q = rem.c_.rbegin()->second / dlead;
        OmegaLaurent t = OmegaLaurent::monomial(q, rtop - dtop);
        quot += t;
        rem -= t * den;
        if (!rem.is_zero() && rem.max_exp() >= rtop) return false;  // no progress
    }
    out = std::move(quot);
    return true;
}

OmegaLaurent OmegaLaurent::conj() const {
    OmegaLaurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

bool OmegaLaurent::has_even_support_only() const {
    for (const auto& [e, c] : c_) {
        (void)c;
        if (e % 2 != 0) return false;
    }
    return true;
}

std::string OmegaLaurent::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

GammaPoly omega_to_gamma(const OmegaLaurent& p) {
    if (!p.has_even_support_only())
        throw NotExpressible("odd omega-exponent present: " + p.str());
    if (!p.is_conj_symmetric())
        throw NotExpressible("not symmetric under w <-> w^-1: " + p.str());
    OmegaLaurent rem = p;
    const OmegaLaurent base = OmegaLaurent::gamma_in_omega();
    std::vector<Rational> g;
    while (!rem.is_zero()) {
        int k = rem.max_exp() / 2;
        Rational c = rem.coef(2 * k);
        if (static_cast<size_t>(k) >= g.size()) g.resize(static_cast<size_t>(k) + 1);
        g[static_cast<size_t>(k)] = c;
        OmegaLaurent pw = OmegaLaurent::one();
        for (int i = 0; i < k; ++i) pw = pw * base;
        rem -= OmegaLaurent(c) * pw;
        if (!rem.is_zero() && rem.max_exp() >= 2 * k)
            throw NotExpressible("top-coefficient extraction failed: " + p.str());
    }
    return GammaPoly(std::move(g));
}

OmegaLaurent gamma_to_omega(const GammaPoly& g) {
    const OmegaLaurent base = OmegaLaurent::gamma_in_omega();
    OmegaLaurent acc;
    for (size_t i = g.coeffs().size(); i-- > 0;)
        acc = acc * base + OmegaLaurent(g.coeffs()[i]);
    return acc;
}

}  // namespace eo
