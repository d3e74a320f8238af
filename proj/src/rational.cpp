#include "eo/rational.hpp"

namespace eo {

Rational::Rational(long num, long den) {
    if (den == 0) throw BadParameter("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw UsageError("unparseable rational literal: " + s);
    if (v.get_den() == 0) throw UsageError("zero denominator in rational literal: " + s);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational int_pow(long base, unsigned exp) {
    mpz_class b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return Rational(mpq_class(r));
}

mpz_class factorial_mpz(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace eo
