#include "gcr/domain.hpp"

namespace gcr {

bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

CoeffDomain CoeffDomain::prime_field(long p) {
    if (!is_prime(p))
        throw NotPrime(p);
    return CoeffDomain(DomainKind::PrimeField, p);
}

mpq_class CoeffDomain::canon(const mpq_class& v) const {
    switch (kind_) {
        case DomainKind::Rationals:
            return v;
        case DomainKind::Integers:
            return v;
        case DomainKind::PrimeField: {
            // v is an integer; reduce the numerator into {0,...,p-1}
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num().get_mpz_t(), static_cast<unsigned long>(p_));
            return mpq_class(r);
        }
    }
    return v;
}

mpq_class CoeffDomain::inv(const mpq_class& a) const {
    switch (kind_) {
        case DomainKind::Rationals:
            return 1 / a;
        case DomainKind::PrimeField: {
            mpz_class r;
            mpz_class p(p_);
            if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
                throw Error("not invertible mod p");
            return canon(mpq_class(r));
        }
        case DomainKind::Integers:
            throw NotAField("Z is not a field");
    }
    throw NotAField();
}

std::string CoeffDomain::name() const {
    switch (kind_) {
        case DomainKind::Integers:
            return "ZZ";
        case DomainKind::Rationals:
            return "QQ";
        case DomainKind::PrimeField:
            return "F" + std::to_string(p_);
    }
    return "?";
}

}  // namespace gcr
