#ifndef GCR_DOMAIN_HPP
#define GCR_DOMAIN_HPP

#include <gmpxx.h>

#include <string>

#include "gcr/errors.hpp"

namespace gcr {

enum class DomainKind { Integers, PrimeField, Rationals };

// Exact coefficient domain: Z, F_p (p prime) or Q. Values are carried as
// mpq_class throughout; for Z and F_p the denominator is always 1 and for
// F_p the numerator is kept in {0,...,p-1}.
class CoeffDomain {
public:
    static CoeffDomain integers() { return CoeffDomain(DomainKind::Integers, 0); }
    static CoeffDomain rationals() { return CoeffDomain(DomainKind::Rationals, 0); }
    static CoeffDomain prime_field(long p);

    DomainKind kind() const { return kind_; }
    long characteristic() const { return kind_ == DomainKind::PrimeField ? p_ : 0; }
    bool is_field() const { return kind_ != DomainKind::Integers; }

    bool operator==(const CoeffDomain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoeffDomain& o) const { return !(*this == o); }

    // Bring a raw value into canonical form for this domain.
    mpq_class canon(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return canon(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return canon(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return canon(a * b); }
    mpq_class neg(const mpq_class& a) const { return canon(-a); }

    // Multiplicative inverse; fields only.
    mpq_class inv(const mpq_class& a) const;

    std::string name() const;

private:
    CoeffDomain(DomainKind k, long p) : kind_(k), p_(p) {}
    DomainKind kind_;
    long p_;
};

bool is_prime(long p);

}  // namespace gcr

#endif
