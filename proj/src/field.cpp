#include "linrel/field.hpp"

#include "linrel/errors.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace linrel {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
    if (p > kMax) throw std::invalid_argument("prime modulus " + std::to_string(p) + " exceeds 2^16");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

Residue Prime::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inversion of zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    std::int64_t r0 = p_, r1 = a % p_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1, r1 = r2, t0 = t1, t1 = t2;
    }
    return reduce(t0);
}

namespace {
void check_same(Scalar a, Scalar b) {
    if (a.modulus() != b.modulus())
        throw ShapeError("scalar modulus mismatch: " + std::to_string(a.modulus().value()) + " vs " +
                         std::to_string(b.modulus().value()));
}
}  // namespace

Scalar Scalar::inv() const { return {p_.inv(value_), p_}; }

Scalar operator+(Scalar a, Scalar b) {
    check_same(a, b);
    return {a.p_.add(a.value_, b.value_), a.p_};
}
Scalar operator-(Scalar a, Scalar b) {
    check_same(a, b);
    return {a.p_.sub(a.value_, b.value_), a.p_};
}
Scalar operator*(Scalar a, Scalar b) {
    check_same(a, b);
    return {a.p_.mul(a.value_, b.value_), a.p_};
}
Scalar operator-(Scalar a) { return {a.p_.neg(a.value_), a.p_}; }
bool operator==(Scalar a, Scalar b) { return a.p_ == b.p_ && a.value_ == b.value_; }

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << s.value(); }

}  // namespace linrel
