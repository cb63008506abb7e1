#pragma once

#include "linrel/field.hpp"

#include <compare>
#include <iosfwd>
#include <utility>
#include <vector>

namespace linrel {

/// Polynomial over GF(p), coefficients lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Prime p) : p_(p) {}
    Poly(Prime p, std::vector<Residue> coeffs);
    static Poly constant(Prime p, Residue c) { return Poly(p, {c}); }
    static Poly x(Prime p) { return Poly(p, {0, 1}); }

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Residue>& coeffs() const noexcept { return c_; }
    [[nodiscard]] Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] Residue operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Residue s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
        return a.c_ <=> b.c_;
    }

private:
    void trim();

    Prime p_;
    std::vector<Residue> c_;
};

/// (quotient, remainder). Throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace linrel
