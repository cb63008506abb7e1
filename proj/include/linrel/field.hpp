#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace linrel {

/// Residue representative in [0, p).
using Residue = std::uint32_t;

/// A prime modulus 2 <= p <= 2^16, verified at construction.
class Prime {
public:
    static constexpr std::uint32_t kMax = 1u << 16;

    explicit Prime(std::uint32_t p);

    [[nodiscard]] constexpr std::uint32_t value() const noexcept { return p_; }

    [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Throws std::domain_error for a == 0.
    [[nodiscard]] Residue inv(Residue a) const;

    friend constexpr bool operator==(Prime, Prime) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of GF(p).
class Scalar {
public:
    Scalar(std::int64_t value, Prime p) : value_(p.reduce(value)), p_(p) {}

    [[nodiscard]] Residue value() const noexcept { return value_; }
    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

    [[nodiscard]] Scalar inv() const;

    friend Scalar operator+(Scalar a, Scalar b);
    friend Scalar operator-(Scalar a, Scalar b);
    friend Scalar operator*(Scalar a, Scalar b);
    friend Scalar operator-(Scalar a);
    friend bool operator==(Scalar a, Scalar b);

private:
    Residue value_;
    Prime p_;
};

std::ostream& operator<<(std::ostream& os, Scalar s);

}  // namespace linrel
