#include "linrel/poly.hpp"

#include "linrel/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace linrel {

namespace {
void require_same(const Poly& a, const Poly& b) {
    if (a.prime() != b.prime()) throw ShapeError("polynomials over different fields");
}
}  // namespace

Poly::Poly(Prime p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_.value();
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    Poly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.p_.add(a[i], b[i]);
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same(a, b);
    Poly out(a.p_);
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.p_.sub(a[i], b[i]);
    out.trim();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    Poly out(a.p_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] = a.p_.add(out.c_[i + j], a.p_.mul(a.c_[i], b.c_[j]));
    out.trim();
    return out;
}

Poly operator*(Residue s, const Poly& a) {
    Poly out = a;
    for (auto& c : out.c_) c = a.p_.mul(s % a.p_.value(), c);
    out.trim();
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Prime p = a.prime();
    std::vector<Residue> r = a.coeffs();
    const int db = b.degree();
    const Residue inv_lead = p.inv(b.lead());
    std::vector<Residue> q(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
    for (int i = a.degree(); i >= db; --i) {
        Residue f = p.mul(r[i], inv_lead);
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] = p.sub(r[i - db + j], p.mul(f, b[j]));
    }
    return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a.prime().inv(a.lead()) * a;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Residue c = f[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

}  // namespace linrel
