#include "balrs/poly.hpp"

#include <algorithm>

namespace balrs {

Polynomial::Polynomial(FieldHandle field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (!field_->same(*o.field_)) throw FieldMismatch("polynomials over different fields");
}

Polynomial Polynomial::zero(FieldHandle field) { return Polynomial(std::move(field), {}); }

Polynomial Polynomial::one(FieldHandle field) { return Polynomial(std::move(field), {1}); }

Polynomial Polynomial::from_roots(FieldHandle field, std::span<const Elem> roots) {
    const Field& F = *field;
    std::vector<Elem> c{1};
    for (Elem r : roots) {
        const Elem nr = F.neg(r);
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = F.add(c[i - 1], F.mul(c[i], nr));
        c[0] = F.mul(c[0], nr);
    }
    return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::interpolate(FieldHandle field, std::span<const Elem> xs,
                                   std::span<const Elem> ys) {
    if (xs.size() != ys.size()) throw DimensionMismatch("interpolation point count mismatch");
    const Field& F = *field;
    const std::size_t k = xs.size();
    if (k == 0) return zero(std::move(field));

    // master polynomial M(x) = prod (x - xs[i]); N_i = M/(x - xs[i]) by deflation
    Polynomial master = from_roots(field, xs);
    std::vector<Elem> acc(k, 0);
    std::vector<Elem> quot(k);
    for (std::size_t i = 0; i < k; ++i) {
        // synthetic division of M by (x - xs[i])
        Elem carry = master.coeff(k);
        for (std::size_t j = k; j-- > 0;) {
            quot[j] = carry;
            carry = F.add(master.coeff(j), F.mul(carry, xs[i]));
        }
        // carry is the remainder M(xs[i]) = 0
        Elem denom = 0;  // N_i(xs[i])
        for (std::size_t j = k; j-- > 0;) denom = F.add(F.mul(denom, xs[i]), quot[j]);
        if (denom == 0) throw BadRange("interpolation points must be distinct");
        const Elem w = F.div(ys[i], denom);
        for (std::size_t j = 0; j < k; ++j) acc[j] = F.add(acc[j], F.mul(w, quot[j]));
    }
    return Polynomial(std::move(field), std::move(acc));
}

std::size_t Polynomial::count_nonzero() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [](Elem c) { return c != 0; }));
}

Elem Polynomial::eval(Elem x) const {
    const Field& F = *field_;
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs_[i]);
    return acc;
}

Polynomial Polynomial::scale_argument(Elem c) const {
    if (c == 0) throw ZeroScale("argument scale must be nonzero");
    const Field& F = *field_;
    std::vector<Elem> out(coeffs_.size());
    Elem pw = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = F.mul(coeffs_[i], pw);
        pw = F.mul(pw, c);
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::derivative() const {
    const Field& F = *field_;
    if (coeffs_.size() <= 1) return zero(field_);
    std::vector<Elem> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        // integers < p are their own canonical representatives
        const Elem factor = static_cast<Elem>(i % F.characteristic());
        out[i - 1] = F.mul(coeffs_[i], factor);
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(Elem s) const {
    const Field& F = *field_;
    std::vector<Elem> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = F.mul(coeffs_[i], s);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::times_xpow(std::size_t t) const {
    if (is_zero() || t == 0) return t == 0 ? *this : zero(field_);
    std::vector<Elem> out(coeffs_.size() + t, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(t));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    const Field& F = *field_;
    std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_field(o);
    const Field& F = *field_;
    std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return zero(field_);
    const Field& F = *field_;
    std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(coeffs_[i], o.coeffs_[j]));
    }
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = *field_;
    std::vector<Elem> rem = coeffs_;
    const int dq = degree() - o.degree();
    if (dq < 0) return {zero(field_), *this};
    std::vector<Elem> quot(static_cast<std::size_t>(dq) + 1, 0);
    const Elem lead_inv = F.inv(o.coeffs_.back());
    for (std::size_t i = rem.size(); i-- > o.coeffs_.size() - 1;) {
        if (i + 1 < o.coeffs_.size()) break;
        const std::size_t shift = i - (o.coeffs_.size() - 1);
        if (rem[i] == 0) continue;
        const Elem c = F.mul(rem[i], lead_inv);
        quot[shift] = c;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(c, o.coeffs_[j]));
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_->same(*o.field_) && coeffs_ == o.coeffs_;
}

}  // namespace balrs
