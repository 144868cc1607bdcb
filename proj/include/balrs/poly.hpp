#ifndef BALRS_POLY_HPP
#define BALRS_POLY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "balrs/gf.hpp"

namespace balrs {

/* Dense univariate polynomial over GF(q), coefficients stored low-to-high.
   The zero polynomial is the empty vector; otherwise the top coefficient is
   nonzero. degree() is -1 for the zero polynomial. */
class Polynomial {
public:
    Polynomial(FieldHandle field, std::vector<Elem> coeffs);

    static Polynomial zero(FieldHandle field);
    static Polynomial one(FieldHandle field);
    /// Monic polynomial with the given multiset of roots; 1 for no roots.
    static Polynomial from_roots(FieldHandle field, std::span<const Elem> roots);
    /// Unique polynomial of degree < len(xs) through the points (xs[i], ys[i]).
    static Polynomial interpolate(FieldHandle field, std::span<const Elem> xs,
                                  std::span<const Elem> ys);

    const FieldHandle& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    std::size_t count_nonzero() const;

    Elem eval(Elem x) const;                 // Horner
    Polynomial scale_argument(Elem c) const; // p(c*x); throws ZeroScale on c == 0
    Polynomial derivative() const;           // formal derivative
    Polynomial scaled(Elem s) const;         // s * p(x)
    Polynomial times_xpow(std::size_t t) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    /// Quotient and remainder; throws DivisionByZero when o is zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const;

private:
    void normalize();
    void check_same_field(const Polynomial& o) const;

    FieldHandle field_;
    std::vector<Elem> coeffs_;
};

}  // namespace balrs

#endif
