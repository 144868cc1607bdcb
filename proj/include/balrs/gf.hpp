#ifndef BALRS_GF_HPP
#define BALRS_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "balrs/errors.hpp"

namespace balrs {

/// Canonical representative of a field element: an integer in [0, q).
/// For prime fields this is the residue itself; for GF(p^m) it encodes the
/// coefficient vector little-endian in base p (c_0 + c_1*p + ... + c_{m-1}*p^{m-1}).
using Elem = std::uint32_t;

/* Field implements exact arithmetic in GF(q), q = p^m, with a verified
   primitive element alpha. Instances are immutable after construction and
   safe to share across threads; all operations are pure.

   Multiplication uses log/antilog tables built once per field when
   q <= 2^16, and direct modular / polynomial-reduction arithmetic above. */
class Field {
public:
    using Handle = std::shared_ptr<const Field>;

    /// Construct GF(p^m). When m > 1 and no modulus is given, a default
    /// irreducible of degree m is selected deterministically (lowest
    /// little-endian coefficient vector, except GF(256) which uses 0x11D).
    /// When alpha is omitted, the smallest primitive element is used.
    static Handle make(std::uint64_t p, unsigned m = 1,
                       std::optional<std::vector<Elem>> modulus = std::nullopt,
                       std::optional<Elem> alpha = std::nullopt);

    /// Construct from a prime-power order q (factored internally).
    static Handle make_from_order(std::uint64_t q,
                                  std::optional<std::vector<Elem>> modulus = std::nullopt,
                                  std::optional<Elem> alpha = std::nullopt);

    std::uint64_t characteristic() const { return p_; }
    unsigned extension_degree() const { return m_; }
    std::uint64_t order() const { return q_; }
    Elem alpha() const { return alpha_; }
    /// Monic irreducible modulus, coefficients low-to-high; empty when m == 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;       // throws DivisionByZero on 0
    Elem div(Elem a, Elem b) const;

    /// x^e with the exponent reduced modulo q-1 for x != 0. pow(0, e) is 0
    /// for e > 0, 1 for e == 0, and throws DivisionByZero for e < 0.
    Elem pow(Elem x, std::int64_t e) const;

    /// alpha^i for any integer i (reduced modulo q-1).
    Elem exp_alpha(std::int64_t i) const;

    std::uint64_t multiplicative_order(Elem x) const;  // throws DivisionByZero on 0

    /// Smallest element (canonical ordering) of multiplicative order q-1.
    Elem smallest_primitive() const;

    /// True when the other field has identical (p, m, modulus, alpha).
    bool same(const Field& other) const;

    std::vector<Elem> to_coeffs(Elem v) const;
    Elem from_coeffs(std::span<const Elem> c) const;

    static bool is_prime(std::uint64_t n);
    /// Deterministic default modulus for GF(p^m), m > 1.
    static std::vector<Elem> default_modulus(std::uint64_t p, unsigned m);
    /// Irreducibility over GF(p) of a monic polynomial given low-to-high.
    static bool is_irreducible(std::span<const Elem> f, std::uint64_t p);

private:
    Field() = default;

    Elem mul_direct(Elem a, Elem b) const;
    Elem pow_direct(Elem x, std::uint64_t e) const;
    std::uint64_t order_with(Elem x) const;  // order via factored q-1, direct ops
    void build_tables();

    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
    unsigned m_ = 1;
    std::vector<Elem> modulus_;        // empty iff m == 1
    Elem alpha_ = 0;
    std::vector<std::uint64_t> factors_;  // distinct prime factors of q-1

    bool tables_ = false;
    std::vector<Elem> exp_;            // exp_[i] = alpha^i, doubled to 2(q-1)
    std::vector<std::uint32_t> log_;   // log_[x] for x != 0
};

using FieldHandle = Field::Handle;

/// Smallest primitive element of the field (free-function spelling).
inline Elem find_primitive(const Field& f) { return f.smallest_primitive(); }

}  // namespace balrs

#endif
