#include "balrs/gf.hpp"

#include <algorithm>
#include <numeric>

namespace balrs {

namespace {

// ---- arithmetic on polynomials over GF(p), coefficients low-to-high ----

using PVec = std::vector<std::uint64_t>;

void pv_trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers; a != 0 mod p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// a*b mod f, f monic
PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t df = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > df;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < df; ++j)
            prod[i - df + j] = (prod[i - df + j] + (p - 1) * c % p * f[j]) % p;
    }
    prod.resize(df);
    pv_trim(prod);
    return prod;
}

// t^e mod f by square-and-multiply
PVec pv_powmod(PVec t, std::uint64_t e, const PVec& f, std::uint64_t p) {
    PVec r{1};
    while (e > 0) {
        if (e & 1) r = pv_mulmod(r, t, f, p);
        t = pv_mulmod(t, t, f, p);
        e >>= 1;
    }
    return r;
}

PVec pv_sub(PVec a, const PVec& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    pv_trim(a);
    return a;
}

PVec pv_mod(PVec a, const PVec& b, std::uint64_t p) {
    // b monic after normalization by caller
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t c = a.back();
        if (c != 0) {
            for (std::size_t j = 0; j < db; ++j)
                a[a.size() - 1 - db + j] = (a[a.size() - 1 - db + j] + (p - c) % p * b[j]) % p;
        }
        a.pop_back();
        pv_trim(a);
        if (a.size() <= db) break;
    }
    pv_trim(a);
    return a;
}

PVec pv_monic(PVec a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t lead = a.back();
    if (lead != 1) {
        std::uint64_t il = inv_mod(lead, p);
        for (auto& c : a) c = c * il % p;
    }
    return a;
}

PVec pv_gcd(PVec a, PVec b, std::uint64_t p) {
    pv_trim(a);
    pv_trim(b);
    while (!b.empty()) {
        b = pv_monic(std::move(b), p);
        PVec r = pv_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pv_monic(std::move(a), p);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool Field::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Field::is_irreducible(std::span<const Elem> f, std::uint64_t p) {
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    PVec fv(f.begin(), f.end());

    // Rabin: x^{p^m} == x mod f, and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m
    const PVec x{0, 1};
    std::vector<PVec> frob(m + 1);  // frob[j] = x^{p^j} mod f
    frob[0] = x;
    for (unsigned j = 1; j <= m; ++j) frob[j] = pv_powmod(frob[j - 1], p, fv, p);
    if (frob[m] != x) return false;
    for (std::uint64_t r : distinct_prime_factors(m)) {
        PVec g = pv_gcd(pv_sub(frob[m / r], x, p), fv, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<Elem> Field::default_modulus(std::uint64_t p, unsigned m) {
    // GF(256) pinned to x^8+x^4+x^3+x^2+1 (0x11D) for interoperability
    if (p == 2 && m == 8) return {1, 0, 1, 1, 1, 0, 0, 0, 1};
    std::uint64_t bound = 1;
    for (unsigned i = 0; i < m; ++i) bound *= p;
    std::vector<Elem> c(m + 1, 0);
    c[m] = 1;
    for (std::uint64_t v = 1; v < bound; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < m; ++i) {
            c[i] = static_cast<Elem>(t % p);
            t /= p;
        }
        if (is_irreducible(c, p)) return c;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

Field::Handle Field::make(std::uint64_t p, unsigned m, std::optional<std::vector<Elem>> modulus,
                          std::optional<Elem> alpha) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > 0xFFFFFFFFull) throw TooLarge("field order exceeds 2^32");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;

    if (m == 1) {
        if (modulus && !modulus->empty())
            throw DegreeMismatch("modulus is only meaningful for extension fields");
    } else {
        std::vector<Elem> mod = modulus ? std::move(*modulus) : default_modulus(p, m);
        if (mod.size() != static_cast<std::size_t>(m) + 1)
            throw DegreeMismatch("modulus must have degree " + std::to_string(m));
        for (Elem c : mod)
            if (c >= p) throw DegreeMismatch("modulus coefficients must lie in [0, p)");
        if (mod.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!is_irreducible(mod, p)) throw ReducibleModulus("modulus is reducible over GF(p)");
        f->modulus_ = std::move(mod);
    }

    f->factors_ = distinct_prime_factors(q - 1);

    if (alpha) {
        if (*alpha == 0 || *alpha >= q || f->order_with(*alpha) != q - 1)
            throw NotPrimitive("element " + std::to_string(alpha ? *alpha : 0) +
                               " does not have multiplicative order q-1");
        f->alpha_ = *alpha;
    } else {
        Elem a = 0;
        for (std::uint64_t v = 1; v < q; ++v) {
            if (f->order_with(static_cast<Elem>(v)) == q - 1) {
                a = static_cast<Elem>(v);
                break;
            }
        }
        f->alpha_ = a;
    }

    if (q <= (1u << 16)) f->build_tables();
    return f;
}

Field::Handle Field::make_from_order(std::uint64_t q, std::optional<std::vector<Elem>> modulus,
                                     std::optional<Elem> alpha) {
    if (q < 2) throw NotPrime("field order must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw NotPrime(std::to_string(q) + " is not a prime power");
    return make(p, m, std::move(modulus), alpha);
}

void Field::build_tables() {
    const std::uint64_t L = q_ - 1;
    exp_.assign(2 * L, 0);
    log_.assign(q_, 0xFFFFFFFFu);
    Elem e = 1;
    for (std::uint64_t i = 0; i < L; ++i) {
        exp_[i] = e;
        log_[e] = static_cast<std::uint32_t>(i);
        e = mul_direct(e, alpha_);
    }
    for (std::uint64_t i = 0; i < L; ++i) exp_[L + i] = exp_[i];
    tables_ = true;
}

std::vector<Elem> Field::to_coeffs(Elem v) const {
    std::vector<Elem> c(m_);
    std::uint64_t t = v;
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = static_cast<Elem>(t % p_);
        t /= p_;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
    std::uint64_t v = 0, mult = 1;
    for (unsigned i = 0; i < m_ && i < c.size(); ++i) {
        v += static_cast<std::uint64_t>(c[i] % p_) * mult;
        mult *= p_;
    }
    return static_cast<Elem>(v);
}

Elem Field::add(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
    if (p_ == 2) return a ^ b;
    std::uint64_t res = 0, mult = 1, x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        res += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(res);
}

Elem Field::neg(Elem a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_ - a);
    if (p_ == 2) return a;
    std::uint64_t res = 0, mult = 1, x = a;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = x % p_;
        res += (d == 0 ? 0 : p_ - d) * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(res);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_direct(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    // schoolbook product of coefficient vectors, reduced by the monic modulus
    std::vector<std::uint64_t> av(m_), bv(m_), prod(2 * m_ - 1, 0);
    std::uint64_t t = a;
    for (unsigned i = 0; i < m_; ++i) {
        av[i] = t % p_;
        t /= p_;
    }
    t = b;
    for (unsigned i = 0; i < m_; ++i) {
        bv[i] = t % p_;
        t /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (av[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            prod[i - m_ + j] = (prod[i - m_ + j] + (p_ - 1) * c % p_ * modulus_[j]) % p_;
    }
    std::uint64_t v = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        v += prod[i] * mult;
        mult *= p_;
    }
    return static_cast<Elem>(v);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[static_cast<std::uint64_t>(log_[a]) + log_[b]];
    return mul_direct(a, b);
}

Elem Field::pow_direct(Elem x, std::uint64_t e) const {
    Elem r = 1;
    while (e > 0) {
        if (e & 1) r = mul_direct(r, x);
        x = mul_direct(x, x);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tables_) {
        const std::uint64_t L = q_ - 1;
        return exp_[(L - log_[a]) % L];
    }
    return pow_direct(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem x, std::int64_t e) const {
    if (x == 0) {
        if (e < 0) throw DivisionByZero("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t L = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = e % L;
    if (r < 0) r += L;
    if (tables_) return exp_[static_cast<std::uint64_t>(log_[x]) * r % L];
    return pow_direct(x, static_cast<std::uint64_t>(r));
}

Elem Field::exp_alpha(std::int64_t i) const {
    const std::int64_t L = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = i % L;
    if (r < 0) r += L;
    if (tables_) return exp_[r];
    return pow_direct(alpha_, static_cast<std::uint64_t>(r));
}

std::uint64_t Field::order_with(Elem x) const {
    if (x == 0) throw DivisionByZero("order of zero");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t r : factors_) {
        while (ord % r == 0 && pow_direct(x, ord / r) == 1) ord /= r;
    }
    return ord;
}

std::uint64_t Field::multiplicative_order(Elem x) const {
    if (x == 0) throw DivisionByZero("order of zero");
    if (tables_) {
        const std::uint64_t L = q_ - 1;
        return L / std::gcd(L, static_cast<std::uint64_t>(log_[x]));
    }
    return order_with(x);
}

Elem Field::smallest_primitive() const {
    for (std::uint64_t v = 1; v < q_; ++v)
        if (multiplicative_order(static_cast<Elem>(v)) == q_ - 1) return static_cast<Elem>(v);
    throw Error("no primitive element found");  // unreachable for valid fields
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
}

}  // namespace balrs
