#include "balrs/rscode.hpp"

#include <algorithm>

namespace balrs {

namespace {

// Coefficient view of a word: the unique polynomial of degree < n whose
// evaluations at {alpha^j} give the word. Valid because the defining set is
// the full multiplicative group: coeff_i = -sum_j w_j alpha^{-ij} (n = -1 in GF(q)).
std::vector<Elem> coefficient_view(std::span<const Elem> word, const CodeProfile& profile) {
    const Field& F = *profile.field;
    const int n = profile.n;
    std::vector<Elem> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        Elem acc = 0;
        for (int j = 0; j < n; ++j) {
            if (word[static_cast<std::size_t>(j)] == 0) continue;
            const std::int64_t e = -static_cast<std::int64_t>(i) * j;
            acc = F.add(acc, F.mul(word[static_cast<std::size_t>(j)], F.exp_alpha(e)));
        }
        out[static_cast<std::size_t>(i)] = F.neg(acc);
    }
    return out;
}

// received word as a polynomial r(x) = sum r_j x^j evaluated at alpha^l
Elem word_eval(std::span<const Elem> word, const Field& F, std::int64_t l) {
    const Elem x = F.exp_alpha(l);
    Elem acc = 0;
    for (std::size_t j = word.size(); j-- > 0;) acc = F.add(F.mul(acc, x), word[j]);
    return acc;
}

std::vector<Elem> syndromes(std::span<const Elem> word, const CodeProfile& profile) {
    const Field& F = *profile.field;
    const int nsyn = profile.n - profile.k;
    std::vector<Elem> s(static_cast<std::size_t>(nsyn));
    for (int l = 1; l <= nsyn; ++l) s[static_cast<std::size_t>(l - 1)] = word_eval(word, F, l);
    return s;
}

// Berlekamp-Massey over GF(q): shortest LFSR generating the syndrome sequence.
std::vector<Elem> berlekamp_massey(std::span<const Elem> s, const Field& F, int& length_out) {
    std::vector<Elem> C{1}, B{1};
    int L = 0, shift = 1;
    Elem b = 1;
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        Elem delta = s[idx];
        for (int i = 1; i <= L; ++i) {
            if (static_cast<std::size_t>(i) >= C.size() || static_cast<std::size_t>(i) > idx) break;
            delta = F.add(delta, F.mul(C[static_cast<std::size_t>(i)], s[idx - static_cast<std::size_t>(i)]));
        }
        if (delta == 0) {
            ++shift;
            continue;
        }
        const Elem coef = F.div(delta, b);
        if (2 * L <= static_cast<int>(idx)) {
            std::vector<Elem> T = C;
            if (C.size() < B.size() + static_cast<std::size_t>(shift))
                C.resize(B.size() + static_cast<std::size_t>(shift), 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + static_cast<std::size_t>(shift)] =
                    F.sub(C[i + static_cast<std::size_t>(shift)], F.mul(coef, B[i]));
            L = static_cast<int>(idx) + 1 - L;
            B = std::move(T);
            b = delta;
            shift = 1;
        } else {
            if (C.size() < B.size() + static_cast<std::size_t>(shift))
                C.resize(B.size() + static_cast<std::size_t>(shift), 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + static_cast<std::size_t>(shift)] =
                    F.sub(C[i + static_cast<std::size_t>(shift)], F.mul(coef, B[i]));
            ++shift;
        }
    }
    while (!C.empty() && C.back() == 0) C.pop_back();
    length_out = L;
    return C;
}

ErrorDecodeResult build_result(const CodeProfile& profile, std::vector<Elem> corrected,
                               std::vector<Elem> error) {
    const int n = profile.n;
    const int k = profile.k;
    std::vector<Elem> coeffs = coefficient_view(corrected, profile);
    for (int i = k; i < n; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] != 0)
            throw DecodeFailure("corrected word is not a codeword");
    }
    coeffs.resize(static_cast<std::size_t>(k));
    std::vector<int> positions;
    for (int j = 0; j < n; ++j)
        if (error[static_cast<std::size_t>(j)] != 0) positions.push_back(j);
    return ErrorDecodeResult{Polynomial(profile.field, std::move(coeffs)), std::move(error),
                             std::move(positions)};
}

ErrorDecodeResult syndrome_decode(std::span<const Elem> received, const CodeProfile& profile) {
    const Field& F = *profile.field;
    const int n = profile.n;
    const int t = profile.correctable_errors();
    std::vector<Elem> r(received.begin(), received.end());
    std::vector<Elem> zero_err(static_cast<std::size_t>(n), 0);

    const std::vector<Elem> syn = syndromes(r, profile);
    if (std::all_of(syn.begin(), syn.end(), [](Elem s) { return s == 0; }))
        return build_result(profile, std::move(r), std::move(zero_err));

    int L = 0;
    const std::vector<Elem> lambda_coeffs = berlekamp_massey(syn, F, L);
    const Polynomial lambda(profile.field, lambda_coeffs);
    if (L > t || lambda.degree() != L)
        throw DecodeFailure("error locator degree exceeds correction capability");

    // Chien search: position j is in error iff lambda(alpha^{-j}) = 0
    std::vector<int> positions;
    for (int j = 0; j < n; ++j) {
        if (lambda.eval(F.exp_alpha(-j)) == 0) positions.push_back(j);
    }
    if (static_cast<int>(positions.size()) != L)
        throw DecodeFailure("error locator does not split over the field");

    // Forney: e_j = -omega(X_j^{-1}) / lambda'(X_j^{-1}) with omega = S*lambda mod x^{n-k}
    const Polynomial spoly(profile.field, std::vector<Elem>(syn.begin(), syn.end()));
    Polynomial omega = spoly * lambda;
    std::vector<Elem> omega_c(omega.coeffs());
    if (omega_c.size() > syn.size()) omega_c.resize(syn.size());
    const Polynomial omega_trunc(profile.field, std::move(omega_c));
    const Polynomial lambda_deriv = lambda.derivative();

    std::vector<Elem> error(static_cast<std::size_t>(n), 0);
    for (int j : positions) {
        const Elem xinv = F.exp_alpha(-j);
        const Elem den = lambda_deriv.eval(xinv);
        if (den == 0) throw DecodeFailure("repeated error locator root");
        const Elem mag = F.neg(F.div(omega_trunc.eval(xinv), den));
        if (mag == 0) throw DecodeFailure("zero error magnitude");
        error[static_cast<std::size_t>(j)] = mag;
        r[static_cast<std::size_t>(j)] = F.sub(r[static_cast<std::size_t>(j)], mag);
    }

    const std::vector<Elem> check = syndromes(r, profile);
    if (!std::all_of(check.begin(), check.end(), [](Elem s) { return s == 0; }))
        throw DecodeFailure("residual syndromes after correction");
    return build_result(profile, std::move(r), std::move(error));
}

ErrorDecodeResult gao_decode(std::span<const Elem> received, const CodeProfile& profile) {
    const Field& F = *profile.field;
    const int n = profile.n;
    const int k = profile.k;
    const int t = profile.correctable_errors();

    // g0 = x^n - 1, g1 = interpolant of the received word through all n points
    std::vector<Elem> g0c(static_cast<std::size_t>(n) + 1, 0);
    g0c[0] = F.neg(1);
    g0c[static_cast<std::size_t>(n)] = 1;
    Polynomial r0(profile.field, std::move(g0c));
    Polynomial r1(profile.field, coefficient_view(received, profile));

    Polynomial v0 = Polynomial::zero(profile.field);
    Polynomial v1 = Polynomial::one(profile.field);
    // partial EEA: stop at the first remainder of degree < (n+k)/2
    while (!r1.is_zero() && 2 * r1.degree() >= n + k) {
        auto [q, rem] = r0.divmod(r1);
        Polynomial vn = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        v0 = std::move(v1);
        v1 = std::move(vn);
    }

    if (v1.is_zero()) throw DecodeFailure("degenerate Euclidean trajectory");
    auto [f1, rem] = r1.divmod(v1);
    if (!rem.is_zero() || f1.degree() >= k)
        throw DecodeFailure("received word is not within the decoding radius");

    std::vector<Elem> corrected(static_cast<std::size_t>(n));
    std::vector<Elem> error(static_cast<std::size_t>(n), 0);
    int weight = 0;
    for (int j = 0; j < n; ++j) {
        const Elem cj = f1.eval(F.exp_alpha(j));
        corrected[static_cast<std::size_t>(j)] = cj;
        const Elem e = F.sub(received[static_cast<std::size_t>(j)], cj);
        if (e != 0) {
            error[static_cast<std::size_t>(j)] = e;
            ++weight;
        }
    }
    if (weight > t) throw DecodeFailure("candidate codeword outside the decoding radius");
    return build_result(profile, std::move(corrected), std::move(error));
}

}  // namespace

CodeProfile CodeProfile::make(FieldHandle field, int k) {
    CodeProfile p;
    p.n = static_cast<int>(field->order()) - 1;
    if (k < 1 || k > p.n) throw BadRange("require 1 <= k <= n = q-1");
    p.field = std::move(field);
    p.k = k;
    return p;
}

Matrix vandermonde_generator(const CodeProfile& profile) {
    const Field& F = *profile.field;
    Matrix G(profile.field, static_cast<std::size_t>(profile.k),
             static_cast<std::size_t>(profile.n));
    for (int i = 0; i < profile.k; ++i)
        for (int j = 0; j < profile.n; ++j)
            G.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                F.exp_alpha(static_cast<std::int64_t>(i) * j);
    return G;
}

std::vector<Elem> encode(std::span<const Elem> message, const Matrix& G) {
    return G.left_mul(message);
}

bool is_codeword(std::span<const Elem> word, const CodeProfile& profile) {
    if (word.size() != static_cast<std::size_t>(profile.n))
        throw DimensionMismatch("word length must be n");
    const Field& F = *profile.field;
    const int k = profile.k;
    std::vector<Elem> xs(static_cast<std::size_t>(k)), ys(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        xs[static_cast<std::size_t>(j)] = F.exp_alpha(j);
        ys[static_cast<std::size_t>(j)] = word[static_cast<std::size_t>(j)];
    }
    const Polynomial m = Polynomial::interpolate(profile.field, xs, ys);
    for (int j = k; j < profile.n; ++j) {
        if (m.eval(F.exp_alpha(j)) != word[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

Polynomial erasure_decode(std::span<const std::optional<Elem>> received,
                          const CodeProfile& profile) {
    if (received.size() != static_cast<std::size_t>(profile.n))
        throw DimensionMismatch("word length must be n");
    const Field& F = *profile.field;
    const int k = profile.k;

    std::vector<int> survivors;
    for (int j = 0; j < profile.n; ++j)
        if (received[static_cast<std::size_t>(j)].has_value()) survivors.push_back(j);
    if (static_cast<int>(survivors.size()) < k)
        throw TooManyErasures("need at least k surviving coordinates");

    std::vector<Elem> xs(static_cast<std::size_t>(k)), ys(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        xs[static_cast<std::size_t>(i)] = F.exp_alpha(survivors[static_cast<std::size_t>(i)]);
        ys[static_cast<std::size_t>(i)] = *received[static_cast<std::size_t>(survivors[static_cast<std::size_t>(i)])];
    }
    Polynomial m = Polynomial::interpolate(profile.field, xs, ys);
    for (std::size_t s = static_cast<std::size_t>(k); s < survivors.size(); ++s) {
        const int j = survivors[s];
        if (m.eval(F.exp_alpha(j)) != *received[static_cast<std::size_t>(j)])
            throw Inconsistent("surviving coordinates are not consistent with one codeword");
    }
    return m;
}

ErrorDecodeResult error_decode(std::span<const Elem> received, const CodeProfile& profile,
                               DecodeAlgo algo) {
    if (received.size() != static_cast<std::size_t>(profile.n))
        throw DimensionMismatch("word length must be n");
    return algo == DecodeAlgo::Syndrome ? syndrome_decode(received, profile)
                                        : gao_decode(received, profile);
}

int min_distance_oracle(const CodeProfile& profile) {
    const std::uint64_t q = profile.field->order();
    std::uint64_t total = 1;
    for (int i = 0; i < profile.k; ++i) {
        total *= q;
        if (total > 10'000'000ull) throw TooLarge("q^k exceeds the enumeration budget");
    }
    const Matrix G = vandermonde_generator(profile);
    std::vector<Elem> msg(static_cast<std::size_t>(profile.k));
    int best = profile.n + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t tval = idx;
        for (int i = 0; i < profile.k; ++i) {
            msg[static_cast<std::size_t>(i)] = static_cast<Elem>(tval % q);
            tval /= q;
        }
        const std::vector<Elem> cw = G.left_mul(msg);
        const int w = static_cast<int>(
            std::count_if(cw.begin(), cw.end(), [](Elem c) { return c != 0; }));
        best = std::min(best, w);
    }
    return best;
}

}  // namespace balrs
