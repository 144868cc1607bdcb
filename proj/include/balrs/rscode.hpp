#ifndef BALRS_RSCODE_HPP
#define BALRS_RSCODE_HPP

#include <optional>
#include <span>
#include <vector>

#include "balrs/matrix.hpp"
#include "balrs/poly.hpp"

namespace balrs {

/* Cyclic Reed-Solomon code RS[n,k] with defining set {1, alpha, ..., alpha^{n-1}}
   over GF(q), n = q - 1. Codewords are evaluations of message polynomials of
   degree < k at the defining set. */
struct CodeProfile {
    FieldHandle field;
    int n = 0;
    int k = 0;

    /// n is pinned to q - 1; throws BadRange unless 1 <= k <= n.
    static CodeProfile make(FieldHandle field, int k);

    Elem alpha() const { return field->alpha(); }
    int distance() const { return n - k + 1; }
    int correctable_errors() const { return (n - k) / 2; }
    bool same(const CodeProfile& o) const {
        return n == o.n && k == o.k && field->same(*o.field);
    }
};

/// k x n matrix with entry (i, j) = alpha^{ij}.
Matrix vandermonde_generator(const CodeProfile& profile);

/// Row vector times generator: blocks of k symbols to blocks of n.
std::vector<Elem> encode(std::span<const Elem> message, const Matrix& G);

/// Membership test: interpolation through the first k coordinates extended
/// to all n evaluation points must reproduce the word.
bool is_codeword(std::span<const Elem> word, const CodeProfile& profile);

/// Interpolates the lowest-indexed k survivors, then cross-checks every other
/// unerased coordinate. Throws TooManyErasures below k survivors and
/// Inconsistent when a surviving coordinate disagrees (errors beyond erasures).
Polynomial erasure_decode(std::span<const std::optional<Elem>> received,
                          const CodeProfile& profile);

enum class DecodeAlgo {
    Syndrome,  // Berlekamp-Massey + Chien + Forney (production default)
    Gao,       // extended-Euclidean interpolation decoder
};

struct ErrorDecodeResult {
    Polynomial message;                // degree < k
    std::vector<Elem> error;           // length n, nonzero at error locations
    std::vector<int> error_positions;  // sorted
};

/// Bounded-distance decoding of up to floor((n-k)/2) symbol errors.
/// Throws DecodeFailure when the received word is not within distance t of a
/// codeword (or the pattern is otherwise uncorrectable).
ErrorDecodeResult error_decode(std::span<const Elem> received, const CodeProfile& profile,
                               DecodeAlgo algo = DecodeAlgo::Syndrome);

/// Exhaustive minimum nonzero codeword weight; desk-scale only
/// (throws TooLarge when q^k exceeds 10^7).
int min_distance_oracle(const CodeProfile& profile);

}  // namespace balrs

#endif
