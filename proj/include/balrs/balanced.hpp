#ifndef BALRS_BALANCED_HPP
#define BALRS_BALANCED_HPP

#include <optional>
#include <string>

#include "balrs/mask.hpp"
#include "balrs/rscode.hpp"

namespace balrs {

/* The balanced/sparsest construction: a transform matrix P whose rows are the
   coefficients of argument-scaled root polynomials, one per selected mask,
   and the generator G = P * G_RS. Every row of G has weight d = n-k+1, every
   column weight b = k*d/n, and the row space is all of RS[n,k]. */

/// Monic polynomial of degree k-1 with roots {alpha^0, ..., alpha^{k-2}}.
/// All k coefficients are nonzero (the roots are cyclically consecutive).
Polynomial base_polynomial(const CodeProfile& profile);

/// base(alpha^{-(d-j)} x): vanishes exactly at {alpha^{d-j}, ..., alpha^{d-j+k-2}},
/// i.e. at the evaluation points zeroed by mask row j.
Polynomial shifted_polynomial(const CodeProfile& profile, int j);

struct GeneratorSet {
    CodeProfile profile;
    mask::MaskParams params;
    mask::SelectorVector selector;
    std::vector<mask::MaskRow> masks;  // k rows, increasing support order
    Matrix P;                          // k x k transform
    Matrix G;                          // k x n balanced generator, P * G_RS
    std::optional<Matrix> P_inv;       // cached; absent when P is singular
};

/// Runs the full construction and verifies every invariant before returning.
/// Throws NonIntegralBalance for inadmissible (n, k) and VerificationFailure
/// if any structural check fails (an implementation bug, not an input error).
GeneratorSet build_generator_set(const CodeProfile& profile);

/// Rebuilds masks/selector from the profile and adopts the given P and G
/// (e.g. loaded from a file) without verifying them.
GeneratorSet assemble_generator_set(const CodeProfile& profile, Matrix P, Matrix G);

struct VerifyReport {
    bool sparsest = false;            // every row weight == d
    bool balanced_columns = false;    // every column weight == b
    bool support_match = false;       // zero pattern of G == selected masks
    bool row_membership = false;      // every row of G is a codeword
    bool product_consistent = false;  // P * G_RS == G
    std::size_t rank = 0;             // rank of G over GF(q)
    int expected_rank = 0;
    std::string witness;              // first violation, for diagnostics

    bool all_passed() const {
        return sparsest && balanced_columns && support_match && row_membership &&
               product_consistent && rank == static_cast<std::size_t>(expected_rank);
    }
};

VerifyReport verify_generator_set(const GeneratorSet& gs);

bool verify_sparsest(const Matrix& G, int d);
bool verify_balanced_columns(const Matrix& G, int b);
std::size_t verify_rank(const Matrix& G);
bool verify_support_match(const Matrix& G, std::span<const mask::MaskRow> masks);

/// Nonsingularity of the k x k matrix built from arbitrary distinct shifts
/// (not necessarily selector-derived). Throws DuplicateShift on repeats mod n.
bool verify_shift_independence(const CodeProfile& profile, std::span<const int> shifts);

}  // namespace balrs

#endif
