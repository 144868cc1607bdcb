#ifndef BALRS_MASK_HPP
#define BALRS_MASK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "balrs/errors.hpp"

namespace balrs::mask {

/* Pure 0/1 combinatorics: the circulant candidate-mask matrix A = circ(a)
   whose row i has k-1 cyclically consecutive zeros at {d-i, ..., d-i+k-2}
   mod n, and the k-sparse periodic selector v with vA = b*1. Independent of
   any field. */

struct MaskParams {
    int n = 0;       // code length
    int k = 0;       // dimension
    int d = 0;       // n - k + 1 (ones per mask row)
    int b = 0;       // k*d/n (target column weight); integrality is the admission condition
    int g = 0;       // gcd(k, n)
    int beta_k = 0;  // k/g
    int beta_d = 0;  // (d-1)/g
    int beta_n = 0;  // beta_k + beta_d; divides d
    int m_rep = 0;   // d / beta_n
};

/// Derives all quantities; throws NonIntegralBalance when k*d/n is not an
/// integer and BadRange unless 1 <= k <= n.
MaskParams make_params(int n, int k);

/// True iff k*(n-k+1)/n is an integer (without constructing params).
bool admissible(int n, int k);

struct MaskRow {
    int n = 0;
    int index = 0;
    std::vector<int> zero_set;           // the k-1 zero positions, sorted
    std::vector<std::uint8_t> bits;      // 0/1, length n
};

struct MaskMatrix {
    int n = 0;
    std::vector<MaskRow> rows;           // n rows, row i shifted i times
};

struct SelectorVector {
    std::vector<std::uint8_t> bits;      // 0/1, length n, weight k
    std::vector<int> support;            // sorted {j_1, ..., j_k}
};

struct BalanceCheck {
    bool balanced = false;
    std::vector<int> column_sums;        // integer sums over selected rows
};

MaskRow build_mask_row(const MaskParams& params, int i);
MaskMatrix build_circulant(const MaskParams& params);

/// The closed-form periodic solution of vA = b*1: g repetitions of
/// (1^beta_k 0^beta_d). Degenerates to e_0 for k = 1 and all-ones for k = n.
SelectorVector solve_selector(const MaskParams& params);

BalanceCheck verify_balance(const SelectorVector& v, const MaskMatrix& A,
                            const MaskParams& params);

/// The k chosen mask rows in increasing support order.
std::vector<MaskRow> select_masks(const SelectorVector& v, const MaskMatrix& A);

// ASCII 0/1 grids, one row per line
std::string to_ascii(const MaskMatrix& A);
std::string to_ascii(std::span<const MaskRow> rows);

}  // namespace balrs::mask

#endif
