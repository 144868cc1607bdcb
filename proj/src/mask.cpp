#include "balrs/mask.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace balrs::mask {

bool admissible(int n, int k) {
    if (k < 1 || k > n) return false;
    const long long kd = static_cast<long long>(k) * (n - k + 1);
    return kd % n == 0;
}

MaskParams make_params(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw BadRange("require 1 <= k <= n");
    MaskParams p;
    p.n = n;
    p.k = k;
    p.d = n - k + 1;
    const long long kd = static_cast<long long>(k) * p.d;
    if (kd % n != 0)
        throw NonIntegralBalance("k*(n-k+1)/n = " + std::to_string(k) + "*" + std::to_string(p.d) +
                                 "/" + std::to_string(n) + " is not an integer");
    p.b = static_cast<int>(kd / n);
    p.g = std::gcd(k, n);
    p.beta_k = k / p.g;
    p.beta_d = (p.d - 1) / p.g;
    p.beta_n = p.beta_k + p.beta_d;
    if (p.d % p.beta_n != 0) throw Error("beta_n does not divide d");  // cannot happen for integral b
    p.m_rep = p.d / p.beta_n;
    return p;
}

MaskRow build_mask_row(const MaskParams& params, int i) {
    if (i < 0 || i >= params.n) throw BadRange("row index out of range");
    MaskRow row;
    row.n = params.n;
    row.index = i;
    row.bits.assign(static_cast<std::size_t>(params.n), 1);
    row.zero_set.reserve(static_cast<std::size_t>(params.k) - 1);
    for (int t = 0; t < params.k - 1; ++t) {
        int pos = (params.d - i + t) % params.n;
        if (pos < 0) pos += params.n;
        row.zero_set.push_back(pos);
        row.bits[static_cast<std::size_t>(pos)] = 0;
    }
    std::sort(row.zero_set.begin(), row.zero_set.end());
    return row;
}

MaskMatrix build_circulant(const MaskParams& params) {
    MaskMatrix A;
    A.n = params.n;
    A.rows.reserve(static_cast<std::size_t>(params.n));
    for (int i = 0; i < params.n; ++i) A.rows.push_back(build_mask_row(params, i));
    return A;
}

SelectorVector solve_selector(const MaskParams& params) {
    SelectorVector v;
    v.bits.assign(static_cast<std::size_t>(params.n), 0);
    if (params.k == params.n) {
        // degenerate d = 1: every mask is selected
        std::fill(v.bits.begin(), v.bits.end(), 1);
    } else {
        // g repetitions of (1^beta_k 0^beta_d)
        int pos = 0;
        for (int rep = 0; rep < params.g; ++rep) {
            for (int i = 0; i < params.beta_k; ++i) v.bits[static_cast<std::size_t>(pos++)] = 1;
            pos += params.beta_d;
        }
    }
    for (int i = 0; i < params.n; ++i)
        if (v.bits[static_cast<std::size_t>(i)]) v.support.push_back(i);
    return v;
}

BalanceCheck verify_balance(const SelectorVector& v, const MaskMatrix& A,
                            const MaskParams& params) {
    if (static_cast<int>(v.bits.size()) != params.n || A.n != params.n ||
        static_cast<int>(A.rows.size()) != params.n)
        throw DimensionMismatch("selector/mask dimensions disagree with params");
    BalanceCheck chk;
    chk.column_sums.assign(static_cast<std::size_t>(params.n), 0);
    for (int i = 0; i < params.n; ++i) {
        if (!v.bits[static_cast<std::size_t>(i)]) continue;
        const auto& bits = A.rows[static_cast<std::size_t>(i)].bits;
        for (int j = 0; j < params.n; ++j) chk.column_sums[static_cast<std::size_t>(j)] += bits[static_cast<std::size_t>(j)];
    }
    chk.balanced = std::all_of(chk.column_sums.begin(), chk.column_sums.end(),
                               [&](int s) { return s == params.b; });
    return chk;
}

std::vector<MaskRow> select_masks(const SelectorVector& v, const MaskMatrix& A) {
    std::vector<MaskRow> out;
    out.reserve(v.support.size());
    for (int j : v.support) out.push_back(A.rows[static_cast<std::size_t>(j)]);
    return out;
}

std::string to_ascii(std::span<const MaskRow> rows) {
    std::string s;
    for (const auto& r : rows) {
        for (auto b : r.bits) s.push_back(b ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

std::string to_ascii(const MaskMatrix& A) { return to_ascii(std::span<const MaskRow>(A.rows)); }

}  // namespace balrs::mask
