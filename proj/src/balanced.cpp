#include "balrs/balanced.hpp"

#include <algorithm>
#include <set>

namespace balrs {

Polynomial base_polynomial(const CodeProfile& profile) {
    const Field& F = *profile.field;
    std::vector<Elem> roots(static_cast<std::size_t>(profile.k - 1));
    for (int i = 0; i < profile.k - 1; ++i) roots[static_cast<std::size_t>(i)] = F.exp_alpha(i);
    return Polynomial::from_roots(profile.field, roots);
}

Polynomial shifted_polynomial(const CodeProfile& profile, int j) {
    if (j < 0 || j >= profile.n) throw BadRange("shift must lie in [0, n)");
    const Field& F = *profile.field;
    const int d = profile.distance();
    return base_polynomial(profile).scale_argument(F.exp_alpha(-static_cast<std::int64_t>(d - j)));
}

namespace {

Matrix transform_from_shifts(const CodeProfile& profile, std::span<const int> shifts) {
    Matrix P(profile.field, shifts.size(), static_cast<std::size_t>(profile.k));
    for (std::size_t l = 0; l < shifts.size(); ++l) {
        const Polynomial p = shifted_polynomial(profile, shifts[l]);
        for (int i = 0; i < profile.k; ++i)
            P.at(l, static_cast<std::size_t>(i)) = p.coeff(static_cast<std::size_t>(i));
    }
    return P;
}

}  // namespace

GeneratorSet build_generator_set(const CodeProfile& profile) {
    const mask::MaskParams params = mask::make_params(profile.n, profile.k);
    const mask::MaskMatrix A = mask::build_circulant(params);
    mask::SelectorVector selector = mask::solve_selector(params);
    const mask::BalanceCheck bal = mask::verify_balance(selector, A, params);
    if (!bal.balanced) throw VerificationFailure("selector does not balance the mask columns");
    std::vector<mask::MaskRow> masks = mask::select_masks(selector, A);

    Matrix P = transform_from_shifts(profile, selector.support);
    Matrix G = P.mul(vandermonde_generator(profile));

    GeneratorSet gs{profile, params, std::move(selector), std::move(masks), std::move(P),
                    std::move(G), std::nullopt};
    gs.P_inv = gs.P.inverse();  // nonsingular by construction; would throw otherwise

    const VerifyReport report = verify_generator_set(gs);
    if (!report.all_passed()) throw VerificationFailure(report.witness);
    return gs;
}

GeneratorSet assemble_generator_set(const CodeProfile& profile, Matrix P, Matrix G) {
    const mask::MaskParams params = mask::make_params(profile.n, profile.k);
    const mask::MaskMatrix A = mask::build_circulant(params);
    mask::SelectorVector selector = mask::solve_selector(params);
    std::vector<mask::MaskRow> masks = mask::select_masks(selector, A);
    GeneratorSet gs{profile, params, std::move(selector), std::move(masks), std::move(P),
                    std::move(G), std::nullopt};
    if (gs.P.rows() == gs.P.cols()) {
        try {
            gs.P_inv = gs.P.inverse();
        } catch (const Error&) {
            gs.P_inv = std::nullopt;  // singular P: verification will flag rank
        }
    }
    return gs;
}

bool verify_sparsest(const Matrix& G, int d) {
    for (std::size_t r = 0; r < G.rows(); ++r)
        if (G.row_weight(r) != static_cast<std::size_t>(d)) return false;
    return true;
}

bool verify_balanced_columns(const Matrix& G, int b) {
    for (std::size_t c = 0; c < G.cols(); ++c)
        if (G.col_weight(c) != static_cast<std::size_t>(b)) return false;
    return true;
}

std::size_t verify_rank(const Matrix& G) { return G.rank(); }

bool verify_support_match(const Matrix& G, std::span<const mask::MaskRow> masks) {
    if (G.rows() != masks.size()) return false;
    for (std::size_t r = 0; r < G.rows(); ++r) {
        if (masks[r].bits.size() != G.cols()) return false;
        for (std::size_t c = 0; c < G.cols(); ++c) {
            const bool nonzero = G.at(r, c) != 0;
            if (nonzero != (masks[r].bits[c] != 0)) return false;
        }
    }
    return true;
}

VerifyReport verify_generator_set(const GeneratorSet& gs) {
    VerifyReport rep;
    rep.expected_rank = gs.profile.k;
    const auto note = [&rep](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };

    rep.sparsest = true;
    for (std::size_t r = 0; r < gs.G.rows(); ++r) {
        const std::size_t w = gs.G.row_weight(r);
        if (w != static_cast<std::size_t>(gs.params.d)) {
            rep.sparsest = false;
            note("row " + std::to_string(r) + " has weight " + std::to_string(w) +
                 ", expected d = " + std::to_string(gs.params.d));
            break;
        }
    }
    rep.balanced_columns = true;
    for (std::size_t c = 0; c < gs.G.cols(); ++c) {
        const std::size_t w = gs.G.col_weight(c);
        if (w != static_cast<std::size_t>(gs.params.b)) {
            rep.balanced_columns = false;
            note("column " + std::to_string(c) + " has weight " + std::to_string(w) +
                 ", expected b = " + std::to_string(gs.params.b));
            break;
        }
    }
    rep.support_match = verify_support_match(gs.G, gs.masks);
    if (!rep.support_match) note("zero pattern disagrees with the selected masks");
    rep.rank = verify_rank(gs.G);
    if (rep.rank != static_cast<std::size_t>(rep.expected_rank))
        note("generator rank is " + std::to_string(rep.rank) + ", expected k = " +
             std::to_string(rep.expected_rank));

    rep.row_membership = true;
    for (std::size_t r = 0; r < gs.G.rows(); ++r) {
        if (!is_codeword(gs.G.row(r), gs.profile)) {
            rep.row_membership = false;
            note("row " + std::to_string(r) + " is not a codeword");
            break;
        }
    }
    rep.product_consistent = gs.P.mul(vandermonde_generator(gs.profile)) == gs.G;
    if (!rep.product_consistent) note("G does not equal P * G_RS");
    return rep;
}

bool verify_shift_independence(const CodeProfile& profile, std::span<const int> shifts) {
    if (shifts.size() != static_cast<std::size_t>(profile.k))
        throw DimensionMismatch("need exactly k shifts");
    std::set<int> residues;
    for (int j : shifts) {
        int r = j % profile.n;
        if (r < 0) r += profile.n;
        if (!residues.insert(r).second) throw DuplicateShift("shifts must be distinct modulo n");
    }
    std::vector<int> rows(shifts.begin(), shifts.end());
    for (int& j : rows) {
        j %= profile.n;
        if (j < 0) j += profile.n;
    }
    const Matrix P = transform_from_shifts(profile, rows);
    return P.rank() == static_cast<std::size_t>(profile.k);
}

}  // namespace balrs
