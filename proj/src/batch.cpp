#include "balrs/batch.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

namespace balrs::batch {

namespace {

std::size_t block_count(std::size_t total, std::size_t block, const char* what) {
    if (block == 0 || total % block != 0)
        throw DimensionMismatch(std::string(what) + " length must be a multiple of the block size");
    return total / block;
}

// recover the user message of one corrected block: u = m * P^-1
void recover_user_message(const GeneratorSet& gs, const Polynomial& m, Elem* out) {
    const auto k = static_cast<std::size_t>(gs.profile.k);
    std::vector<Elem> coeffs(k, 0);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = m.coeff(i);
    if (!gs.P_inv) throw DecodeFailure("transform matrix is singular");
    const std::vector<Elem> u = gs.P_inv->left_mul(coeffs);
    std::copy(u.begin(), u.end(), out);
}

template <typename PerBlock>
DecodeReport run_blocks(std::size_t blocks, std::size_t out_block, Exec exec, PerBlock&& fn) {
    DecodeReport rep;
    rep.messages.assign(blocks * out_block, 0);
    std::vector<std::uint8_t> failed(blocks, 0);
    std::exception_ptr first_error;
    std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const auto idx = static_cast<std::size_t>(b);
        try {
            fn(idx, rep.messages.data() + idx * out_block);
        } catch (const DecodeFailure&) {
            failed[idx] = 1;
        } catch (const TooManyErasures&) {
            failed[idx] = 1;
        } catch (const Inconsistent&) {
            failed[idx] = 1;
        } catch (...) {
            const std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    for (std::size_t b = 0; b < blocks; ++b)
        if (failed[b]) rep.failed_blocks.push_back(b);
    return rep;
}

}  // namespace

std::vector<Elem> encode_blocks(const Matrix& G, std::span<const Elem> messages, Exec exec) {
    const std::size_t k = G.rows();
    const std::size_t n = G.cols();
    const std::size_t blocks = block_count(messages.size(), k, "message");
    std::vector<Elem> out(blocks * n, 0);

#pragma omp parallel for schedule(static) if (exec == Exec::OpenMP)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const auto idx = static_cast<std::size_t>(b);
        const std::vector<Elem> cw = G.left_mul(messages.subspan(idx * k, k));
        std::copy(cw.begin(), cw.end(), out.begin() + static_cast<std::ptrdiff_t>(idx * n));
    }
    return out;
}

DecodeReport decode_blocks(const GeneratorSet& gs, std::span<const Elem> received, Exec exec) {
    const auto n = static_cast<std::size_t>(gs.profile.n);
    const auto k = static_cast<std::size_t>(gs.profile.k);
    const std::size_t blocks = block_count(received.size(), n, "received");
    return run_blocks(blocks, k, exec, [&](std::size_t idx, Elem* out) {
        const ErrorDecodeResult res =
            error_decode(received.subspan(idx * n, n), gs.profile, DecodeAlgo::Syndrome);
        recover_user_message(gs, res.message, out);
    });
}

DecodeReport erasure_decode_blocks(const GeneratorSet& gs, std::span<const Elem> received,
                                   std::span<const int> erasures, Exec exec) {
    const auto n = static_cast<std::size_t>(gs.profile.n);
    const auto k = static_cast<std::size_t>(gs.profile.k);
    const std::size_t blocks = block_count(received.size(), n, "received");
    for (int e : erasures)
        if (e < 0 || e >= gs.profile.n) throw BadRange("erasure position out of range");
    return run_blocks(blocks, k, exec, [&](std::size_t idx, Elem* out) {
        std::vector<std::optional<Elem>> word(n);
        for (std::size_t j = 0; j < n; ++j) word[j] = received[idx * n + j];
        for (int e : erasures) word[static_cast<std::size_t>(e)] = std::nullopt;
        const Polynomial m = erasure_decode(word, gs.profile);
        recover_user_message(gs, m, out);
    });
}

}  // namespace balrs::batch
