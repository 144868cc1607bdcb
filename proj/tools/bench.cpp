// Benchmark of the block kernels: serial reference vs OpenMP, encode and
// decode, printed as blocks/s with the parallel speedup.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "balrs/batch.hpp"

using namespace balrs;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    std::uint64_t q = 256;
    int k = 205;
    std::size_t blocks = 2000;
    int errors = -1;  // default: full correction radius
    int reps = 3;
    app.add_option("--q", q, "field order");
    app.add_option("--k", k, "dimension (must be admissible)");
    app.add_option("--blocks", blocks, "number of message blocks");
    app.add_option("--errors", errors, "errors injected per block (default: radius)");
    app.add_option("--reps", reps, "repetitions, best time wins");
    CLI11_PARSE(app, argc, argv);

    const GeneratorSet gs = build_generator_set(CodeProfile::make(Field::make_from_order(q), k));
    const int n = gs.profile.n;
    const int t = errors < 0 ? gs.profile.correctable_errors() : errors;

    std::mt19937 rng(1234);
    std::uniform_int_distribution<Elem> symd(0, static_cast<Elem>(q - 1));
    std::vector<Elem> msgs(blocks * static_cast<std::size_t>(k));
    for (auto& x : msgs) x = symd(rng);

    std::vector<Elem> stream = batch::encode_blocks(gs.G, msgs, batch::Exec::Serial);
    std::uniform_int_distribution<int> posd(0, n - 1);
    std::uniform_int_distribution<Elem> magd(1, static_cast<Elem>(q - 1));
    for (std::size_t b = 0; b < blocks; ++b) {
        std::vector<int> used;
        for (int e = 0; e < t; ++e) {
            int pos = posd(rng);
            while (std::find(used.begin(), used.end(), pos) != used.end()) pos = posd(rng);
            used.push_back(pos);
            Elem& sym = stream[b * static_cast<std::size_t>(n) + static_cast<std::size_t>(pos)];
            sym = gs.profile.field->add(sym, magd(rng));
        }
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("RS[%d,%d] over GF(%llu), %zu blocks, %d errors/block, %d thread(s)\n", n, k,
                static_cast<unsigned long long>(q), blocks, t, threads);

    const double enc_serial =
        time_best_of(reps, [&] { batch::encode_blocks(gs.G, msgs, batch::Exec::Serial); });
    const double enc_parallel =
        time_best_of(reps, [&] { batch::encode_blocks(gs.G, msgs, batch::Exec::OpenMP); });
    std::printf("encode  serial %10.1f blocks/s   openmp %10.1f blocks/s   speedup %.2fx\n",
                blocks / enc_serial, blocks / enc_parallel, enc_serial / enc_parallel);

    const double dec_serial =
        time_best_of(reps, [&] { batch::decode_blocks(gs, stream, batch::Exec::Serial); });
    const double dec_parallel =
        time_best_of(reps, [&] { batch::decode_blocks(gs, stream, batch::Exec::OpenMP); });
    std::printf("decode  serial %10.1f blocks/s   openmp %10.1f blocks/s   speedup %.2fx\n",
                blocks / dec_serial, blocks / dec_parallel, dec_serial / dec_parallel);

    // correctness tripwire: the two paths must agree exactly
    const auto a = batch::decode_blocks(gs, stream, batch::Exec::Serial);
    const auto b = batch::decode_blocks(gs, stream, batch::Exec::OpenMP);
    if (a.messages != b.messages || a.messages != msgs || !a.failed_blocks.empty()) {
        std::fprintf(stderr, "kernel outputs disagree\n");
        return 1;
    }
    return 0;
}
