#ifndef BALRS_BATCH_HPP
#define BALRS_BATCH_HPP

#include "balrs/balanced.hpp"

namespace balrs::batch {

/* Block-parallel kernels over independent codeword blocks. Each kernel has a
   serial reference implementation; the OpenMP variants must produce
   bit-identical output and are checked against the serial path in tests. */

enum class Exec {
    Serial,  // reference implementation
    OpenMP,  // parallel-for over blocks
};

/// messages holds whole blocks of G.rows() symbols; returns blocks of G.cols().
/// Throws DimensionMismatch when the input is not a multiple of the block size.
std::vector<Elem> encode_blocks(const Matrix& G, std::span<const Elem> messages, Exec exec);

struct DecodeReport {
    std::vector<Elem> messages;              // blocks of k; failed blocks zero-filled
    std::vector<std::size_t> failed_blocks;  // sorted block indices
};

/// Bounded-distance decode of blocks of n received symbols back to user
/// messages (syndrome decoder, then the cached P-inverse).
DecodeReport decode_blocks(const GeneratorSet& gs, std::span<const Elem> received, Exec exec);

/// Erasure decode with the same erased positions applied to every block.
DecodeReport erasure_decode_blocks(const GeneratorSet& gs, std::span<const Elem> received,
                                   std::span<const int> erasures, Exec exec);

}  // namespace balrs::batch

#endif
