#ifndef BALRS_IO_HPP
#define BALRS_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "balrs/balanced.hpp"

namespace balrs::io {

// Profile document: {p, m, modulus: [ints low-to-high] | null, alpha, n, k}.
// Matrix document: {profile, P: [[int]], G: [[int]]} with canonical element
// encoding. Loading verifies n = p^m - 1 and all structural dimensions.

nlohmann::json profile_to_json(const CodeProfile& profile);
CodeProfile profile_from_json(const nlohmann::json& j);

nlohmann::json generator_set_to_json(const GeneratorSet& gs);
GeneratorSet generator_set_from_json(const nlohmann::json& j);

GeneratorSet load_generator_set(const std::string& path);
void save_generator_set(const GeneratorSet& gs, const std::string& path);

// symbol streams: whitespace-separated canonical integers (text) or one byte
// per symbol (raw, GF(256) only)
std::vector<Elem> read_symbols_text(std::istream& in, const Field& field);
void write_symbols_text(std::ostream& out, std::span<const Elem> symbols,
                        std::size_t per_line);
std::vector<Elem> read_symbols_raw(std::istream& in);
void write_symbols_raw(std::ostream& out, std::span<const Elem> symbols);

}  // namespace balrs::io

#endif
