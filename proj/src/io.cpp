#include "balrs/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace balrs::io {

using nlohmann::json;

nlohmann::json profile_to_json(const CodeProfile& profile) {
    const Field& F = *profile.field;
    json j;
    j["p"] = F.characteristic();
    j["m"] = F.extension_degree();
    if (F.extension_degree() > 1)
        j["modulus"] = F.modulus();
    else
        j["modulus"] = nullptr;
    j["alpha"] = F.alpha();
    j["n"] = profile.n;
    j["k"] = profile.k;
    return j;
}

CodeProfile profile_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("profile must be a JSON object");
    const auto get_nonneg = [&](const char* key) -> std::uint64_t {
        if (!j.contains(key)) throw FormatError(std::string("profile is missing '") + key + "'");
        const json& v = j[key];
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        throw FormatError(std::string("profile field '") + key +
                          "' must be a nonnegative integer");
    };

    const std::uint64_t p = get_nonneg("p");
    const auto m = static_cast<unsigned>(get_nonneg("m"));
    std::optional<std::vector<Elem>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        if (!j["modulus"].is_array()) throw FormatError("modulus must be an array or null");
        modulus = j["modulus"].get<std::vector<Elem>>();
        if (m == 1 && !modulus->empty()) throw FormatError("prime fields take a null modulus");
    }
    const FieldHandle field =
        Field::make(p, m, std::move(modulus), static_cast<Elem>(get_nonneg("alpha")));

    const auto n = static_cast<int>(get_nonneg("n"));
    const auto k = static_cast<int>(get_nonneg("k"));
    if (n != static_cast<int>(field->order()) - 1)
        throw FormatError("profile n must equal p^m - 1");
    if (k < 1 || k > n) throw FormatError("profile k must lie in [1, n]");
    return CodeProfile::make(field, k);
}

namespace {

json matrix_to_json(const Matrix& mat) {
    json rows = json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const FieldHandle& field, std::size_t rows,
                        std::size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw FormatError(std::string(name) + " must be a " + std::to_string(rows) + "-row array");
    Matrix mat(field, rows, cols);
    const std::uint64_t q = field->order();
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw FormatError(std::string(name) + " row " + std::to_string(r) +
                              " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t v = 0;
            if (row[c].is_number_unsigned())
                v = row[c].get<std::uint64_t>();
            else if (row[c].is_number_integer() && row[c].get<std::int64_t>() >= 0)
                v = static_cast<std::uint64_t>(row[c].get<std::int64_t>());
            else
                throw FormatError(std::string(name) + " entries must be nonnegative integers");
            if (v >= q) throw FormatError(std::string(name) + " entry exceeds the field order");
            mat.at(r, c) = static_cast<Elem>(v);
        }
    }
    return mat;
}

}  // namespace

nlohmann::json generator_set_to_json(const GeneratorSet& gs) {
    json j;
    j["profile"] = profile_to_json(gs.profile);
    j["P"] = matrix_to_json(gs.P);
    j["G"] = matrix_to_json(gs.G);
    return j;
}

GeneratorSet generator_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("profile") || !j.contains("P") || !j.contains("G"))
        throw FormatError("matrix file must contain 'profile', 'P' and 'G'");
    CodeProfile profile = profile_from_json(j["profile"]);
    const auto k = static_cast<std::size_t>(profile.k);
    const auto n = static_cast<std::size_t>(profile.n);
    Matrix P = matrix_from_json(j["P"], profile.field, k, k, "P");
    Matrix G = matrix_from_json(j["G"], profile.field, k, n, "G");
    return assemble_generator_set(profile, std::move(P), std::move(G));
}

GeneratorSet load_generator_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return generator_set_from_json(j);
}

void save_generator_set(const GeneratorSet& gs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << generator_set_to_json(gs).dump(2) << '\n';
}

std::vector<Elem> read_symbols_text(std::istream& in, const Field& field) {
    std::vector<Elem> out;
    std::string tok;
    while (in >> tok) {
        std::uint64_t v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw FormatError("bad symbol '" + tok + "'");
        } catch (const std::exception&) {
            throw FormatError("bad symbol '" + tok + "'");
        }
        if (v >= field.order())
            throw FormatError("symbol " + tok + " is outside GF(" +
                              std::to_string(field.order()) + ")");
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

void write_symbols_text(std::ostream& out, std::span<const Elem> symbols, std::size_t per_line) {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const bool eol = (per_line > 0 && (i + 1) % per_line == 0) || i + 1 == symbols.size();
        out << symbols[i] << (eol ? '\n' : ' ');
    }
}

std::vector<Elem> read_symbols_raw(std::istream& in) {
    std::vector<Elem> out;
    char c;
    while (in.get(c)) out.push_back(static_cast<std::uint8_t>(c));
    return out;
}

void write_symbols_raw(std::ostream& out, std::span<const Elem> symbols) {
    for (Elem s : symbols) out.put(static_cast<char>(static_cast<std::uint8_t>(s)));
}

}  // namespace balrs::io
