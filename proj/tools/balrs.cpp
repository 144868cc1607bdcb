// balrs: construct, verify and use balanced generator matrices for cyclic
// Reed-Solomon codes.
//
// Exit codes: 0 ok, 1 verification failure, 2 inadmissible parameters,
// 3 format/field error, 4 framing error, 5 decode failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "balrs/batch.hpp"
#include "balrs/io.hpp"

using namespace balrs;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitFormat = 3;
constexpr int kExitFraming = 4;
constexpr int kExitDecode = 5;

std::vector<int> admissible_suggestions(int n, int k_requested) {
    std::vector<int> interior;
    for (int k = 2; k < n; ++k)
        if (mask::admissible(n, k)) interior.push_back(k);
    if (interior.empty()) return {1, n};  // always admissible (b = 1)
    std::sort(interior.begin(), interior.end(), [&](int a, int b) {
        const int da = std::abs(a - k_requested), db = std::abs(b - k_requested);
        return da != db ? da < db : a < b;
    });
    if (interior.size() > 8) interior.resize(8);
    std::sort(interior.begin(), interior.end());
    return interior;
}

std::vector<Elem> parse_modulus(const std::string& text) {
    std::vector<Elem> coeffs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            coeffs.push_back(static_cast<Elem>(v));
        } catch (const std::exception&) {
            throw FormatError("bad modulus coefficient '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw FormatError("empty modulus");
    return coeffs;
}

std::vector<int> parse_positions(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw FormatError("bad erasure position '" + tok + "'");
        }
    }
    return out;
}

struct StreamIn {
    std::ifstream file;
    std::istream& get(const std::string& path) {
        if (path.empty()) return std::cin;
        file.open(path, std::ios::binary);
        if (!file) throw FormatError("cannot open " + path);
        return file;
    }
};

struct StreamOut {
    std::ofstream file;
    std::ostream& get(const std::string& path) {
        if (path.empty()) return std::cout;
        file.open(path, std::ios::binary);
        if (!file) throw FormatError("cannot write " + path);
        return file;
    }
};

std::vector<Elem> read_stream(std::istream& in, const Field& field, const std::string& format) {
    if (format == "raw") {
        if (field.order() != 256)
            throw FormatError("raw format requires GF(256)");
        return io::read_symbols_raw(in);
    }
    return io::read_symbols_text(in, field);
}

void write_stream(std::ostream& out, std::span<const Elem> symbols, const Field& field,
                  const std::string& format, std::size_t per_line) {
    if (format == "raw") {
        if (field.order() != 256) throw FormatError("raw format requires GF(256)");
        io::write_symbols_raw(out, symbols);
    } else {
        io::write_symbols_text(out, symbols, per_line);
    }
}

int cmd_gen(std::uint64_t q, int k, std::optional<int> n_opt, const std::string& modulus_text,
            std::optional<Elem> alpha, const std::string& out_path, bool dump_masks) {
    std::optional<std::vector<Elem>> modulus;
    if (!modulus_text.empty()) modulus = parse_modulus(modulus_text);

    FieldHandle field;
    try {
        field = Field::make_from_order(q, std::move(modulus), alpha);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    const int n = static_cast<int>(field->order()) - 1;
    if (n_opt && *n_opt != n) {
        std::cerr << "error: the cyclic construction requires n = q-1 = " << n << "\n";
        return kExitInadmissible;
    }
    if (k < 1 || k > n) {
        std::cerr << "error: k must lie in [1, " << n << "]\n";
        return kExitInadmissible;
    }
    if (!mask::admissible(n, k)) {
        std::cerr << "error: k*(n-k+1)/n is not an integer for k = " << k << ", n = " << n << "\n";
        std::cerr << "nearest admissible k:";
        for (int s : admissible_suggestions(n, k)) std::cerr << " " << s;
        std::cerr << "\n";
        return kExitInadmissible;
    }

    const CodeProfile profile = CodeProfile::make(field, k);
    const GeneratorSet gs = build_generator_set(profile);
    std::cout << "RS[" << n << "," << k << "] over GF(" << q << "), alpha = " << field->alpha()
              << "\n";
    std::cout << "d = " << gs.params.d << "  b = " << gs.params.b << "  g = " << gs.params.g
              << "\n";
    std::cout << "selector support:";
    for (int j : gs.selector.support) std::cout << " " << j;
    std::cout << "\n";
    if (dump_masks) {
        std::cout << "candidate masks:\n" << mask::to_ascii(mask::build_circulant(gs.params));
        std::cout << "selected masks:\n" << mask::to_ascii(gs.masks);
    }
    if (!out_path.empty()) {
        io::save_generator_set(gs, out_path);
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << io::generator_set_to_json(gs).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& matrix_path) {
    const GeneratorSet gs = io::load_generator_set(matrix_path);
    const VerifyReport rep = verify_generator_set(gs);
    const auto line = [](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    };
    line("sparsest rows (weight d)", rep.sparsest);
    line("balanced columns (weight b)", rep.balanced_columns);
    std::cout << (rep.rank == static_cast<std::size_t>(rep.expected_rank) ? "PASS" : "FAIL")
              << "  rank == k (" << rep.rank << "/" << rep.expected_rank << ")\n";
    line("support matches masks", rep.support_match);
    line("rows are codewords", rep.row_membership);
    line("G == P * G_RS", rep.product_consistent);
    if (!rep.all_passed()) {
        std::cerr << "verification failed: " << rep.witness << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_encode(const std::string& matrix_path, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
    const GeneratorSet gs = io::load_generator_set(matrix_path);
    StreamIn sin;
    const std::vector<Elem> msgs = read_stream(sin.get(in_path), *gs.profile.field, format);
    if (msgs.size() % static_cast<std::size_t>(gs.profile.k) != 0) {
        std::cerr << "error: input has " << msgs.size() << " symbols, not a multiple of k = "
                  << gs.profile.k << "\n";
        return kExitFraming;
    }
    const std::vector<Elem> out = batch::encode_blocks(gs.G, msgs, batch::Exec::OpenMP);
    StreamOut sout;
    write_stream(sout.get(out_path), out, *gs.profile.field, format,
                 static_cast<std::size_t>(gs.profile.n));
    return kExitOk;
}

int cmd_decode(const std::string& matrix_path, const std::string& in_path,
               const std::string& out_path, const std::string& format,
               const std::string& erasures_text, bool best_effort) {
    const GeneratorSet gs = io::load_generator_set(matrix_path);
    StreamIn sin;
    const std::vector<Elem> received = read_stream(sin.get(in_path), *gs.profile.field, format);
    if (received.size() % static_cast<std::size_t>(gs.profile.n) != 0) {
        std::cerr << "error: input has " << received.size()
                  << " symbols, not a multiple of n = " << gs.profile.n << "\n";
        return kExitFraming;
    }

    batch::DecodeReport rep;
    if (!erasures_text.empty()) {
        const std::vector<int> erasures = parse_positions(erasures_text);
        rep = batch::erasure_decode_blocks(gs, received, erasures, batch::Exec::OpenMP);
    } else {
        rep = batch::decode_blocks(gs, received, batch::Exec::OpenMP);
    }

    if (!rep.failed_blocks.empty() && !best_effort) {
        std::cerr << "decode failure in block " << rep.failed_blocks.front() << " ("
                  << rep.failed_blocks.size() << " of " << received.size() / static_cast<std::size_t>(gs.profile.n)
                  << " blocks failed)\n";
        return kExitDecode;
    }
    StreamOut sout;
    write_stream(sout.get(out_path), rep.messages, *gs.profile.field, format,
                 static_cast<std::size_t>(gs.profile.k));
    if (!rep.failed_blocks.empty()) {
        std::cerr << "decode failure in block " << rep.failed_blocks.front()
                  << "; failed blocks zero-filled\n";
        return kExitDecode;
    }
    return kExitOk;
}

int cmd_stats(const std::string& matrix_path) {
    const GeneratorSet gs = io::load_generator_set(matrix_path);
    json row_hist = json::object(), col_hist = json::object();
    for (std::size_t r = 0; r < gs.G.rows(); ++r) {
        const std::string w = std::to_string(gs.G.row_weight(r));
        row_hist[w] = row_hist.value(w, 0) + 1;
    }
    for (std::size_t c = 0; c < gs.G.cols(); ++c) {
        const std::string w = std::to_string(gs.G.col_weight(c));
        col_hist[w] = col_hist.value(w, 0) + 1;
    }
    json report;
    report["n"] = gs.profile.n;
    report["k"] = gs.profile.k;
    report["d"] = gs.params.d;
    report["b"] = gs.params.b;
    report["row_weights"] = row_hist;          // update cost per message symbol
    report["column_weights"] = col_hist;       // per-node compute load
    report["vandermonde_baseline"] = {{"row_weight", gs.profile.n},
                                      {"column_weight", gs.profile.k}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced generator matrices for cyclic Reed-Solomon codes"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "construct a balanced generator matrix");
    std::uint64_t q = 0;
    int k = 0;
    std::optional<int> n_opt;
    std::string modulus_text, out_path;
    std::optional<Elem> alpha;
    bool dump_masks = false;
    gen->add_option("--q", q, "field order (prime power)")->required();
    gen->add_option("--k", k, "code dimension")->required();
    gen->add_option("--n", n_opt, "code length (must equal q-1)");
    gen->add_option("--ext-modulus", modulus_text,
                    "irreducible modulus, comma-separated coefficients low-to-high");
    gen->add_option("--alpha", alpha, "primitive element (canonical integer)");
    gen->add_option("--out", out_path, "output matrix file (stdout JSON when omitted)");
    gen->add_flag("--dump-masks", dump_masks, "print the candidate and selected mask grids");

    // verify
    auto* verify = app.add_subcommand("verify", "check all structural properties of a matrix file");
    std::string verify_path;
    verify->add_option("--matrix", verify_path, "matrix file")->required();

    // encode
    auto* encode = app.add_subcommand("encode", "encode blocks of k symbols");
    std::string enc_matrix, enc_in, enc_out, enc_format = "text";
    encode->add_option("--matrix", enc_matrix, "matrix file")->required();
    encode->add_option("--in", enc_in, "input stream (stdin when omitted)");
    encode->add_option("--out", enc_out, "output stream (stdout when omitted)");
    encode->add_option("--format", enc_format, "text|raw (raw is GF(256) only)")
        ->check(CLI::IsMember({"text", "raw"}));

    // decode
    auto* decode = app.add_subcommand("decode", "decode blocks of n symbols");
    std::string dec_matrix, dec_in, dec_out, dec_format = "text", dec_erasures;
    bool best_effort = false;
    decode->add_option("--matrix", dec_matrix, "matrix file")->required();
    decode->add_option("--in", dec_in, "input stream (stdin when omitted)");
    decode->add_option("--out", dec_out, "output stream (stdout when omitted)");
    decode->add_option("--format", dec_format, "text|raw (raw is GF(256) only)")
        ->check(CLI::IsMember({"text", "raw"}));
    decode->add_option("--erasures", dec_erasures,
                       "comma-separated erased positions, applied to every block");
    decode->add_flag("--best-effort", best_effort, "emit output with failed blocks zero-filled");

    // stats
    auto* stats = app.add_subcommand("stats", "load-balancing report for a matrix file");
    std::string stats_path;
    stats->add_option("--matrix", stats_path, "matrix file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(q, k, n_opt, modulus_text, alpha, out_path, dump_masks);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (encode->parsed()) return cmd_encode(enc_matrix, enc_in, enc_out, enc_format);
        if (decode->parsed())
            return cmd_decode(dec_matrix, dec_in, dec_out, dec_format, dec_erasures, best_effort);
        if (stats->parsed()) return cmd_stats(stats_path);
    } catch (const NonIntegralBalance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInadmissible;
    } catch (const BadRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInadmissible;
    } catch (const DecodeFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDecode;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFraming;
    } catch (const Error& e) {
        // field construction and file format problems
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return kExitOk;
}
