// End-to-end tests of the balrs CLI: golden-file comparisons, the exit-code
// taxonomy, and stream round trips through real processes.
//
// argv: <balrs-binary> <golden-dir> <scratch-dir>

#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "balrs/batch.hpp"
#include "balrs/io.hpp"
#include "proc.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace balrs;

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        std::cerr << "FAILED: " << what << "\n";
    }
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: cli_tests <balrs-binary> <golden-dir> <scratch-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path golden = argv[2];
    const fs::path scratch = argv[3];
    fs::remove_all(scratch);
    fs::create_directories(scratch);

    // --- gen reproduces the golden matrix file -----------------------------
    {
        const fs::path out = scratch / "rs6_4.json";
        const auto res = proc::run(cli + " gen --q 7 --k 4 --alpha 3 --out " + q(out), scratch);
        expect(res.exit_code == 0, "gen exits 0 for admissible parameters");
        expect(res.out.find("d = 3  b = 2  g = 2") != std::string::npos, "gen prints d, b, g");
        expect(res.out.find("selector support: 0 1 3 4") != std::string::npos,
               "gen prints the selector support");
        const json got = json::parse(proc::slurp(out));
        const json want = json::parse(proc::slurp(golden / "rs6_4_gf7.json"));
        expect(got == want, "gen output equals the golden matrix file");
    }

    // --- dump-masks matches the golden grids --------------------------------
    {
        const auto res = proc::run(cli + " gen --q 7 --k 4 --alpha 3 --dump-masks", scratch);
        expect(res.exit_code == 0, "gen --dump-masks runs");
        expect(res.out.find(proc::slurp(golden / "mask_a_6_4.txt")) != std::string::npos,
               "candidate mask grid matches golden");
        expect(res.out.find(proc::slurp(golden / "masks_sel_6_4.txt")) != std::string::npos,
               "selected mask grid matches golden");
    }

    // --- verify: golden passes, tampered fails ------------------------------
    {
        const auto res =
            proc::run(cli + " verify --matrix " + q(golden / "rs6_4_gf7.json"), scratch);
        expect(res.exit_code == 0, "verify exits 0 on the golden file");
        expect(res.out.find("FAIL") == std::string::npos, "verify prints no FAIL lines");

        json tampered = json::parse(proc::slurp(golden / "rs6_4_gf7.json"));
        tampered["G"][0][0] = 0;  // zero one nonzero entry
        const fs::path bad = scratch / "tampered.json";
        proc::spit(bad, tampered.dump(2));
        const auto res2 = proc::run(cli + " verify --matrix " + q(bad), scratch);
        expect(res2.exit_code == 1, "verify exits 1 on a tampered file");
        expect(res2.out.find("FAIL  sparsest") != std::string::npos,
               "tampered file fails the sparsest check");
        expect(res2.out.find("FAIL  rows are codewords") != std::string::npos,
               "tampered file fails membership");

        const fs::path junk = scratch / "junk.json";
        proc::spit(junk, "{not json");
        expect(proc::run(cli + " verify --matrix " + q(junk), scratch).exit_code == 3,
               "verify exits 3 on malformed JSON");
        expect(proc::run(cli + " verify --matrix " + q(scratch / "missing.json"), scratch)
                       .exit_code == 3,
               "verify exits 3 on a missing file");
    }

    // --- inadmissible parameters: exit 2 plus suggestions -------------------
    {
        const auto res = proc::run(cli + " gen --q 7 --k 2", scratch);
        expect(res.exit_code == 2, "gen exits 2 for non-integral b");
        expect(res.err.find("nearest admissible k: 3 4") != std::string::npos,
               "gen suggests k in {3,4} for q=7, k=2");

        const fs::path never = scratch / "never.json";
        const auto res2 = proc::run(cli + " gen --q 8 --k 3 --out " + q(never), scratch);
        expect(res2.exit_code == 2, "gen exits 2 for q=8, k=3");
        expect(res2.err.find("nearest admissible k:") != std::string::npos &&
                   res2.err.find(" 1") != std::string::npos,
               "gen suggests at least one admissible k for q=8");
        expect(!fs::exists(never), "no matrix file is written for inadmissible parameters");

        expect(proc::run(cli + " gen --q 7 --k 4 --n 5", scratch).exit_code == 2,
               "gen exits 2 when n is not q-1");
        expect(proc::run(cli + " gen --q 6 --k 2", scratch).exit_code == 3,
               "gen exits 3 when q is not a prime power");
        expect(proc::run(cli + " gen --q 7 --k 4 --alpha 2", scratch).exit_code == 3,
               "gen exits 3 for a non-primitive alpha");
    }

    const fs::path matrix = scratch / "rs6_4.json";

    // --- encode/decode round trip in text mode ------------------------------
    {
        const fs::path msg = scratch / "msg.txt";
        proc::spit(msg, "1 0 0 0\n0 1 0 0\n2 5 0 3\n");
        const fs::path enc = scratch / "enc.txt";
        const auto res = proc::run(cli + " encode --matrix " + q(matrix) + " --in " + q(msg) +
                                       " --out " + q(enc),
                                   scratch);
        expect(res.exit_code == 0, "encode exits 0");
        // unit messages reproduce the generator rows
        expect(proc::slurp(enc).find("4 6 3 0 0 0") == 0, "e_0 encodes to G row 0");

        const fs::path dec = scratch / "dec.txt";
        const auto res2 = proc::run(cli + " decode --matrix " + q(matrix) + " --in " + q(enc) +
                                        " --out " + q(dec),
                                    scratch);
        expect(res2.exit_code == 0, "decode exits 0 on a clean stream");
        expect(proc::slurp(dec) == "1 0 0 0\n0 1 0 0\n2 5 0 3\n", "clean round trip is identity");

        // single error per block stays correctable
        GeneratorSet gs = io::load_generator_set(matrix.string());
        std::vector<Elem> symbols;
        {
            std::istringstream in(proc::slurp(enc));
            symbols = io::read_symbols_text(in, *gs.profile.field);
        }
        symbols[2] = gs.profile.field->add(symbols[2], 3);
        symbols[6 + 5] = gs.profile.field->add(symbols[6 + 5], 1);
        const fs::path noisy = scratch / "noisy.txt";
        {
            std::ostringstream out;
            io::write_symbols_text(out, symbols, 6);
            proc::spit(noisy, out.str());
        }
        const auto res3 = proc::run(cli + " decode --matrix " + q(matrix) + " --in " + q(noisy) +
                                        " --out " + q(scratch / "dec2.txt"),
                                    scratch);
        expect(res3.exit_code == 0, "decode corrects one error per block");
        expect(proc::slurp(scratch / "dec2.txt") == "1 0 0 0\n0 1 0 0\n2 5 0 3\n",
               "corrected round trip is identity");
    }

    // --- erasure decoding through the CLI ------------------------------------
    {
        const fs::path msg = scratch / "emsg.txt";
        proc::spit(msg, "3 1 4 1\n5 6 2 6\n");
        proc::run(cli + " encode --matrix " + q(matrix) + " --in " + q(msg) + " --out " +
                      q(scratch / "eenc.txt"),
                  scratch);
        GeneratorSet gs = io::load_generator_set(matrix.string());
        std::vector<Elem> symbols;
        {
            std::istringstream in(proc::slurp(scratch / "eenc.txt"));
            symbols = io::read_symbols_text(in, *gs.profile.field);
        }
        symbols[1] = 0;  // erased coordinates carry junk
        symbols[4] = 6;
        symbols[6 + 1] = 2;
        symbols[6 + 4] = 0;
        {
            std::ostringstream out;
            io::write_symbols_text(out, symbols, 6);
            proc::spit(scratch / "eras.txt", out.str());
        }
        const auto res = proc::run(cli + " decode --matrix " + q(matrix) + " --in " +
                                       q(scratch / "eras.txt") + " --erasures 1,4 --out " +
                                       q(scratch / "edec.txt"),
                                   scratch);
        expect(res.exit_code == 0, "erasure decode exits 0");
        expect(proc::slurp(scratch / "edec.txt") == "3 1 4 1\n5 6 2 6\n",
               "erasure decode recovers the messages");
    }

    // --- uncorrectable blocks: exit 5, then best-effort ----------------------
    {
        GeneratorSet gs = io::load_generator_set(matrix.string());
        // find a double corruption that is reported as a failure
        std::mt19937 rng(99);
        std::uniform_int_distribution<Elem> symd(0, 6), magd(1, 6);
        std::vector<Elem> block;
        bool found = false;
        while (!found) {
            std::vector<Elem> u{symd(rng), symd(rng), symd(rng), symd(rng)};
            block = gs.G.left_mul(u);
            block[0] = gs.profile.field->add(block[0], magd(rng));
            block[3] = gs.profile.field->add(block[3], magd(rng));
            found = !batch::decode_blocks(gs, block, batch::Exec::Serial).failed_blocks.empty();
        }
        std::ostringstream out;
        io::write_symbols_text(out, block, 6);
        proc::spit(scratch / "bad_block.txt", out.str());
        const auto res = proc::run(cli + " decode --matrix " + q(matrix) + " --in " +
                                       q(scratch / "bad_block.txt") + " --out " +
                                       q(scratch / "bad_dec.txt"),
                                   scratch);
        expect(res.exit_code == 5, "decode exits 5 on an uncorrectable block");
        expect(res.err.find("block 0") != std::string::npos, "decode names the failed block");
        expect(!fs::exists(scratch / "bad_dec.txt"), "no output without --best-effort");

        const auto res2 = proc::run(cli + " decode --matrix " + q(matrix) + " --in " +
                                        q(scratch / "bad_block.txt") + " --best-effort --out " +
                                        q(scratch / "bad_dec2.txt"),
                                    scratch);
        expect(res2.exit_code == 5, "best-effort still exits 5");
        expect(proc::slurp(scratch / "bad_dec2.txt") == "0 0 0 0\n",
               "best-effort zero-fills the failed block");
    }

    // --- framing and format errors -------------------------------------------
    {
        proc::spit(scratch / "short.txt", "1 2 3 4 5\n");
        expect(proc::run(cli + " encode --matrix " + q(matrix) + " --in " +
                             q(scratch / "short.txt"),
                         scratch)
                       .exit_code == 4,
               "encode exits 4 when input is not a multiple of k");
        proc::spit(scratch / "badsym.txt", "1 2 9 4\n");
        expect(proc::run(cli + " encode --matrix " + q(matrix) + " --in " +
                             q(scratch / "badsym.txt"),
                         scratch)
                       .exit_code == 3,
               "encode exits 3 on out-of-field symbols");
        expect(proc::run(cli + " encode --matrix " + q(matrix) + " --format raw --in " +
                             q(scratch / "badsym.txt"),
                         scratch)
                       .exit_code == 3,
               "raw mode exits 3 outside GF(256)");
        proc::spit(scratch / "short_n.txt", "1 2 3 4 5\n");
        expect(proc::run(cli + " decode --matrix " + q(matrix) + " --in " +
                             q(scratch / "short_n.txt"),
                         scratch)
                       .exit_code == 4,
               "decode exits 4 when input is not a multiple of n");
    }

    // --- stdin/stdout streaming when paths are omitted --------------------------
    {
        proc::spit(scratch / "stdin_msg.txt", "1 0 0 0\n");
        const auto res = proc::run(cli + " encode --matrix " + q(matrix), scratch,
                                   (scratch / "stdin_msg.txt").string());
        expect(res.exit_code == 0 && res.out == "4 6 3 0 0 0\n",
               "encode streams stdin to stdout");
    }

    // --- stats report ---------------------------------------------------------
    {
        const auto res = proc::run(cli + " stats --matrix " + q(matrix), scratch);
        expect(res.exit_code == 0, "stats exits 0");
        const json rep = json::parse(res.out);
        expect(rep["column_weights"] == json{{"2", 6}}, "column histogram is {2:6}");
        expect(rep["row_weights"] == json{{"3", 4}}, "row histogram is {3:4}");
        expect(rep["vandermonde_baseline"]["row_weight"] == 6 &&
                   rep["vandermonde_baseline"]["column_weight"] == 4,
               "dense baseline is reported");
    }

    // --- raw byte streams over GF(256) ----------------------------------------
    {
        const fs::path m256 = scratch / "rs255_51.json";
        const auto res =
            proc::run(cli + " gen --q 256 --k 51 --out " + q(m256), scratch);
        expect(res.exit_code == 0, "gen accepts the admissible GF(256) dimension 51");

        std::mt19937 rng(7);
        std::string payload(51 * 4, '\0');
        for (auto& c : payload) c = static_cast<char>(rng() & 0xFF);
        proc::spit(scratch / "payload.bin", payload);
        expect(proc::run(cli + " encode --matrix " + q(m256) + " --format raw --in " +
                             q(scratch / "payload.bin") + " --out " + q(scratch / "enc.bin"),
                         scratch)
                       .exit_code == 0,
               "raw encode exits 0");
        expect(fs::file_size(scratch / "enc.bin") == 255 * 4, "raw encode emits n bytes per block");
        expect(proc::run(cli + " decode --matrix " + q(m256) + " --format raw --in " +
                             q(scratch / "enc.bin") + " --out " + q(scratch / "dec.bin"),
                         scratch)
                       .exit_code == 0,
               "raw decode exits 0");
        expect(proc::slurp(scratch / "dec.bin") == payload, "raw round trip is identity");
    }

    // --- gen -> file -> verify pipeline holds across admissible profiles ------
    {
        bool pipeline_ok = true;
        for (std::uint64_t qq : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 32}) {
            const int n = static_cast<int>(qq) - 1;
            for (int kk = 1; kk <= n; ++kk) {
                if (!mask::admissible(n, kk)) continue;
                const fs::path out =
                    scratch / ("sweep_" + std::to_string(qq) + "_" + std::to_string(kk) + ".json");
                const auto g = proc::run(cli + " gen --q " + std::to_string(qq) + " --k " +
                                             std::to_string(kk) + " --out " + q(out),
                                         scratch);
                const auto v = proc::run(cli + " verify --matrix " + q(out), scratch);
                if (g.exit_code != 0 || v.exit_code != 0) {
                    pipeline_ok = false;
                    std::cerr << "pipeline broke at q=" << qq << " k=" << kk << "\n";
                }
            }
        }
        expect(pipeline_ok, "gen -> verify exits 0 for every admissible pair up to q = 32");
        expect(proc::run(cli + " verify --matrix " + q(scratch / "rs255_51.json"), scratch)
                       .exit_code == 0,
               "the GF(256) matrix file verifies");

        // k = n degenerate profile: d = b = 1
        const fs::path idm = scratch / "identity.json";
        const auto g = proc::run(cli + " gen --q 5 --k 4 --out " + q(idm), scratch);
        expect(g.exit_code == 0 && g.out.find("d = 1  b = 1") != std::string::npos,
               "k = n profile reports d = b = 1");
        expect(proc::run(cli + " verify --matrix " + q(idm), scratch).exit_code == 0,
               "k = n profile verifies");
        const auto one = proc::run(cli + " gen --q 2 --k 1", scratch);
        expect(one.exit_code == 0, "the 1x1 GF(2) matrix is constructible");
    }

    // --- ext-modulus flag -------------------------------------------------------
    {
        const auto ok = proc::run(
            cli + " gen --q 16 --ext-modulus 1,1,0,0,1 --k 6 --out " + q(scratch / "gf16.json"),
            scratch);
        expect(ok.exit_code == 0, "gen accepts an explicit irreducible modulus");
        expect(proc::run(cli + " gen --q 16 --ext-modulus 1,0,0,0,1 --k 6", scratch).exit_code == 3,
               "gen exits 3 on a reducible modulus");
    }

    // --- stats for the GF(11) profile -------------------------------------------
    {
        proc::run(cli + " gen --q 11 --k 5 --out " + q(scratch / "rs10_5.json"), scratch);
        const auto res = proc::run(cli + " stats --matrix " + q(scratch / "rs10_5.json"), scratch);
        const json rep = json::parse(res.out);
        expect(rep["column_weights"] == json{{"3", 10}} && rep["row_weights"] == json{{"6", 5}},
               "GF(11) histograms are {3:10} and {6:5}");
    }

    // --- clean streams round-trip at scale (raw mode) ----------------------------
    {
        const fs::path m256 = scratch / "rs255_51.json";
        std::mt19937 rng(4242);
        std::string payload(51 * 1961, '\0');  // 100,011 symbols
        for (auto& c : payload) c = static_cast<char>(rng() & 0xFF);
        proc::spit(scratch / "big.bin", payload);
        expect(proc::run(cli + " encode --matrix " + q(m256) + " --format raw --in " +
                             q(scratch / "big.bin") + " --out " + q(scratch / "big_enc.bin"),
                         scratch)
                       .exit_code == 0,
               "bulk raw encode exits 0");
        expect(proc::run(cli + " decode --matrix " + q(m256) + " --format raw --in " +
                             q(scratch / "big_enc.bin") + " --out " + q(scratch / "big_dec.bin"),
                         scratch)
                       .exit_code == 0,
               "bulk raw decode exits 0");
        expect(proc::slurp(scratch / "big_dec.bin") == payload,
               "10^5-symbol clean stream round-trips exactly");
    }

    // --- text and raw agree where both apply -----------------------------------
    {
        const fs::path m256 = scratch / "rs255_51.json";
        GeneratorSet gs = io::load_generator_set(m256.string());
        std::mt19937 rng(8);
        std::vector<Elem> msgs(51 * 2);
        for (auto& x : msgs) x = rng() & 0xFF;
        {
            std::ostringstream text;
            io::write_symbols_text(text, msgs, 51);
            proc::spit(scratch / "m.txt", text.str());
            std::ostringstream raw;
            io::write_symbols_raw(raw, msgs);
            proc::spit(scratch / "m.bin", raw.str());
        }
        proc::run(cli + " encode --matrix " + q(m256) + " --in " + q(scratch / "m.txt") +
                      " --out " + q(scratch / "m_enc.txt"),
                  scratch);
        proc::run(cli + " encode --matrix " + q(m256) + " --format raw --in " +
                      q(scratch / "m.bin") + " --out " + q(scratch / "m_enc.bin"),
                  scratch);
        std::istringstream tin(proc::slurp(scratch / "m_enc.txt"));
        const std::vector<Elem> from_text = io::read_symbols_text(tin, *gs.profile.field);
        std::istringstream rin(proc::slurp(scratch / "m_enc.bin"));
        const std::vector<Elem> from_raw = io::read_symbols_raw(rin);
        expect(from_text == from_raw, "text and raw encodings agree symbol-for-symbol");
    }

    if (checks_failed == 0) {
        std::cout << "all cli tests passed\n";
        return 0;
    }
    std::cerr << checks_failed << " cli check(s) failed\n";
    return 1;
}
