#include <doctest.h>

#include <algorithm>
#include <random>

#include "balrs/rscode.hpp"
#include "fixtures.hpp"

using namespace balrs;

namespace {

CodeProfile rs64() { return CodeProfile::make(Field::make(7, 1, std::nullopt, 3), 4); }

std::vector<Elem> fixture_g_row(int r) {
    return {fixtures::kG[static_cast<std::size_t>(r)].begin(),
            fixtures::kG[static_cast<std::size_t>(r)].end()};
}

std::vector<Elem> random_message(std::mt19937& rng, const CodeProfile& p) {
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(p.field->order() - 1));
    std::vector<Elem> m(static_cast<std::size_t>(p.k));
    for (auto& x : m) x = dist(rng);
    return m;
}

int hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

}  // namespace

TEST_CASE("profile construction pins n to q-1") {
    const CodeProfile p = rs64();
    CHECK(p.n == 6);
    CHECK(p.distance() == 3);
    CHECK(p.correctable_errors() == 1);
    CHECK_THROWS_AS(CodeProfile::make(Field::make(7), 0), BadRange);
    CHECK_THROWS_AS(CodeProfile::make(Field::make(7), 7), BadRange);
}

TEST_CASE("the Vandermonde generator lists powers of alpha") {
    const CodeProfile p = rs64();
    const Matrix G = vandermonde_generator(p);
    for (int j = 0; j < 6; ++j) CHECK(G.at(0, static_cast<std::size_t>(j)) == 1);
    const std::vector<Elem> row1{1, 3, 2, 6, 4, 5};  // powers of 3 mod 7
    for (int j = 0; j < 6; ++j)
        CHECK(G.at(1, static_cast<std::size_t>(j)) == row1[static_cast<std::size_t>(j)]);
}

TEST_CASE("encoding evaluates the message polynomial") {
    const CodeProfile p = rs64();
    const Matrix G = vandermonde_generator(p);
    CHECK(encode(std::vector<Elem>{1, 0, 0, 0}, G) == std::vector<Elem>(6, 1));
    CHECK(encode(std::vector<Elem>{1, 4, 1, 1}, G) == std::vector<Elem>{0, 0, 0, 4, 6, 3});
    CHECK_THROWS_AS(encode(std::vector<Elem>{1, 2}, G), DimensionMismatch);

    // coefficients of t(x) with prescribed roots force zeros at those coordinates
    std::mt19937 rng(11);
    const Field& F = *p.field;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> pos{0, 1, 2, 3, 4, 5};
        std::shuffle(pos.begin(), pos.end(), rng);
        pos.resize(3);  // l = k-1 roots
        std::vector<Elem> roots;
        for (int j : pos) roots.push_back(F.exp_alpha(j));
        const Polynomial t = Polynomial::from_roots(p.field, roots);
        std::vector<Elem> msg(4, 0);
        for (std::size_t i = 0; i < 4; ++i) msg[i] = t.coeff(i);
        const std::vector<Elem> cw = encode(msg, G);
        for (int j = 0; j < 6; ++j) {
            const bool zero_here = std::find(pos.begin(), pos.end(), j) != pos.end();
            CHECK((cw[static_cast<std::size_t>(j)] == 0) == zero_here);
        }
    }
}

TEST_CASE("membership testing accepts codewords and rejects perturbations") {
    const CodeProfile p = rs64();
    for (int r = 0; r < 4; ++r) CHECK(is_codeword(fixture_g_row(r), p));
    CHECK(is_codeword(std::vector<Elem>(6, 0), p));

    std::vector<Elem> bad = fixture_g_row(0);
    bad[0] = p.field->add(bad[0], 1);
    CHECK(!is_codeword(bad, p));

    // cyclic shifts of codewords stay in the code
    std::mt19937 rng(12);
    const Matrix G = vandermonde_generator(p);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> cw = encode(random_message(rng, p), G);
        std::rotate(cw.begin(), cw.begin() + 1, cw.end());
        CHECK(is_codeword(cw, p));
    }
}

TEST_CASE("codeword polynomials vanish on the syndrome zero set") {
    std::mt19937 rng(13);
    for (std::uint64_t q : {7, 11, 16}) {
        auto f = Field::make_from_order(q);
        const int n = static_cast<int>(q) - 1;
        const CodeProfile p = CodeProfile::make(f, std::max(1, n / 2));
        const Matrix G = vandermonde_generator(p);
        for (int trial = 0; trial < 25; ++trial) {
            const std::vector<Elem> cw = encode(random_message(rng, p), G);
            for (int l = 1; l <= p.n - p.k; ++l) {
                Elem acc = 0;
                const Elem x = f->exp_alpha(l);
                for (std::size_t j = cw.size(); j-- > 0;) acc = f->add(f->mul(acc, x), cw[j]);
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("erasure decoding recovers the transform rows of the worked example") {
    const CodeProfile p = rs64();
    std::vector<std::optional<Elem>> word(6);
    for (int j = 0; j < 6; ++j) word[static_cast<std::size_t>(j)] = fixture_g_row(0)[static_cast<std::size_t>(j)];
    // up to n-k = 2 coordinates may be lost
    word[4] = word[5] = std::nullopt;
    const Polynomial m = erasure_decode(word, p);
    CHECK(m.coeffs() == std::vector<Elem>{1, 3, 1, 6});

    // a third erasure drops below k survivors
    word[3] = std::nullopt;
    CHECK_THROWS_AS(erasure_decode(word, p), TooManyErasures);
}

TEST_CASE("erasure decoding round-trips, detects shortfalls and inconsistency") {
    const CodeProfile p = rs64();
    const Matrix G = vandermonde_generator(p);
    std::mt19937 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const std::vector<Elem> msg = random_message(rng, p);
        const std::vector<Elem> cw = encode(msg, G);
        std::vector<std::optional<Elem>> word(cw.begin(), cw.end());
        const Polynomial m = erasure_decode(word, p);  // no erasures
        for (std::size_t i = 0; i < 4; ++i) CHECK(m.coeff(i) == msg[i]);

        std::vector<int> pos{0, 1, 2, 3, 4, 5};
        std::shuffle(pos.begin(), pos.end(), rng);
        word[static_cast<std::size_t>(pos[0])] = std::nullopt;
        word[static_cast<std::size_t>(pos[1])] = std::nullopt;
        const Polynomial m2 = erasure_decode(word, p);
        for (std::size_t i = 0; i < 4; ++i) CHECK(m2.coeff(i) == msg[i]);

        word[static_cast<std::size_t>(pos[2])] = std::nullopt;  // k-1 survivors
        CHECK_THROWS_AS(erasure_decode(word, p), TooManyErasures);
    }

    // an error beyond the declared erasures trips the cross-check
    const std::vector<Elem> cw = encode(std::vector<Elem>{1, 2, 3, 4}, G);
    std::vector<std::optional<Elem>> word(cw.begin(), cw.end());
    word[0] = std::nullopt;
    word[5] = p.field->add(*word[5], 2);
    CHECK_THROWS_AS(erasure_decode(word, p), Inconsistent);
}

TEST_CASE("both decoders correct single errors in the small code") {
    const CodeProfile p = rs64();
    const Matrix G = vandermonde_generator(p);
    std::mt19937 rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        const std::vector<Elem> msg = random_message(rng, p);
        std::vector<Elem> cw = encode(msg, G);
        const std::vector<Elem> clean = cw;

        std::uniform_int_distribution<int> posd(0, 5);
        std::uniform_int_distribution<Elem> magd(1, 6);
        const int pos = posd(rng);
        const Elem mag = magd(rng);
        cw[static_cast<std::size_t>(pos)] = p.field->add(cw[static_cast<std::size_t>(pos)], mag);

        for (DecodeAlgo algo : {DecodeAlgo::Syndrome, DecodeAlgo::Gao}) {
            const ErrorDecodeResult res = error_decode(cw, p, algo);
            for (std::size_t i = 0; i < 4; ++i) CHECK(res.message.coeff(i) == msg[i]);
            CHECK(res.error_positions == std::vector<int>{pos});
            CHECK(res.error[static_cast<std::size_t>(pos)] == mag);
        }
        // no errors: identity recovery
        const ErrorDecodeResult res = error_decode(clean, p, DecodeAlgo::Syndrome);
        CHECK(res.error_positions.empty());
        for (std::size_t i = 0; i < 4; ++i) CHECK(res.message.coeff(i) == msg[i]);
    }
}

TEST_CASE("decoders agree at full correction radius on RS[10,5]") {
    auto f = Field::make(11);
    const CodeProfile p = CodeProfile::make(f, 5);
    const Matrix G = vandermonde_generator(p);
    std::mt19937 rng(16);
    std::uniform_int_distribution<int> posd(0, 9);
    std::uniform_int_distribution<Elem> magd(1, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const std::vector<Elem> msg = random_message(rng, p);
        std::vector<Elem> cw = encode(msg, G);
        int e1 = posd(rng), e2 = posd(rng);
        while (e2 == e1) e2 = posd(rng);
        cw[static_cast<std::size_t>(e1)] = f->add(cw[static_cast<std::size_t>(e1)], magd(rng));
        cw[static_cast<std::size_t>(e2)] = f->add(cw[static_cast<std::size_t>(e2)], magd(rng));

        const ErrorDecodeResult syn = error_decode(cw, p, DecodeAlgo::Syndrome);
        const ErrorDecodeResult gao = error_decode(cw, p, DecodeAlgo::Gao);
        CHECK(syn.message == gao.message);
        CHECK(syn.error == gao.error);
        for (std::size_t i = 0; i < 5; ++i) CHECK(syn.message.coeff(i) == msg[i]);
    }
}

TEST_CASE("beyond-radius patterns fail loudly or miscorrect within contract") {
    const CodeProfile p = rs64();  // t = 1
    const Matrix G = vandermonde_generator(p);
    std::mt19937 rng(17);
    int failures = 0, miscorrections = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Elem> cw = encode(random_message(rng, p), G);
        std::vector<int> pos{0, 1, 2, 3, 4, 5};
        std::shuffle(pos.begin(), pos.end(), rng);
        std::uniform_int_distribution<Elem> magd(1, 6);
        for (int i = 0; i < 2; ++i)  // t + 1 errors
            cw[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] =
                p.field->add(cw[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])], magd(rng));
        for (DecodeAlgo algo : {DecodeAlgo::Syndrome, DecodeAlgo::Gao}) {
            try {
                const ErrorDecodeResult res = error_decode(cw, p, algo);
                // any returned codeword must lie within the decoding radius
                std::vector<Elem> padded(4, 0);
                for (std::size_t i = 0; i < 4; ++i) padded[i] = res.message.coeff(i);
                CHECK(hamming_distance(encode(padded, G), cw) <= 1);
                ++miscorrections;
            } catch (const DecodeFailure&) {
                ++failures;
            }
        }
    }
    CHECK(failures + miscorrections == 400);
    CHECK(failures > 0);  // most double errors are not inside another ball
}

TEST_CASE("minimum distance by exhaustion meets the Singleton bound") {
    auto f = Field::make(7, 1, std::nullopt, 3);
    CHECK(min_distance_oracle(CodeProfile::make(f, 4)) == 3);
    CHECK(min_distance_oracle(CodeProfile::make(f, 3)) == 4);
    CHECK(min_distance_oracle(CodeProfile::make(f, 6)) == 1);

    auto f256 = Field::make(2, 8);
    CHECK_THROWS_AS(min_distance_oracle(CodeProfile::make(f256, 100)), TooLarge);
}

TEST_CASE("degenerate profiles decode") {
    // k = n: zero syndromes, message is the coefficient view
    auto f = Field::make(5);
    const CodeProfile p = CodeProfile::make(f, 4);
    const Matrix G = vandermonde_generator(p);
    std::mt19937 rng(18);
    const std::vector<Elem> msg = random_message(rng, p);
    const std::vector<Elem> cw = encode(msg, G);
    const ErrorDecodeResult res = error_decode(cw, p, DecodeAlgo::Syndrome);
    for (std::size_t i = 0; i < 4; ++i) CHECK(res.message.coeff(i) == msg[i]);
    const ErrorDecodeResult res2 = error_decode(cw, p, DecodeAlgo::Gao);
    CHECK(res.message == res2.message);

    // n = 1 (GF(2)): the whole code is one symbol
    auto f2 = Field::make(2);
    const CodeProfile p1 = CodeProfile::make(f2, 1);
    const Matrix G1 = vandermonde_generator(p1);
    CHECK(encode(std::vector<Elem>{1}, G1) == std::vector<Elem>{1});
    const ErrorDecodeResult r1 = error_decode(std::vector<Elem>{1}, p1, DecodeAlgo::Gao);
    CHECK(r1.message.coeff(0) == 1);
}
