#ifndef BALRS_TESTS_FIXTURES_HPP
#define BALRS_TESTS_FIXTURES_HPP

#include <array>
#include <cstdint>

// Shared hand-checked fixtures for the GF(7), n = 6 codes used throughout the
// tests. P and G are the k = 4 transform/generator pair; the mask grids cover
// both the k = 3 and k = 4 circulants.

namespace fixtures {

inline constexpr int kQ = 7;
inline constexpr std::uint32_t kAlpha = 3;
inline constexpr int kN = 6;
inline constexpr int kK = 4;

inline constexpr std::array<std::array<std::uint32_t, 4>, 4> kP{{
    {1, 3, 1, 6},
    {1, 2, 2, 1},
    {1, 4, 1, 1},
    {1, 5, 2, 6},
}};

inline constexpr std::array<std::array<std::uint32_t, 6>, 4> kG{{
    {4, 6, 3, 0, 0, 0},
    {6, 3, 0, 0, 0, 4},
    {0, 0, 0, 4, 6, 3},
    {0, 0, 4, 6, 3, 0},
}};

inline constexpr std::array<std::uint8_t, 6> kSelector64{1, 1, 0, 1, 1, 0};
inline constexpr std::array<int, 4> kSupport64{0, 1, 3, 4};

inline constexpr const char* kMaskGrid64 =
    "111000\n"
    "110001\n"
    "100011\n"
    "000111\n"
    "001110\n"
    "011100\n";

inline constexpr const char* kSelectedGrid64 =
    "111000\n"
    "110001\n"
    "000111\n"
    "001110\n";

inline constexpr std::array<std::uint8_t, 6> kSelector63{1, 0, 1, 0, 1, 0};
inline constexpr std::array<int, 3> kSupport63{0, 2, 4};

inline constexpr const char* kMaskGrid63 =
    "111100\n"
    "111001\n"
    "110011\n"
    "100111\n"
    "001111\n"
    "011110\n";

inline constexpr const char* kSelectedGrid63 =
    "111100\n"
    "110011\n"
    "001111\n";

}  // namespace fixtures

#endif
