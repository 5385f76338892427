#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "psldpc/construct.hpp"
#include "psldpc/girth.hpp"
#include "psldpc/latin.hpp"
#include "psldpc/mask.hpp"
#include "psldpc/rng.hpp"

using namespace psldpc;
using psldpc::tests::random_exponent;
using psldpc::tests::worked_base;
using psldpc::tests::worked_compound;
using psldpc::tests::worked_mask;

TEST_CASE("gcd_base: direct modular products") {
    SUBCASE("P=64, L=8") {
        const ExponentMatrix e = gcd_base(64, 8);
        REQUIRE(e.block_rows() == 4);
        REQUIRE(e.block_cols() == 8);
        const int factors[4] = {0, 1, 8, 9};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 8; ++j) REQUIRE(e.at(i, j) == factors[i] * j % 64);
        }
    }
    SUBCASE("P=144, L=12") {
        const ExponentMatrix e = gcd_base(144, 12);
        REQUIRE(e.block_cols() == 12);
        CHECK(e.at(3, 11) == 143);  // 13 * 11 mod 144
        const int factors[4] = {0, 1, 12, 13};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 12; ++j) REQUIRE(e.at(i, j) == factors[i] * j % 144);
        }
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(gcd_base(1, 8), std::invalid_argument);
        CHECK_THROWS_AS(gcd_base(64, 1), std::invalid_argument);
    }
}

TEST_CASE("latin_circulant") {
    CHECK(latin_circulant(2).grid() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(latin_circulant(3).grid() == std::vector<std::vector<int>>{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
    for (int n = 2; n <= 9; ++n) CHECK(validate_latin(latin_circulant(n).grid()));
    CHECK_THROWS_AS(latin_circulant(1), std::invalid_argument);
}

TEST_CASE("validate_latin") {
    CHECK(validate_latin({{0, 1}, {1, 0}}));
    CHECK_FALSE(validate_latin({{0, 0}, {1, 1}}));  // repeated in a row
    CHECK_FALSE(validate_latin({{0, 1}, {0, 1}}));  // repeated in a column
    CHECK_FALSE(validate_latin({{0, 2}, {2, 0}}));  // symbol outside Z_2
    CHECK_THROWS_AS(validate_latin({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LatinSquare({{0, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("random latin squares validate") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int order = 2 + seed % 5;
        CHECK(validate_latin(random_latin_square(order, seed).grid()));
    }
}

TEST_CASE("mask_diagonal") {
    const MaskSet ms = mask_diagonal(2, 4);
    CHECK(ms.mask(0) == BinaryMask(2, 4, {0, 1, 0, 1, 1, 0, 1, 0}));
    CHECK(ms.mask(1) == BinaryMask(2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
    CHECK(mask_diagonal(3, 3).mask(0).ones_count() == 6);
    CHECK_THROWS_AS(mask_diagonal(2, 5), std::invalid_argument);
}

TEST_CASE("mask_triangle") {
    CHECK(mask_triangle(2, 2).mask(0) == BinaryMask(2, 2, {1, 0, 1, 1}));
    const MaskSet ms = mask_triangle(3, 6);
    for (int j = 0; j < 6; ++j) CHECK(ms.mask(0).at(0, j) == (j % 3 == 0 ? 1 : 0));
    // complement by construction
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 6; ++j) REQUIRE(ms.mask(0).at(i, j) + ms.mask(1).at(i, j) == 1);
    }
}

TEST_CASE("mask_hamming: fixed shapes") {
    const MaskSet h48 = mask_hamming(4, 8);
    CHECK(h48.mask(0) == BinaryMask(4, 8,
                                    {1, 0, 1, 1, 1, 0, 0, 0,  //
                                     1, 1, 0, 1, 0, 1, 0, 0,  //
                                     1, 1, 1, 0, 0, 0, 1, 0,  //
                                     0, 1, 1, 1, 0, 0, 0, 1}));
    const MaskSet h412 = mask_hamming(4, 12);
    CHECK(h412.mask(0) == BinaryMask(4, 12,
                                     {1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0,  //
                                      1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0,  //
                                      1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0,  //
                                      0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1}));
    // last four columns of the 4x12 shape are the identity
    for (int i = 0; i < 4; ++i) {
        for (int j = 8; j < 12; ++j) REQUIRE(h412.mask(0).at(i, j) == (j - 8 == i ? 1 : 0));
    }
}

TEST_CASE("mask_hamming: generic shapes emit distinct nonzero columns") {
    auto column = [](const BinaryMask& m, int j) {
        std::vector<int> col;
        for (int i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
        return col;
    };
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 7}, {4, 6}, {5, 10}}) {
        const BinaryMask m0 = mask_hamming(m, n).mask(0);
        std::set<std::vector<int>> seen;
        for (int j = 0; j < n; ++j) {
            const auto col = column(m0, j);
            REQUIRE(std::any_of(col.begin(), col.end(), [](int b) { return b == 1; }));
            REQUIRE(seen.insert(col).second);  // pairwise distinct
        }
    }
    // beyond 2^m - 1 columns the enumeration wraps
    const BinaryMask wide = mask_hamming(2, 5).mask(0);
    auto col0 = column(wide, 0);
    CHECK(column(wide, 3) == col0);
    CHECK(column(wide, 1) == column(wide, 4));
}

TEST_CASE("extend_maskset") {
    const MaskSet two = mask_hamming(4, 8);
    CHECK(extend_maskset(two, 2) == two);
    const MaskSet four = extend_maskset(two, 4);
    REQUIRE(four.count() == 4);
    CHECK(four.mask(0) == two.mask(0));
    CHECK(four.mask(1) == two.mask(1));
    CHECK(four.mask(2) == BinaryMask::zeros(4, 8));
    CHECK(four.mask(3) == BinaryMask::zeros(4, 8));
    CHECK(extend_maskset(mask_hamming(4, 12), 3).count() == 3);
    CHECK_THROWS_AS(extend_maskset(two, 1), std::invalid_argument);
}

TEST_CASE("mask sets must partition the grid") {
    const BinaryMask m0 = worked_mask();
    CHECK_THROWS_AS(MaskSet({m0, m0}), std::invalid_argument);
    CHECK_THROWS_AS(MaskSet({m0, BinaryMask::zeros(3, 4)}), std::invalid_argument);
    CHECK(validate_maskset({m0, m0.complement()}));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK_NOTHROW(random_cell_partition(3, 5, 2 + seed % 3, seed));
    }
}

TEST_CASE("splice_exponent: the worked example compound matrix") {
    const ExponentMatrix e0 = worked_base(7);
    const MaskSet ms = maskset_from_primary(worked_mask());
    const LatinSquare a({{0, 1}, {1, 0}});
    CHECK(splice_exponent(e0, ms, a) == worked_compound(7));
}

TEST_CASE("splice_exponent: degenerate partition gives a block diagonal") {
    const ExponentMatrix e0 = worked_base(7);
    const MaskSet ms = maskset_from_primary(BinaryMask::ones(3, 4));
    const LatinSquare a({{0, 1}, {1, 0}});
    const ExponentMatrix e = splice_exponent(e0, ms, a);
    REQUIRE(e.block_rows() == 6);
    REQUIRE(e.block_cols() == 8);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 8; ++j) {
            const bool diagonal_block = (i / 3) == (j / 4);
            REQUIRE(e.at(i, j) == (diagonal_block ? e0.at(i % 3, j % 4) : kInfinity));
        }
    }
}

TEST_CASE("splice_exponent: each finite cell lands once per block row and column") {
    SplitMix64 rng(0xc0de);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + rng.next_below(3);
        const int n = 1 + rng.next_below(4);
        const int p = 2 + rng.next_below(10);
        const int order = 2 + rng.next_below(3);
        const ExponentMatrix e0 = random_exponent(rng, m, n, p, 20);
        const MaskSet ms = random_cell_partition(m, n, order, rng.next());
        const LatinSquare a = random_latin_square(order, rng.next());
        const ExponentMatrix e = splice_exponent(e0, ms, a);
        REQUIRE(e.block_rows() == m * order);
        REQUIRE(e.block_cols() == n * order);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!e0.finite_at(i, j)) continue;
                std::set<int> block_rows, block_cols;
                int hits = 0;
                for (int r = 0; r < order; ++r) {
                    for (int c = 0; c < order; ++c) {
                        if (e.at(r * m + i, c * n + j) != kInfinity) {
                            REQUIRE(e.at(r * m + i, c * n + j) == e0.at(i, j));
                            ++hits;
                            block_rows.insert(r);
                            block_cols.insert(c);
                        }
                    }
                }
                REQUIRE(hits == order);
                REQUIRE(block_rows.size() == static_cast<std::size_t>(order));
                REQUIRE(block_cols.size() == static_cast<std::size_t>(order));
            }
        }
    }
}

TEST_CASE("splice_exponent: cells outside the selected mask are infinity") {
    const ExponentMatrix e0 = worked_base(11);
    const MaskSet ms = maskset_from_primary(worked_mask());
    const LatinSquare a = latin_circulant(2);
    const ExponentMatrix e = splice_exponent(e0, ms, a);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const BinaryMask& mask = ms.mask(a.at(r, c));
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (!mask.at(i, j)) REQUIRE(e.at(r * 3 + i, c * 4 + j) == kInfinity);
                }
            }
        }
    }
}

TEST_CASE("splice_binary: agrees with the exponent route through expansion") {
    SplitMix64 rng(0xfeed);
    for (int trial = 0; trial < 15; ++trial) {
        const int m = 1 + rng.next_below(3);
        const int n = 1 + rng.next_below(3);
        const int p = 1 + rng.next_below(8);
        const int order = 2 + rng.next_below(3);
        const ExponentMatrix e0 = random_exponent(rng, m, n, p, 20);
        const MaskSet ms = random_cell_partition(m, n, order, rng.next());
        const LatinSquare a = random_latin_square(order, rng.next());
        REQUIRE(splice_binary(expand(e0), p, ms, a) == expand(splice_exponent(e0, ms, a)));
    }
}

TEST_CASE("splice_binary: P=1 admits arbitrary binary bases") {
    SplitMix64 rng(0xbead);
    const SparseBinaryMatrix h0 = psldpc::tests::random_binary(rng, 3, 7, 45);
    const MaskSet ms = random_cell_partition(3, 7, 3, 5);
    const LatinSquare a = latin_circulant(3);
    const SparseBinaryMatrix h = splice_binary(h0, 1, ms, a);
    REQUIRE(h.rows() == 9);
    REQUIRE(h.cols() == 21);
    CHECK(h.ones_count() == h0.ones_count() * 3);
}

TEST_CASE("splice_binary: trivial one-cell duplication") {
    const SparseBinaryMatrix h0(1, 1, {{0, 0}});
    const MaskSet ms = extend_maskset(maskset_from_primary(BinaryMask::ones(1, 1)), 2);
    const SparseBinaryMatrix h = splice_binary(h0, 1, ms, LatinSquare({{0, 1}, {1, 0}}));
    CHECK(h.ones() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("splice_special_n2 equals the triangle composition") {
    SplitMix64 rng(0x7777);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 6}, {4, 8}}) {
        const ExponentMatrix e0 = random_exponent(rng, m, n, 16, 15);
        const ExponentMatrix direct = splice_special_n2(e0);
        const ExponentMatrix composed =
            splice_exponent(e0, mask_triangle(m, n), LatinSquare({{0, 1}, {1, 0}}));
        REQUIRE(direct == composed);
        REQUIRE(direct.block_rows() == 2 * m);
        REQUIRE(direct.block_cols() == 2 * n);
    }
    CHECK_THROWS_AS(splice_special_n2(worked_base(7)), std::invalid_argument);  // 4 not a multiple of 3
}

TEST_CASE("splicing preserves weight distributions and designed rate") {
    SplitMix64 rng(0x1234);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 1 + rng.next_below(3);
        const int n = 1 + rng.next_below(4);
        const int p = 1 + rng.next_below(6);
        const int order = 2 + rng.next_below(3);
        const ExponentMatrix e0 = random_exponent(rng, m, n, p, 25);
        const MaskSet ms = random_cell_partition(m, n, order, rng.next());
        const LatinSquare a = random_latin_square(order, rng.next());
        const CodeProfile base = profile(expand(e0));
        const CodeProfile compound = profile(expand(splice_exponent(e0, ms, a)));
        REQUIRE(compound.designed_rate == base.designed_rate);
        std::map<int, int> scaled_cols, scaled_rows;
        for (auto [w, count] : base.column_weights) scaled_cols[w] = count * order;
        for (auto [w, count] : base.row_weights) scaled_rows[w] = count * order;
        REQUIRE(compound.column_weights == scaled_cols);
        REQUIRE(compound.row_weights == scaled_rows);
    }
}

TEST_CASE("splice shape and count mismatches are rejected") {
    const ExponentMatrix e0 = worked_base(7);
    const MaskSet wrong_shape = mask_triangle(2, 4);
    CHECK_THROWS_AS(splice_exponent(e0, wrong_shape, latin_circulant(2)), std::invalid_argument);
    const MaskSet ms = maskset_from_primary(worked_mask());
    CHECK_THROWS_AS(splice_exponent(e0, ms, latin_circulant(3)), std::invalid_argument);
    CHECK_THROWS_AS(splice_binary(expand(e0), 7, ms, latin_circulant(3)), std::invalid_argument);
    CHECK_THROWS_AS(splice_binary(expand(e0), 6, ms, latin_circulant(2)), std::invalid_argument);
}
