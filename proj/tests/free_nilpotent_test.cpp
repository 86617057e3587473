#include <random>

#include <gtest/gtest.h>

#include "schurlab/catalog.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/free_nilpotent.hpp"
#include "schurlab/multiplier.hpp"

using namespace schurlab;

namespace {

// Necklace count by brute force: aperiodic words of length k over d letters up to rotation.
std::uint64_t lyndon_count(std::size_t d, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= d;
    std::uint64_t aperiodic = 0;
    std::vector<std::size_t> w(k, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            w[i] = c % d;
            c /= d;
        }
        bool periodic = false;
        for (std::size_t p = 1; p < k && !periodic; ++p) {
            if (k % p) continue;
            bool same = true;
            for (std::size_t i = 0; i < k && same; ++i) same = w[i] == w[(i + p) % k];
            periodic = same;
        }
        if (!periodic) ++aperiodic;
    }
    return aperiodic / k;
}

std::vector<std::size_t> per_degree(const std::vector<HallWord>& words, std::size_t s) {
    std::vector<std::size_t> counts(s + 1, 0);
    for (const auto& w : words) ++counts[w.degree];
    return counts;
}

} // namespace

TEST(Witt, Examples) {
    EXPECT_EQ(witt_dim(2, 1), 2u);
    EXPECT_EQ(witt_dim(2, 2), 1u);
    EXPECT_EQ(witt_dim(2, 3), 2u);
    EXPECT_EQ(witt_dim(2, 4), 3u);
    EXPECT_EQ(witt_dim(2, 5), 6u);
    EXPECT_EQ(witt_dim(3, 3), 8u);
    EXPECT_EQ(witt_dim(1, 1), 1u);
    EXPECT_EQ(witt_dim(1, 4), 0u);
}

TEST(Witt, AgreesWithNecklaceEnumeration) {
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::size_t k = 1; k <= 7; ++k) EXPECT_EQ(witt_dim(d, k), lyndon_count(d, k)) << d << "," << k;
}

TEST(HallBasis, CountsMatchWitt) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t s = 1; s <= 6; ++s) {
            const auto words = hall_basis(d, s);
            const auto counts = per_degree(words, s);
            for (std::size_t k = 1; k <= s; ++k) EXPECT_EQ(counts[k], witt_dim(d, k)) << d << "," << s << "," << k;
        }
}

TEST(HallBasis, Examples) {
    EXPECT_EQ(hall_basis(2, 3).size(), 5u);
    EXPECT_EQ(hall_basis(2, 4).size(), 8u);
    EXPECT_EQ(hall_basis(1, 5).size(), 1u);
    const auto words = hall_basis(2, 3);
    EXPECT_EQ(word_to_string(words, 2), "[x1,x2]");
}

TEST(HallBasis, HallConditionAndOrder) {
    const auto words = hall_basis(3, 5);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        EXPECT_EQ(w.position, i);
        if (i > 0) EXPECT_LE(words[i - 1].degree, w.degree);
        if (w.is_generator()) continue;
        EXPECT_LT(w.left, w.right);
        EXPECT_EQ(w.degree, words[w.left].degree + words[w.right].degree);
        const auto& r = words[w.right];
        EXPECT_TRUE(r.is_generator() || r.left <= w.left);
    }
}

TEST(HallBasis, ResourceCap) {
    EXPECT_THROW(hall_basis(4, 8, 100), ResourceLimit);
    EXPECT_THROW(free_nilpotent_algebra(5, 7), ResourceLimit);
    EXPECT_NO_THROW(hall_basis(2, 3, 5));
    EXPECT_THROW(hall_basis(2, 3, 4), ResourceLimit);
}

TEST(FreeNilpotent, JacobiHoldsOnEveryTable) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t s = 1; s <= (d == 3 ? 4u : 6u); ++s) {
            const auto f = free_nilpotent_algebra(d, s);
            EXPECT_NO_THROW(validate(f.algebra())) << d << "," << s;
        }
}

TEST(FreeNilpotent, CollectIsAntisymmetricAndTruncated) {
    const auto f = free_nilpotent_algebra(3, 4);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const std::size_t a = rng() % f.dim(), b = rng() % f.dim();
        EXPECT_EQ(f.collect(a, b), -f.collect(b, a));
        if (f.degree(a) + f.degree(b) > 4) EXPECT_TRUE(f.collect(a, b).empty());
    }
    EXPECT_EQ(f.collect(0, 1), SparseVector::unit(f.degree_offset(2)));
}

TEST(FreeNilpotent, SeriesIsWittPartialSums) {
    for (std::size_t d = 2; d <= 3; ++d)
        for (std::size_t s = 1; s <= 5; ++s) {
            const auto f = free_nilpotent_algebra(d, s);
            const auto info = series(f.algebra());
            EXPECT_EQ(info.nilpotency_class, s);
            std::vector<std::size_t> want;
            for (std::size_t i = 1; i <= s + 1; ++i) {
                std::size_t total = 0;
                for (std::size_t k = i; k <= s; ++k) total += witt_dim(d, k);
                want.push_back(total);
            }
            EXPECT_EQ(info.gamma_dims, want);
            for (std::size_t i = 1; i <= s; ++i) {
                std::vector<std::size_t> axes;
                for (std::size_t w = f.degree_offset(i); w < f.dim(); ++w) axes.push_back(w);
                EXPECT_EQ(info.gamma[i - 1], Subspace::coordinate(f.dim(), axes));
            }
        }
}

TEST(FreeNilpotent, Examples) {
    const auto f22 = series(free_nilpotent_algebra(2, 2).algebra());
    EXPECT_EQ((std::array{f22.n, f22.derived_dim, f22.nilpotency_class}), (std::array<std::size_t, 3>{3, 1, 2}));
    const auto f32 = free_nilpotent_algebra(3, 2);
    const auto s32 = series(f32.algebra());
    EXPECT_EQ((std::array{s32.n, s32.derived_dim, s32.nilpotency_class}), (std::array<std::size_t, 3>{6, 3, 2}));
    EXPECT_EQ(schur_multiplier_dim(f32.algebra()), 8u);
    EXPECT_EQ(f32.algebra(), catalog_get("L6_26"));
    const auto f23 = series(free_nilpotent_algebra(2, 3).algebra());
    EXPECT_EQ(f23.gamma_dims, (std::vector<std::size_t>{5, 3, 2, 0}));
}

TEST(FreeNilpotent, MultiplierOfFreeNilpotentIsNextWittTerm) {
    // M(F/gamma_{s+1}) has dimension witt_dim(d, s+1).
    for (std::size_t d = 2; d <= 3; ++d)
        for (std::size_t s = 1; s <= 4; ++s)
            EXPECT_EQ(schur_multiplier_dim(free_nilpotent_algebra(d, s).algebra()), witt_dim(d, s + 1)) << d << "," << s;
}
