#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "csfkit/composition.hpp"

using namespace csfkit;

namespace {

// Independent brute-force enumerator of all 2^{n-1} compositions of n,
// via the gap bitmask.  Test-only oracle.
std::vector<Composition> all_compositions(Part n) {
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<Part> parts;
        Part run = 1;
        for (Part gap = 0; gap < n - 1; ++gap) {
            if (mask >> gap & 1) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(Composition(parts));
    }
    return out;
}

bool has_part_one_outside_head(const Composition& I) {
    for (std::size_t k = 1; k < I.length(); ++k)
        if (I.at(k) == 1) return true;
    return false;
}

}  // namespace

TEST(Composition, BasicAccessors) {
    Composition c{4, 3, 2};
    EXPECT_EQ(c.size(), 9);
    EXPECT_EQ(c.length(), 3u);
    EXPECT_EQ(c.first(), 4);
    EXPECT_EQ(c.last(), 2);
    EXPECT_THROW(Composition({3, 0}), std::invalid_argument);
    EXPECT_THROW(Composition{}.first(), std::logic_error);
}

TEST(Composition, ConcatTakeDrop) {
    Composition a{1, 3}, b{2};
    EXPECT_EQ(Composition::concat(a, b), Composition({1, 3, 2}));
    EXPECT_EQ(Composition({1, 3, 2}).take(2), a);
    EXPECT_EQ(Composition({1, 3, 2}).drop(2), b);
}

TEST(EnumerateNoOnes, SpecExamples) {
    EXPECT_TRUE(enumerate_no_ones(1).empty());
    EXPECT_EQ(enumerate_no_ones(0), std::vector<Composition>{Composition{}});

    std::vector<Composition> w5 = enumerate_no_ones(5);
    std::vector<Composition> expected5 = {Composition{2, 3}, Composition{3, 2}, Composition{5}};
    EXPECT_EQ(w5, expected5);  // lexicographic order

    EXPECT_EQ(enumerate_no_ones(9).size(), 21u);
}

TEST(EnumerateNoOnes, MatchesBruteForceFilter) {
    for (Part n = 0; n <= 12; ++n) {
        std::set<Composition> expected;
        for (const Composition& K : all_compositions(n))
            if (K.all_parts_at_least(2)) expected.insert(K);
        std::vector<Composition> got = enumerate_no_ones(n);
        EXPECT_EQ(std::set<Composition>(got.begin(), got.end()), expected) << "n = " << n;
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end())) << "n = " << n;
    }
}

TEST(EnumerateNoOnes, FibonacciRecurrence) {
    std::vector<std::size_t> count(26, 0);
    for (Part n = 0; n <= 25; ++n) count[n] = enumerate_no_ones(n).size();
    EXPECT_EQ(count[2], 1u);
    EXPECT_EQ(count[3], 1u);
    for (Part n = 4; n <= 25; ++n)
        EXPECT_EQ(count[n], count[n - 1] + count[n - 2]) << "n = " << n;
}

TEST(EnumerateWithPrefix, SpecExamples) {
    std::vector<Composition> got = enumerate_no_ones_with_prefix(7, 3);
    std::set<Composition> expected = {Composition{3, 4}, Composition{3, 2, 2}};
    EXPECT_EQ(std::set<Composition>(got.begin(), got.end()), expected);

    EXPECT_TRUE(enumerate_no_ones_with_prefix(5, 1).empty());

    got = enumerate_no_ones_with_prefix(4, 4);
    expected = {Composition{4}, Composition{2, 2}};
    EXPECT_EQ(std::set<Composition>(got.begin(), got.end()), expected);
}

TEST(EnumerateWithPrefix, MatchesBruteForceFilter) {
    for (Part n = 2; n <= 11; ++n) {
        for (Part p = 0; p <= n; ++p) {
            std::set<Composition> expected;
            for (const Composition& K : all_compositions(n)) {
                if (!K.all_parts_at_least(2)) continue;
                if (has_prefix_of_size(K, p)) expected.insert(K);
            }
            std::vector<Composition> got = enumerate_no_ones_with_prefix(n, p);
            EXPECT_EQ(std::set<Composition>(got.begin(), got.end()), expected)
                << "n = " << n << ", p = " << p;
        }
    }
}

TEST(UnderlyingPartition, Examples) {
    EXPECT_EQ(underlying_partition(Composition{1, 3, 2}), Partition({3, 2, 1}));
    EXPECT_EQ(underlying_partition(Composition{}), Partition{});
    EXPECT_EQ(underlying_partition(Composition{2, 2}), Partition({2, 2}));
    // idempotent on partitions
    for (const Composition& K : all_compositions(8)) {
        Partition lam = underlying_partition(K);
        EXPECT_EQ(underlying_partition(lam.as_composition()), lam);
    }
}

TEST(Weights, SpecExamples) {
    EXPECT_EQ(w_weight(Composition{4, 3, 2}), 8);
    EXPECT_EQ(w_weight(Composition{2, 1}), 0);
    EXPECT_EQ(w_weight(Composition{3}), 3);
    EXPECT_EQ(w_weight(Composition{}), 1);

    EXPECT_EQ(w_prime(Composition{4, 3, 2}), 2);
    EXPECT_EQ(w_prime(Composition{5}), 1);
    EXPECT_EQ(w_prime(Composition{2, 2, 2}), 1);
    EXPECT_THROW(w_prime(Composition{}), std::invalid_argument);
}

TEST(Weights, VanishesIffNonLeadingOne) {
    for (Part n = 1; n <= 10; ++n) {
        for (const Composition& I : all_compositions(n)) {
            EXPECT_EQ(w_weight(I) == 0, has_part_one_outside_head(I)) << I.to_string();
        }
    }
}

// w_K = w_{alpha i_1 beta} * w'_{IJ} for every factorization K = alpha I beta J
// with I nonempty, the key identity behind the charging computations.
TEST(Weights, FactoredProductIdentity) {
    for (Part b = 1; b <= 4; ++b) {
        const Part n = 2 * b + 6;
        for (const Composition& K : enumerate_no_ones(n)) {
            const std::size_t z = K.length();
            for (std::size_t aEnd = 0; aEnd <= z; ++aEnd) {
                for (std::size_t iEnd = aEnd + 1; iEnd <= z; ++iEnd) {
                    for (std::size_t bEnd = iEnd; bEnd <= z; ++bEnd) {
                        Composition alpha = K.take(aEnd);
                        Composition I = K.take(iEnd).drop(aEnd);
                        Composition beta = K.take(bEnd).drop(iEnd);
                        Composition J = K.drop(bEnd);
                        if (J.empty()) continue;
                        Composition replaced = Composition::concat(
                            Composition::concat(alpha, Composition({I.first()})), beta);
                        Composition IJ = Composition::concat(I, J);
                        EXPECT_EQ(w_weight(K), w_weight(replaced) * w_prime(IJ))
                            << K.to_string() << " split " << aEnd << "," << iEnd << "," << bEnd;
                    }
                }
            }
        }
    }
}

TEST(PrefixSets, SpecExamples) {
    EXPECT_EQ(prefix_L(Composition{2, 2, 2, 2}, 1), (std::vector<int>{1, 3, 5}));
    EXPECT_TRUE(prefix_L(Composition{8}, 1).empty());
    EXPECT_EQ(prefix_L(Composition{4, 4}, 1), (std::vector<int>{3}));
}

TEST(SuffixSets, SpecExamples) {
    EXPECT_EQ(suffix_L(Composition{5, 4}, 1), (std::vector<int>{3}));
    EXPECT_TRUE(suffix_L(Composition{9}, 1).empty());
    EXPECT_EQ(suffix_L(Composition{5, 2, 2}, 1), (std::vector<int>{1, 3}));
}

TEST(SuffixSets, OnlyFiveShapesInW) {
    const std::set<std::vector<int>> allowed = {{}, {1}, {2}, {3}, {1, 3}};
    for (Part b = 1; b <= 4; ++b) {
        for (const Composition& K : enumerate_no_ones(2 * b + 7)) {
            EXPECT_TRUE(allowed.count(suffix_L(K, b))) << K.to_string();
        }
    }
}

TEST(PrefixHelpers, PartCounts) {
    Composition K{3, 2, 4};
    EXPECT_EQ(prefix_part_count(K, 0), std::size_t{0});
    EXPECT_EQ(prefix_part_count(K, 5), std::size_t{2});
    EXPECT_EQ(prefix_part_count(K, 9), std::size_t{3});
    EXPECT_FALSE(prefix_part_count(K, 4).has_value());
    EXPECT_TRUE(has_suffix_of_size(K, 4));
    EXPECT_FALSE(has_suffix_of_size(K, 2));
}
