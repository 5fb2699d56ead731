#include <doctest.h>

#include <random>

#include "crn/exact.hpp"

using crn::BigInt;
using crn::BigMatrix;

namespace {

BigMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
    BigMatrix m;
    for (const auto& row : rows) {
        std::vector<BigInt> r;
        for (long long v : row) r.emplace_back(v);
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

TEST_CASE("exact rank on known matrices") {
    CHECK(crn::exact_rank(from_ints({{1, 2}, {2, 4}})) == 1);
    CHECK(crn::exact_rank(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(crn::exact_rank(from_ints({{0, 0}, {0, 0}})) == 0);
    CHECK(crn::exact_rank(from_ints({{2, 3, 5}, {4, 6, 10}, {1, 1, 1}})) == 2);
}

TEST_CASE("rank is invariant under row permutation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(rng() % 7) - 3;
        int r1 = crn::exact_rank(from_ints(m));
        std::shuffle(m.begin(), m.end(), rng);
        CHECK(crn::exact_rank(from_ints(m)) == r1);
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 6);
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(rng() % 9) - 4;
        BigMatrix bm = from_ints(m);
        auto basis = crn::integer_nullspace(bm);
        int rank = crn::exact_rank(bm);
        CHECK(static_cast<int>(basis.size()) == cols - rank);
        for (const auto& v : basis) {
            // primitive: content 1, leading sign positive
            BigInt content(0);
            for (const BigInt& x : v) content = BigInt::gcd(content, x);
            CHECK(content == BigInt(1));
            for (const auto& row : bm) {
                BigInt dot(0);
                for (size_t c = 0; c < v.size(); ++c) dot = dot + row[c] * v[c];
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("pivot columns index an independent set") {
    BigMatrix m = from_ints({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    auto res = crn::fraction_free_eliminate(m);
    CHECK(res.rank == 2);
    CHECK(res.pivot_cols == std::vector<int>{0, 2});
}
