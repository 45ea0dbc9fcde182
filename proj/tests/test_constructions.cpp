#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "padiclab/constructions.hpp"
#include "padiclab/errors.hpp"
#include "padiclab/exact_linalg.hpp"
#include "padiclab/int_matrix.hpp"
#include "padiclab/rng.hpp"

using namespace padiclab;

TEST_CASE("weight-sorted code listing, small sizes") {
    BinaryCodeMatrix one = binary_code_matrix(1);
    CHECK(one.matrix == IntMatrix::from_rows({{0}, {1}}));
    REQUIRE(one.row_blocks.size() == 2);
    std::pair<std::size_t, std::size_t> w0{0, 1}, w1{1, 2};
    CHECK(one.row_blocks[0] == w0);
    CHECK(one.row_blocks[1] == w1);

    BinaryCodeMatrix three = binary_code_matrix(3);
    CHECK(three.matrix.rows() == 8);
    CHECK(three.matrix.cols() == 3);
    // weight-1 rows come in increasing numeric order right after the zero row
    CHECK(three.matrix.at(1, 0) == 0);
    CHECK(three.matrix.at(1, 1) == 0);
    CHECK(three.matrix.at(1, 2) == 1);
    CHECK(three.matrix.at(2, 1) == 1);
    CHECK(three.matrix.at(3, 0) == 1);
    // last row is all ones
    for (std::size_t j = 0; j < 3; ++j) CHECK(three.matrix.at(7, j) == 1);

    CHECK_THROWS_AS(binary_code_matrix(0), SizeError);
    CHECK_THROWS_AS(binary_code_matrix(21), SizeError);
}

TEST_CASE("code rows are distinct and block sizes are binomial") {
    BinaryCodeMatrix four = binary_code_matrix(4);
    std::set<std::vector<int>> rows;
    for (std::size_t i = 0; i < 16; ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < 4; ++j)
            row.push_back(static_cast<int>(four.matrix.at(i, j).get_si()));
        rows.insert(row);
    }
    CHECK(rows.size() == 16);
    std::size_t expect[] = {1, 4, 6, 4, 1};
    REQUIRE(four.row_blocks.size() == 5);
    for (std::size_t w = 0; w < 5; ++w)
        CHECK(four.row_blocks[w].second - four.row_blocks[w].first == expect[w]);
}

TEST_CASE("gram matrix counts shared ones") {
    BinaryCodeMatrix three = binary_code_matrix(3);
    IntMatrix g = gram(three.matrix);
    CHECK(g.rows() == 8);
    CHECK(g.cols() == 8);
    CHECK(g == transpose(g));
    // diagonal of the gram matrix is the row weight
    for (std::size_t w = 0; w < three.row_blocks.size(); ++w)
        for (std::size_t i = three.row_blocks[w].first; i < three.row_blocks[w].second; ++i)
            CHECK(g.at(i, i) == w);
}

TEST_CASE("summing partition groups columns by support size") {
    BinaryCodeMatrix three = binary_code_matrix(3);
    ColumnBlockPartition part = summing_partition(three);
    REQUIRE(part.groups.size() == 4);  // sizes 0..3
    CHECK(part.groups[0].size() == 1);
    CHECK(part.groups[1].size() == 3);
    CHECK(part.groups[2].size() == 3);
    CHECK(part.groups[3].size() == 1);
    REQUIRE(part.source.size() == 8);
    CHECK(part.source[0].empty());
    // each source set has the size of its group index
    for (std::size_t k = 0; k < part.groups.size(); ++k)
        for (std::size_t l : part.groups[k]) CHECK(part.source[l].size() == k);
}

TEST_CASE("multiplication tables") {
    CHECK(cayley_table(3) == IntMatrix::from_rows({{1, 2}, {2, 1}}));
    CHECK(cayley_table(5) == IntMatrix::from_rows({{1, 2, 3, 4},
                                                   {2, 4, 1, 3},
                                                   {3, 1, 4, 2},
                                                   {4, 3, 2, 1}}));
    IntMatrix c13 = cayley_table(13);
    CHECK(c13 == transpose(c13));
    // column i plus column (p-1-i) is constant p
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            CHECK(c13.at(i, j) + c13.at(i, 11 - j) == 13);
    CHECK_THROWS_AS(cayley_table(2), InvalidModulusError);
    CHECK_THROWS_AS(cayley_table(9), InvalidModulusError);
}

TEST_CASE("outer remainder accepts either vector orientation") {
    IntMatrix row = IntMatrix::from_rows({{1, 2, 3, 4}});
    IntMatrix col = transpose(row);
    IntMatrix a = outer_rem(row, 3);
    CHECK(a == outer_rem(col, 3));
    CHECK(a == mat_rem(matmul(col, row), 3));
    CHECK_THROWS_AS(outer_rem(IntMatrix(2, 3), 3), ShapeError);
}

TEST_CASE("half-table-plus-constant-column matrix at p = 5") {
    CHECK(b_matrix(5) == IntMatrix::from_rows({{1, 2, 5},
                                               {2, 4, 5},
                                               {3, 1, 5},
                                               {4, 3, 5}}));
    IntMatrix b3 = b_matrix(3);
    CHECK(b3 == IntMatrix::from_rows({{1, 3}, {2, 3}}));
}

TEST_CASE("latin property checks") {
    CHECK(is_latin(cayley_table(5), 5));
    CHECK(is_latin(cayley_table(13), 13));
    IntMatrix bad = cayley_table(5);
    bad.at(0, 0) = bad.at(0, 1);  // duplicate in a row
    CHECK_FALSE(is_latin(bad, 5));
    CHECK_FALSE(is_latin(IntMatrix(4, 3), 5));        // wrong shape
    IntMatrix zeros(4, 4);
    CHECK_FALSE(is_latin(zeros, 5));                   // symbols out of range
}

TEST_CASE("latin squares from permutations and at random") {
    RngStream rng(123);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        for (int t = 0; t < 5; ++t) {
            IntMatrix l = random_latin_square(p, rng);
            CHECK(is_latin(l, p));
        }
    }
    // identity permutations reproduce the plain table
    std::vector<std::size_t> id4 = {0, 1, 2, 3};
    CHECK(latin_from_permutations(5, id4, id4, id4) == cayley_table(5));
    std::vector<std::size_t> bad = {0, 0, 2, 3};
    CHECK_THROWS_AS(latin_from_permutations(5, bad, id4, id4), DomainError);
}

TEST_CASE("random permutations are permutations and seed-stable") {
    RngStream a(7), b(7);
    auto pa = random_permutation(10, a);
    auto pb = random_permutation(10, b);
    CHECK(pa == pb);
    std::set<std::size_t> seen(pa.begin(), pa.end());
    CHECK(seen.size() == 10);
    CHECK(*seen.rbegin() == 9);
}

TEST_CASE("random invertible matrices mod p") {
    RngStream rng(31);
    for (std::uint64_t p : {2ULL, 3ULL, 7ULL}) {
        for (int t = 0; t < 5; ++t) {
            IntMatrix m = random_mod_p_invertible(4, p, 0, p - 1, rng);
            CHECK(rank_mod_p(m, p).rank == 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    CHECK(m.at(i, j) >= 0);
                    CHECK(m.at(i, j) < static_cast<unsigned long>(p));
                }
        }
    }
    CHECK_THROWS_AS(random_mod_p_invertible(2, 5, 3, 2, rng), DomainError);
    // entries congruent to zero can never form an invertible matrix: budget runs out
    RngStream rng2(32);
    CHECK_THROWS_AS(random_mod_p_invertible(2, 5, 0, 0, rng2, 50), SamplingError);
}

TEST_CASE("truncated products") {
    RngStream rng(41);
    IntMatrix u = random_mod_p_invertible(5, 3, 0, 2, rng);
    IntMatrix v = random_mod_p_invertible(5, 3, 0, 2, rng);
    // r = n gives the full product
    CHECK(usv(u, 5, v) == matmul(u, v));
    // r = 2 equals U * diag(1,1,0,0,0) * V
    IntMatrix d(5, 5);
    d.at(0, 0) = 1;
    d.at(1, 1) = 1;
    CHECK(usv(u, 2, v) == matmul(matmul(u, d), v));
    CHECK(usv(u, 0, v).is_zero());
    CHECK_THROWS_AS(usv(IntMatrix(2, 2), 1, IntMatrix(3, 3)), ShapeError);
}

TEST_CASE("planted invariant factors survive the scrambling") {
    RngStream rng(51);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + rng.next_below(5);  // up to 6
        std::size_t nonzero = 1 + rng.next_below(n);
        std::vector<mpz_class> factors(n, mpz_class(0));
        mpz_class v = 1;
        for (std::size_t j = 0; j < nonzero; ++j) {
            v *= static_cast<long>(1 + rng.next_below(3));  // extend the chain
            factors[j] = v;
        }
        IntMatrix a = planted_smith_matrix(n, factors, rng);
        auto got = smith_normal_form(a).invariant_factors();
        REQUIRE(got.size() == n);
        for (std::size_t j = 0; j < n; ++j) CHECK(got[j] == factors[j]);
    }
}

TEST_CASE("planted matrix construction is seed-deterministic") {
    std::vector<mpz_class> factors = {mpz_class(1), mpz_class(2), mpz_class(4),
                                      mpz_class(0)};
    RngStream a(61), b(61), c(62);
    IntMatrix ma = planted_smith_matrix(4, factors, a);
    IntMatrix mb = planted_smith_matrix(4, factors, b);
    IntMatrix mc = planted_smith_matrix(4, factors, c);
    CHECK(ma == mb);
    CHECK_FALSE(ma == mc);
}

TEST_CASE("planted factor validation") {
    RngStream rng(71);
    std::vector<mpz_class> wrong_len = {mpz_class(1)};
    CHECK_THROWS_AS(planted_smith_matrix(3, wrong_len, rng), DomainError);
    std::vector<mpz_class> negative = {mpz_class(-1), mpz_class(2)};
    CHECK_THROWS_AS(planted_smith_matrix(2, negative, rng), DomainError);
    std::vector<mpz_class> zero_inside = {mpz_class(0), mpz_class(2)};
    CHECK_THROWS_AS(planted_smith_matrix(2, zero_inside, rng), DomainError);
    std::vector<mpz_class> no_chain = {mpz_class(2), mpz_class(3)};
    CHECK_THROWS_AS(planted_smith_matrix(2, no_chain, rng), DomainError);
}
