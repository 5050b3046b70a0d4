#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermicode/matrix.hpp"
#include "test_util.hpp"

using namespace hermicode;
using testutil::random_matrix;

TEST_CASE("rref of identity and zero") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    const MatrixGF id = MatrixGF::identity(tw, 16, 5);
    const Elimination e = rref(id);
    CHECK(e.rank == 5);
    CHECK(e.rref == id);

    const MatrixGF z(tw, 16, 4, 7);
    CHECK(rank(z) == 0);
}

TEST_CASE("rank is invariant under transpose") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    std::mt19937 rng(42);
    for (int t = 0; t < 100; ++t) {
        const MatrixGF m = random_matrix(rng, tw, 4, 20, 30);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("kernel of [1 1] over GF(2)") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    MatrixGF m(tw, 2, 1, 2);
    m.set_raw(0, 0, 1);
    m.set_raw(0, 1, 1);
    const MatrixGF k = kernel_basis(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.raw(0, 0) == 1);
    CHECK(k.raw(0, 1) == 1);
}

TEST_CASE("invertible matrix has empty kernel") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    const MatrixGF id = MatrixGF::identity(tw, 16, 6);
    CHECK(kernel_basis(id).rows() == 0);
    CHECK(dual_basis(id).rows() == 0);
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
    const FieldTower tw = FieldTower::make(2, 1, 3);
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        const MatrixGF m = random_matrix(rng, tw, 8, 10, 25);  // over GF(8)
        const MatrixGF k = kernel_basis(m);
        CHECK(rank(m) + k.rows() == 25);
        CHECK(rank(k) == k.rows());
        for (size_t i = 0; i < k.rows(); ++i)
            CHECK(is_zero(mul_vec(m, k.row(i))));
    }
}

TEST_CASE("double dual recovers the row space") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        const MatrixGF m = random_matrix(rng, tw, 4, 6, 12);
        CHECK(dual_basis(m).rows() == 12 - rank(m));
        CHECK(row_space_equal(dual_basis(dual_basis(m)), m));
    }
}

TEST_CASE("rref is idempotent") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        const MatrixGF m = random_matrix(rng, tw, 16, 7, 11);
        const MatrixGF r1 = rref(m).rref;
        CHECK(rref(r1).rref == r1);
    }
}

TEST_CASE("row space equality under shuffling and scaling") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    std::mt19937 rng(19);
    const MatrixGF m = random_matrix(rng, tw, 16, 5, 9);

    MatrixGF shuffled(tw, 16, 5, 9);
    const size_t order[5] = {3, 0, 4, 1, 2};
    const uint16_t scale[5] = {2, 7, 1, 9, 4};  // nonzero encodings
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 9; ++j)
            shuffled.set_raw(i, j, uint16_t(tw.mul_raw(scale[i], m.raw(order[i], j))));
    CHECK(row_space_equal(m, shuffled));

    // appending an independent row breaks equality
    MatrixGF extended = vstack(m, MatrixGF(tw, 16, 1, 9));
    size_t grow = rank(m);
    std::uniform_int_distribution<uint32_t> pick(0, 15);
    do {
        for (size_t j = 0; j < 9; ++j) extended.set_raw(5, j, uint16_t(pick(rng)));
    } while (rank(extended) == grow);
    CHECK_FALSE(row_space_equal(m, extended));
}

TEST_CASE("row space equality is transitive on random chains") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        const MatrixGF a = random_matrix(rng, tw, 2, 4, 8);
        // b: row-permuted a with a row sum folded in; c: likewise from b
        MatrixGF b = a;
        for (size_t j = 0; j < 8; ++j)
            b.set_raw(0, j, uint16_t(tw.add_raw(a.raw(0, j), a.raw(1, j))));
        MatrixGF c = b;
        for (size_t j = 0; j < 8; ++j)
            c.set_raw(3, j, uint16_t(tw.add_raw(b.raw(3, j), b.raw(2, j))));
        CHECK(row_space_equal(a, b));
        CHECK(row_space_equal(b, c));
        CHECK(row_space_equal(a, c));
    }
}

TEST_CASE("mismatched shapes are rejected") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    const MatrixGF a(tw, 16, 2, 5);
    const MatrixGF b(tw, 16, 2, 6);
    const MatrixGF c(tw, 4, 2, 5);
    CHECK_THROWS_AS(row_space_equal(a, b), std::invalid_argument);
    CHECK_THROWS_AS(row_space_equal(a, c), FieldMismatch);
    CHECK_THROWS_AS(vstack(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul_vec(a, std::vector<FieldElement>(4, tw.zero(16))),
                    std::invalid_argument);
}

TEST_CASE("packed GF(2) path matches the generic path bit for bit") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        const size_t rows = 1 + t % 40, cols = 1 + (t * 7) % 90;
        const MatrixGF m = random_matrix(rng, tw, 2, rows, cols);
        REQUIRE(detail::packed_gf2_applicable(m));
        const Elimination a = detail::rref_packed_gf2(m);
        const Elimination b = detail::rref_generic(m);
        CHECK(a.rref == b.rref);
        CHECK(a.rank == b.rank);
        CHECK(a.pivots == b.pivots);
    }
    const MatrixGF empty(tw, 2, 0, 5);
    CHECK(detail::rref_packed_gf2(empty).rank == 0);
    CHECK(kernel_basis(empty).rows() == 5);
}

TEST_CASE("byte mod-p path matches the generic path bit for bit") {
    const FieldTower t3 = FieldTower::make(3, 1, 1);
    const FieldTower t5 = FieldTower::make(5, 1, 1);
    std::mt19937 rng(37);
    for (int t = 0; t < 100; ++t) {
        const size_t rows = 1 + t % 30, cols = 1 + (t * 5) % 60;
        const MatrixGF m3 = random_matrix(rng, t3, 3, rows, cols);
        REQUIRE(detail::bytes_prime_applicable(m3));
        const Elimination a = detail::rref_bytes_prime(m3);
        const Elimination b = detail::rref_generic(m3);
        CHECK(a.rref == b.rref);
        CHECK(a.pivots == b.pivots);

        const MatrixGF m5 = random_matrix(rng, t5, 5, rows, cols);
        const Elimination c = detail::rref_bytes_prime(m5);
        const Elimination d = detail::rref_generic(m5);
        CHECK(c.rref == d.rref);
        CHECK(c.pivots == d.pivots);
    }
}

namespace {

// Independent mod-2 reference elimination on plain integers.
struct Ref2 {
    std::vector<std::vector<int>> rows;
    size_t rank = 0;
};

Ref2 rref_mod2(std::vector<std::vector<int>> a) {
    Ref2 out;
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && a[pr][col] % 2 == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[rank], a[pr]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] % 2 == 0) continue;
            for (size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + a[rank][j]) % 2;
        }
        ++rank;
    }
    out.rows = std::move(a);
    out.rank = rank;
    return out;
}

}  // namespace

TEST_CASE("GF(2) agrees with an integer mod-2 reference") {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::vector<int>> ref(8, std::vector<int>(12));
        MatrixGF m(tw, 2, 8, 12);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 12; ++j) {
                ref[i][j] = bit(rng);
                m.set_raw(i, j, uint16_t(ref[i][j]));
            }
        const Ref2 expect = rref_mod2(ref);
        const Elimination got = rref(m);
        CHECK(got.rank == expect.rank);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 12; ++j) CHECK(got.rref.raw(i, j) == uint16_t(expect.rows[i][j]));
    }
}

TEST_CASE("matrix entry tagging") {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    MatrixGF m(tw, 4, 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, tw.one(16)), FieldMismatch);
    CHECK_THROWS_AS(m.set(0, 0, FieldElement{tw.generator().value, 4}), FieldMismatch);
    m.set(0, 0, tw.subfield_generator(4));
    CHECK(m.at(0, 0).field == 4);
}
