#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using bott::AffineMap;
using bott::BottMatrix;
using bott::Dyadic;

TEST_CASE("dyadic arithmetic stays normalized") {
    CHECK(Dyadic::make(2, 1) == Dyadic::from_int(1));
    CHECK(Dyadic::make(4, 3) == Dyadic::half());
    CHECK(Dyadic::make(0, 5) == Dyadic{});
    CHECK(Dyadic::half() + Dyadic::half() == Dyadic::from_int(1));
    CHECK(Dyadic::half() - Dyadic::from_int(1) == -Dyadic::half());
    CHECK(Dyadic::make(-1, 2) + Dyadic::make(-1, 1) == Dyadic::make(-3, 2));
    CHECK(bott::to_string(Dyadic::half()) == "1/2");
    CHECK(bott::to_string(Dyadic::make(-3, 2)) == "-3/4");
    CHECK(bott::to_string(Dyadic{}) == "0");
    CHECK_THROWS_AS(Dyadic::make(1, -1), std::invalid_argument);
}

TEST_CASE("generators carry the row signs and a half translation") {
    BottMatrix ex = fixtures::example7();
    AffineMap last = bott::generator(ex, 7);
    CHECK(last.signs == 0);
    CHECK(last.trans[6] == Dyadic::half());

    AffineMap s1 = bott::generator(fixtures::klein(), 1);
    CHECK(s1.diag_entry(1) == 1);
    CHECK(s1.diag_entry(2) == -1);
    CHECK(s1.trans[0] == Dyadic::half());
    CHECK(s1.trans[1] == Dyadic{});
    CHECK(bott::to_string(s1) == "(diag: [1, -1], t: [1/2, 0])");

    for (int i = 1; i <= 4; ++i) {
        AffineMap s = bott::generator(BottMatrix(4), i);
        CHECK(s.is_translation());
        CHECK(s.trans[static_cast<std::size_t>(i - 1)] == Dyadic::half());
    }
    CHECK_THROWS_AS(bott::generator(ex, 0), std::out_of_range);
    CHECK_THROWS_AS(bott::generator(ex, 8), std::out_of_range);
}

TEST_CASE("composition follows the Euclidean group law") {
    BottMatrix ex = fixtures::example7();
    for (int i = 1; i <= 7; ++i) {
        AffineMap s = bott::generator(ex, i);
        CHECK(bott::compose(s, bott::inverse(s)) == bott::identity_map(7));
        CHECK(bott::compose(bott::inverse(s), s) == bott::identity_map(7));
    }

    AffineMap s1 = bott::generator(fixtures::klein(), 1);
    CHECK(bott::compose(s1, s1) == bott::lattice_translation(2, 1));

    for (int i = 1; i <= 3; ++i)
        CHECK(bott::compose(bott::generator(BottMatrix(3), i), bott::generator(BottMatrix(3), i)) ==
              bott::lattice_translation(3, i));

    CHECK_THROWS_AS(bott::compose(s1, bott::identity_map(3)), std::invalid_argument);
}

TEST_CASE("composition is associative on sampled group words") {
    std::mt19937_64 rng(31);
    BottMatrix ex = fixtures::example7();
    for (int trial = 0; trial < 50; ++trial) {
        AffineMap f = bott::generator(ex, 1 + static_cast<int>(rng() % 7));
        AffineMap g = bott::generator(ex, 1 + static_cast<int>(rng() % 7));
        AffineMap h = bott::generator(ex, 1 + static_cast<int>(rng() % 7));
        CHECK(bott::compose(bott::compose(f, g), h) == bott::compose(f, bott::compose(g, h)));
    }
}

TEST_CASE("squared generators form the integer lattice") {
    CHECK(bott::check_lattice(BottMatrix(3)));
    CHECK(bott::check_lattice(fixtures::klein()));
    CHECK(bott::check_lattice(fixtures::example7()));

    auto stream = bott::enumerate(4);
    while (!stream.done()) CHECK(bott::check_lattice(stream.next()));
}

TEST_CASE("conjugation acts on lattice translations by the diagonal") {
    BottMatrix ex = fixtures::example7();
    for (int i = 1; i <= 7; ++i) {
        AffineMap s = bott::generator(ex, i);
        for (int e = 1; e <= 7; ++e) {
            AffineMap moved = bott::conjugate(s, bott::lattice_translation(7, e));
            AffineMap expected = bott::identity_map(7);
            expected.trans[static_cast<std::size_t>(e - 1)] =
                Dyadic::from_int(s.diag_entry(e));
            CHECK(moved == expected);
        }
    }
}

TEST_CASE("holonomy image is the group generated by the diagonals") {
    CHECK(bott::holonomy_image(BottMatrix(4)) == std::vector<std::uint64_t>{0});
    CHECK(bott::holonomy_image(fixtures::klein()).size() == 2);
    CHECK(bott::holonomy_image(fixtures::example7()).size() == 32);

    // Equal rows collapse in the image: order 2, not 4.
    BottMatrix dependent = bott::parse_matrix("001\n001\n000");
    CHECK(bott::holonomy_image(dependent).size() == 2);

    auto stream = bott::enumerate(4);
    while (!stream.done()) {
        BottMatrix a = stream.next();
        CHECK(bott::holonomy_image(a).size() ==
              (std::uint64_t{1} << bott::holonomy_rank(a)));
    }
}
