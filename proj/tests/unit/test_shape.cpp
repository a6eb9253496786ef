#include <doctest.h>

#include "demazure/errors.hpp"
#include "demazure/poly.hpp"
#include "demazure/shape.hpp"

using namespace demazure;

TEST_CASE("sort_desc") {
    CHECK(sort_desc(WeakComposition{1, 0, 3}) == Partition{3, 1, 0});
    CHECK(sort_desc(WeakComposition{3, 1, 0}) == Partition{3, 1, 0});
    CHECK(sort_desc(WeakComposition{0, 0}) == Partition{0, 0});
}

TEST_CASE("omega") {
    CHECK(omega(WeakComposition{1, 0, 3}) == Permutation::parse("231"));
    CHECK(omega(WeakComposition{3, 1, 0}) == Permutation::identity(3));
    CHECK(omega(WeakComposition{2, 2, 0}) == Permutation::identity(3));
    CHECK(omega(WeakComposition{3, 0, 1}) == Permutation::parse("132"));
}

TEST_CASE("omega has minimal length") {
    for (int total = 0; total <= 6; ++total) {
        for (int parts = 1; parts <= 4; ++parts) {
            for (const WeakComposition& alpha : compositions_of(total, parts)) {
                const Partition lambda = sort_desc(alpha);
                const Permutation w = omega(alpha);
                for (int i = 0; i < parts; ++i)
                    CHECK(alpha[i] == lambda[w(i + 1) - 1]);
                for (const Permutation& sigma : all_permutations(parts)) {
                    bool sorts = true;
                    for (int i = 0; i < parts && sorts; ++i)
                        if (alpha[i] != lambda[sigma(i + 1) - 1]) sorts = false;
                    if (sorts) CHECK(length(sigma) >= length(w));
                }
            }
        }
    }
}

TEST_CASE("composition order") {
    const WeakComposition a{1, 0, 3};
    const WeakComposition b{3, 1, 0};
    CHECK(comp_geq(a, a));
    CHECK(comp_geq(b, a));       // omega_b = id <= omega_a
    CHECK_FALSE(comp_geq(a, b)); // 231 is not <= id
    CHECK_THROWS_AS(comp_geq(WeakComposition{1, 1}, WeakComposition{2, 0}),
                    IncomparableShapes);
}

TEST_CASE("composition order is a partial order on each class") {
    for (int total = 0; total <= 6; ++total) {
        for (const Partition& lambda : partitions_of(total, 4)) {
            const WeakComposition padded = lambda.as_composition().padded(4);
            const auto members = rearrangement_class(padded);
            for (const auto& a : members) {
                CHECK(comp_geq(a, a));
                // the partition is the unique maximum of its class
                CHECK(comp_geq(padded, a));
                if (!(a == padded)) CHECK_FALSE(comp_geq(a, padded));
                for (const auto& b : members) {
                    if (comp_geq(a, b) && comp_geq(b, a)) CHECK(a == b);
                    for (const auto& c : members)
                        if (comp_geq(a, b) && comp_geq(b, c)) CHECK(comp_geq(a, c));
                }
            }
        }
    }
}

TEST_CASE("reverse") {
    CHECK(reverse(WeakComposition{1, 0, 3}) == WeakComposition{3, 0, 1});
    CHECK(reverse(WeakComposition{2, 1, 2}) == WeakComposition{2, 1, 2});
    CHECK(reverse(reverse(WeakComposition{4, 0, 2, 1})) == WeakComposition{4, 0, 2, 1});
}

TEST_CASE("monomials") {
    CHECK(Polynomial::monomial(WeakComposition{0, 0, 0}) == Polynomial(1));
    CHECK(Polynomial::monomial(WeakComposition{3, 1, 0}).to_string() == "x1^3*x2");
    CHECK(Polynomial::monomial(WeakComposition{1, 0, 3}).to_string() == "x1*x3^3");
}

TEST_CASE("composition text form") {
    CHECK(WeakComposition::parse("(1,0,3)") == WeakComposition{1, 0, 3});
    CHECK(WeakComposition{1, 0, 3}.to_string() == "(1,0,3)");
    CHECK(WeakComposition::parse("(0)") == WeakComposition{0});
    CHECK_THROWS_AS(WeakComposition::parse("()"), ParseError);
}
