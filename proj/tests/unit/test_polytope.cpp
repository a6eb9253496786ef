#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "demazure/basis.hpp"
#include "demazure/errors.hpp"
#include "demazure/polytope.hpp"

using namespace demazure;

namespace {

Polynomial mono2(int a, int b) { return Polynomial::monomial(Exponents{a, b}); }

Polynomial opw(OperatorKind k, const std::string& w, const Polynomial& f) {
    std::vector<int> letters;
    for (char c : w) letters.push_back(c - '0');
    return apply_word_letters(k, letters, f);
}

bool touches_r5_or_r6(const LatticeCloud& cloud) {
    for (const auto& [p, mult] : cloud.points) {
        const auto tags = region_of(p);
        for (int t : tags)
            if (t == 5 || t == 6) return true;
    }
    return false;
}

} // namespace

TEST_CASE("clouds of simple polynomials") {
    const LatticeCloud point = cloud_of(mono2(3, 1));
    CHECK(point.points.size() == 1);
    CHECK(point.points.at({3, 1, 0}) == 1);

    const LatticeCloud segment = cloud_of(opw(OperatorKind::pi, "1", mono2(4, 1)));
    CHECK(segment.points.size() == 4); // m - n + 1 collinear points
    for (const auto& [p, mult] : segment.points) {
        CHECK(mult == 1);
        CHECK(p[0] + p[1] == 5);
        CHECK(p[2] == 0);
    }

    CHECK(cloud_of(Polynomial(1)).points.at({0, 0, 0}) == 1);
    CHECK_THROWS_AS(cloud_of(-mono2(1, 0)), NegativeCoefficient);
}

TEST_CASE("regions") {
    CHECK(region_of({3, 1, 0}) == std::vector<int>{1});
    CHECK(region_of({2, 2, 2}) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(region_of({1, 3, 0}) == std::vector<int>{3});
}

TEST_CASE("projection") {
    CHECK(project({4, 1, 0}) == std::pair<int, int>{3, 5});
    CHECK(project({1, 4, 0}) == std::pair<int, int>{-3, 5});
    CHECK(project({2, 2, 2}) == std::pair<int, int>{0, 0});
    // injective on each degree plane
    for (int d = 0; d <= 12; ++d) {
        std::set<std::pair<int, int>> seen;
        int count = 0;
        for (int a = 0; a <= 10; ++a) {
            for (int b = 0; b <= 10 && a + b <= d; ++b) {
                const int c = d - a - b;
                if (c > 10) continue;
                seen.insert(project({a, b, c}));
                ++count;
            }
        }
        CHECK(static_cast<int>(seen.size()) == count);
    }
}

TEST_CASE("trapezoid reaches the far sectors exactly when m >= 2n") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= m; ++n) {
            const Polynomial f = opw(OperatorKind::pi, "21", mono2(m, n));
            CHECK(touches_r5_or_r6(cloud_of(f)) == (m >= 2 * n));
        }
    }
}

TEST_CASE("hexagon multiplicity laws") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= m; ++n) {
            const LatticeCloud key_cloud =
                cloud_of(opw(OperatorKind::pi, "121", mono2(m, n)));
            CHECK(key_cloud.max_multiplicity() == std::min(n, m - n) + 1);
            if (m > n) {
                const LatticeCloud atom_cloud =
                    cloud_of(opw(OperatorKind::theta, "121", mono2(m, n)));
                CHECK(atom_cloud.max_multiplicity() == std::min(n, m - n));
            }
        }
    }
}

TEST_CASE("theta clouds tile the full key cloud") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= m; ++n) {
            LatticeCloud whole = cloud_of(opw(OperatorKind::pi, "121", mono2(m, n)));
            std::map<LatticePoint, Coeff> merged;
            for (const char* word : {"", "1", "2", "12", "21", "121"}) {
                const Polynomial part = opw(OperatorKind::theta, word, mono2(m, n));
                for (const auto& [p, mult] : cloud_of(part).points) merged[p] += mult;
            }
            CHECK(merged == whole.points);
        }
    }
}

TEST_CASE("the full key cloud is symmetric") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= m; ++n) {
            const LatticeCloud cloud =
                cloud_of(opw(OperatorKind::pi, "121", mono2(m, n)));
            for (const auto& [p, mult] : cloud.points) {
                LatticePoint q = p;
                std::sort(q.begin(), q.end());
                do {
                    CHECK(cloud.points.count(q) == 1);
                    CHECK(cloud.points.at(q) == mult);
                } while (std::next_permutation(q.begin(), q.end()));
            }
        }
    }
}

TEST_CASE("csv output") {
    CHECK(render_csv(LatticeCloud{}) == "a1,a2,a3,u,v,multiplicity,regions\n");

    const LatticeCloud two = cloud_of(key_polynomial(WeakComposition{3, 0, 1}));
    const std::string csv = render_csv(two);
    CHECK(csv == "a1,a2,a3,u,v,multiplicity,regions\n"
                 "3,0,1,3,1,1,R2\n"
                 "3,1,0,2,4,1,R1\n");
}

TEST_CASE("svg output is deterministic") {
    const LatticeCloud cloud = cloud_of(opw(OperatorKind::pi, "121", mono2(3, 1)));
    const std::string once = render_svg(cloud);
    CHECK(once == render_svg(cloud));
    CHECK(once.find("<svg") == 0);
    CHECK(once.find("</svg>") != std::string::npos);
}
