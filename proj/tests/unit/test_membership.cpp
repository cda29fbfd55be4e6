#include <doctest.h>

#include <random>

#include "dimgrid/membership.hpp"

using namespace dimgrid;

TEST_SUITE("membership") {

TEST_CASE("theoretical anchors") {
    const MembershipAnchors a = theoretical_anchors(4);
    CHECK(a.r == std::vector<double>{0, 2, 8, 26, 80});
    CHECK(a.max_dimension() == 4);
    CHECK(a.provenance == AnchorProvenance::Theoretical);
}

TEST_CASE("three neighbors in the plane") {
    const auto f = membership(3.0, theoretical_anchors(2));
    CHECK(f[0] == 0.0);
    CHECK(f[1] == doctest::Approx(5.0 / 6.0));
    CHECK(f[2] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("peaks") {
    const MembershipAnchors a = theoretical_anchors(3);
    for (std::size_t t = 0; t <= 3; ++t) {
        const auto f = membership(a.r[t], a);
        for (std::size_t k = 0; k <= 3; ++k) CHECK(f[k] == (k == t ? 1.0 : 0.0));
    }
}

TEST_CASE("plateau beyond the last anchor") {
    const auto f = membership(1000.0, theoretical_anchors(3));
    CHECK(f == std::vector<double>{0, 0, 0, 1});
}

TEST_CASE("partition on interior ramps") {
    const MembershipAnchors a = theoretical_anchors(6);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> x(a.r.front(), a.r.back());
    for (int i = 0; i < 2000; ++i) {
        const double v = x(rng);
        const auto f = membership(v, a);
        int nonzero = 0;
        double sum = 0.0;
        for (double c : f) {
            nonzero += c > 0.0 ? 1 : 0;
            sum += c;
        }
        CHECK(nonzero <= 2);
        CHECK(sum == doctest::Approx(1.0));
        for (std::size_t t = 0; t + 1 < a.r.size(); ++t) {
            if (v > a.r[t] && v < a.r[t + 1]) CHECK(f[t] + f[t + 1] == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("non-monotone anchors may support more than two dimensions") {
    const MembershipAnchors a{{0.0, 4.0, 2.0, 6.0}, AnchorProvenance::Empirical};
    const auto f = membership(3.0, a);
    int nonzero = 0;
    for (double c : f) nonzero += c > 0.0 ? 1 : 0;
    CHECK(nonzero > 2);
    for (double c : f) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}

TEST_CASE("flat anchors act as indicators") {
    const MembershipAnchors a{{0.0, 0.0, 0.0}, AnchorProvenance::Empirical};
    CHECK(membership(0.0, a)[1] == 1.0);
    CHECK(membership(0.5, a)[1] == 0.0);
}

TEST_CASE("accumulation adds memberships") {
    const MembershipAnchors a = theoretical_anchors(2);
    std::vector<double> w(3, 0.0);
    accumulate_membership(2.0, a, w);
    accumulate_membership(3.0, a, w);
    CHECK(w[1] == doctest::Approx(1.0 + 5.0 / 6.0));
    CHECK(w[2] == doctest::Approx(1.0 / 6.0));
}

}
