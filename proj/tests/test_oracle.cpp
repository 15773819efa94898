#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

using namespace sumsq;
using namespace sumsq::oracle;

TEST_CASE("square counts") {
    CHECK(count_representations(CountKind::Squares, 4, 1)[1] == 8);
    CHECK(count_representations(CountKind::Squares, 8, 1)[1] == 16);
    CHECK(count_representations(CountKind::Squares, 16, 1)[1] == 32);
    CHECK(count_representations(CountKind::Squares, 24, 1)[1] == 48);
    auto r2 = count_representations(CountKind::Squares, 2, 25);
    CHECK(r2[25] == 12);
    CHECK(r2[3] == 0);
}

TEST_CASE("triangle counts") {
    auto t4 = count_representations(CountKind::Triangles, 4, 10);
    CHECK(t4[0] == 1);
    CHECK(t4[1] == 4);
    // t_4(n) = sigma(2n+1)
    for (long n = 0; n <= 10; ++n) CHECK(t4[n] == divisor_oracle(DivisorKind::Sigma, 1, 2 * n + 1));
    CHECK(count_representations(CountKind::Triangles, 8, 3)[0] == 1);
}

TEST_CASE("counts are even and positive-based") {
    for (int s : {1, 3, 5}) {
        auto r = count_representations(CountKind::Squares, s, 50);
        CHECK(r[0] == 1);
        for (long n = 1; n <= 50; ++n) CHECK(r[n] % 2 == 0);
    }
}

TEST_CASE("tau oracle") {
    auto t = tau_oracle(10);
    long want[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
    for (int n = 1; n <= 10; ++n) CHECK(t[n] == want[n - 1]);
}

TEST_CASE("divisor sums") {
    CHECK(divisor_oracle(DivisorKind::Sigma, 11, 2) == 2049);
    CHECK(divisor_oracle(DivisorKind::Sigma, 1, 6) == 12);
    CHECK(divisor_oracle(DivisorKind::SigmaDagger, 3, 2) == 7);
    CHECK(divisor_oracle(DivisorKind::SigmaDagger, 3, 1) == -1);
    CHECK(divisor_oracle(DivisorKind::SigmaTilde, 5, 4) == -993);
    CHECK(divisor_oracle(DivisorKind::SigmaTilde, 1, 2) == -3);
    CHECK_THROWS_AS(divisor_oracle(DivisorKind::Sigma, 1, 0), Error);
}
