/*
   Copyright 2026 the bhtool authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bhc/code.hpp"
#include "fixtures.hpp"

using namespace bhc;

TEST_CASE("row codes collapse duplicates and sort") {
    const Code r3 = row_code(fourier(3));
    CHECK(r3.size() == 3);
    CHECK(r3.contains({0, 0, 0}));
    CHECK(r3.contains({0, 1, 2}));
    CHECK(r3.contains({0, 2, 1}));

    const Code flat = row_code(LogMatrix(2, 2, {0, 0, 0, 0}));
    CHECK(flat.size() == 1);

    CHECK(std::is_sorted(r3.words().begin(), r3.words().end()));
}

TEST_CASE("bh_code is the rows plus all constant shifts") {
    const Code c2 = bh_code(fourier(2));
    CHECK(c2.size() == 4);  // all of Z_2^2
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(c2.contains({a, b}));

    CHECK(bh_code(fourier(3)).size() == 9);
    CHECK(bh_code(fourier(4)).size() == 16);
    CHECK(bh_code(fixtures::tensor33_expected()).size() == 27);
}

TEST_CASE("the 16 codewords of the order-4 Fourier code") {
    const Code c = bh_code(fourier(4));
    REQUIRE(c.size() == 16);
    for (int i = 0; i < 4; ++i) {
        CHECK(c.contains({i, i, i, i}));
        CHECK(c.contains({i, (1 + i) % 4, (2 + i) % 4, (3 + i) % 4}));
        CHECK(c.contains({i, (2 + i) % 4, i, (2 + i) % 4}));
        CHECK(c.contains({i, (3 + i) % 4, (2 + i) % 4, (1 + i) % 4}));
    }
}

TEST_CASE("self-complementarity") {
    CHECK(is_self_complementary(bh_code(fourier(3))));
    CHECK(is_self_complementary(bh_code(fixtures::order4_phase8())));
    CHECK_FALSE(is_self_complementary(row_code(fourier(3))));  // (1,1,1) missing
    // the full space is closed under every shift
    std::vector<std::vector<int>> all;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) all.push_back({a, b});
    CHECK(is_self_complementary(Code(3, 2, all)));
}

TEST_CASE("strength: pinned verdicts") {
    CHECK(strength(bh_code(fixtures::tensor33_expected()), 2));
    CHECK_FALSE(strength(bh_code(fixtures::tensor33_expected()), 3));
    CHECK(strength(bh_code(fourier(4)), 1));
    CHECK_FALSE(strength(bh_code(fourier(4)), 2));
    CHECK(strength(bh_code(fixtures::sylvester4()), 2));
    CHECK(strength(bh_code(fixtures::sylvester4()), 3));
    CHECK(strength(bh_code(fourier(5)), 2));
    CHECK(strength(bh_code(fixtures::order4_phase8()), 1));
    CHECK_FALSE(strength(Code(2, 2, {{0, 0}, {0, 1}}), 1));  // first column constant
}

TEST_CASE("strength is monotone downward") {
    const Code c = bh_code(fixtures::sylvester4());
    for (int s = 3; s >= 1; --s) CHECK(strength(c, s));
}

TEST_CASE("max_strength") {
    CHECK(max_strength(bh_code(fourier(2))) == 2);
    CHECK(max_strength(row_code(fourier(3))) == 0);
    CHECK(max_strength(bh_code(fourier(4))) == 1);
    CHECK(max_strength(bh_code(fixtures::sylvester4())) == 3);
}

TEST_CASE("strength argument validation") {
    const Code c = bh_code(fourier(3));
    CHECK_THROWS_AS(strength(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(strength(c, 4), std::invalid_argument);
}

TEST_CASE("first moment matches the strength-1 prediction") {
    const LogVector zero4 = fixtures::vec(4, {0, 0, 0, 0});
    const auto m1 = first_moment(bh_code(fourier(4)), zero4, WeightScaling::standard(4));
    CHECK(m1.applicable);
    CHECK(m1.sum == Rat(64));
    CHECK(m1.predicted == Rat(64));

    const LogVector zero3 = fixtures::vec(3, {0, 0, 0});
    const auto m2 = first_moment(bh_code(fourier(3)), zero3, WeightScaling::honold(3));
    CHECK(m2.applicable);
    CHECK(m2.sum == Rat(54));
    CHECK(m2.predicted == Rat(54));

    // a strength-0 code still reports the sum, flagged inapplicable
    const Code point(3, 2, {{0, 0}});
    const auto m3 = first_moment(point, fixtures::vec(3, {1, 0}), WeightScaling::honold(3));
    CHECK_FALSE(m3.applicable);
    CHECK(m3.sum == Rat(3));
}

TEST_CASE("first moment is coset independent on strength-1 codes") {
    const Code c = bh_code(fourier(5));
    const WeightScaling s = WeightScaling::standard(5);
    const auto at0 = first_moment(c, fixtures::vec(5, {0, 0, 0, 0, 0}), s);
    const auto at_v = first_moment(c, fixtures::vec(5, {3, 1, 4, 0, 2}), s);
    CHECK(at0.sum == at0.predicted);
    CHECK(at_v.sum == at0.sum);
}

TEST_CASE("second moment matches the strength-2 prediction") {
    const Code k33 = bh_code(fixtures::tensor33_expected());
    const auto m = second_moment(k33, fixtures::vec(3, std::vector<int>(9, 0)));
    CHECK(m.predicted == 9234);
    CHECK(m.sum == 9234);

    const Code k22 = bh_code(fixtures::sylvester4());
    const auto m2 = second_moment(k22, fixtures::vec(2, {0, 0, 0, 0}));
    CHECK(m2.predicted == 160);
    CHECK(m2.sum == 160);
}

TEST_CASE("second moment is invariant under codeword shifts") {
    const Code k33 = bh_code(fixtures::tensor33_expected());
    const auto base = second_moment(k33, fixtures::vec(3, std::vector<int>(9, 0)));
    const auto shifted = second_moment(k33, k33.word_vector(5));
    CHECK(shifted.sum == base.sum);
}

TEST_CASE("second moment requires a prime modulus") {
    CHECK_THROWS_AS(second_moment(bh_code(fourier(4)), fixtures::vec(4, {0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("code word access and lookups") {
    const Code c = bh_code(fourier(3));
    CHECK(c.word_vector(0).q == 3);
    CHECK_FALSE(c.contains({2, 0, 0}));
    CHECK(c.contains({2, 2, 2}));
    CHECK_THROWS_AS(Code(3, 2, {{0, 3}}), std::invalid_argument);
}
