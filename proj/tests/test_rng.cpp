// Copyright 2026 The gatecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <set>

#include "doctest.h"
#include "gatecap/qalg.hpp"
#include "test_util.hpp"

using namespace gatecap;

TEST_SUITE("rng") {

TEST_CASE("identical seeds give identical streams") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 64; ++i) {
        CHECK(a.uniform() == b.uniform());
        CHECK(a.normal() == b.normal());
    }
}

TEST_CASE("different seeds give different streams") {
    Rng a(1);
    Rng b(2);
    int same = 0;
    for (int i = 0; i < 16; ++i) {
        if (a.uniform() == b.uniform()) {
            ++same;
        }
    }
    CHECK(same < 16);
}

TEST_CASE("uniform stays in range with plausible mean") {
    Rng rng(7);
    double sum = 0.0;
    constexpr int kDraws = 4000;
    for (int i = 0; i < kDraws; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK_NEAR(sum / kDraws, 0.5, 0.05);
}

TEST_CASE("normal has plausible moments") {
    Rng rng(11);
    double sum = 0.0;
    double sum_sq = 0.0;
    constexpr int kDraws = 4000;
    for (int i = 0; i < kDraws; ++i) {
        double n = rng.normal();
        sum += n;
        sum_sq += n * n;
    }
    CHECK_NEAR(sum / kDraws, 0.0, 0.1);
    CHECK_NEAR(sum_sq / kDraws, 1.0, 0.15);
}

TEST_CASE("complex normal and gaussian vector are deterministic") {
    Rng a(5);
    Rng b(5);
    CHECK(a.complex_normal() == b.complex_normal());
    Vector va = a.gaussian_vector(8);
    Vector vb = b.gaussian_vector(8);
    CHECK((va - vb).norm() == 0.0);
}

TEST_CASE("haar state is normalized and deterministic") {
    Rng a(9);
    Rng b(9);
    Vector sa = a.haar_state(12);
    Vector sb = b.haar_state(12);
    REQUIRE(sa.size() == 12);
    CHECK_NEAR(sa.norm(), 1.0, 1e-12);
    CHECK((sa - sb).norm() == 0.0);
}

TEST_CASE("derive_seed separates sub-streams") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 100; ++i) {
        seeds.insert(derive_seed(123, i));
    }
    CHECK(seeds.size() == 100);
    CHECK(derive_seed(123, 7) == derive_seed(123, 7));
    CHECK(derive_seed(123, 7) != derive_seed(124, 7));
}

TEST_CASE("haar unitary of dimension one is a phase") {
    Matrix u = haar_random_unitary(1, 77);
    REQUIRE(u.rows() == 1);
    CHECK_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
}

TEST_CASE("haar unitaries are unitary and seed-deterministic") {
    for (int d : {2, 3, 5}) {
        Matrix u = haar_random_unitary(d, 31);
        CHECK_NEAR((u.adjoint() * u - Matrix::Identity(d, d)).norm(), 0.0, 1e-10);
    }
    Matrix a = haar_random_unitary(4, 55);
    Matrix b = haar_random_unitary(4, 55);
    CHECK((a - b).norm() == 0.0);
    Matrix c = haar_random_unitary(4, 56);
    CHECK((a - c).norm() > 1e-3);
}

}  // TEST_SUITE
