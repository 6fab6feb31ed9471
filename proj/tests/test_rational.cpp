/*
 * Copyright 2026 The ncstar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "ncstar/rational.hpp"

using ncstar::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(7, 5).abs() == Rational(7, 5));
  CHECK(Rational(-7, 5).abs() == Rational(7, 5));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(10, 20) <= Rational(1, 2));
  CHECK(ncstar::min(Rational(3, 8), Rational(1, 10)) == Rational(1, 10));
  CHECK(ncstar::max(Rational(3, 8), Rational(1, 10)) == Rational(3, 8));
}

TEST_CASE("rational rendering and parsing round-trips") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-3, 9).str() == "-1/3");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse(""), ncstar::input_error);
  CHECK_THROWS_AS(Rational::parse("x/y"), ncstar::input_error);
  CHECK_THROWS_AS(Rational(1, 0), ncstar::input_error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::int64_t n = static_cast<std::int64_t>(rng() % 2000) - 1000;
    std::int64_t d = static_cast<std::int64_t>(rng() % 999) + 1;
    Rational r(n, d);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  auto rnd = [&]() {
    return Rational(static_cast<std::int64_t>(rng() % 200) - 100,
                    static_cast<std::int64_t>(rng() % 40) + 1);
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}
