#include <doctest.h>

#include <random>
#include <stdexcept>

#include "modinv/gf.hpp"

using namespace modinv;

TEST_SUITE("gf") {

TEST_CASE("prime field arithmetic") {
  auto f2 = FieldSpec::create(2, 1);
  CHECK(f2->add(1, 1) == 0);
  CHECK(f2->mul(1, 1) == 1);
  CHECK(f2->inv(1) == 1);

  auto f3 = FieldSpec::create(3, 1);
  CHECK(f3->add(2, 2) == 1);
  CHECK(f3->mul(2, 2) == 1);
  CHECK(f3->inv(2) == 2);
  CHECK(f3->neg(1) == 2);
  CHECK(f3->from_int(-1) == 2);
  CHECK(f3->from_int(7) == 1);
}

TEST_CASE("GF(4) multiplication table facts") {
  // Codes: 0, 1, t = 2, t+1 = 3 with modulus t^2 + t + 1.
  auto f4 = FieldSpec::create(2, 2);
  REQUIRE(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);   // t*t = t+1
  CHECK(f4->mul(2, 3) == 1);   // t*(t+1) = 1
  CHECK(f4->inv(2) == 3);
  CHECK(f4->inv(3) == 2);
  CHECK(f4->add(2, 3) == 1);   // t + (t+1) = 1
  CHECK(f4->frobenius(2) == 3);  // t^2 = t+1
}

TEST_CASE("enumeration order starts 0, 1 and is the code order") {
  auto f4 = FieldSpec::create(2, 2);
  auto elems = enumerate_field(f4);
  REQUIRE(elems.size() == 4);
  CHECK(elems[0].code() == 0);
  CHECK(elems[1].code() == 1);
  CHECK(elems[2].coeffs() == std::vector<std::uint32_t>{0, 1});
  CHECK(elems[3].coeffs() == std::vector<std::uint32_t>{1, 1});

  auto f3 = FieldSpec::create(3, 1);
  auto e3 = enumerate_field(f3);
  REQUIRE(e3.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(e3[i].code() == i);
}

TEST_CASE("field axioms hold exhaustively for small q") {
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u},
                      {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
    auto f = FieldSpec::create(p, s);
    const auto q = f->q();
    for (FieldCode a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->mul(a, 0) == 0);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
      }
      for (FieldCode b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (FieldCode c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms hold on random triples for larger q") {
  for (auto [p, s] : {std::pair{2u, 4u}, {3u, 3u}, {2u, 6u}, {7u, 2u}}) {
    auto f = FieldSpec::create(p, s);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<FieldCode> dist(0, static_cast<FieldCode>(f->q() - 1));
    for (int it = 0; it < 1500; ++it) {
      const FieldCode a = dist(rng), b = dist(rng), c = dist(rng);
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  for (auto [p, s] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    auto f = FieldSpec::create(p, s);
    for (FieldCode a = 0; a < f->q(); ++a) {
      for (FieldCode b = 0; b < f->q(); ++b)
        CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
    }
    for (FieldCode a = 0; a < p; ++a) CHECK(f->frobenius(a) == a);
  }
}

TEST_CASE("a^q = a for every element, q <= 16") {
  for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u},
                      {7u, 1u}, {2u, 3u}, {3u, 2u}, {11u, 1u}, {13u, 1u},
                      {2u, 4u}}) {
    auto f = FieldSpec::create(p, s);
    for (FieldCode a = 0; a < f->q(); ++a) CHECK(f->pow(a, f->q()) == a);
  }
}

TEST_CASE("default moduli are accepted for every q <= 64") {
  for (auto [p, s] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u},
                      {2u, 6u}, {3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 1u},
                      {5u, 2u}, {7u, 1u}, {7u, 2u}}) {
    auto f = FieldSpec::create(p, s);
    CHECK(f->q() <= 64);
    CHECK(f->modulus().size() == s + 1);
  }
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(FieldSpec::create(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::create(1, 1), std::invalid_argument);
  // t^2 + 1 = (t+1)^2 over GF(2).
  CHECK_THROWS_AS(FieldSpec::create(2, 2, {1, 0, 1}), std::invalid_argument);
  // Non-monic.
  CHECK_THROWS_AS(FieldSpec::create(3, 2, {1, 0, 2}), std::invalid_argument);
  // Wrong length.
  CHECK_THROWS_AS(FieldSpec::create(2, 2, {1, 1}), std::invalid_argument);
  auto f4 = FieldSpec::create(2, 2);
  CHECK_THROWS_AS(f4->inv(0), std::domain_error);
}

TEST_CASE("element operations require matching fields") {
  auto f4 = FieldSpec::create(2, 2);
  auto f3 = FieldSpec::create(3, 1);
  FieldElement a(f4, 2), b(f3, 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(a != b);

  // Structurally equal specs interoperate even as distinct objects.
  auto f4b = FieldSpec::create(2, 2, {1, 1, 1});
  FieldElement c(f4b, 3);
  CHECK((a * c).code() == 1);
  CHECK(a.to_string() == "[0,1]");
}

}  // TEST_SUITE
