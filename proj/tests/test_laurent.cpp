#include <random>

#include "doctest.h"
#include "qq/laurent.hpp"

using namespace qq;

namespace {

LaurentPoly random_poly(uint32_t p, std::mt19937& rng, int max_deg = 6) {
  int deg = static_cast<int>(rng() % (max_deg + 1));
  int shift = static_cast<int>(rng() % 7) - 3;
  std::vector<uint32_t> c(deg + 1);
  for (auto& x : c) x = rng() % p;
  return LaurentPoly(p, shift, std::move(c));
}

}  // namespace

TEST_CASE("ring arithmetic") {
  // (t-1)(t^-1 - 1) = -(t - 2 + t^-1) = -nabla
  for (uint32_t p : {2u, 3u, 5u}) {
    LaurentPoly t = LaurentPoly::t_power(p, 1);
    LaurentPoly tinv = LaurentPoly::t_power(p, -1);
    LaurentPoly one = LaurentPoly::constant(p, 1);
    CHECK((t - one) * (tinv - one) == -LaurentPoly::nabla(p));
    LaurentPoly f = LaurentPoly::parse(p, "t^3+2t+1");
    CHECK(f + LaurentPoly::zero(p) == f);
  }
  // (t^2+t+1)(t-1) = t^3 - 1 = t^3 + 1 over F_2
  LaurentPoly h2 = LaurentPoly::parse(2, "t^2+t+1");
  CHECK(h2 * LaurentPoly::parse(2, "t+1") == LaurentPoly::parse(2, "t^3+1"));
}

TEST_CASE("divmod") {
  LaurentPoly f = LaurentPoly::parse(2, "t^3+1");
  LaurentPoly g = LaurentPoly::parse(2, "t^2+t+1");
  auto [q, r] = LaurentPoly::divmod(f, g);
  CHECK(q == LaurentPoly::parse(2, "t+1"));
  CHECK(r.is_zero());
  auto [q1, r1] = LaurentPoly::divmod(f, LaurentPoly::constant(2, 1));
  CHECK(q1 == f);
  CHECK(r1.is_zero());
  CHECK_THROWS_AS(LaurentPoly::divmod(f, LaurentPoly::zero(2)), Error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    uint32_t p = std::vector<uint32_t>{2, 3, 5}[rng() % 3];
    LaurentPoly a = random_poly(p, rng), b = random_poly(p, rng);
    if (b.is_zero()) continue;
    auto [qq_, rr] = LaurentPoly::divmod(a, b);
    CHECK(qq_ * b + rr == a);
    if (!rr.is_zero()) CHECK(rr.deg() < b.deg());
  }
}

TEST_CASE("gcd") {
  LaurentPoly f = LaurentPoly::parse(5, "t^3+4");   // t^3 - 1
  LaurentPoly g = LaurentPoly::parse(5, "t^2+4");   // t^2 - 1
  CHECK(LaurentPoly::gcd(f, g) == LaurentPoly::parse(5, "t+4"));  // t - 1
  LaurentPoly x = LaurentPoly(3, -2, {2, 1});
  CHECK(LaurentPoly::gcd(x, LaurentPoly::zero(3)) == x.canonical_associate());
  CHECK_THROWS_AS(LaurentPoly::gcd(LaurentPoly::zero(3), LaurentPoly::zero(3)), Error);
  // h divides t^q - 1 for every supported field
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (uint32_t kappa : QuadField::irreducible_kappas(p)) {
      QuadField fld(p, kappa);
      LaurentPoly h = LaurentPoly::h_poly(fld);
      CHECK(LaurentPoly::gcd(h, LaurentPoly::tn_minus_1(p, fld.q())) == h);
    }
  }
}

TEST_CASE("bezout") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    uint32_t p = std::vector<uint32_t>{2, 3, 7}[rng() % 3];
    LaurentPoly a = random_poly(p, rng), b = random_poly(p, rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto bez = LaurentPoly::gcd_ext(a, b);
    CHECK(bez.u * a + bez.v * b == bez.d);
    CHECK(bez.d == LaurentPoly::gcd(a, b));
  }
}

TEST_CASE("irreducibility") {
  CHECK(LaurentPoly::parse(2, "t^2+t+1").is_irreducible());
  CHECK_FALSE(LaurentPoly::parse(2, "t^2+1").is_irreducible());  // (t+1)^2
  CHECK(LaurentPoly::parse(3, "t^2+1").is_irreducible());
  CHECK(LaurentPoly::parse(5, "t+3").is_irreducible());
  CHECK_FALSE(LaurentPoly::parse(5, "t^2+4").is_irreducible());
  CHECK_FALSE(LaurentPoly::constant(5, 2).is_irreducible());
  // t^4+t+1 irreducible over F_2; t^4+t^2+1 = (t^2+t+1)^2 is not
  CHECK(LaurentPoly::parse(2, "t^4+t+1").is_irreducible());
  CHECK_FALSE(LaurentPoly::parse(2, "t^4+t^2+1").is_irreducible());
}

TEST_CASE("valuation") {
  QuadField f2(2, 1);
  LaurentPoly h = LaurentPoly::h_poly(f2);
  CHECK(LaurentPoly::valuation(LaurentPoly::tn_minus_1(2, 6), h) == 2);
  CHECK(LaurentPoly::valuation(LaurentPoly::tn_minus_1(2, 5), h) == 0);
  CHECK(LaurentPoly::valuation(LaurentPoly::tn_minus_1(2, 3), h) == 1);
  CHECK_THROWS_AS(LaurentPoly::valuation(LaurentPoly::zero(2), h), Error);
  CHECK_THROWS_AS(LaurentPoly::valuation(h, LaurentPoly::parse(2, "t^2+1")), Error);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(2, rng), b = random_poly(2, rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(LaurentPoly::valuation(a * b, h) ==
          LaurentPoly::valuation(a, h) + LaurentPoly::valuation(b, h));
  }
}

TEST_CASE("cyclotomic valuation closed form") {
  QuadField f2(2, 1);
  CHECK(cyclotomic_valuation(6, f2) == 2);
  CHECK(cyclotomic_valuation(3, f2) == 1);
  CHECK(cyclotomic_valuation(5, f2) == 0);
  QuadField f3(3, 0);
  CHECK(cyclotomic_valuation(4, f3) == 1);
  CHECK(cyclotomic_valuation(12, f3) == 3);
  // Closed form agrees with direct valuation on every supported field.
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (uint32_t kappa : QuadField::irreducible_kappas(p)) {
      QuadField fld(p, kappa);
      LaurentPoly h = LaurentPoly::h_poly(fld);
      for (unsigned n = 1; n <= 60; ++n)
        CHECK(cyclotomic_valuation(n, fld) ==
              LaurentPoly::valuation(LaurentPoly::tn_minus_1(p, n), h));
    }
  }
}

TEST_CASE("evaluation at theta") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (uint32_t kappa : QuadField::irreducible_kappas(p)) {
      QuadField fld(p, kappa);
      CHECK(fld.is_zero(LaurentPoly::h_poly(fld).eval_at_theta(fld)));
      CHECK(fld.is_zero(LaurentPoly::tn_minus_1(p, fld.q()).eval_at_theta(fld)));
      // nabla(theta) = -kappa - 2
      FqElt nab = LaurentPoly::nabla(p).eval_at_theta(fld);
      CHECK(nab == fld.from_fp(fld.fp_reduce(-static_cast<long long>(kappa) - 2)));
      CHECK_FALSE(fld.is_zero(nab));  // h irreducible forces nabla(theta) != 0
    }
  }
}

TEST_CASE("text form round trip") {
  CHECK(LaurentPoly::parse(3, "t^2+t+1").str() == "t^2+t+1");
  CHECK(LaurentPoly::parse(3, "t^-1+1").str() == "1+t^-1");
  CHECK(LaurentPoly::parse(5, "2*t^3+4").str() == "2*t^3+4");
  CHECK(LaurentPoly::parse(7, "0").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse(5, "t^"), Error);
  CHECK_THROWS_AS(LaurentPoly::parse(5, ""), Error);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(5, rng);
    CHECK(LaurentPoly::parse(5, a.str()) == a);
  }
}
