#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "chartab/cyclo.hpp"

using namespace chartab;

namespace {

Cyclo z(std::size_t e, long long k = 1) { return Cyclo::root_of_unity(e, k); }

/// Random element of Q(zeta_e) with small rational coordinates.
Cyclo random_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<int> order(1, 12), num(-5, 5), den(1, 4);
  const std::size_t e = order(rng);
  std::vector<Rational> raw(e);
  for (auto& q : raw) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return Cyclo::from_poly(e, raw);
}

/// Integer polynomial product.
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).coeffs, (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4).coeffs, (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6).coeffs, (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(60).degree(), 16u);
  EXPECT_THROW(cyclotomic_polynomial(0), DomainError);
  EXPECT_THROW(cyclotomic_polynomial(kMaxCycloOrder + 1), DomainError);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXeMinusOne) {
  for (std::size_t e : {1u, 6u, 12u, 30u, 60u}) {
    std::vector<long> prod{1};
    for (std::size_t d = 1; d <= e; ++d)
      if (e % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d).coeffs);
    std::vector<long> expected(e + 1, 0);
    expected[0] = -1;
    expected[e] = 1;
    EXPECT_EQ(prod, expected) << e;
    EXPECT_EQ(cyclotomic_polynomial(e).degree(), euler_phi(e));
  }
}

TEST(Cyclo, RootsOfUnity) {
  EXPECT_EQ(z(2), Cyclo(-1));
  EXPECT_EQ(z(3, 0), Cyclo(1));
  EXPECT_EQ(z(3) + z(3, 2), Cyclo(-1));
  EXPECT_EQ(z(8).inverse(), z(8, 7));
  EXPECT_EQ(z(5, 7), z(5, 2));
  EXPECT_EQ(z(5, -1), z(5, 4));
}

TEST(Cyclo, GoldenRatio) {
  const Cyclo c = z(5) + z(5, 4);
  EXPECT_EQ(c * c + c - Cyclo(1), Cyclo(0));
  const Cyclo phi = Cyclo(1) + z(5) + z(5, 4);
  EXPECT_NEAR(phi.to_complex().real(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(phi.to_complex().imag(), 0, 1e-12);
  const Cyclo psi = phi.galois(2);
  EXPECT_EQ(psi, Cyclo(1) + z(5, 2) + z(5, 3));
  EXPECT_NEAR(psi.to_complex().real(), (1 - std::sqrt(5.0)) / 2, 1e-12);
}

TEST(Cyclo, ConjugationAndGalois) {
  EXPECT_EQ(z(5).conj(), z(5, 4));
  EXPECT_EQ(Cyclo(Rational(3, 2)).conj(), Cyclo(Rational(3, 2)));
  EXPECT_THROW(z(6).galois(2), DomainError);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Cyclo a = random_cyclo(rng);
    EXPECT_EQ(a.conj().conj(), a);
    const auto e = static_cast<long long>(a.order());
    for (long long t = 1; t < e; ++t) {
      if (std::gcd(t, e) != 1) continue;
      for (long long u = 1; u < e; ++u) {
        if (std::gcd(u, e) != 1) continue;
        EXPECT_EQ(a.galois(t).galois(u), a.galois((t * u) % e));
      }
    }
  }
}

TEST(Cyclo, RationalityAndOrderChange) {
  EXPECT_FALSE(z(4).is_rational());
  EXPECT_TRUE((z(4) * z(4)).is_rational());
  EXPECT_EQ((z(4) * z(4)).as_rational(), Rational(-1));
  EXPECT_THROW(z(4).as_rational(), DomainError);
  EXPECT_EQ(z(2).change_order(6), z(6, 3));
  EXPECT_EQ(z(6, 3), Cyclo(-1));
  EXPECT_THROW(z(4).change_order(6), DomainError);
}

TEST(Cyclo, ToComplex) {
  EXPECT_TRUE(near(z(6).to_complex(), {0.5, std::sqrt(3.0) / 2}, 1e-12));
  EXPECT_EQ(z(6).approx(4), "0.5000+0.8660i");
  EXPECT_EQ(Cyclo(Rational(1, 3)).approx(4), "0.3333");
}

TEST(Cyclo, Display) {
  EXPECT_EQ(Cyclo(Rational(-3, 4)).to_string(), "-3/4");
  EXPECT_EQ(z(3, 2).to_string(), "-1 - z(3)^1");
  EXPECT_EQ((Cyclo(1) + z(5) + z(5, 4)).to_string(), "-z(5)^2 - z(5)^3");
  EXPECT_EQ(Cyclo(0).to_string(), "0");
}

TEST(Cyclo, DivisionByZero) {
  EXPECT_THROW(Cyclo(0).inverse(), DomainError);
  EXPECT_THROW(z(3) / (z(3) + z(3, 2) + Cyclo(1)), DomainError);
}

TEST(Cyclo, SumOfAllRoots) {
  EXPECT_EQ(z(1, 0), Cyclo(1));
  for (std::size_t e = 2; e <= 30; ++e) {
    Cyclo s(0);
    for (std::size_t k = 0; k < e; ++k) s += z(e, static_cast<long long>(k));
    EXPECT_TRUE(s.is_zero()) << e;
  }
}

TEST(Cyclo, RootRaisedToItsOrder) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> order(1, 40), k(-100, 100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t e = order(rng);
    EXPECT_EQ(z(e, k(rng)).pow(static_cast<long long>(e)), Cyclo(1));
  }
}

TEST(Cyclo, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Cyclo(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Cyclo(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(Cyclo, ToComplexIsARingHomomorphism) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
    EXPECT_TRUE(near((a * b).to_complex(), a.to_complex() * b.to_complex()));
    EXPECT_TRUE(near((a + b).to_complex(), a.to_complex() + b.to_complex()));
    EXPECT_TRUE(near(a.conj().to_complex(), std::conj(a.to_complex())));
  }
}

TEST(Cyclo, EqualityAcrossOrders) {
  EXPECT_EQ(z(4) * z(4), z(6, 3));
  EXPECT_EQ(z(3), z(6, 2));
  EXPECT_EQ(z(12, 4), z(3));
  EXPECT_FALSE(z(3) == z(3, 2));
  EXPECT_EQ(z(3).descended().order(), 3u);
  EXPECT_EQ((z(3) * z(3, 2)).descended().order(), 1u);
}

TEST(Rationals, FormatAndParse) {
  EXPECT_EQ(rational_fraction(Rational(2)), "2/1");
  EXPECT_EQ(rational_fraction(parse_rational("-3/6")), "-1/2");
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}
