#include <gtest/gtest.h>

#include "support.hpp"

using namespace moufkit;
using testing_support::brute_associative;

namespace {

FiniteLoop c6() { return cyclic_group(6); }

}  // namespace

TEST(FromTable, TrivialLoop) {
  auto q = FiniteLoop::from_table({{0}});
  EXPECT_EQ(q.order(), 1u);
  EXPECT_EQ(q.mul(0, 0), 0);
}

TEST(FromTable, CyclicSix) {
  std::vector<std::vector<std::int64_t>> t(6, std::vector<std::int64_t>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
  auto q = FiniteLoop::from_table(t);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_EQ(q.mul(2, 3), 5);
  EXPECT_FALSE(q.relabeled());
}

TEST(FromTable, RepeatedEntryIsNotLatin) {
  try {
    FiniteLoop::from_table({{0, 1}, {1, 1}});
    FAIL() << "expected NotLatinSquare";
  } catch (const loop_error& e) {
    EXPECT_EQ(e.code(), errc::not_latin_square);
    EXPECT_NE(std::string(e.what()).find("NotLatinSquare"), std::string::npos);
  }
}

TEST(FromTable, OutOfRangeEntry) {
  EXPECT_THROW(FiniteLoop::from_table({{0, 2}, {1, 0}}), loop_error);
}

TEST(FromTable, LatinSquareWithoutIdentity) {
  try {
    FiniteLoop::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
    FAIL() << "expected NoTwoSidedIdentity";
  } catch (const loop_error& e) {
    EXPECT_EQ(e.code(), errc::no_two_sided_identity);
  }
}

TEST(FromTable, RelabelsIdentityToZero) {
  // Z3 written with identity 2.
  auto q = FiniteLoop::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  EXPECT_TRUE(q.relabeled());
  EXPECT_EQ(q.original_labels()[0], 2u);
  for (element a = 0; a < 3; ++a) {
    EXPECT_EQ(q.mul(0, a), a);
    EXPECT_EQ(q.mul(a, 0), a);
  }
  EXPECT_TRUE(is_commutative_group(q));
}

TEST(Divide, ResolvesBothSides) {
  for (const auto& name : {"symmetric(3)", "chein-double(symmetric(3))", "loop5-nonpa", "example-c2c4"}) {
    auto q = fixture(name);
    const std::size_t n = q.order();
    for (element a = 0; a < n; ++a)
      for (element b = 0; b < n; ++b) {
        EXPECT_EQ(q.mul(a, q.divide(Side::left, a, b)), b) << name;
        EXPECT_EQ(q.mul(q.divide(Side::right, a, b), b), a) << name;
      }
    for (element a = 0; a < n; ++a) EXPECT_EQ(q.divide(Side::left, a, a), 0);
  }
}

TEST(Power, CyclicOrders) {
  auto q = c6();
  EXPECT_EQ(element_order(q, 0), 1u);
  EXPECT_EQ(element_order(q, 1), 6u);
  EXPECT_EQ(element_order(q, 2), 3u);
  EXPECT_EQ(power(q, 1, 5), 5);
  EXPECT_EQ(power(q, 1, -1), 5);
  EXPECT_EQ(power(q, 2, -4), 4);
  EXPECT_EQ(power(q, 3, 0), 0);
}

TEST(Power, MatchesRepeatedMultiplication) {
  auto q = fixture("chein-double(dihedral(5))");
  for (element a = 0; a < q.order(); ++a) {
    element acc = 0;
    for (int k = 0; k <= 12; ++k) {
      EXPECT_EQ(power(q, a, k), acc);
      acc = q.mul(acc, a);
    }
  }
}

TEST(Power, QuadraticLoopElementOfOrderTwo) {
  auto ql = build_quadratic_loop(example_spec_c2c4(), parse_form("u1u2", 2));
  // (1, 0) squares to (0, 0 + 0 + q(0) + h(0,0)) = (0, 0).
  element one_zero = static_cast<element>(8);
  EXPECT_EQ(element_order(ql.loop, one_zero), 2u);
}

TEST(Power, NonPowerAssociativeThrows) {
  auto q = non_power_associative_loop5();
  bool some_throw = false;
  for (element a = 1; a < q.order(); ++a) {
    try {
      element_order(q, a);
    } catch (const loop_error& e) {
      EXPECT_EQ(e.code(), errc::not_power_associative);
      some_throw = true;
    }
  }
  EXPECT_TRUE(some_throw);
}

TEST(Identities, GroupsAreMoufang) {
  for (const auto& name : testing_support::catalog_up_to(24)) {
    auto q = fixture(name);
    if (!brute_associative(q)) continue;
    for (auto s : {IdentityScheme::moufang_1, IdentityScheme::moufang_2, IdentityScheme::moufang_3,
                   IdentityScheme::moufang_4, IdentityScheme::extra, IdentityScheme::flexible})
      EXPECT_TRUE(satisfies_identity(q, s).holds) << name << " " << to_string(s);
  }
}

TEST(Identities, AssociativityAgreesWithBruteForce) {
  for (const auto& name : testing_support::catalog_up_to(32))
    EXPECT_EQ(is_associative(fixture(name)), brute_associative(fixture(name))) << name;
}

TEST(Identities, WitnessIsLexicographicallyFirst) {
  auto q = fixture("chein-double(dihedral(5))");
  auto c = satisfies_identity(q, IdentityScheme::associative);
  ASSERT_FALSE(c.holds);
  ASSERT_EQ(c.witness.size(), 3u);
  const std::size_t n = q.order();
  std::vector<std::int64_t> first;
  for (std::size_t x = 0; x < n && first.empty(); ++x)
    for (std::size_t y = 0; y < n && first.empty(); ++y)
      for (std::size_t z = 0; z < n && first.empty(); ++z)
        if (q.mul(x, q.mul(y, z)) != q.mul(q.mul(x, y), z)) first = {std::int64_t(x), std::int64_t(y), std::int64_t(z)};
  EXPECT_EQ(c.witness, first);
}

TEST(Identities, WitnessIndependentOfThreadCount) {
  auto q = fixture("chein-double(alternating(4))");
  setenv("MOUFKIT_THREADS", "1", 1);
  auto serial = satisfies_identity(q, IdentityScheme::associative);
  setenv("MOUFKIT_THREADS", "7", 1);
  auto parallel = satisfies_identity(q, IdentityScheme::associative);
  unsetenv("MOUFKIT_THREADS");
  EXPECT_EQ(serial.witness, parallel.witness);
}

TEST(Identities, FourMoufangFormsAgree) {
  for (const auto& name : testing_support::catalog_up_to(32)) {
    auto q = fixture(name);
    bool m1 = satisfies_identity(q, IdentityScheme::moufang_1).holds;
    for (auto s : {IdentityScheme::moufang_2, IdentityScheme::moufang_3, IdentityScheme::moufang_4})
      EXPECT_EQ(satisfies_identity(q, s).holds, m1) << name << " " << to_string(s);
  }
}

TEST(Identities, InversePropertiesOnMoufangFixtures) {
  for (const auto& name : testing_support::moufang_catalog(32)) {
    auto q = fixture(name);
    for (element x = 0; x < q.order(); ++x) {
      EXPECT_EQ(q.ldiv(x, 0), q.rdiv(0, x)) << name;
      element xi = q.inverse(x);
      for (element y = 0; y < q.order(); ++y) {
        EXPECT_EQ(q.mul(xi, q.mul(x, y)), y) << name;
        EXPECT_EQ(q.mul(q.mul(y, x), xi), y) << name;
      }
    }
    EXPECT_TRUE(satisfies_identity(q, IdentityScheme::left_inverse).holds);
    EXPECT_TRUE(satisfies_identity(q, IdentityScheme::right_inverse).holds);
  }
}

TEST(Identities, QuadraticLoopIsExtraNotAssociative) {
  auto q = fixture("example-c2c4");
  EXPECT_TRUE(satisfies_identity(q, IdentityScheme::extra).holds);
  EXPECT_FALSE(satisfies_identity(q, IdentityScheme::associative).holds);
}

TEST(Identities, SchemeNamesRoundTrip) {
  for (auto s : all_identity_schemes) EXPECT_EQ(parse_identity_scheme(to_string(s)), s);
  EXPECT_FALSE(parse_identity_scheme("moufang-5").has_value());
}

TEST(Identities, RightPowerAlternativeFailsOffPowerAssociativity) {
  auto q = non_power_associative_loop5();
  EXPECT_FALSE(satisfies_identity(q, IdentityScheme::right_power_alternative).holds);
  EXPECT_TRUE(satisfies_identity(fixture("paige-M2"), IdentityScheme::right_power_alternative).holds);
}

TEST(Associativity, PowerAndDiassociativity) {
  EXPECT_TRUE(is_power_associative(c6()).holds);
  EXPECT_TRUE(is_diassociative(c6()).holds);
  auto npa = is_power_associative(non_power_associative_loop5());
  EXPECT_FALSE(npa.holds);
  ASSERT_EQ(npa.witness.size(), 1u);
  auto gen = testing_support::closure(non_power_associative_loop5(), {npa.witness[0]});
  EXPECT_FALSE(brute_associative(subloop_as_loop(non_power_associative_loop5(),
                                                 Subloop::certify(non_power_associative_loop5(),
                                                                  {gen.begin(), gen.end()}))));
  EXPECT_FALSE(is_diassociative(non_power_associative_loop5()).holds);
}

TEST(Associativity, PaigeIsDiassociative) {
  auto q = paige_loop();
  EXPECT_TRUE(is_power_associative(q).holds);
  EXPECT_TRUE(is_diassociative(q).holds);
}

TEST(InverseConjugation, MoufangFixtures) {
  for (const auto& name : testing_support::moufang_catalog(32)) {
    auto q = fixture(name);
    const std::size_t n = q.order();
    for (element x = 0; x < n; ++x) {
      element xi = q.inverse(x);
      for (element y = 0; y < n; ++y)
        for (element z = 0; z < n; ++z) {
          ASSERT_EQ(q.mul(xi, q.mul(q.mul(x, y), z)), q.mul(q.mul(y, xi), q.mul(x, z))) << name;
          ASSERT_EQ(q.mul(q.mul(z, q.mul(y, x)), xi), q.mul(q.mul(z, x), q.mul(xi, y))) << name;
        }
    }
  }
}

TEST(InverseConjugation, FailsOnSomeNonMoufangLoop) {
  auto q = nonassociative_loop6();
  ASSERT_FALSE(is_moufang(q));
  bool violated = false;
  for (element x = 0; x < q.order() && !violated; ++x)
    for (element y = 0; y < q.order() && !violated; ++y)
      for (element z = 0; z < q.order() && !violated; ++z)
        violated = q.mul(q.inverse(x), q.mul(q.mul(x, y), z)) != q.mul(q.mul(y, q.inverse(x)), q.mul(x, z));
  EXPECT_TRUE(violated);
}

TEST(Conjugation, ThreeFoldTranslationIdentity) {
  // x a^-3 . a^3 y = T_a^-1(T_a(x) T_a(y)) on Moufang fixtures.
  for (const auto& name : testing_support::moufang_catalog(32)) {
    auto q = fixture(name);
    const std::size_t n = q.order();
    for (element a = 0; a < n; ++a) {
      auto t = translation(q, Translation::T, a);
      auto ti = t.inverse();
      element a3 = power(q, a, 3), am3 = power(q, a, -3);
      for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
          ASSERT_EQ(q.mul(q.mul(x, am3), q.mul(a3, y)), ti(q.mul(t(x), t(y)))) << name;
    }
  }
}
