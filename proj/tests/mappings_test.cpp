#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace moufkit;
namespace ts = testing_support;

TEST(ElementMap, CompositionAppliesRightToLeft) {
  ElementMap f(std::vector<element>{1, 2, 0});
  ElementMap g(std::vector<element>{0, 2, 1});
  auto fg = f * g;
  for (element x = 0; x < 3; ++x) EXPECT_EQ(fg(x), f(g(x)));
  EXPECT_NE(f * g, g * f);
  EXPECT_TRUE((f * f.inverse()).is_identity());
}

TEST(Translations, InnerMappingFromTranslations) {
  // T_x = R_x^-1 L_x and M_x = R_x L_x.
  auto q = fixture("chein-double(symmetric(3))");
  for (element x = 0; x < q.order(); ++x) {
    auto l = translation(q, Translation::L, x), r = translation(q, Translation::R, x);
    EXPECT_EQ(translation(q, Translation::T, x), r.inverse() * l);
    EXPECT_EQ(translation(q, Translation::M, x), r * l);
  }
}

TEST(InnerMappings, MembersFixIdentity) {
  for (const auto& name : ts::catalog_up_to(16)) {
    auto q = fixture(name);
    for (const auto& f : inner_mapping_group(q)) {
      ASSERT_TRUE(f.is_permutation());
      EXPECT_EQ(f(0), 0) << name;
    }
  }
}

TEST(InnerMappings, GroupsGiveInnerAutomorphisms) {
  // For groups Inn(Q) is Q / Z(Q).
  for (const auto& name : {"symmetric(3)", "dihedral(4)", "quaternion8", "alternating(4)", "symmetric(4)"}) {
    auto q = fixture(name);
    EXPECT_EQ(inner_mapping_group(q).size(), q.order() / center(q).size()) << name;
  }
}

TEST(InnerMappings, Cap) { EXPECT_THROW(inner_mapping_group(fixture("symmetric(4)"), 5), loop_error); }

TEST(Pseudoautomorphisms, ConjugationPairs) {
  // (x^-3, T_x) is a pseudoautomorphism with companion in every Moufang loop.
  for (const auto& name : ts::moufang_catalog(28)) {
    auto q = fixture(name);
    for (element x = 0; x < q.order(); ++x)
      EXPECT_TRUE(is_pseudoautomorphism(q, power(q, x, -3), translation(q, Translation::T, x))) << name << " " << x;
  }
}

TEST(Pseudoautomorphisms, GroupLaw) {
  auto q = fixture("chein-double(dihedral(5))");
  std::vector<PseudoautomorphismPair> pairs;
  for (element x = 0; x < q.order(); ++x)
    pairs.push_back(certify_pseudoautomorphism(q, power(q, x, -3), translation(q, Translation::T, x)));
  auto id = PseudoautomorphismPair{0, ElementMap::identity(q.order())};
  for (const auto& p : pairs) {
    auto inv = lps_inverse(q, p);
    EXPECT_TRUE(lps_compose(q, p, inv) == id);
    EXPECT_TRUE(lps_compose(q, inv, p) == id);
    for (const auto& r : pairs) EXPECT_TRUE(is_pseudoautomorphism(q, lps_compose(q, p, r).companion,
                                                                  lps_compose(q, p, r).map));
  }
  // Inverse of (a^-3, T_a) is (a^3, T_a^-1).
  for (element a = 0; a < q.order(); ++a) {
    auto inv = lps_inverse(q, pairs[a]);
    EXPECT_EQ(inv.companion, power(q, a, 3));
    EXPECT_EQ(inv.map.images(), translation(q, Translation::T, a).inverse().images());
  }
}

TEST(Pseudoautomorphisms, CertifyRejects) {
  auto q = fixture("chein-double(symmetric(3))");
  ElementMap swap = ElementMap::identity(q.order());
  auto v = swap.images();
  std::swap(v[1], v[2]);
  EXPECT_THROW(certify_pseudoautomorphism(q, 0, ElementMap(v)), loop_error);
}

TEST(Pseudoautomorphisms, CompanionCriterionOnMoufangLoops) {
  // (c, f) is a pseudoautomorphism iff x c^-1 . c y = f(f^-1(x) f^-1(y)).
  std::mt19937 rng(0x5EED);
  for (const auto& name : ts::moufang_catalog(24)) {
    auto q = fixture(name);
    const std::size_t n = q.order();
    std::vector<std::pair<element, ElementMap>> candidates;
    for (element x = 0; x < n; ++x) {
      auto t = translation(q, Translation::T, x);
      candidates.emplace_back(power(q, x, -3), t);
      candidates.emplace_back(power(q, x, 3), t.inverse());
      candidates.emplace_back(x, t);  // usually not a pseudoautomorphism
    }
    for (int k = 0; k < 4; ++k) {
      std::vector<element> perm(n);
      std::iota(perm.begin(), perm.end(), element{0});
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      candidates.emplace_back(static_cast<element>(rng() % n), ElementMap(perm));
    }
    for (const auto& [c, f] : candidates) {
      auto fi = f.inverse();
      element ci = q.inverse(c);
      bool criterion = true;
      for (element x = 0; x < n && criterion; ++x)
        for (element y = 0; y < n && criterion; ++y)
          criterion = q.mul(q.mul(x, ci), q.mul(c, y)) == f(q.mul(fi(x), fi(y)));
      EXPECT_EQ(criterion, is_pseudoautomorphism(q, c, f)) << name << " companion " << c;
    }
  }
}

TEST(Pseudoautomorphisms, AreSemiautomorphismsInMoufangLoops) {
  for (const auto& name : ts::moufang_catalog(20)) {
    auto q = fixture(name);
    for (element x = 0; x < q.order(); ++x) EXPECT_TRUE(is_semiautomorphism(q, translation(q, Translation::T, x)));
  }
}

TEST(Semiautomorphisms, OddCommutativeGroupsHaveOnlyAutomorphisms) {
  // Exhaustive over all permutations fixing 0 of small 2-divisible groups.
  for (const auto& name : {"cyclic(3)", "cyclic(5)", "cyclic(7)"}) {
    auto q = fixture(name);
    ASSERT_TRUE(is_d_divisible(q, 2));
    std::vector<element> perm(q.order());
    std::iota(perm.begin(), perm.end(), element{0});
    std::size_t semi = 0;
    do {
      ElementMap f(perm);
      if (is_semiautomorphism(q, f)) {
        ++semi;
        EXPECT_TRUE(is_automorphism(q, f)) << name;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    EXPECT_EQ(semi, q.order() - 1) << name;  // |Aut(C_p)| = p - 1
  }
}

TEST(Semiautomorphisms, InversionOnEvenGroupNotAnAutomorphismButSemi) {
  // In a nonabelian group x -> x^-1 fixes 1 and is a semiautomorphism, not an automorphism.
  auto q = symmetric_group(3);
  std::vector<element> v(q.order());
  for (element x = 0; x < q.order(); ++x) v[x] = q.inverse(x);
  ElementMap inv(v);
  EXPECT_TRUE(is_semiautomorphism(q, inv));
  EXPECT_FALSE(is_automorphism(q, inv));
}

TEST(Autotopisms, MoufangTriples) {
  for (const auto& name : ts::moufang_catalog(32)) {
    auto q = fixture(name);
    for (element x = 0; x < q.order(); ++x) {
      auto t = moufang_autotopisms(q, x);
      for (const auto& a : t) EXPECT_TRUE(is_autotopism(q, a));
    }
  }
  EXPECT_THROW(moufang_autotopisms(nonassociative_loop6(), 1), loop_error);
}

TEST(Autotopisms, CompositionAndInverse) {
  auto q = fixture("example-c2c4");
  for (element x = 0; x < q.order(); ++x)
    for (element y = 0; y < q.order(); ++y) {
      auto a = moufang_autotopisms(q, x)[0];
      auto b = moufang_autotopisms(q, y)[0];
      auto c = atp_compose(q, a, b);
      EXPECT_EQ(c.f, a.f * b.f);
      EXPECT_EQ(c.f, translation(q, Translation::L, x) * translation(q, Translation::L, y));
      auto ci = atp_inverse(q, c);
      auto id = atp_compose(q, c, ci);
      EXPECT_TRUE(id.f.is_identity() && id.g.is_identity() && id.h.is_identity());
    }
}

TEST(Autotopisms, TrivialComponentForcesNuclearTranslation) {
  // (id, R_x, R_x) is an autotopism exactly when x lies in the right nucleus.
  for (const auto& name : {"chein-double(symmetric(3))", "example-c2c2c2", "loop6-c2"}) {
    auto q = fixture(name);
    auto nr = distinguished_subloop(q, Distinguished::right_nucleus);
    for (element x = 0; x < q.order(); ++x) {
      auto r = translation(q, Translation::R, x);
      bool atp = is_autotopism(q, {ElementMap::identity(q.order()), r, r});
      EXPECT_EQ(atp, std::binary_search(nr.begin(), nr.end(), x)) << name;
    }
  }
}

TEST(Triality, SmallCases) {
  auto c3 = triality_condition(cyclic_group(3));
  EXPECT_TRUE(c3.holds);
  auto c2 = triality_condition(cyclic_group(2));
  EXPECT_FALSE(c2.holds);
  EXPECT_EQ(c2.witness, element{1});
  EXPECT_THROW(triality_condition(non_power_associative_loop5()), loop_error);
}

TEST(Triality, PaigeLoop) {
  auto r = triality_condition(paige_loop());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.trivial_nucleus);
}

TEST(Triality, TokenMapMatchesWellDefinedness) {
  // sigma must send equal tokens to equal maps: whenever two generator
  // tokens evaluate to the same permutation, their images do too.
  for (const auto& name : {"paige-M2", "cyclic(3)", "chein-double(symmetric(3))", "cyclic(2)"}) {
    auto q = fixture(name);
    bool consistent = true;
    std::vector<MultToken> tokens;
    for (element x = 0; x < q.order(); ++x)
      for (auto k : {MultToken::Kind::L, MultToken::Kind::R})
        for (bool inv : {false, true}) tokens.push_back({k, x, inv});
    std::unordered_map<ElementMap, ElementMap, ElementMapHash> seen;
    for (const auto& t : tokens) {
      auto img = evaluate(q, triality_image(t));
      auto [it, fresh] = seen.emplace(evaluate(q, t), img);
      if (!fresh && !(it->second == img)) consistent = false;
    }
    EXPECT_EQ(consistent, triality_condition(q).holds) << name;
  }
}
