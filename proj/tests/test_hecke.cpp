#include <gtest/gtest.h>

#include "ybhecke/exactalg.hpp"
#include "ybhecke/hecke/algebra.hpp"
#include "ybhecke/hecke/form.hpp"
#include "ybhecke/hecke/verify.hpp"
#include "ybhecke/hecke/yang_baxter.hpp"
#include "ybhecke/polyops/probes.hpp"

using namespace ybhecke;

namespace {

RationalFunction R(const char* s) { return parse_rational(s); }
Permutation P(const char* s) { return Permutation::parse(s); }
RationalFunction u(int i) { return RationalFunction::variable(VarId::u(i)); }

const Family kFactorFamilies[] = {Family::sigma, Family::partial, Family::pibar, Family::T};
const Family kBasisFamilies[] = {Family::sigma, Family::partial, Family::pibar, Family::T, Family::pi, Family::s};

// (ji)T_k: the T-family factor 1 + (u_j/u_i - 1)/(q1 + q2) T_k.
HeckeElement short_factor(const AlgebraSpec& alg, int j, int i, int k) { return elementary_factor(alg, k, u(i), u(j)); }

}  // namespace

TEST(Algebra, GeneratorProducts) {
  AlgebraSpec t(Family::T, 3), d(Family::partial, 3);
  EXPECT_EQ(mul_by_generator(HeckeElement::one(t), 1), HeckeElement::generator(t, 1));
  HeckeElement expected = HeckeElement::generator(t, 1).scaled(R("q1 + q2")) + HeckeElement::one(t).scaled(R("-q1*q2"));
  EXPECT_EQ(mul_by_generator(HeckeElement::generator(t, 1), 1), expected);
  EXPECT_TRUE(mul_by_generator(HeckeElement::generator(d, 1), 1).is_zero());
  EXPECT_THROW(mul_by_generator(HeckeElement::one(t), 3), IndexOutOfRange);
}

TEST(Algebra, UnitAndAssociativity) {
  ProbeRng rng(1);
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    for (int k = 0; k < 3; ++k) {
      HeckeElement a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
      EXPECT_EQ(a * HeckeElement::one(alg), a);
      EXPECT_EQ(HeckeElement::one(alg) * a, a);
      EXPECT_EQ((a * b) * c, a * (b * c)) << family_name(f);
    }
  }
}

TEST(Algebra, BraidProducts) {
  AlgebraSpec t(Family::T, 3);
  HeckeElement t1 = HeckeElement::generator(t, 1), t2 = HeckeElement::generator(t, 2);
  EXPECT_EQ((t1 * t2) * t1, t1 * (t2 * t1));
  EXPECT_EQ(t1 * t2 * t1, t2 * t1 * t2);
  EXPECT_EQ(t1 * t2 * t1, HeckeElement::basis(t, P("321")));
}

TEST(Algebra, MismatchedAlgebras) {
  EXPECT_THROW(mul(HeckeElement::one(AlgebraSpec(Family::T, 3)), HeckeElement::one(AlgebraSpec(Family::partial, 3))),
               AlgebraMismatch);
  EXPECT_THROW(mul(HeckeElement::one(AlgebraSpec(Family::T, 3)), HeckeElement::one(AlgebraSpec(Family::T, 4))),
               AlgebraMismatch);
}

TEST(Factors, CoincidentParameters) {
  AlgebraSpec d(Family::partial, 3);
  EXPECT_EQ(elementary_factor(d, 1, u(2), u(2)), HeckeElement::one(d));
}

TEST(Factors, TProductIsScalar) {
  AlgebraSpec t(Family::T, 3);
  HeckeElement p = elementary_factor(t, 1, u(1), u(2)) * elementary_factor(t, 1, u(2), u(1));
  RationalFunction expected = 1 - (u(1) / u(2) - 1) * (u(2) / u(1) - 1) * R("q1*q2/(q1 + q2)^2");
  EXPECT_EQ(p, HeckeElement::one(t).scaled(expected));
}

TEST(Factors, PibarIsSpecializedT) {
  AlgebraSpec t(Family::T, 3), pb(Family::pibar, 3);
  Substitution s;
  s.set(VarId::q1(), -1).set(VarId::q2(), 0);
  EXPECT_EQ(specialize(elementary_factor(t, 2, u(1), u(3)), s, pb), elementary_factor(pb, 2, u(1), u(3)));
  for (const auto& mu : enumerate(3))
    EXPECT_EQ(specialize(yb_element(t, mu, SpectralParams::formal(3)), s, pb), yb_element(pb, mu, SpectralParams::formal(3)));
}

TEST(Factors, ZeroSpectralRejected) {
  AlgebraSpec t(Family::T, 3);
  EXPECT_THROW(elementary_factor(t, 1, 0, u(1)), ZeroSpectral);
  SpectralParams bad{{u(1), 0, u(3)}};
  EXPECT_THROW(yb_element(t, P("321"), bad), ZeroSpectral);
}

TEST(YangBaxter, Identity) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 4);
    EXPECT_EQ(yb_element(alg, P("1234"), SpectralParams::formal(4)), HeckeElement::one(alg));
    EXPECT_EQ(yb_element_rothe(alg, P("1234"), SpectralParams::formal(4)), HeckeElement::one(alg));
  }
}

TEST(YangBaxter, T231IsProductOfFactors) {
  AlgebraSpec t(Family::T, 3);
  EXPECT_EQ(yb_element(t, P("231"), SpectralParams::formal(3)), short_factor(t, 2, 1, 1) * short_factor(t, 3, 1, 2));
}

TEST(YangBaxter, PartialTopCoefficient) {
  AlgebraSpec d(Family::partial, 3);
  HeckeElement y = yb_element(d, P("321"), SpectralParams::formal(3));
  EXPECT_EQ(y.coefficient(P("321")), (u(3) - u(2)) * (u(3) - u(1)) * (u(2) - u(1)));
}

TEST(YangBaxter, EquationForEachFactorFamily) {
  for (Family f : {Family::sigma, Family::partial, Family::pibar, Family::T, Family::pi, Family::s}) {
    AlgebraSpec alg(f, 3);
    RationalFunction a = u(1), b = u(2), c = u(3);
    HeckeElement lhs = elementary_factor(alg, 1, a, b) * elementary_factor(alg, 2, a, c) * elementary_factor(alg, 1, b, c);
    HeckeElement rhs = elementary_factor(alg, 2, b, c) * elementary_factor(alg, 1, a, c) * elementary_factor(alg, 2, a, b);
    EXPECT_EQ(lhs, rhs) << family_name(f);
  }
}

TEST(YangBaxter, WordIndependenceS4) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 4);
    auto u4 = SpectralParams::formal(4);
    for (const auto& mu : enumerate(4)) {
      HeckeElement ref = yb_element(alg, mu, u4);
      for (const auto& w : mu.all_reduced_words()) EXPECT_EQ(yb_element_word(alg, w, u4), ref) << family_name(f) << mu.to_string();
    }
  }
}

TEST(YangBaxter, BasisTableMatchesDirectConstruction) {
  AlgebraSpec t(Family::T, 4);
  auto u4 = SpectralParams::formal(4);
  auto basis = yb_basis(t, u4);
  for (const auto& [mu, y] : basis) EXPECT_EQ(y, yb_element(t, mu, u4));
}

TEST(YangBaxter, UnitriangularInStandardBasis) {
  for (Family f : kFactorFamilies) {
    AlgebraSpec alg(f, 4);
    for (const auto& [mu, y] : yb_basis(alg, SpectralParams::formal(4))) {
      EXPECT_FALSE(y.coefficient(mu).is_zero());
      for (const auto& [nu, c] : y.terms()) EXPECT_LE(nu.length(), mu.length());
    }
  }
}

TEST(Rothe, Example35142) {
  AlgebraSpec t(Family::T, 5);
  auto u5 = SpectralParams::formal(5);
  HeckeElement expected = short_factor(t, 5, 4, 4) * short_factor(t, 3, 2, 2) * short_factor(t, 5, 2, 3) *
                          short_factor(t, 4, 2, 4) * short_factor(t, 3, 1, 1) * short_factor(t, 5, 1, 2);
  HeckeElement rothe = yb_element_rothe(t, P("35142"), u5);
  EXPECT_EQ(rothe, expected);
  EXPECT_EQ(rothe, yb_element(t, P("35142"), u5));
}

TEST(Rothe, MatchesRecursionOnS4) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 4);
    auto u4 = SpectralParams::formal(4);
    for (const auto& mu : enumerate(4)) EXPECT_EQ(yb_element_rothe(alg, mu, u4), yb_element(alg, mu, u4)) << family_name(f) << mu.to_string();
  }
}

TEST(Rothe, SpotChecksS5) {
  for (Family f : kFactorFamilies) {
    AlgebraSpec alg(f, 5);
    auto u5 = SpectralParams::formal(5);
    for (const char* m : {"35142", "52341", "24153"})
      EXPECT_EQ(yb_element_rothe(alg, P(m), u5), yb_element(alg, P(m), u5)) << family_name(f) << m;
  }
}

TEST(Phi, Involution) {
  ProbeRng rng(2);
  AlgebraSpec t(Family::T, 3);
  for (int k = 0; k < 5; ++k) {
    HeckeElement h = random_element(t, rng);
    EXPECT_EQ(phi(phi(h)), h);
  }
}

TEST(Phi, ImageOfY231) {
  AlgebraSpec t(Family::T, 3);
  EXPECT_EQ(phi(yb_element(t, P("231"), SpectralParams::formal(3))), short_factor(t, 1, 3, 2) * short_factor(t, 2, 3, 1));
}

TEST(Phi, AntiMultiplicative) {
  ProbeRng rng(3);
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    for (int k = 0; k < 3; ++k) {
      HeckeElement a = random_element(alg, rng), b = random_element(alg, rng);
      EXPECT_EQ(phi(a * b), phi(b) * phi(a)) << family_name(f);
    }
  }
}

TEST(Pairing, TopBasisAgainstOne) {
  AlgebraSpec t(Family::T, 3);
  EXPECT_TRUE(pairing(HeckeElement::basis(t, P("321")), HeckeElement::one(t)).is_one());
}

TEST(Pairing, IdentityAgainstLongest) {
  AlgebraSpec t(Family::T, 3);
  // <1, Y_omega> is the omega coefficient of phi(Y_omega).
  HeckeElement yw = yb_element(t, P("321"), SpectralParams::formal(3));
  RationalFunction expected = 1;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) expected *= (u(4 - j) / u(4 - i) - 1) / R("q1 + q2");
  EXPECT_EQ(pairing(HeckeElement::one(t), yw), expected);
  EXPECT_EQ(phi(yw).coefficient(P("321")), expected);
}

TEST(Pairing, TopCoefficientTableMatchesDirectProduct) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    TopCoefficients top(alg);
    ProbeRng rng(4);
    for (int k = 0; k < 4; ++k) {
      HeckeElement a = random_element(alg, rng), b = random_element(alg, rng);
      EXPECT_EQ(top.pairing(a, b), pairing(a, b)) << family_name(f);
    }
  }
}

TEST(Orthogonality, TSymbolicN3) {
  AlgebraSpec t(Family::T, 3);
  auto u3 = SpectralParams::formal(3);
  for (const auto& mu : enumerate(3))
    for (const auto& nu : enumerate(3)) {
      RationalFunction got = pairing(yb_element(t, mu, u3), yb_element(t, nu, u3));
      EXPECT_EQ(got, predicted_pairing(t, u3, mu, nu)) << mu.to_string() << " " << nu.to_string();
    }
}

TEST(Orthogonality, AllFamiliesN3GramMatrix) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    auto u3 = SpectralParams::formal(3);
    auto basis = yb_basis(alg, u3);
    std::vector<HeckeElement> ys;
    std::vector<Permutation> perms;
    for (const auto& [mu, y] : basis) {
      ys.push_back(y);
      perms.push_back(mu);
    }
    auto g = TopCoefficients(alg).gram(ys, ys);
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        EXPECT_EQ(g[i][j], predicted_pairing(alg, u3, perms[i], perms[j])) << family_name(f);
  }
}

TEST(Delta, Examples) {
  AlgebraSpec t1(Family::T, 1), t2(Family::T, 2), d3(Family::partial, 3);
  EXPECT_TRUE(delta(t1, SpectralParams::formal(1)).is_one());
  EXPECT_EQ(delta(t2, SpectralParams::formal(2)), R("(u2/u1 - 1)/(q1 + q2)"));
  // Direct pairing <Y_id, Y_omega> for the nil-Coxeter family.
  auto u3 = SpectralParams::formal(3);
  RationalFunction direct = pairing(HeckeElement::one(d3), yb_element(d3, P("321"), u3));
  EXPECT_EQ(direct, delta(d3, reversed_permuted(u3, P("123"))));
  EXPECT_EQ(delta(d3, u3), (u(2) - u(1)) * (u(3) - u(1)) * (u(3) - u(2)));
}

TEST(Expansion, BasisElementsAreIndicators) {
  AlgebraSpec t(Family::T, 3);
  auto u3 = SpectralParams::formal(3);
  auto basis = yb_basis(t, u3);
  for (const auto& [nu, y] : basis) {
    auto c = expand_in_yb(y, u3, &basis);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(c.at(nu).is_one());
  }
}

TEST(Expansion, StandardBasisN3) {
  AlgebraSpec t(Family::T, 3);
  auto u3 = SpectralParams::formal(3);
  auto basis = yb_basis(t, u3);
  RationalFunction D = delta(t, u3);
  RationalFunction s = R("q1 + q2");
  // Delta * T_213.
  auto c213 = expand_in_yb(HeckeElement::basis(t, P("213")), u3, &basis);
  RationalFunction k213 = (u(3) / u(2) - 1) * (u(3) / u(1) - 1) / (s * s);
  EXPECT_EQ(c213.size(), 2u);
  EXPECT_EQ(c213[P("213")] * D, k213);
  EXPECT_EQ(c213[P("123")] * D, -k213);
  // Delta * T_132.
  auto c132 = expand_in_yb(HeckeElement::basis(t, P("132")), u3, &basis);
  RationalFunction k132 = (u(2) / u(1) - 1) * (u(3) / u(1) - 1) / (s * s);
  EXPECT_EQ(c132[P("132")] * D, k132);
  EXPECT_EQ(c132[P("123")] * D, -k132);
  // Delta * T_231 and Delta * T_312.
  auto c231 = expand_in_yb(HeckeElement::basis(t, P("231")), u3, &basis);
  EXPECT_EQ(c231[P("231")] * D, (u(3) / u(2) - 1) / s);
  EXPECT_EQ(c231[P("213")] * D, -(u(3) / u(2) - 1) / s);
  EXPECT_EQ(c231[P("132")] * D, -(u(3) / u(1) - 1) / s);
  EXPECT_EQ(c231[P("123")] * D, (u(3) / u(1) - 1) / s);
  auto c312 = expand_in_yb(HeckeElement::basis(t, P("312")), u3, &basis);
  EXPECT_EQ(c312[P("312")] * D, (u(2) / u(1) - 1) / s);
  EXPECT_EQ(c312[P("132")] * D, -(u(2) / u(1) - 1) / s);
  EXPECT_EQ(c312[P("213")] * D, -(u(3) / u(1) - 1) / s);
  EXPECT_EQ(c312[P("123")] * D, (u(3) / u(1) - 1) / s);
  // Delta * T_321: the Y_123 coefficient is -(1 - (1 + u3/u1 - u3/u2 - u2/u1)/((1 + q1/q2)(1 + q2/q1))).
  auto c321 = expand_in_yb(HeckeElement::basis(t, P("321")), u3, &basis);
  EXPECT_EQ(c321[P("321")] * D, RationalFunction(1));
  EXPECT_EQ(c321[P("231")] * D, RationalFunction(-1));
  EXPECT_EQ(c321[P("312")] * D, RationalFunction(-1));
  EXPECT_EQ(c321[P("213")] * D, RationalFunction(1));
  EXPECT_EQ(c321[P("132")] * D, RationalFunction(1));
  RationalFunction k = 1 - (1 + u(3) / u(1) - u(3) / u(2) - u(2) / u(1)) / (R("1 + q1/q2") * R("1 + q2/q1"));
  EXPECT_EQ(c321[P("123")] * D, -k);
  // Resubstitution recovers every T_mu.
  for (const auto& mu : enumerate(3)) {
    HeckeElement tm = HeckeElement::basis(t, mu);
    EXPECT_EQ(combine(t, expand_in_yb(tm, u3, &basis), basis), tm) << mu.to_string();
  }
}

TEST(Expansion, DegenerateSpectrum) {
  AlgebraSpec t(Family::T, 3);
  SpectralParams bad{{u(1), u(1), u(3)}};
  EXPECT_THROW(expand_in_yb(HeckeElement::one(t), bad), DegenerateSpectrum);
}

TEST(Descent, CorrectedIdentityForT) {
  AlgebraSpec t(Family::T, 4);
  auto u4 = SpectralParams::formal(4);
  RationalFunction s = R("q1 + q2");
  RationalFunction qq = R("q1*q2");
  for (const auto& mu : enumerate(4))
    for (int j = 1; j < 4; ++j) {
      if (!mu.has_descent(j)) continue;
      RationalFunction x = u4(mu(j + 1)) / u4(mu(j));
      HeckeElement lhs = yb_element(t, mu, u4) * (HeckeElement::one(t) + HeckeElement::generator(t, j).scaled((x - 1) / s));
      HeckeElement rhs = yb_element(t, mu.times_simple(j), u4).scaled(1 - (2 - x - x.inverse()) * qq / (s * s));
      EXPECT_EQ(lhs, rhs) << mu.to_string() << " j=" << j;
    }
}

TEST(Realization, OperatorsAgreeWithAbstractProducts) {
  ProbeRng rng(5);
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    auto probes = random_probes(3, 10, rng);
    HeckeElement a = random_element(alg, rng), b = random_element(alg, rng);
    HeckeElement ab = a * b;
    for (const auto& p : probes) {
      RationalFunction fp(p);
      EXPECT_EQ(realize(ab, fp), realize(a, realize(b, fp))) << family_name(f);
    }
  }
}

TEST(Realization, YangBaxterElementsAsOperators) {
  for (Family f : kFactorFamilies) {
    AlgebraSpec alg(f, 3);
    auto u3 = SpectralParams::formal(3);
    for (const auto& p : random_probes(3, 3, 6)) {
      RationalFunction fp(p);
      // Y_321 as composition of its three factor operators.
      RationalFunction composed = fp;
      Word w = P("321").reduced_word();
      Permutation nu = Permutation::identity(3);
      std::vector<HeckeElement> factors;
      for (int j : w) {
        factors.push_back(elementary_factor(alg, j, u3(nu(j)), u3(nu(j + 1))));
        nu = nu.times_simple(j);
      }
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) composed = realize(*it, composed);
      EXPECT_EQ(realize(yb_element(alg, P("321"), u3), fp), composed) << family_name(f);
    }
  }
}

TEST(Suites, SmallRanksPass) {
  for (Family f : kBasisFamilies) {
    AlgebraSpec alg(f, 3);
    auto u3 = SpectralParams::formal(3);
    EXPECT_TRUE(verify_ybe(f).passed()) << family_name(f);
    EXPECT_TRUE(verify_word_independence(alg, u3).passed()) << family_name(f);
    EXPECT_TRUE(verify_orthogonality(alg, u3).passed()) << family_name(f);
    EXPECT_TRUE(verify_phi(alg, 1).passed()) << family_name(f);
    EXPECT_TRUE(verify_faithfulness(alg, 1).passed()) << family_name(f);
    EXPECT_TRUE(verify_associativity(alg, 1).passed()) << family_name(f);
  }
  EXPECT_TRUE(verify_descent_identity(3).passed());
}

TEST(Suites, OrthogonalityN4) {
  for (Family f : {Family::partial, Family::pibar, Family::sigma}) {
    Report r = verify_orthogonality(AlgebraSpec(f, 4), SpectralParams::formal(4));
    EXPECT_TRUE(r.passed()) << family_name(f);
    EXPECT_EQ(r.checks, 576);
  }
}

TEST(Suites, FailuresCarryWitnesses) {
  AlgebraSpec t(Family::T, 2);
  auto u2 = SpectralParams::formal(2);
  GramMatrix g = yb_gram(t, u2);
  g.entries[0][0] = 1;
  Report r = verify_orthogonality(t, u2, &g);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].check, "<Y_12, Y_12>");
}
