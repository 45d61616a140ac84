#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace {

using namespace barbell;

Word B(std::string_view s) { return parse_word(s, Alphabet::base()); }
Word Q(std::string_view s) { return parse_word(s, Alphabet::quad()); }

RingElement E(std::string_view s) { return parse_ring_expression(s); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

RingElement random_element(std::mt19937_64& rng, Alphabet a = Alphabet::quad(),
                           bool integral = false) {
  static const std::vector<std::string> base_pool = {"1", "t", "u", "t^-1", "t u", "u t^2", "t u t^-1"};
  static const std::vector<std::string> quad_pool = {
      "1", "t_1", "u_3", "t_1 u_3", "t_1^-1 t_3", "u_1^2 t_3^-1", "t_3 u_3^-1 t_3^-1"};
  const auto& pool = a == Alphabet::base() ? base_pool : quad_pool;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> n(0, 6), small(-3, 3);
  RingElement x(a);
  for (int i = n(rng); i > 0; --i) {
    x.add_term(parse_word(pool[pick(rng)], a),
               integral ? Rational(small(rng)) : random_rational(rng));
  }
  return x;
}

TEST(Add, Examples) {
  EXPECT_EQ(E("t_1 + u_3") + E("-u_3"), E("t_1"));
  RingElement x = E("2 t_1 - 1/3 u_3^2");
  EXPECT_EQ(x + RingElement(), x);
  EXPECT_EQ(E("t_1 u_3") + E("t_1 u_3"), E("2 t_1 u_3"));
  EXPECT_THROW(add(E("t_1"), RingElement::monomial(B("t"))), AlphabetError);
}

TEST(Scale, Examples) {
  RingElement x = E("t_1 - 3/2 u_3 t_3");
  EXPECT_EQ(scale(1, x), x);
  EXPECT_TRUE((scale(-1, x) + x).is_zero());
  EXPECT_TRUE(scale(0, x).is_zero());
  EXPECT_EQ(scale(2, x), E("2 t_1 - 3 u_3 t_3"));
}

TEST(RingElement, CanonicalForm) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    RingElement x = random_element(rng);
    EXPECT_TRUE(add(x, scale(-1, x)).terms().empty());
    for (const auto& [w, c] : x.terms()) {
      EXPECT_FALSE(c.is_zero());
    }
  }
}

TEST(Coeff, Examples) {
  const auto [m1, m2] = monomials_m(1);
  const RingElement t4 = w3_target(Disk::delta1, 1).value;
  EXPECT_EQ(coeff(t4, m1), 1);
  EXPECT_EQ(coeff(t4, m2), 0);
  EXPECT_EQ(coeff(RingElement(), m1), 0);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(psi(1), w3_target(Disk::delta1, 1).value), 1);
  EXPECT_EQ(evaluate(psi(2), w3_target(Disk::delta2, 2).value), 3);
  EXPECT_EQ(evaluate(psi(5), RingElement()), 0);
}

TEST(Evaluate, Linearity) {
  std::mt19937_64 rng(12);
  const std::vector<Word> support = {Q("t_1"), Q("u_3"), Q("t_1 u_3"), Q("1"),
                                     Q("t_1^-1 t_3")};
  for (int i = 0; i < 300; ++i) {
    std::map<Word, Rational> weights;
    for (const Word& w : support) {
      if (rng() % 2) {
        weights[w] = random_rational(rng);
      }
    }
    Functional f(weights);
    RingElement x = random_element(rng), y = random_element(rng);
    Rational a = random_rational(rng), b = random_rational(rng);
    EXPECT_EQ(f(scale(a, x) + scale(b, y)), a * f(x) + b * f(y));
  }
}

TEST(Mod2, Examples) {
  RingElement x = parse_ring_expression("2 t u t^-1 + t^3 u^3 t^2", Alphabet::base());
  Mod2Element p = mod2_project(x);
  EXPECT_EQ(p.support(), (std::set<Word>{B("t^3 u^3 t^2")}));
  EXPECT_TRUE(mod2_project(RingElement::monomial(Word())).is_zero());
  EXPECT_TRUE(mod2_project(RingElement(Alphabet::base())).is_zero());
  EXPECT_THROW(mod2_project(parse_ring_expression("1/2 t", Alphabet::base())),
               DomainError);
  EXPECT_THROW(mod2_project(E("t_1")), AlphabetError);
}

TEST(Mod2, Additive) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    RingElement x = random_element(rng, Alphabet::base(), true);
    RingElement y = random_element(rng, Alphabet::base(), true);
    EXPECT_EQ(mod2_project(x + y), mod2_project(x) + mod2_project(y));
  }
}

TEST(Rank, Examples) {
  std::vector<RingElement> targets;
  for (int k = 1; k <= 5; ++k) {
    targets.push_back(w3_target(Disk::delta1, k).value);
  }
  EXPECT_EQ(rank(targets), 5u);
  EXPECT_EQ(oracle::rational_rank(targets), 5u);

  RingElement x = E("t_1 - u_3");
  std::vector<RingElement> twice = {x, x};
  EXPECT_EQ(rank(twice), 1u);
  EXPECT_EQ(rank(std::span<const RingElement>()), 0u);
}

TEST(Rank, AgreesWithRationalElimination) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> n(0, 6);
    std::vector<RingElement> xs;
    for (int j = n(rng); j > 0; --j) {
      xs.push_back(random_element(rng));
    }
    EXPECT_EQ(rank(xs), oracle::rational_rank(xs));
  }
}

TEST(Rank, Invariances) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    std::vector<RingElement> xs;
    for (int j = 0; j < 4; ++j) {
      xs.push_back(random_element(rng));
    }
    const std::size_t r = rank(xs);

    auto shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(rank(shuffled), r);

    auto scaled = xs;
    for (auto& x : scaled) {
      Rational q = random_rational(rng);
      x = scale(q.is_zero() ? Rational(7) : q, x);
    }
    EXPECT_EQ(rank(scaled), r);

    RingElement combo;
    for (const auto& x : xs) {
      combo += scale(random_rational(rng), x);
    }
    auto extended = xs;
    extended.push_back(combo);
    EXPECT_EQ(rank(extended), r);
  }
}

TEST(IntegerMatrixRank, Basic) {
  using M = std::vector<std::vector<Integer>>;
  EXPECT_EQ(integer_matrix_rank(M{}), 0u);
  EXPECT_EQ(integer_matrix_rank(M{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(integer_matrix_rank(M{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_matrix_rank(M{{0, 1, 2}, {0, 2, 5}, {0, 0, 0}}), 2u);
  EXPECT_EQ(integer_matrix_rank(M{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), 3u);
}

TEST(Printing, Examples) {
  EXPECT_EQ(to_string(RingElement()), "0");
  EXPECT_EQ(to_string(E("-t_1")), "-t_1");
  EXPECT_EQ(to_string(E("2 t_1 u_3 - t_1^-1")), "-t_1^-1 + 2 t_1 u_3");
  EXPECT_EQ(to_string(E("1/2 1 + 3")), "7/2");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_THROW(parse_rational("4/-6"), ParseError);
}

TEST(Printing, RoundTrip) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 300; ++i) {
    for (Alphabet a : {Alphabet::base(), Alphabet::quad()}) {
      RingElement x = random_element(rng, a);
      EXPECT_EQ(parse_ring_expression(to_string(x), a), x) << to_string(x);
    }
  }
}

TEST(Expression, Errors) {
  EXPECT_THROW(E(""), ParseError);
  EXPECT_THROW(E("t_1 +"), ParseError);
  EXPECT_THROW(E("t_1 t_3 2"), ParseError);
  EXPECT_THROW(E("t_1 + t"), AlphabetError);
  EXPECT_THROW(E("1/0 t_1"), ParseError);
}

}  // namespace
