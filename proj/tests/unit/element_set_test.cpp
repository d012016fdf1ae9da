#include <gtest/gtest.h>

#include <random>

#include "permgraph/element_set.hpp"

using permgraph::Element;
using permgraph::ElementSet;

TEST(ElementSet, BasicOperations) {
  ElementSet s(130);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_EQ(s.to_vector(), (std::vector<Element>{0, 64, 129}));
  s.erase(64);
  EXPECT_EQ(s.size(), 2u);
  ElementSet t(130);
  t.insert(0);
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_FALSE(s.is_subset_of(t));
  EXPECT_EQ((s & t), t);
  EXPECT_EQ(ElementSet(s).subtract(t).to_vector(), (std::vector<Element>{129}));
}

TEST(ElementSet, LexOrderMatchesSortedVectors) {
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.2);
  for (int trial = 0; trial < 2000; ++trial) {
    ElementSet a(150), b(150);
    for (Element e = 0; e < 150; ++e) {
      if (coin(rng)) a.insert(e);
      if (coin(rng)) b.insert(e);
    }
    if (trial % 3 == 0) b = a;
    if (trial % 5 == 0) b.erase(a.to_vector().empty() ? 0 : a.to_vector().back());
    EXPECT_EQ(lex_less(a, b), a.to_vector() < b.to_vector());
    EXPECT_EQ(lex_less(b, a), b.to_vector() < a.to_vector());
  }
}
