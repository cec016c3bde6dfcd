#include <gtest/gtest.h>

#include "orbita/veronese.hpp"

using namespace orbita;

namespace {

std::vector<Rational> q(std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); }

}  // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi_eval(q({1, 2})), q({1, 4, 4}));
  EXPECT_EQ(phi_eval(q({0, 1})), q({0, 0, 1}));
  EXPECT_EQ(phi_eval(q({1, 1, 1})), q({1, 2, 3, 2, 1}));
}

TEST(VeroneseFiber, Examples) {
  const auto a = recover_fiber(q({1, 4, 4}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], q({1, 2}));
  EXPECT_EQ(a[1], q({-1, -2}));
  const auto b = recover_fiber(q({1, 2, 3, 2, 1}));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], q({1, 1, 1}));
  EXPECT_TRUE(recover_fiber(q({1, 0, 1})).empty());
}

TEST(VeroneseFiber, NonSquareConstant) {
  try {
    recover_fiber(q({2, 0, 1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSquareC0);
  }
}

TEST(VeroneseFiber, ZeroConstantRecurses) {
  const auto f = recover_fiber(phi_eval(q({0, 3, -1})));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], q({0, 3, -1}));
}

TEST(Chain, Examples) {
  ChainPoint p{{q({1, 2}), q({2, 3})}};
  const auto img = chained_phi_eval(p);
  ASSERT_EQ(img.blocks.size(), 2u);
  EXPECT_EQ(img.blocks[0], q({1, 4, 4}));
  EXPECT_EQ(img.blocks[1], q({4, 12, 9}));

  ChainPoint single{{q({1, 2})}};
  EXPECT_EQ(chained_phi_eval(single).blocks.front(), phi_eval(q({1, 2})));

  ChainPoint zero{{q({1, 0}), q({0, 5})}};
  const auto z = chained_phi_eval(zero);
  EXPECT_EQ(z.blocks[0], q({1, 0, 0}));
  EXPECT_EQ(z.blocks[1], q({0, 0, 25}));
}

TEST(Chain, EndpointMismatch) {
  ChainPoint p{{q({1, 2}), q({3, 3})}};
  try {
    chained_phi_eval(p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EndpointMismatch);
  }
}

TEST(CrossProduct, Examples) {
  ChainPoint p{{q({1, 2}), q({2, 3})}};
  const auto r = cross_product_recovery(p, {0, 1}, {1, 1});
  EXPECT_EQ(r.recovered, 6);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(cross_product_recovery(p, {0, 0}, {0, 1}).pass);

  ChainPoint z{{q({1, 0}), q({0, 5})}};
  try {
    cross_product_recovery(z, {0, 0}, {1, 1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroChainValue);
  }
}

TEST(Property, FiberIsPlusMinus) {
  for (int e = 1; e <= 6; ++e) {
    Rng rng(100 + static_cast<std::uint64_t>(e));
    for (int k = 0; k < 50; ++k) {
      std::vector<Rational> y(static_cast<std::size_t>(e) + 1);
      y[0] = rng.small_rational(true);
      for (std::size_t i = 1; i < y.size(); ++i) y[i] = rng.small_rational();
      auto neg = y;
      for (auto& v : neg) v = -v;
      EXPECT_EQ(phi_eval(neg), phi_eval(y));
      const auto f = recover_fiber(phi_eval(y));
      ASSERT_EQ(f.size(), 2u);
      EXPECT_TRUE((f[0] == y && f[1] == neg) || (f[0] == neg && f[1] == y));
    }
  }
}

TEST(Property, ChainedConsistency) {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    ChainPoint p;
    Rational end = rng.small_rational(true);
    const int len = static_cast<int>(rng.uniform_int(1, 4));
    for (int b = 0; b < len; ++b) {
      std::vector<Rational> y(static_cast<std::size_t>(rng.uniform_int(2, 4)));
      y.front() = end;
      for (std::size_t i = 1; i < y.size(); ++i) y[i] = rng.small_rational(true);
      end = y.back();
      p.blocks.push_back(y);
    }
    const auto img = chained_phi_eval(p);
    for (std::size_t b = 0; b + 1 < img.blocks.size(); ++b) EXPECT_EQ(img.blocks[b].back(), img.blocks[b + 1].front());
    for (std::size_t a = 0; a < p.blocks.size(); ++a)
      for (std::size_t b = a; b < p.blocks.size(); ++b) {
        const auto r = cross_product_recovery(p, {a, 0}, {b, p.blocks[b].size() - 1});
        EXPECT_EQ(r.recovered, p.blocks[a][0] * p.blocks[b].back());
      }
  }
}
