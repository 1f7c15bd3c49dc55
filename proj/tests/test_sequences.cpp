#include "fibpoly/errors.hpp"
#include "fibpoly/sequences.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace fibpoly;

TEST(Fib, Seeds) {
  SequenceCache cache;
  EXPECT_TRUE(fib(0, cache).is_zero());
  EXPECT_EQ(fib(1, cache), Polynomial::constant(1));
  EXPECT_EQ(fib(5, cache), (Polynomial{1, 0, 3, 0, 1}));
}

TEST(Lucas, Seeds) {
  SequenceCache cache;
  EXPECT_EQ(lucas(0, cache), Polynomial::constant(2));
  EXPECT_EQ(lucas(1, cache), Polynomial::x());
  EXPECT_EQ(lucas(3, cache), (Polynomial{0, 3, 0, 1}));
}

TEST(FibExpanded, Examples) {
  EXPECT_EQ(fib_expanded(1), Polynomial::constant(1));
  EXPECT_EQ(fib_expanded(5), (Polynomial{1, 0, 3, 0, 1}));
  EXPECT_EQ(fib_expanded(8), fib(8));
  EXPECT_EQ(fib_expanded(8), (Polynomial{0, 4, 0, 10, 0, 6, 0, 1}));
  EXPECT_THROW(fib_expanded(0), DomainError);
}

TEST(LucasExpanded, Examples) {
  EXPECT_EQ(lucas_expanded(1), Polynomial::x());
  EXPECT_EQ(lucas_expanded(2), (Polynomial{2, 0, 1}));
  EXPECT_EQ(lucas_expanded(4), (Polynomial{2, 0, 4, 0, 1}));
  EXPECT_EQ(lucas_expanded(4), lucas(4));
  EXPECT_THROW(lucas_expanded(0), DomainError);
}

TEST(CustomSequence, CoincidesWithFibAndLucas) {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    EXPECT_EQ(custom_sequence(Polynomial{}, Polynomial::constant(1), n), fib(n));
    EXPECT_EQ(custom_sequence(Polynomial::constant(2), Polynomial::x(), n), lucas(n));
  }
  EXPECT_EQ(custom_sequence(Polynomial::constant(1), Polynomial::constant(1), 3), (Polynomial{1, 1, 1}));
  EXPECT_EQ(custom_sequence(Polynomial{4, 4}, Polynomial{}, 0), (Polynomial{4, 4}));
}

TEST(Sequences, ExpansionsMatchRecurrenceUpTo200) {
  SequenceCache cache;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    ASSERT_EQ(fib_expanded(n), cache.fib(n)) << "n = " << n;
    // lucas_expanded throws NotDivisible if any (n-k) | n*C(n-k,k) fails.
    ASSERT_EQ(lucas_expanded(n), cache.lucas(n)) << "n = " << n;
  }
}

TEST(Sequences, DegreeAndMonic) {
  SequenceCache cache;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const Polynomial f = cache.fib(n);
    const Polynomial l = cache.lucas(n);
    ASSERT_EQ(f.degree(), Degree::finite(n - 1));
    ASSERT_EQ(l.degree(), Degree::finite(n));
    ASSERT_EQ(f.leading(), 1);
    ASSERT_EQ(l.leading(), 1);
  }
}

TEST(Sequences, ParitySupport) {
  SequenceCache cache;
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Polynomial f = cache.fib(n);
    const Polynomial l = cache.lucas(n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if ((i + n) % 2 == 0) ASSERT_EQ(f[i], 0) << "F_" << n << " x^" << i;  // i != n-1 mod 2
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if ((i + n) % 2 == 1) ASSERT_EQ(l[i], 0) << "L_" << n << " x^" << i;
    }
  }
}

TEST(Sequences, IntegerSpecialization) {
  SequenceCache cache;
  Coefficient f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (std::uint64_t n = 0; n <= 200; ++n) {
    ASSERT_EQ(poly_eval_int(cache.fib(n), 1), f0) << n;
    ASSERT_EQ(poly_eval_int(cache.lucas(n), 1), l0) << n;
    Coefficient f2 = f0 + f1, l2 = l0 + l1;
    f0 = f1;
    f1 = f2;
    l0 = l1;
    l1 = l2;
  }
}

TEST(SequenceCache, GrowsMonotonically) {
  SequenceCache cache;
  EXPECT_EQ(cache.size(), 2u);
  cache.lucas(10);
  EXPECT_EQ(cache.size(), 11u);
  cache.fib(3);
  EXPECT_EQ(cache.size(), 11u);
  cache.fib(20);
  EXPECT_EQ(cache.size(), 21u);
}

TEST(SequenceCache, CachedAndCacheFreePathsAgree) {
  SequenceCache cache;
  for (std::uint64_t n = 0; n <= 120; n += 7) {
    EXPECT_EQ(cache.fib(n), fib(n));
    EXPECT_EQ(cache.lucas(n), lucas(n));
  }
}

TEST(SequenceCache, ConcurrentReadersAndGrowth) {
  SequenceCache cache;
  const std::vector<Polynomial> expected_f = [] {
    std::vector<Polynomial> v;
    for (std::uint64_t n = 0; n <= 300; ++n) v.push_back(fib(n));
    return v;
  }();
  std::vector<std::thread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (std::uint64_t n = static_cast<std::uint64_t>(t); n <= 300; n += 3) {
        if (cache.fib(n) != expected_f[n]) ++bad[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int b : bad) EXPECT_EQ(b, 0);
  EXPECT_EQ(cache.size(), 301u);
}
