#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hullcodes/code.hpp"
#include "hullcodes/error.hpp"

using namespace hc;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

LinearCode random_code(const Alphabet& a, int k, int n, std::mt19937& rng) {
  const auto letters = a.letters();
  std::uniform_int_distribution<std::size_t> d(0, letters.size() - 1);
  Matrix m(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<std::int32_t>(letters[d(rng)].index);
  return from_rows(a, m);
}

// Brute-force set of codewords for tiny codes: all F_q-combinations of rows.
std::vector<RowVec> brute_words(const LinearCode& c) {
  std::vector<RowVec> words;
  for_each_codeword(c, 1 << 20, [&](const RowVec& w) { words.push_back(w); });
  return words;
}

}  // namespace

TEST_CASE("from_rows basics") {
  const auto f3 = prime_alphabet(3);
  CHECK(from_rows(f3, {{1, 0}, {0, 1}}, 2).k() == 2);
  CHECK(from_rows(f3, {{1, 2}, {2, 1}}, 2).k() == 1);  // 2*(1,2) = (2,1)
  CHECK(from_rows(f3, {}, 4).k() == 0);
  CHECK(kind_of([&] { from_rows(f3, {{1, 2}, {1}}, 2); }) == ErrorKind::RaggedRows);
  CHECK(kind_of([&] { from_rows(f3, {}, 0); }) == ErrorKind::EmptyLength);
}

TEST_CASE("dual and hull examples") {
  const auto f3 = prime_alphabet(3);
  CHECK(dual(full_space(f3, 2)).k() == 0);
  CHECK(dual(from_rows(f3, {{1, 2}}, 2)) == from_rows(f3, {{1, 1}}, 2));
  const auto f2 = prime_alphabet(2);
  CHECK(hull(from_rows(f2, {{1, 1}}, 2)) == from_rows(f2, {{1, 1}}, 2));
  CHECK(hull_dim(from_rows(f3, {{1, 2}}, 2)) == 0);
}

TEST_CASE("dual, hull and sum identities on random codes") {
  std::mt19937 rng(5);
  auto f9 = make_field(3, 2);
  for (const Alphabet& a : {prime_alphabet(2), prime_alphabet(3), prime_alphabet(5), subfield_alphabet(f9, 2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 7;
      const int k = trial % (n + 1);
      const auto c = random_code(a, k, n, rng);
      const auto d = dual(c);
      CHECK(c.k() + d.k() == n);
      CHECK(dual(d) == c);
      CHECK(hull(c) == hull(d));
      CHECK(hull(c) == intersect(c, d));
      CHECK(hull_dim(c) == c.k() + d.k() - sum(c, d).k());
      const auto c2 = random_code(a, (trial * 3) % (n + 1), n, rng);
      CHECK(dual(sum(c, c2)) == intersect(d, dual(c2)));
      // Every basis vector of the dual is orthogonal to every codeword row.
      with_ops(a, [&](auto ops) {
        for (Eigen::Index i = 0; i < c.k(); ++i)
          for (Eigen::Index j = 0; j < d.k(); ++j) {
            std::int32_t s = 0;
            for (int t = 0; t < n; ++t) s = ops.add(s, ops.mul(c.generator()(i, t), d.generator()(j, t)));
            CHECK(s == 0);
          }
        return 0;
      });
    }
  }
}

TEST_CASE("enumeration") {
  const auto f3 = prime_alphabet(3);
  const auto c = from_rows(f3, {{1, 1}}, 2);
  const auto cwe = complete_weight_enumerator(c);
  CHECK(cwe == CompleteWeightEnumerator{{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  CHECK(weight_distribution(zero_code(f3, 3)) == WeightDistribution{{0, 1}});
  CHECK(kind_of([&] { min_distance(zero_code(f3, 3)); }) == ErrorKind::ZeroCode);
  CHECK(kind_of([&] { weight_distribution(full_space(f3, 10), 100); }) == ErrorKind::TooLarge);

  std::mt19937 rng(9);
  auto f9 = make_field(3, 2);
  for (const Alphabet& a : {prime_alphabet(2), prime_alphabet(5), subfield_alphabet(f9, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto code = random_code(a, 1 + trial % 3, 6, rng);
      const auto words = brute_words(code);
      CHECK(words.size() == codeword_count(code));
      std::set<std::vector<std::int32_t>> distinct;
      for (const auto& w : words) {
        distinct.insert(std::vector<std::int32_t>(w.data(), w.data() + w.size()));
        CHECK(contains(code, w));
      }
      CHECK(distinct.size() == words.size());
      const auto wd = weight_distribution(code);
      CHECK(marginal(complete_weight_enumerator(code)) == wd);
      std::uint64_t total = 0;
      for (auto [w, n] : wd) total += n;
      CHECK(total == codeword_count(code));
      const auto d = min_distance(code);
      CHECK(static_cast<Eigen::Index>(d) <= code.n() - code.k() + 1);
      for (auto [w, n] : wd) CHECK((w == 0 || w >= d));
    }
  }
}

TEST_CASE("restriction to the prime subfield") {
  auto f9 = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const auto a9 = subfield_alphabet(f9, 2);
  CHECK(restrict_to_prime_subfield(full_space(a9, 3)) == full_space(prime_alphabet(3), 3));
  const Elem w = f9->generator();
  const auto l1 = from_rows(a9, {{1, w.index}}, 2);
  CHECK(restrict_to_prime_subfield(dual(l1)).k() == 0);
  const auto l2 = from_rows(a9, {{1, 2}}, 2);
  CHECK(contains(restrict_to_prime_subfield(dual(l2)), RowVec{{1, 1}}));

  // Brute force: V ∩ F_p^n by filtering all of F_p^n.
  std::mt19937 rng(2);
  auto f16 = make_field(2, 4);
  for (auto [ctx, s] : {std::pair{f9, 1u}, {f16, 1u}, {f16, 2u}}) {
    const Alphabet big = subfield_alphabet(ctx, ctx->m());
    const Alphabet small = subfield_alphabet(ctx, s);
    for (int trial = 0; trial < 6; ++trial) {
      const auto v = random_code(big, 1 + trial % 3, 4, rng);
      const auto r = restrict_to_subfield(v, s);
      std::uint64_t count = 0;
      for_each_codeword(full_space(small, 4), 1 << 20, [&](const RowVec& w) { count += contains(v, w); });
      CHECK(count == codeword_count(r));
      for_each_codeword(r, 1 << 20, [&](const RowVec& w) { CHECK(contains(v, w)); });
    }
  }
}
