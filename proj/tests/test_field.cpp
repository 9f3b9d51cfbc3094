#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hullcodes/error.hpp"
#include "hullcodes/field.hpp"

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

// x + x^p + ... by repeated multiplication only.
Elem slow_trace(const FieldCtx& f, Elem x, std::uint32_t s) {
  Elem acc = f.zero();
  Elem cur = x;
  for (std::uint32_t i = 0; i < f.m() / s; ++i) {
    acc = f.add(acc, cur);
    for (std::uint32_t k = 0; k < s; ++k) {
      Elem pw = f.one();
      for (std::uint32_t j = 0; j < f.p(); ++j) pw = f.mul(pw, cur);
      cur = pw;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("prime field F_3") {
  auto f = make_field(3, 1);
  CHECK(f->size() == 3);
  CHECK(f->add(Elem{2}, Elem{2}) == Elem{1});
  CHECK(f->mul(Elem{2}, Elem{2}) == Elem{1});
}

TEST_CASE("F_9 from x^2+1 and rejection of x^2+2") {
  auto f = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Elem w = f->generator();
  CHECK(f->mul(w, w) == f->from_int(-1));
  CHECK(kind_of([] { make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { make_field(4, 1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { make_field(3, 2, std::vector<std::uint32_t>{1, 1}); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("default modulus is the smallest irreducible") {
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(make_field(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("irreducibility agrees with a root search for degree 2 and 3") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t deg : {2u, 3u}) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i) count *= p;
      for (std::uint32_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> f(deg + 1, 0);
        f[deg] = 1;
        std::uint32_t rest = idx;
        for (std::uint32_t i = 0; i < deg; ++i) {
          f[i] = rest % p;
          rest /= p;
        }
        bool has_root = false;
        for (std::uint32_t a = 0; a < p; ++a) {
          std::uint64_t v = 0;
          for (std::uint32_t i = deg + 1; i-- > 0;) v = (v * a + f[i]) % p;
          has_root = has_root || v == 0;
        }
        CHECK(poly::is_irreducible(f, p) == !has_root);
      }
    }
  }
}

TEST_CASE("field axioms, exhaustive on small fields") {
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {2u, 4u}, {3u, 3u}}) {
    auto f = make_field(p, m);
    const std::uint32_t q = f->size();
    for (std::uint32_t a = 0; a < q; ++a) {
      const Elem x{a};
      if (a) CHECK(f->mul(x, f->inv(x)) == f->one());
      CHECK(f->add(x, f->neg(x)) == f->zero());
      for (std::uint32_t b = 0; b < q; ++b) {
        const Elem y{b};
        CHECK(f->mul(x, y) == f->mul(y, x));
        for (std::uint32_t c = 0; c < q; c += (q > 9 ? 3 : 1)) {
          const Elem z{c};
          CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
          CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("trace values on F_9") {
  auto f = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(trace(*f, f->one(), 1) == Elem{2});
  CHECK(trace(*f, f->generator(), 1) == f->zero());
  int zeros = 0;
  for (std::uint32_t i = 0; i < 9; ++i) zeros += trace(*f, Elem{i}, 1) == f->zero();
  CHECK(zeros == 3);
  CHECK(kind_of([&] { trace(*f, f->one(), 3); }) == ErrorKind::NotASubfield);
}

TEST_CASE("trace is additive, Frobenius-invariant and matches the power sum") {
  for (auto [p, m] : {std::pair{3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {2u, 6u}}) {
    auto f = make_field(p, m);
    for (std::uint32_t s = 1; s <= m; ++s) {
      if (m % s) continue;
      for (std::uint32_t a = 0; a < f->size(); ++a) {
        const Elem x{a};
        const Elem t = trace(*f, x, s);
        CHECK(t == slow_trace(*f, x, s));
        CHECK(f->in_subfield(t, s));
        CHECK(trace(*f, f->frobenius(x, s), s) == t);
        for (std::uint32_t b = 0; b < f->size(); b += 5) {
          const Elem y{b};
          CHECK(trace(*f, f->add(x, y), s) == f->add(t, trace(*f, y, s)));
        }
      }
    }
  }
}

TEST_CASE("trace kernel equals {a^p - a}") {
  auto f9 = make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const auto k9 = trace_kernel(*f9);
  const Elem w = f9->generator();
  CHECK(k9 == std::vector<Elem>{f9->zero(), w, f9->add(w, w)});
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 3u}, {5u, 2u}, {3u, 5u}, {7u, 3u}, {3u, 6u}}) {
    auto f = make_field(p, m);
    const auto k = trace_kernel(*f);
    CHECK(k.size() * p == f->size());
    std::set<Elem> as;
    for (std::uint32_t i = 0; i < f->size(); ++i) {
      Elem a{i};
      Elem ap = f->one();
      for (std::uint32_t j = 0; j < p; ++j) ap = f->mul(ap, a);
      as.insert(f->sub(ap, a));
    }
    CHECK(std::set<Elem>(k.begin(), k.end()) == as);
  }
}

TEST_CASE("field spec round trip and size guard") {
  auto f = parse_field_spec("p=3,m=2,poly=1,0,1");
  CHECK(field_spec(*f) == "p=3,m=2,poly=1,0,1");
  CHECK(parse_field_spec("p=2,m=4")->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(kind_of([] { parse_field_spec("p=3"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { make_field(2, 21); }) == ErrorKind::TooLarge);
}
