#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hullcodes/error.hpp"
#include "hullcodes/function.hpp"

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

FieldPtr f9() { return make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1}); }

// Direct evaluation of sum_x zeta^{f(x) - Tr(bx)} as a histogram of exponents.
std::vector<std::int64_t> exponent_histogram(const ParyFunction& f, Elem b) {
  const auto& c = *f.ctx;
  std::vector<std::int64_t> h(c.p(), 0);
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const Elem x{i};
    const std::int64_t t = trace(c, c.mul(b, x), 1).index;
    h[((f(x).index - t) % c.p() + c.p()) % c.p()]++;
  }
  return h;
}

ParyFunction random_function(FieldPtr ctx, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, ctx->p() - 1);
  return tabulate(ctx, 1, [&](Elem) { return Elem{d(rng)}; });
}

}  // namespace

TEST_CASE("parser") {
  auto f = f9();
  const auto x6 = parse_function(f, "x^6");
  CHECK(x6.codomain_degree == 2);
  CHECK(x6(f->generator()) == f->pow(f->generator(), 6));
  const auto t = parse_function(f, "tr(x^2)");
  CHECK(t.codomain_degree == 1);
  for (std::uint32_t i = 0; i < 9; ++i) CHECK(t(Elem{i}) == trace(*f, f->mul(Elem{i}, Elem{i}), 1));
  CHECK(parse_function(f, "quadratic(1,0)").table == t.table);
  CHECK(parse_function(f, "ternary_half(1,3)").table == parse_function(f, "tr(x^14)").table);
  CHECK(parse_function(f, "2*x^2 - x + w").codomain_degree == 2);
  CHECK(parse_function(f, "coord(1)")(f->generator()) == f->one());
  CHECK(parse_function(f, "g^3")(f->zero()) == f->pow(f->primitive(), 3));
  CHECK(kind_of([&] { parse_function(f, "x^"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_function(f, "y + 1"); }) == ErrorKind::UndefinedSymbol);
  CHECK(kind_of([&] { parse_function(f, "x^99999999999999999999999"); }) == ErrorKind::ExponentOverflow);
}

TEST_CASE("Walsh transform matches direct sums") {
  auto f = f9();
  std::mt19937 rng(7);
  const auto g = random_function(f, rng);
  const auto s = walsh_transform(g);
  for (std::uint32_t b = 0; b < 9; ++b) CHECK(s[Elem{b}] == CycInt::from_raw(3, exponent_histogram(g, Elem{b})));
  CHECK(kind_of([&] { walsh_transform(parse_function(f, "x")); }) == ErrorKind::WrongCodomain);
}

TEST_CASE("Walsh of zero function is q at 0 only") {
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {2u, 4u}, {3u, 4u}, {5u, 4u}}) {
    auto f = make_field(p, m);
    const auto s = walsh_transform(tabulate(f, 1, [](Elem) { return Elem{0}; }));
    for (std::uint32_t b = 0; b < f->size(); ++b) {
      CHECK(s[Elem{b}] == CycInt::from_int(p, b == 0 ? f->size() : 0));
    }
  }
}

TEST_CASE("Tr(x^2) on F_3 has coefficient 1 + 2 zeta at 0") {
  auto f3 = make_field(3, 1);
  const auto s = walsh_transform(parse_function(f3, "tr(x^2)"));
  CHECK(s[Elem{0}] == CycInt::from_raw(3, std::vector<std::int64_t>{1, 2, 0}));
}

TEST_CASE("linear shift translates the spectrum") {
  auto f = make_field(5, 2);
  std::mt19937 rng(11);
  const auto g = random_function(f, rng);
  const auto sg = walsh_transform(g);
  for (std::uint32_t c : {1u, 7u, 13u}) {
    const Elem ce{c};
    const auto h = tabulate(f, 1, [&](Elem x) { return f->add(g(x), trace(*f, f->mul(ce, x), 1)); });
    const auto sh = walsh_transform(h);
    for (std::uint32_t b = 0; b < f->size(); ++b) CHECK(sh[Elem{b}] == sg[f->sub(Elem{b}, ce)]);
    CHECK(classify_bent(sh).kind == classify_bent(sg).kind);
  }
}

TEST_CASE("classification") {
  auto f = f9();
  const auto g = parse_function(f, "tr(x^2)");
  const auto cls = classify_bent(walsh_transform(g));
  CHECK(cls.kind == BentKind::WeaklyRegularBent);
  REQUIRE(cls.epsilon);
  CHECK(cls.dual.has_value());
  // Reconstruction eps * G^m * zeta^{g*(b)}.
  const BigCyc gm = gauss_sum_power(3, 2);
  const auto s = walsh_transform(g);
  for (std::uint32_t b = 0; b < 9; ++b) {
    const BigCyc rec = gm.rotate(cls.dual->table[b].index) * BigInt(*cls.epsilon);
    CHECK(cyclotomic_cast<BigInt>(s[Elem{b}]) == rec);
  }
  CHECK(classify_bent(walsh_transform(parse_function(f, "tr(w*x)"))).kind == BentKind::NotBent);

  auto f16 = make_field(2, 4);
  const auto bf = parse_function(f16, "coord(0)*coord(1) + coord(2)*coord(3)");
  const auto sb = walsh_transform(bf);
  for (const auto& c : sb.coeffs) CHECK((c.rational() == 4 || c.rational() == -4));
  CHECK(classify_bent(sb).kind == BentKind::RegularBent);
}

TEST_CASE("units follow the case table") {
  // m odd, p = 3 mod 4: u is +-i.
  auto f27 = make_field(3, 3);
  const auto c27 = classify_bent(walsh_transform(parse_function(f27, "tr(x^2)")));
  CHECK(c27.kind == BentKind::WeaklyRegularBent);
  CHECK((c27.unit == Unit::PlusI || c27.unit == Unit::MinusI));
  auto f5 = make_field(5, 1);
  const auto c5 = classify_bent(walsh_transform(parse_function(f5, "tr(x^2)")));
  CHECK((c5.unit == Unit::PlusOne || c5.unit == Unit::MinusOne));
}

TEST_CASE("dual relation") {
  for (auto [p, m, spec] : {std::tuple{3u, 2u, "tr(x^2)"}, {5u, 2u, "tr(x^2)"}, {3u, 3u, "tr(x^2 + x)"},
                            {3u, 2u, "tr(x^2 + w*x)"}, {2u, 4u, "tr(w*x^3)"}, {7u, 1u, "tr(3*x^2 + x)"}}) {
    auto f = make_field(p, m);
    const auto g = parse_function(f, spec);
    const auto cls = classify_bent(walsh_transform(g));
    REQUIRE(cls.dual);
    CHECK(verify_dual_relation(g, cls).all);
  }
  auto f = f9();
  const auto zero = parse_function(f, "0");
  CHECK(kind_of([&] { verify_dual_relation(zero, classify_bent(walsh_transform(zero))); }) ==
        ErrorKind::NotWeaklyRegular);
}

TEST_CASE("Parseval on random functions") {
  std::mt19937 rng(3);
  for (auto [p, m] : {std::pair{3u, 2u}, {2u, 4u}, {5u, 2u}, {7u, 1u}}) {
    auto f = make_field(p, m);
    for (int i = 0; i < 20; ++i) CHECK_NOTHROW(walsh_transform(random_function(f, rng)));
  }
}

TEST_CASE("differential uniformity") {
  auto f16 = make_field(2, 4);
  CHECK(differential_uniformity(parse_function(f16, "x^3")) == 2);
  auto f = f9();
  CHECK(differential_uniformity(parse_function(f, "x^2")) == 1);
  CHECK(differential_uniformity(parse_function(f, "x^3")) == 9);
  // PN: every derivative is a bijection.
  const auto sq = parse_function(f, "x^2");
  for (std::uint32_t a = 1; a < 9; ++a) {
    std::vector<int> seen(9, 0);
    for (std::uint32_t x = 0; x < 9; ++x) seen[f->sub(sq(f->add(Elem{x}, Elem{a})), sq(Elem{x})).index]++;
    for (int s : seen) CHECK(s == 1);
  }
  CHECK(kind_of([&] { differential_uniformity(parse_function(f, "tr(x)")); }) == ErrorKind::WrongCodomain);
}
