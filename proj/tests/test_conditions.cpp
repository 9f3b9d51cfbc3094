#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hullcodes/conditions.hpp"
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

ParyFunction monomial(const FieldPtr& ctx, std::uint64_t e, Elem c) {
  return tabulate(ctx, ctx->m(), [&](Elem x) { return ctx->mul(c, ctx->pow(x, e)); });
}

RowVec random_member(const LinearCode& c, std::mt19937& rng) {
  const std::uint32_t p = c.alphabet().p();
  std::uniform_int_distribution<std::int32_t> d(0, static_cast<std::int32_t>(p) - 1);
  RowVec w = RowVec::Zero(c.n());
  for (Eigen::Index r = 0; r < c.k(); ++r) {
    const std::int32_t s = d(rng);
    for (Eigen::Index i = 0; i < c.n(); ++i) w(i) = (w(i) + s * c.generator()(r, i)) % static_cast<std::int32_t>(p);
  }
  return w;
}

RowVec random_word(Eigen::Index n, std::uint32_t p, std::mt19937& rng) {
  std::uniform_int_distribution<std::int32_t> d(0, static_cast<std::int32_t>(p) - 1);
  RowVec w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = d(rng);
  return w;
}

struct Instance {
  FieldPtr ctx;
  ParyFunction f;
};

std::vector<Instance> first_grid() {
  std::vector<Instance> out;
  auto f9 = make_field(3, 2), f25 = make_field(5, 2), f27 = make_field(3, 3), f16 = make_field(2, 4);
  out.push_back({f9, monomial(f9, 2, f9->one())});
  out.push_back({f9, monomial(f9, 6, f9->one())});
  out.push_back({f9, monomial(f9, 2, f9->generator())});
  out.push_back({f25, monomial(f25, 2, f25->one())});
  out.push_back({f25, monomial(f25, 6, f25->add(f25->generator(), f25->one()))});
  out.push_back({f27, monomial(f27, 2, f27->one())});
  out.push_back({f16, monomial(f16, 3, f16->generator())});
  return out;
}

}  // namespace

TEST_CASE("weight via Walsh sum matches brute force") {
  std::mt19937 rng(2);
  for (auto [p, m] : {std::pair{3u, 2u}, {2u, 3u}, {5u, 1u}, {2u, 4u}}) {
    auto ctx = make_field(p, m);
    std::vector<ParyFunction> psis{monomial(ctx, 2, ctx->one())};
    std::uniform_int_distribution<std::uint32_t> d(0, ctx->size() - 1);
    for (int t = 0; t < 3; ++t)
      psis.push_back(tabulate(ctx, m, [&](Elem x) { return x == ctx->zero() ? ctx->zero() : Elem{d(rng)}; }));
    for (const auto& psi : psis)
      for (std::uint32_t a = 0; a < ctx->size(); ++a)
        for (std::uint32_t b = 0; b < ctx->size(); ++b)
          CHECK(weight_via_walsh_sum(psi, Elem{a}, Elem{b}) ==
                hamming_weight(first_codeword(psi, Elem{a}, ctx->neg(Elem{b}))));
  }
}

TEST_CASE("weight via character sum matches brute force") {
  std::mt19937 rng(3);
  for (auto [p, m, s] : {std::tuple{3u, 3u, 1u}, {2u, 4u, 2u}, {2u, 4u, 1u}, {5u, 2u, 1u}, {3u, 2u, 2u}}) {
    auto ctx = make_field(p, m);
    std::uniform_int_distribution<std::uint32_t> d(0, ctx->size() - 1);
    for (int t = 0; t < 5; ++t) {
      DefiningSet set{ctx, s, {}, "", {}};
      for (int i = 0; i < 7; ++i) set.elements.push_back(Elem{d(rng)});
      for (std::uint32_t x = 0; x < ctx->size(); ++x)
        CHECK(weight_via_character_sum(set, Elem{x}) == hamming_weight(second_codeword(set, Elem{x})));
    }
  }
  auto f9 = make_field(3, 2);
  const auto skew = make_skew_set(f9);
  for (std::uint32_t x = 1; x < 9; ++x) CHECK(weight_via_character_sum(skew, Elem{x}) == 3);
}

TEST_CASE("closed-form weights of C(Psi)") {
  struct Case {
    std::uint32_t p, m;
    std::uint64_t e;
    bool gamma;
  };
  for (auto [p, m, e, gamma] : {Case{3, 2, 2, false}, Case{3, 2, 2, true}, Case{3, 3, 2, false}, Case{5, 2, 2, false},
                                Case{3, 4, 2, false}, Case{5, 1, 2, false}, Case{7, 1, 2, false}, Case{2, 4, 3, true},
                                Case{2, 6, 3, true}, Case{3, 3, 4, false}}) {
    CAPTURE(p);
    CAPTURE(m);
    CAPTURE(e);
    auto ctx = make_field(p, m);
    const auto psi = monomial(ctx, e, gamma ? ctx->generator() : ctx->one());
    const BentClass cls = classify_bent(walsh_transform(trace_of(psi)));
    REQUIRE(cls.dual);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < ctx->size(); ++b) {
        const Elem al = ctx->from_int(a), be{b};
        CHECK(theorem1_weight(cls, al, be) == hamming_weight(first_codeword(psi, al, ctx->neg(be))));
      }
    if (m > 1) CHECK(kind_of([&] { theorem1_weight(cls, ctx->generator(), ctx->one()); }) == ErrorKind::AlphaOutsidePrimeField);
  }
  auto f9 = make_field(3, 2);
  CHECK(classify_bent(walsh_transform(trace_of(monomial(f9, 2, f9->one())))).kind == BentKind::WeaklyRegularBent);
  const BentClass none = classify_bent(walsh_transform(trace_of(monomial(f9, 3, f9->one()))));
  CHECK(kind_of([&] { theorem1_weight(none, f9->one(), f9->one()); }) == ErrorKind::NotBent);
}

TEST_CASE("Ding weight multiset") {
  auto f16 = make_field(2, 4);
  const auto bent = parse_function(f16, "coord(0)*coord(1) + coord(2)*coord(3)");
  CHECK(ding_weight_multiset(bent) == WeightDistribution{{0, 1}, {2, 6}, {4, 9}});
  CHECK(kind_of([&] { ding_weight_multiset(parse_function(f16, "tr(w*x)")); }) == ErrorKind::AffineFunction);
  CHECK(kind_of([] { auto f = make_field(3, 2); ding_weight_multiset(parse_function(f, "tr(x^2)")); }) ==
        ErrorKind::OddCharacteristic);
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (auto m : {3u, 4u, 5u}) {
    auto ctx = make_field(2, m);
    for (int t = 0; t < 20; ++t) {
      const auto f = tabulate(ctx, 1, [&](Elem) { return Elem{coin(rng) ? 1u : 0u}; });
      WeightDistribution ding;
      try {
        ding = ding_weight_multiset(f);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AffineFunction);
        continue;
      }
      const auto d = make_preimage_set(f, Elem{1});
      WeightDistribution brute{{0, 1}};
      for (std::uint32_t x = 1; x < ctx->size(); ++x) brute[hamming_weight(second_codeword(d, Elem{x}))]++;
      CHECK(ding == brute);
    }
  }
}

TEST_CASE("necessary conditions have no false negatives on the dual") {
  std::mt19937 rng(6);
  for (const auto& inst : first_grid()) {
    CAPTURE(field_spec(*inst.ctx));
    const auto cc = ConditionContext::first(inst.f);
    const auto d = dual(cc.code());
    int used = 0;
    for (Variant v : cc.variants()) {
      if (!cc.applicable(v)) continue;
      ++used;
      CAPTURE(to_string(v));
      for (Eigen::Index r = 0; r < d.k(); ++r) {
        const auto verdict = cc.dual_membership(v, d.generator().row(r));
        CHECK(verdict.holds);
        CHECK(verdict.imaginary_zero);
      }
      for (int t = 0; t < 30; ++t) CHECK(cc.dual_membership(v, random_member(d, rng)).holds);
      // Non-vacuous: some word outside the dual fails.
      bool witness = false;
      for (int t = 0; t < 200 && !witness; ++t) witness = !cc.dual_membership(v, random_word(cc.code().n(), inst.ctx->p(), rng)).holds;
      CHECK(witness);
    }
    CHECK(used >= 3);
  }
}

TEST_CASE("scalar variants need scalar-respecting functions") {
  auto f9 = make_field(3, 2);
  const auto cc = ConditionContext::first(monomial(f9, 2, f9->one()));
  CHECK_FALSE(cc.applicable(Variant::ShiftWrbScalar));
  CHECK(cc.applicable(Variant::ShiftWrbGeneric));
  CHECK(kind_of([&] { cc.dual_membership(Variant::TraceWrbScalar, RowVec::Zero(9)); }) == ErrorKind::HypothesisFailed);
  CHECK(kind_of([&] { cc.dual_membership(Variant::ImageGeneric, RowVec::Zero(9)); }) == ErrorKind::HypothesisFailed);
  auto f16 = make_field(2, 4);
  const auto cc2 = ConditionContext::first(monomial(f16, 3, f16->generator()));
  CHECK(cc2.applicable(Variant::ShiftWrbScalar));
  CHECK(cc2.applicable(Variant::TraceWrbScalar));
}

TEST_CASE("image construction conditions") {
  std::mt19937 rng(7);
  auto f16 = make_field(2, 4);
  auto f9 = make_field(3, 2);
  auto f25 = make_field(5, 2);
  for (const auto& f : {monomial(f16, 3, f16->generator()), monomial(f9, 2, f9->one()), monomial(f25, 2, f25->one()),
                        monomial(f9, 2, f9->generator())}) {
    const auto cc = ConditionContext::image(f);
    const auto d = dual(cc.code());
    for (Variant v : cc.variants()) {
      if (!cc.applicable(v)) continue;
      CAPTURE(to_string(v));
      for (int t = 0; t < 30; ++t) CHECK(cc.dual_membership(v, random_member(d, rng)).holds);
    }
    CHECK(cc.applicable(Variant::ImageGeneric));
    CHECK(cc.applicable(Variant::ImageWrbGeneric));
  }
  CHECK(ConditionContext::image(monomial(f16, 3, f16->generator())).applicable(Variant::ImageWrbScalar));

  // Arbitrary defining sets: only the generic variant.
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<std::uint32_t> e(0, 26);
    auto f27 = make_field(3, 3);
    DefiningSet set{f27, 1, {}, "", {}};
    for (int i = 0; i < 6; ++i) set.elements.push_back(Elem{e(rng)});
    const auto cc = ConditionContext::defining_set(set);
    CHECK_FALSE(cc.applicable(Variant::ImageWrbGeneric));
    const auto d = dual(cc.code());
    for (int s = 0; s < 10; ++s) CHECK(cc.dual_membership(Variant::ImageGeneric, random_member(d, rng)).holds);
  }
}

TEST_CASE("code characters") {
  std::mt19937 rng(11);
  for (const auto& inst : first_grid()) {
    const auto cc = ConditionContext::first(inst.f);
    for (Variant v : {Variant::GenericTrace, Variant::GenericShift, Variant::GenericDouble}) {
      const auto ch = cc.character(v);
      const auto hyper = ch.kernel_hyperplane();
      CHECK(is_subcode(dual(cc.code()), hyper));
      for (int t = 0; t < 20; ++t) {
        const RowVec a = random_word(cc.code().n(), inst.ctx->p(), rng);
        const RowVec b = random_word(cc.code().n(), inst.ctx->p(), rng);
        RowVec s = a + b;
        for (Eigen::Index i = 0; i < s.size(); ++i) s(i) %= static_cast<std::int32_t>(inst.ctx->p());
        CHECK(ch.evaluate(s) == ch.evaluate(a) * ch.evaluate(b));
        CHECK((ch.evaluate(a) == CycInt::from_int(inst.ctx->p(), 1)) == contains(hyper, a));
      }
    }
    CHECK(kind_of([&] { cc.character(Variant::ShiftWrbGeneric); }) == ErrorKind::HypothesisFailed);
  }
}

TEST_CASE("x^6 over F_9 gives a four-term parity check") {
  auto f9 = make_field(3, 2);
  const auto cc = ConditionContext::first(monomial(f9, 6, f9->one()));
  const auto ch = cc.character(Variant::GenericShift);
  std::multiset<std::uint32_t> nz;
  for (auto t : ch.exponents)
    if (t != 0) nz.insert(t);
  CHECK(nz == std::multiset<std::uint32_t>{1, 1, 2, 2});
}

TEST_CASE("character hyperplane equals the dual in dimension one") {
  auto f3 = make_field(3, 1);
  const auto cc = ConditionContext::first(monomial(f3, 1, f3->one()));
  CHECK(cc.code().k() == 1);
  CHECK(cc.character(Variant::GenericShift).kernel_hyperplane() == dual(cc.code()));
  const DefiningSet d12{f3, 1, {Elem{1}, Elem{2}}, "", {}};
  const auto cd = ConditionContext::defining_set(d12);
  CHECK(cd.character(Variant::ImageGeneric).kernel_hyperplane() == dual(cd.code()));
}

TEST_CASE("hull conditions") {
  for (const auto& inst : first_grid()) {
    const auto& ctx = *inst.ctx;
    const auto cc = ConditionContext::first(inst.f);
    const auto h = hull(cc.code());
    int members = 0;
    for (std::uint32_t a = 0; a < ctx.size(); ++a)
      for (std::uint32_t b = 0; b < ctx.size(); ++b) {
        if (!contains(h, first_codeword(inst.f, Elem{a}, Elem{b}))) continue;
        ++members;
        for (Variant v : cc.variants())
          if (cc.applicable(v)) CHECK(hull_membership_first(cc, v, Elem{a}, Elem{b}).holds);
      }
    // (a, b) -> c_{a,b} has a kernel of size q^2 / p^k.
    CHECK(members * std::pow(ctx.p(), cc.code().k()) == std::pow(ctx.size(), 2) * std::pow(ctx.p(), h.k()));
  }
  auto f25 = make_field(5, 2);
  const auto d = make_fixed_hull_set(f25, {f25->one(), f25->generator()}, 1, Elem{2}, Elem{4});
  const auto cc = ConditionContext::defining_set(d);
  const auto h = hull(cc.code());
  CHECK(h.k() == 1);
  for (std::uint32_t x = 0; x < 25; ++x) {
    if (contains(h, second_codeword(d, Elem{x}))) CHECK(hull_membership_second(cc, d, Variant::ImageGeneric, Elem{x}).holds);
  }
}

TEST_CASE("weights from Walsh products in characteristic 2") {
  auto f16 = make_field(2, 4);
  const auto bent = parse_function(f16, "coord(0)*coord(1) + coord(2)*coord(3)");
  const auto df = make_preimage_set(bent, Elem{1});
  const auto dd = dual(second_generic(df));
  for_each_codeword(dd, 1 << 20, [&](const RowVec& c) {
    CHECK(weight_from_walsh_even(bent, df.elements, c) == hamming_weight(c));
  });
  CHECK(weight_from_walsh_even(bent, df.elements, RowVec::Zero(6)) == 0);

  const auto psi = monomial(f16, 3, f16->generator());
  const auto g = trace_of(psi);
  const auto pts = first_points(*f16);
  for_each_codeword(dual(first_generic(psi)), 1 << 20, [&](const RowVec& w) {
    CHECK(weight_from_walsh_even(g, pts, w) == hamming_weight(w));
    CHECK(walsh_product_positive(g, pts, w));
  });
  const auto img = ConditionContext::image(psi);
  for_each_codeword(dual(img.code()), 1 << 20, [&](const RowVec& w) {
    CHECK(weight_from_walsh_even(g, img.points(), w) == hamming_weight(w));
    CHECK(walsh_product_positive(g, img.points(), w));
  });
  // A unit vector at a point with g = 1 has a negative product.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (g(pts[i]).index == 0) continue;
    RowVec e = RowVec::Zero(16);
    e(static_cast<Eigen::Index>(i)) = 1;
    CHECK_FALSE(walsh_product_positive(g, pts, e));
    break;
  }
  auto f9 = make_field(3, 2);
  CHECK(kind_of([&] { weight_from_walsh_even(parse_function(f9, "tr(x^2)"), first_points(*f9), RowVec::Zero(9)); }) ==
        ErrorKind::OddCharacteristic);
}

TEST_CASE("APN and AB diagnostics") {
  auto f16 = make_field(2, 4);
  const auto r = apn_ab_dual_diagnostics(monomial(f16, 3, f16->one()));
  CHECK(r.d_perp == 5);
  CHECK(r.differential_uniformity == 2);
  CHECK(r.is_apn);
  CHECK_FALSE(r.degenerate);
  for (std::uint64_t e = 1; e < 15; ++e) {
    const auto s = apn_ab_dual_diagnostics(monomial(f16, e, f16->one()));
    if (s.degenerate) continue;
    CHECK(s.bound_holds);
    CHECK(s.is_apn == (s.differential_uniformity == 2));
  }
  auto f32 = make_field(2, 5);
  for (std::uint64_t e : {3u, 5u, 7u, 30u}) {
    CAPTURE(e);
    const auto s = apn_ab_dual_diagnostics(monomial(f32, e, f32->one()));
    CHECK(s.is_apn == (s.differential_uniformity == 2));
    CHECK(s.is_ab == (s.characteristic_set == std::set<std::uint64_t>{12, 16, 20}));
  }
  CHECK(apn_ab_dual_diagnostics(monomial(f32, 3, f32->one())).is_ab);
  const auto inv = apn_ab_dual_diagnostics(monomial(f32, 30, f32->one()));
  CHECK(inv.is_apn);
  CHECK_FALSE(inv.is_ab);
}

TEST_CASE("PN weight bands") {
  auto f9 = make_field(3, 2);
  const auto r9 = pn_bounds_check(monomial(f9, 2, f9->one()));
  CHECK(r9.all_in_band);
  // Punctured at 0, the extension by constants reaches weight 3.
  CHECK_FALSE(r9.extended_in_band);
  CHECK(r9.extended_weights.count(3) == 1);
  CHECK(r9.lower == 4);
  CHECK(r9.upper == 8);
  for (auto w : r9.weights) CHECK((w >= 4 && w <= 8));
  auto f25 = make_field(5, 2);
  const auto r25 = pn_bounds_check(monomial(f25, 2, f25->one()));
  CHECK(r25.all_in_band);
  CHECK(r25.lower == 16);
  CHECK(r25.upper == 24);
  auto f27 = make_field(3, 3);
  CHECK(pn_bounds_check(monomial(f27, 10, f27->one())).all_in_band);
  CHECK(kind_of([&] { pn_bounds_check(monomial(f9, 3, f9->one())); }) == ErrorKind::NotPN);
  CHECK(in_pn_band(4, 3, 2));
  CHECK_FALSE(in_pn_band(3, 3, 2));
  CHECK_FALSE(in_pn_band(9, 3, 2));
}

TEST_CASE("membership examples on x^2 over F_9") {
  auto f9 = make_field(3, 2);
  const auto f = monomial(f9, 2, f9->one());
  const auto cc = ConditionContext::first(f);
  for (Variant v : cc.variants())
    if (cc.applicable(v)) CHECK(cc.dual_membership(v, RowVec::Zero(9)).holds);
  // A unit vector where Tr(f(x_i)) != 0 fails the Tr(f) variant.
  const auto& pts = cc.points();
  bool found = false;
  for (std::size_t i = 0; i < pts.size() && !found; ++i) {
    if (f9->abs_trace(f(pts[i])) == 0) continue;
    RowVec e = RowVec::Zero(9);
    e(static_cast<Eigen::Index>(i)) = 1;
    CHECK_FALSE(cc.dual_membership(Variant::TraceWrbGeneric, e).holds);
    found = true;
  }
  CHECK(found);
  // Some codeword outside the hull fails a hull condition.
  const auto h = hull(cc.code());
  bool caught = false;
  for (std::uint32_t a = 0; a < 9 && !caught; ++a)
    for (std::uint32_t b = 0; b < 9 && !caught; ++b) {
      if (contains(h, first_codeword(f, Elem{a}, Elem{b}))) continue;
      for (Variant v : cc.variants())
        if (cc.applicable(v) && !hull_membership_first(cc, v, Elem{a}, Elem{b}).holds) caught = true;
    }
  CHECK(caught);
}
