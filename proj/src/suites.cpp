#include "hullcodes/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "hullcodes/error.hpp"

namespace hc {

namespace {

using Rng = std::mt19937_64;

std::string label(const FieldCtx& ctx) { return "F_" + std::to_string(ctx.size()); }

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ParyFunction monomial(const FieldPtr& ctx, std::uint64_t e, Elem c) {
  return tabulate(ctx, ctx->m(), [&](Elem x) { return ctx->mul(c, ctx->pow(x, e)); });
}

DefiningSet random_set(const FieldPtr& ctx, std::size_t n, Rng& rng, std::uint32_t s = 1) {
  std::uniform_int_distribution<std::uint32_t> d(0, ctx->size() - 1);
  DefiningSet out{ctx, s, {}, "random", {}};
  for (std::size_t i = 0; i < n; ++i) out.elements.push_back(Elem{d(rng)});
  return out;
}

RowVec random_word(Eigen::Index n, std::uint32_t p, Rng& rng) {
  std::uniform_int_distribution<std::int32_t> d(0, static_cast<std::int32_t>(p) - 1);
  RowVec w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = d(rng);
  return w;
}

std::vector<std::int32_t> to_vec(const RowVec& w) { return {w.data(), w.data() + w.size()}; }

struct UserFunction {
  FieldPtr ctx;
  ParyFunction f;
};

std::optional<UserFunction> user_function(const SuiteOptions& o) {
  if (!o.field && !o.fn) return std::nullopt;
  if (!o.field || !o.fn) throw Error(ErrorKind::InvalidArgument, "--field and --fn go together");
  auto ctx = parse_field_spec(*o.field);
  return UserFunction{ctx, parse_function(ctx, *o.fn)};
}

std::vector<FieldPtr> grid_fields() {
  return {make_field(3, 2), make_field(2, 4), make_field(5, 2), make_field(3, 3)};
}

/// 200 random sets per field, lengths 1..2m+4; every fifth set over F_16 or
/// F_25 uses base degree 2.
std::vector<DefiningSet> random_grid(Rng& rng, int per_field = 200) {
  std::vector<DefiningSet> out;
  for (const auto& ctx : grid_fields()) {
    std::uniform_int_distribution<std::size_t> len(1, 2 * ctx->m() + 4);
    for (int t = 0; t < per_field; ++t) {
      const std::uint32_t s = (ctx->m() % 2 == 0 && ctx->size() > 9 && t % 5 == 4) ? 2 : 1;
      out.push_back(random_set(ctx, len(rng), rng, s));
    }
  }
  return out;
}

std::string set_name(const DefiningSet& d, std::size_t i) {
  return label(*d.ctx) + " D#" + std::to_string(i) + " n=" + std::to_string(d.size()) +
         (d.base_degree > 1 ? " s=" + std::to_string(d.base_degree) : "");
}

// ---------------------------------------------------------------------------

void suite_prop_dual_first(const SuiteOptions& o, SuiteReport& r) {
  std::vector<std::pair<std::string, ParyFunction>> fs;
  if (auto u = user_function(o)) {
    fs.emplace_back(*o.fn, u->f);
  } else {
    for (const auto& ctx : grid_fields())
      for (std::uint64_t e = 0; e < ctx->size(); ++e)
        fs.emplace_back(label(*ctx) + " x^" + std::to_string(e), monomial(ctx, e, ctx->one()));
  }
  for (const auto& [name, f] : fs) {
    const auto c = first_generic(f);
    const auto d = dual(c);
    const bool full = dual_first_closed_form(f) == d;
    const bool punct = dual_first_closed_form(f, false) == dual(first_generic(f, false));
    r.instances.push_back({name, full && punct, false,
                           {{"n", c.n()}, {"k", c.k()}, {"dual_k", d.k()}, {"full", full}, {"punctured", punct}}});
  }
}

void suite_prop_dual_second(const SuiteOptions& o, SuiteReport& r) {
  Rng rng(o.seed);
  const auto sets = random_grid(rng);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& d = sets[i];
    const auto nd = dual(second_generic(d));
    bool ok = dual_second_closed_form(d) == nd;
    for (std::uint32_t j = d.base_degree; j < d.ctx->m(); j += d.base_degree) ok = ok && dual_second_closed_form(d, j) == nd;
    r.instances.push_back({set_name(d, i), ok, false, {{"dual_k", nd.k()}}});
  }
}

void suite_hull_kernel(const SuiteOptions& o, SuiteReport& r) {
  auto check = [&](const std::string& name, const LinearCode& c, const HullKernel& hk) {
    const auto h = hull(c);
    const bool eq = hk.hull == h;
    const bool dims = h.k() == c.k() - hk.rank_phi;
    r.instances.push_back({name, eq && dims, false,
                           {{"k", c.k()}, {"hull_k", h.k()}, {"rank_phi", hk.rank_phi}, {"equal", eq}, {"dim_formula", dims}}});
  };
  if (auto u = user_function(o)) {
    check(*o.fn, first_generic(u->f), hull_first_kernel(u->f));
    return;
  }
  for (const auto& ctx : grid_fields())
    for (std::uint64_t e = 0; e < ctx->size(); ++e) {
      const auto f = monomial(ctx, e, ctx->one());
      check(label(*ctx) + " x^" + std::to_string(e), first_generic(f), hull_first_kernel(f));
    }
  Rng rng(o.seed);
  const auto sets = random_grid(rng);
  for (std::size_t i = 0; i < sets.size(); ++i) check(set_name(sets[i], i), second_generic(sets[i]), hull_second_kernel(sets[i]));
}

void suite_dim_span(const SuiteOptions& o, SuiteReport& r) {
  Rng rng(o.seed);
  const std::vector<FieldPtr> fields{make_field(3, 2), make_field(2, 4), make_field(5, 2),
                                     make_field(3, 3), make_field(3, 4), make_field(2, 5)};
  for (int t = 0; t < 500; ++t) {
    const auto& ctx = fields[static_cast<std::size_t>(t) % fields.size()];
    std::uniform_int_distribution<std::size_t> len(1, 2 * ctx->m() + 2);
    const auto d = random_set(ctx, len(rng), rng);
    const auto k = second_generic(d).k();
    const auto rk = prime_rank(*ctx, d.elements);
    const auto span = dimension_via_span(d);
    r.instances.push_back({set_name(d, static_cast<std::size_t>(t)), k == rk && k == span, false,
                           {{"k", k}, {"rank", rk}, {"span", span}}});
  }
}

// ---------------------------------------------------------------------------
// Necessary conditions

struct NcInstance {
  std::string name;
  ConditionContext cc;
  std::optional<DefiningSet> set;  ///< second construction
};

std::vector<NcInstance> nc_grid(const SuiteOptions& o) {
  std::vector<NcInstance> out;
  if (auto u = user_function(o)) {
    out.push_back({"C(" + *o.fn + ")", ConditionContext::first(u->f), std::nullopt});
    out.push_back({"D(" + *o.fn + ")", ConditionContext::image(u->f), make_image_set(u->f)});
    return out;
  }
  auto f3 = make_field(3, 1), f5 = make_field(5, 1), f7 = make_field(7, 1), f9 = make_field(3, 2),
       f16 = make_field(2, 4), f27 = make_field(3, 3);
  auto first = [&](const FieldPtr& ctx, std::uint64_t e, Elem c, const std::string& name) {
    out.push_back({"C(" + name + ") " + label(*ctx), ConditionContext::first(monomial(ctx, e, c)), std::nullopt});
  };
  auto image = [&](const FieldPtr& ctx, std::uint64_t e, Elem c, const std::string& name) {
    const auto f = monomial(ctx, e, c);
    out.push_back({"D(" + name + ") " + label(*ctx), ConditionContext::image(f), make_image_set(f)});
  };
  first(f3, 2, f3->one(), "x^2");
  first(f5, 2, f5->one(), "x^2");
  first(f7, 2, f7->one(), "x^2");
  first(f9, 2, f9->one(), "x^2");
  first(f9, 4, f9->one(), "x^4");
  first(f9, 6, f9->one(), "x^6");
  first(f9, 2, f9->generator(), "w x^2");
  first(f16, 3, f16->generator(), "w x^3");
  image(f9, 2, f9->one(), "x^2");
  image(f9, 2, f9->generator(), "w x^2");
  image(f16, 3, f16->generator(), "w x^3");
  image(f27, 2, f27->one(), "x^2");
  Rng rng(o.seed);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<std::size_t> len(2, 8);
    auto d = random_set(f27, len(rng), rng);
    out.push_back({set_name(d, static_cast<std::size_t>(t)), ConditionContext::defining_set(d), d});
  }
  return out;
}

const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v = [] {
    auto out = first_variants();
    for (Variant x : second_variants()) out.push_back(x);
    return out;
  }();
  return v;
}

void suite_nc_all(const SuiteOptions& o, SuiteReport& r) {
  Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  std::map<Variant, int> applicable_count, witness_count;
  for (auto& inst : nc_grid(o)) {
    const auto& cc = inst.cc;
    const auto& ctx = *cc.ctx();
    const auto d = dual(cc.code());
    const auto h = hull(cc.code());
    InstanceVerdict iv{inst.name, true, false, {{"n", cc.code().n()}, {"k", cc.code().k()}, {"hull_k", h.k()}}};
    json variants = json::object();
    for (Variant v : cc.variants()) {
      if (!cc.applicable(v)) continue;
      applicable_count[v]++;
      std::uint64_t dual_checked = 0, dual_fail = 0, conj_fail = 0, hull_checked = 0, hull_fail = 0;
      for_each_codeword(d, o.guard, [&](const RowVec& c) {
        const auto verdict = cc.dual_membership(v, c);
        ++dual_checked;
        if (!verdict.holds) ++dual_fail;
        if (verdict.holds && !verdict.imaginary_zero) ++conj_fail;
      });
      if (cc.is_first()) {
        for (std::uint32_t a = 0; a < ctx.size(); ++a)
          for (std::uint32_t b = 0; b < ctx.size(); ++b) {
            if (!contains(h, first_codeword(*cc.function(), Elem{a}, Elem{b}, cc.points().size() == ctx.size()))) continue;
            ++hull_checked;
            if (!hull_membership_first(cc, v, Elem{a}, Elem{b}).holds) ++hull_fail;
          }
      } else {
        for (std::uint32_t x = 0; x < ctx.size(); ++x) {
          if (!contains(h, second_codeword(*inst.set, Elem{x}))) continue;
          ++hull_checked;
          if (!hull_membership_second(cc, *inst.set, v, Elem{x}).holds) ++hull_fail;
        }
      }
      // A word outside the dual that fails: unit vectors, pairs, then random words.
      std::optional<RowVec> witness;
      auto probe = [&](const RowVec& w) {
        if (!witness && !contains(d, w) && !cc.dual_membership(v, w).holds) witness = w;
      };
      const Eigen::Index n = cc.code().n();
      for (Eigen::Index i = 0; i < n && !witness; ++i) {
        RowVec e = RowVec::Zero(n);
        e(i) = 1;
        probe(e);
        for (Eigen::Index j = i + 1; j < n && !witness; ++j) {
          RowVec f = e;
          f(j) = 1;
          probe(f);
        }
      }
      for (int t = 0; t < 500 && !witness; ++t) probe(random_word(n, ctx.p(), rng));
      if (witness) witness_count[v]++;
      const bool ok = dual_fail == 0 && conj_fail == 0 && hull_fail == 0;
      iv.pass = iv.pass && ok;
      variants[std::string(to_string(v))] = {{"dual_checked", dual_checked}, {"dual_failures", dual_fail},
                                             {"conjugation_failures", conj_fail}, {"hull_checked", hull_checked},
                                             {"hull_failures", hull_fail},
                                             {"witness", witness ? json(to_vec(*witness)) : json(nullptr)}};
    }
    iv.details["variants"] = variants;
    r.instances.push_back(std::move(iv));
  }
  // Non-vacuousness is judged on the built-in grid only.
  if (!o.fn) {
    for (Variant v : all_variants()) {
      const bool ok = applicable_count[v] > 0 && witness_count[v] > 0;
      r.instances.push_back({"witness " + std::string(to_string(v)), ok, false,
                             {{"applicable_instances", applicable_count[v]}, {"witnesses", witness_count[v]}}});
    }
  }
}

void suite_characters(const SuiteOptions& o, SuiteReport& r) {
  for (auto& inst : nc_grid(o)) {
    const auto& cc = inst.cc;
    const auto d = dual(cc.code());
    const auto h = hull(cc.code());
    InstanceVerdict iv{inst.name, true, false, json::object()};
    for (Variant v : cc.variants()) {
      if (!cc.applicable(v) || v == Variant::ShiftWrbScalar || v == Variant::ShiftWrbGeneric ||
          v == Variant::TraceWrbScalar || v == Variant::TraceWrbGeneric || v == Variant::ImageWrbScalar ||
          v == Variant::ImageWrbGeneric)
        continue;
      const auto ch = cc.character(v);
      const auto ker = ch.kernel_hyperplane();
      const bool dual_in = is_subcode(d, ker), hull_in = is_subcode(h, ker);
      iv.pass = iv.pass && dual_in && hull_in;
      iv.details[std::string(to_string(v))] = {
          {"exponents", ch.exponents}, {"dual_in_kernel", dual_in}, {"hull_in_kernel", hull_in}, {"kernel_k", ker.k()}};
    }
    r.instances.push_back(std::move(iv));
  }
  if (o.fn) return;

  // x^6 over F_9: four nonzero coefficients {1, 1, 2, 2} up to scaling and order.
  {
    auto f9 = make_field(3, 2);
    const auto cc = ConditionContext::first(monomial(f9, 6, f9->one()));
    const auto ch = cc.character(Variant::GenericShift);
    std::multiset<std::uint32_t> nz;
    for (auto t : ch.exponents)
      if (t != 0) nz.insert(t);
    const bool ok = nz == std::multiset<std::uint32_t>{1, 1, 2, 2} && is_subcode(dual(cc.code()), ch.kernel_hyperplane());
    r.instances.push_back({"x^6 F_9 parity check", ok, false, {{"exponents", ch.exponents}}});
  }

  // Dimension one: the kernel is the whole dual.
  auto f3 = make_field(3, 1);
  auto f9 = make_field(3, 2);
  {
    const auto cc = ConditionContext::first(monomial(f3, 1, f3->one()));
    const auto ker = cc.character(Variant::GenericShift).kernel_hyperplane();
    const bool ok = cc.code().k() == 1 && ker == dual(cc.code());
    r.instances.push_back({"dim 1: C(x) F_3 generic-shift", ok, false, {{"k", cc.code().k()}, {"kernel_k", ker.k()}}});
    const auto ker_t = cc.character(Variant::GenericTrace).kernel_hyperplane();
    r.instances.push_back({"dim 1: C(x) F_3 generic-trace", true, true,
                           {{"equality", ker_t == dual(cc.code())},
                            {"note", "Tr(f(x_i)) - Tr(x_i) vanishes for f = x, so the character is trivial"}}});
  }
  for (const auto& [name, d] : std::vector<std::pair<std::string, DefiningSet>>{
           {"dim 1: D={1,2} F_3", DefiningSet{f3, 1, {Elem{1}, Elem{2}}, "", {}}},
           {"dim 1: D={1,1,2,2} F_3", DefiningSet{f3, 1, {Elem{1}, Elem{1}, Elem{2}, Elem{2}}, "", {}}},
           {"dim 1: D={1,2,1} F_9", DefiningSet{f9, 1, {Elem{1}, Elem{2}, Elem{1}}, "", {}}}}) {
    const auto cc = ConditionContext::defining_set(d);
    const auto ker = cc.character(Variant::ImageGeneric).kernel_hyperplane();
    const bool ok = cc.code().k() == 1 && ker == dual(cc.code());
    r.instances.push_back({name, ok, false, {{"k", cc.code().k()}, {"kernel_k", ker.k()}}});
  }
}

// ---------------------------------------------------------------------------
// Weights

void suite_thm_weights(const SuiteOptions& o, SuiteReport& r) {
  Rng rng(o.seed);
  auto walsh_instance = [&](const std::string& name, const ParyFunction& psi) {
    const auto& ctx = *psi.ctx;
    std::uint64_t mismatches = 0;
    WeightDistribution formula, brute;
    for (std::uint32_t a = 0; a < ctx.size(); ++a)
      for (std::uint32_t b = 0; b < ctx.size(); ++b) {
        const auto w = weight_via_walsh_sum(psi, Elem{a}, Elem{b});
        const auto e = hamming_weight(first_codeword(psi, Elem{a}, ctx.neg(Elem{b})));
        formula[w]++;
        brute[e]++;
        if (w != e) ++mismatches;
      }
    r.instances.push_back({"walsh-sum " + name, mismatches == 0 && formula == brute, false,
                           {{"mismatches", mismatches}, {"weights", weights_json(formula)}}});
  };
  auto theorem_instance = [&](const std::string& name, const ParyFunction& psi) {
    const auto& ctx = *psi.ctx;
    const BentClass cls = classify_bent(walsh_transform(trace_of(psi)));
    if (!cls.dual) {
      r.instances.push_back({"closed-form " + name, false, false, {{"error", "Tr(Psi) is not weakly regular bent"}}});
      return;
    }
    std::uint64_t mismatches = 0;
    WeightDistribution formula;
    for (std::uint32_t a = 0; a < ctx.p(); ++a)
      for (std::uint32_t b = 0; b < ctx.size(); ++b) {
        const Elem al = ctx.from_int(a), be{b};
        const auto w = theorem1_weight(cls, al, be);
        formula[w]++;
        if (w != hamming_weight(first_codeword(psi, al, ctx.neg(be)))) ++mismatches;
      }
    r.instances.push_back({"closed-form " + name, mismatches == 0, false,
                           {{"kind", std::string(to_string(cls.kind))}, {"epsilon", *cls.epsilon},
                            {"mismatches", mismatches}, {"weights", weights_json(formula)}}});
  };
  auto character_instance = [&](const std::string& name, const DefiningSet& d) {
    std::uint64_t mismatches = 0;
    for (std::uint32_t x = 0; x < d.ctx->size(); ++x)
      if (weight_via_character_sum(d, Elem{x}) != hamming_weight(second_codeword(d, Elem{x}))) ++mismatches;
    r.instances.push_back({"character-sum " + name, mismatches == 0, false, {{"mismatches", mismatches}}});
  };

  if (auto u = user_function(o)) {
    walsh_instance(*o.fn, u->f);
    theorem_instance(*o.fn, u->f);
    return;
  }
  auto f9 = make_field(3, 2), f8 = make_field(2, 3), f25 = make_field(5, 2), f27 = make_field(3, 3),
       f81 = make_field(3, 4), f16 = make_field(2, 4), f64 = make_field(2, 6);
  walsh_instance("x^2 F_9", monomial(f9, 2, f9->one()));
  walsh_instance("x^3 F_8", monomial(f8, 3, f8->one()));
  walsh_instance("x^2 F_25", monomial(f25, 2, f25->one()));
  for (const auto& ctx : {f9, f8}) {
    std::uniform_int_distribution<std::uint32_t> d(0, ctx->size() - 1);
    for (int t = 0; t < 3; ++t)
      walsh_instance("random Psi#" + std::to_string(t) + " " + label(*ctx),
                     tabulate(ctx, ctx->m(), [&](Elem x) { return x == ctx->zero() ? ctx->zero() : Elem{d(rng)}; }));
  }
  theorem_instance("x^2 F_9", monomial(f9, 2, f9->one()));
  theorem_instance("w x^2 F_9", monomial(f9, 2, f9->generator()));
  theorem_instance("x^2 F_27", monomial(f27, 2, f27->one()));
  theorem_instance("x^2 F_25", monomial(f25, 2, f25->one()));
  theorem_instance("x^2 F_81", monomial(f81, 2, f81->one()));
  theorem_instance("w x^3 F_16", monomial(f16, 3, f16->generator()));
  theorem_instance("w x^3 F_64", monomial(f64, 3, f64->generator()));
  for (int t = 0; t < 5; ++t) {
    const auto d = random_set(f27, 9, rng);
    character_instance(set_name(d, static_cast<std::size_t>(t)), d);
  }
  for (int t = 0; t < 3; ++t) character_instance("random F_16 s=2 #" + std::to_string(t), random_set(f16, 7, rng, 2));
  character_instance("skew F_25", make_skew_set(f25));
  character_instance("trace-zero F_81", make_trace_zero_set(f81));
}

void suite_ding(const SuiteOptions& o, SuiteReport& r) {
  auto instance = [&](const std::string& name, const ParyFunction& f, const WeightDistribution* expected) {
    WeightDistribution ding;
    try {
      ding = ding_weight_multiset(f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AffineFunction) throw;
      r.instances.push_back({name, true, true, {{"affine", true}}});
      return;
    }
    const auto d = make_preimage_set(f, Elem{1});
    WeightDistribution brute{{0, 1}};
    for (std::uint32_t x = 1; x < f.ctx->size(); ++x) brute[hamming_weight(second_codeword(d, Elem{x}))]++;
    const bool ok = ding == brute && (!expected || ding == *expected);
    r.instances.push_back({name, ok, false, {{"n_f", d.size()}, {"weights", weights_json(ding)}}});
  };
  if (auto u = user_function(o)) {
    instance(*o.fn, u->f, nullptr);
    return;
  }
  auto f16 = make_field(2, 4);
  const WeightDistribution expected{{0, 1}, {2, 6}, {4, 9}};
  instance("coord(0)coord(1)+coord(2)coord(3) F_16", parse_function(f16, "coord(0)*coord(1) + coord(2)*coord(3)"),
           &expected);
  Rng rng(o.seed);
  std::bernoulli_distribution coin(0.5);
  for (auto m : {3u, 4u, 5u, 6u}) {
    auto ctx = make_field(2, m);
    for (int t = 0; t < 10; ++t)
      instance("random f#" + std::to_string(t) + " " + label(*ctx),
               tabulate(ctx, 1, [&](Elem) { return Elem{coin(rng) ? 1u : 0u}; }), nullptr);
  }
}

void suite_even_weight(const SuiteOptions& o, SuiteReport& r) {
  auto instance = [&](const std::string& name, const ParyFunction& g, const std::vector<Elem>& points,
                      const LinearCode& code, bool assert_positive) {
    std::uint64_t checked = 0, mismatches = 0, negatives = 0;
    for_each_codeword(dual(code), o.guard, [&](const RowVec& c) {
      ++checked;
      if (weight_from_walsh_even(g, points, c) != hamming_weight(c)) ++mismatches;
      if (!walsh_product_positive(g, points, c)) ++negatives;
    });
    const bool ok = mismatches == 0 && (!assert_positive || negatives == 0);
    r.instances.push_back({name, ok, false,
                           {{"checked", checked}, {"mismatches", mismatches}, {"negative_products", negatives},
                            {"positivity_asserted", assert_positive}}});
  };
  if (auto u = user_function(o)) {
    const auto g = trace_of(u->f);
    instance("C(" + *o.fn + ")", g, first_points(*u->ctx), first_generic(u->f), true);
    return;
  }
  auto f16 = make_field(2, 4);
  const auto bent = parse_function(f16, "coord(0)*coord(1) + coord(2)*coord(3)");
  const auto df = make_preimage_set(bent, Elem{1});
  instance("D_f of coord(0)coord(1)+coord(2)coord(3) F_16", bent, df.elements, second_generic(df), false);
  const auto psi = monomial(f16, 3, f16->generator());
  instance("C(w x^3) F_16", trace_of(psi), first_points(*f16), first_generic(psi), true);
  const auto img = ConditionContext::image(psi);
  instance("D(w x^3) F_16", trace_of(psi), img.points(), img.code(), true);
}

// ---------------------------------------------------------------------------
// Function families

void suite_apn_ab(const SuiteOptions& o, SuiteReport& r) {
  auto instance = [&](const std::string& name, const ParyFunction& F, std::optional<std::uint64_t> d_perp,
                      const std::set<std::uint64_t>* char_set) {
    const auto rep = apn_ab_dual_diagnostics(F, o.guard);
    bool ok = rep.is_apn == (rep.differential_uniformity == 2);
    if (!rep.degenerate) ok = ok && rep.bound_holds;
    if (F.ctx->m() % 2 == 1) {
      const std::uint64_t h = std::uint64_t{1} << (F.ctx->m() - 1), s = std::uint64_t{1} << ((F.ctx->m() - 1) / 2);
      ok = ok && rep.is_ab == (rep.characteristic_set == std::set<std::uint64_t>{h - s, h, h + s});
    }
    if (d_perp) ok = ok && rep.d_perp == *d_perp && rep.is_apn;
    if (char_set) ok = ok && rep.characteristic_set == *char_set && rep.is_ab;
    r.instances.push_back({name, ok, false,
                           {{"dimension", rep.dimension}, {"d_perp", rep.d_perp}, {"is_apn", rep.is_apn},
                            {"differential_uniformity", rep.differential_uniformity},
                            {"characteristic_set", rep.characteristic_set}, {"is_ab", rep.is_ab},
                            {"degenerate", rep.degenerate}}});
  };
  if (auto u = user_function(o)) {
    instance(*o.fn, u->f, std::nullopt, nullptr);
    return;
  }
  auto f16 = make_field(2, 4), f32 = make_field(2, 5);
  instance("x^3 F_16", monomial(f16, 3, f16->one()), 5, nullptr);
  const std::set<std::uint64_t> ab{12, 16, 20};
  instance("x^3 F_32", monomial(f32, 3, f32->one()), std::nullopt, &ab);
  instance("x^30 F_32", monomial(f32, 30, f32->one()), std::nullopt, nullptr);
}

void suite_pn_bounds(const SuiteOptions& o, SuiteReport& r) {
  auto instance = [&](const std::string& name, const ParyFunction& F) {
    const auto rep = pn_bounds_check(F, o.guard);
    r.instances.push_back({name, rep.all_in_band, false,
                           {{"weights", rep.weights}, {"lower", rep.lower}, {"upper", rep.upper},
                            {"extended_weights", rep.extended_weights}, {"extended_in_band", rep.extended_in_band}}});
  };
  if (auto u = user_function(o)) {
    instance(*o.fn, u->f);
    return;
  }
  auto f9 = make_field(3, 2), f25 = make_field(5, 2), f27 = make_field(3, 3);
  instance("x^2 F_9", monomial(f9, 2, f9->one()));
  instance("x^2 F_25", monomial(f25, 2, f25->one()));
  instance("x^10 F_27", monomial(f27, 10, f27->one()));
}

// ---------------------------------------------------------------------------
// Recipes

void suite_fixed_hull(const SuiteOptions&, SuiteReport& r) {
  const std::uint32_t p = 5;
  for (std::uint32_t m : {2u, 3u}) {
    auto ctx = make_field(p, m);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t l = 0; l <= k; ++l) {
        const std::string name = "p=5 m=" + std::to_string(m) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        if (k > m) {
          r.instances.push_back({name, true, true, {{"skipped", "F_5^m has no k independent elements"}}});
          continue;
        }
        std::vector<Elem> d;
        for (std::uint32_t i = 0; i < k; ++i) d.push_back(ctx->pow(ctx->generator(), i));
        const auto set = make_fixed_hull_set(ctx, d, l, Elem{2}, Elem{4});
        const auto c = second_generic(set);
        WeightDistribution expected;
        for (std::uint32_t s = 0; s <= k; ++s) expected[2 * s] = upow(p - 1, s) * binom(k, s);
        const auto w = weight_distribution(c);
        const auto h = hull_dim(c);
        const auto dmin = min_distance(c);
        const bool ok = c.n() == 2 * k && c.k() == k && dmin == 2 && h == l && w == expected;
        r.instances.push_back({name, ok, false,
                               {{"n", c.n()}, {"k", c.k()}, {"d", dmin}, {"hull_k", h}, {"weights", weights_json(w)}}});
      }
    }
  }
}

void suite_lcd(const SuiteOptions&, SuiteReport& r) {
  auto f16 = make_field(2, 4);
  auto instance = [&](std::uint32_t a, std::uint32_t k) {
    const std::uint64_t q = std::uint64_t{1} << a;
    std::vector<Elem> d;
    for (std::uint32_t i = 0; i < k; ++i) d.push_back(f16->pow(f16->generator(), i));
    const auto c = second_generic(make_lcd_set(f16, a, d));
    const auto dd = dual(c);
    WeightDistribution expected;
    for (std::uint32_t i = 0; i <= k / 2; ++i) expected[3 * i] = upow(q - 1, i) * binom(k / 2, i);
    const auto dw = weight_distribution(dd);
    const auto dmin = min_distance(dd);
    const auto n = static_cast<Eigen::Index>(3 * k / 2);
    const bool ok = c.n() == n && c.k() == k && hull_dim(c) == 0 && dd.k() == k / 2 && dmin == 3 && dw == expected;
    r.instances.push_back({"q=" + std::to_string(q) + " k=" + std::to_string(k), ok, false,
                           {{"n", c.n()}, {"k", c.k()}, {"hull_k", hull_dim(c)}, {"dual_k", dd.k()}, {"dual_d", dmin},
                            {"dual_weights", weights_json(dw)}}});
  };
  instance(1, 2);
  instance(1, 4);
  instance(2, 2);
}

void suite_mds(const SuiteOptions&, SuiteReport& r) {
  for (std::uint32_t p : {5u, 7u})
    for (std::uint32_t k : {2u, 3u}) {
      auto ctx = make_field(p, k);
      std::vector<Elem> d, alphas;
      for (std::uint32_t i = 0; i < k; ++i) {
        d.push_back(ctx->pow(ctx->generator(), i));
        alphas.push_back(ctx->from_int(i + 1));
      }
      for (auto variant : {MdsVariant::KPlus1, MdsVariant::KPlus2}) {
        const std::uint32_t extra = variant == MdsVariant::KPlus1 ? 1 : 2;
        const auto c = second_generic(make_mds_set(ctx, d, variant, alphas));
        const auto dd = dual(c);
        const auto dc = min_distance(c), dmin = min_distance(dd);
        const bool ok = c.n() == k + extra && c.k() == k && dc == extra + 1 && dd.k() == extra && dmin == k + 1 &&
                        is_mds(c) && is_mds(dd);
        r.instances.push_back({"p=" + std::to_string(p) + " k=" + std::to_string(k) + " n=k+" + std::to_string(extra),
                               ok, false, {{"n", c.n()}, {"k", c.k()}, {"d", dc}, {"dual_k", dd.k()}, {"dual_d", dmin}}});
      }
    }
}

void suite_cyclotomic(const SuiteOptions& o, SuiteReport& r) {
  // (a, b): q = 2^a or 5, r = q^b.
  struct Case {
    std::uint32_t p, a, b;
  };
  for (auto [p, a, b] : {Case{2, 1, 4}, Case{2, 1, 6}, Case{5, 1, 2}, Case{2, 3, 2}}) {
    auto ctx = make_field(p, a * b);
    const std::uint64_t q = upow(p, a), rr = ctx->size();
    std::uint64_t root = 1;
    while (root * root < rr) ++root;
    const bool plus = ((b - 2) / 2) % 2 == 0;  // (-1)^{(b-2)/2} = +1
    for (bool second : {false, true}) {
      const auto set = make_cyclotomic_set(ctx, a, second);
      const auto c = second_generic(set);
      const auto dd = dual(c);
      WeightDistribution expected{{0, 1}};
      const std::uint64_t den = 3 * q;
      if (!second) {
        expected[((plus ? rr + root : rr - root)) / den] += 2 * (rr - 1) / 3;
        expected[((plus ? rr - 2 * root : rr + 2 * root)) / den] += (rr - 1) / 3;
      } else {
        expected[((plus ? 2 * rr + 2 * root : 2 * rr - 2 * root)) / den] += (rr - 1) / 3;
        expected[((plus ? 2 * rr - root : 2 * rr + root)) / den] += 2 * (rr - 1) / 3;
      }
      const std::uint64_t n = (second ? 2 : 1) * (rr - 1) / (3 * (q - 1));
      const auto w = weight_distribution(c);
      // d_perp by enumeration when small, otherwise from the columns: no zero and no two F_q-proportional.
      std::optional<std::uint64_t> dperp;
      bool dperp_ok = true;
      if (dd.k() > 0 && codeword_count(dd) <= o.guard) {
        dperp = min_distance(dd, o.guard);
        dperp_ok = *dperp >= 3;
      } else if (dd.k() > 0) {
        const auto sub = ctx->subfield_elements(a);
        for (std::size_t i = 0; i < set.size() && dperp_ok; ++i) {
          dperp_ok = set.elements[i] != ctx->zero();
          for (std::size_t j = i + 1; j < set.size() && dperp_ok; ++j)
            for (Elem l : sub) dperp_ok = dperp_ok && set.elements[i] != ctx->mul(l, set.elements[j]);
        }
      }
      const bool ok = static_cast<std::uint64_t>(c.n()) == n && c.k() == b && w == expected &&
                      dd.k() == static_cast<Eigen::Index>(n) - b && dperp_ok;
      r.instances.push_back({"q=" + std::to_string(q) + " r=" + std::to_string(rr) + (second ? " second" : " first"), ok,
                             false,
                             {{"n", c.n()}, {"k", c.k()}, {"d", min_distance(c)}, {"weights", weights_json(w)},
                              {"expected", weights_json(expected)}, {"dual_k", dd.k()},
                              {"dual_d", dperp ? json(*dperp) : json(nullptr)}, {"dual_d_at_least_3", dperp_ok}}});
    }
  }
}

// ---------------------------------------------------------------------------

void suite_foundation(const SuiteOptions& o, SuiteReport& r) {
  Rng rng(o.seed);
  {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 3}, {2, 4}, {3, 2}, {5, 1},
                                                                      {3, 3}, {5, 2}, {7, 1}, {2, 5}};
    std::uint64_t failures = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto [p, m] = fields[static_cast<std::size_t>(t) % fields.size()];
      auto ctx = make_field(p, m);
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      const auto f = tabulate(ctx, 1, [&](Elem) { return Elem{d(rng)}; });
      CycInt total(p);
      for (std::uint32_t b = 0; b < ctx->size(); ++b) total += walsh_coefficient(f, Elem{b}).abs2();
      if (total != CycInt::from_int(p, static_cast<std::int64_t>(ctx->size() * ctx->size()))) ++failures;
    }
    r.instances.push_back({"Parseval x1000", failures == 0, false, {{"failures", failures}}});
  }
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const BigCyc g2 = gauss_sum_power(p, 2);
    const bool ok = g2 == BigCyc::from_int(p, BigInt(legendre(-1, p) * static_cast<int>(p)));
    r.instances.push_back({"G^2 = p* p=" + std::to_string(p), ok, false, {{"G^2", g2.to_string()}}});
  }
  {
    std::uint64_t failures = 0;
    const std::vector<Alphabet> alphabets{prime_alphabet(2), prime_alphabet(3), prime_alphabet(5), prime_alphabet(7),
                                          subfield_alphabet(make_field(2, 2), 2), subfield_alphabet(make_field(3, 2), 2)};
    for (int t = 0; t < 200; ++t) {
      const auto& a = alphabets[static_cast<std::size_t>(t) % alphabets.size()];
      std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(a.size() - 1));
      std::uniform_int_distribution<std::size_t> nn(1, 9);
      const std::size_t n = nn(rng), k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
      std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
      const auto letters = a.letters();
      for (auto& row : rows)
        for (auto& x : row) x = letters[d(rng)].index;
      const auto c = from_rows(a, rows, n);
      if (!(dual(dual(c)) == c) || dual(c).k() + c.k() != static_cast<Eigen::Index>(n)) ++failures;
    }
    r.instances.push_back({"dual of dual x200", failures == 0, false, {{"failures", failures}}});
  }
  {
    std::uint64_t failures = 0;
    const auto a = prime_alphabet(3);
    auto f27 = make_field(3, 3), f81 = make_field(3, 4);
    std::uniform_int_distribution<std::int32_t> d(0, 2);
    for (int t = 0; t < 100; ++t) {
      const auto& ctx = t % 2 ? f27 : f81;
      const Eigen::Index k = 1 + t % static_cast<int>(ctx->m()), n = k + t % 5;
      Matrix g(k, n);
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = d(rng);
      const auto c = from_rows(a, g);
      if (c.k() == 0) continue;
      if (!(second_generic(code_to_defining_set(c, ctx)) == c)) ++failures;
    }
    bool rejected = false;
    try {
      code_to_defining_set(full_space(a, 4), f27);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::DimensionTooLarge;
    }
    r.instances.push_back({"code to defining set x100", failures == 0 && rejected, false,
                           {{"failures", failures}, {"rejects_k_above_m", rejected}}});
  }
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"prop-dual-first", suite_prop_dual_first},
      {"prop-dual-second", suite_prop_dual_second},
      {"hull-kernel", suite_hull_kernel},
      {"dim-span", suite_dim_span},
      {"nc-all", suite_nc_all},
      {"characters", suite_characters},
      {"thm-weights", suite_thm_weights},
      {"apn-ab", suite_apn_ab},
      {"pn-bounds", suite_pn_bounds},
      {"fixed-hull", suite_fixed_hull},
      {"lcd", suite_lcd},
      {"mds", suite_mds},
      {"cyclotomic", suite_cyclotomic},
      {"ding", suite_ding},
      {"even-weight", suite_even_weight},
      {"foundation", suite_foundation},
  };
  return r;
}

}  // namespace

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& i) { return !i.pass && !i.informational; }));
}

json SuiteReport::to_json() const {
  json inst = json::array();
  for (const auto& i : instances) {
    json j{{"instance", i.name}, {"pass", i.pass}, {"details", i.details}};
    if (i.informational) j["informational"] = true;
    inst.push_back(std::move(j));
  }
  return {{"suite", suite}, {"pass", pass}, {"failures", failures()}, {"instances", inst}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  SuiteReport r;
  r.suite = std::string(name);
  const auto t0 = std::chrono::steady_clock::now();
  it->second(opts, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.failures() == 0;
  return r;
}

}  // namespace hc
