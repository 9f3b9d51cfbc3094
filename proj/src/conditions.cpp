#include "hullcodes/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "hullcodes/error.hpp"

namespace hc {

namespace {

std::int64_t ipow(std::int64_t b, std::uint32_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

BigInt bigpow(std::uint32_t b, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Exact division of a rational cyclotomic sum.
std::int64_t divide_sum(const CycInt& s, std::int64_t d, const char* what) {
  if (!s.is_rational() || s.rational() % d != 0) {
    throw Error(ErrorKind::NonIntegerSum, std::string(what) + " is not a multiple of " + std::to_string(d));
  }
  return s.rational() / d;
}

/// Exponent t with v == zeta^t, if any.
std::optional<std::uint32_t> root_exponent(const CycInt& v) {
  for (std::uint32_t t = 0; t < v.p(); ++t)
    if (v == CycInt::zeta_pow(v.p(), t)) return t;
  return std::nullopt;
}

bool is_scalar_respecting(const ParyFunction& f) {
  const auto& ctx = *f.ctx;
  for (std::uint32_t a = 0; a < ctx.p(); ++a) {
    const Elem al = ctx.from_int(a);
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
      if (f(ctx.mul(al, Elem{i})) != ctx.mul(al, f(Elem{i}))) return false;
    }
  }
  return true;
}

bool is_wrb_variant(Variant v) {
  switch (v) {
    case Variant::ShiftWrbScalar:
    case Variant::ShiftWrbGeneric:
    case Variant::TraceWrbScalar:
    case Variant::TraceWrbGeneric:
    case Variant::ImageWrbScalar:
    case Variant::ImageWrbGeneric:
      return true;
    default:
      return false;
  }
}

bool is_scalar_variant(Variant v) {
  return v == Variant::ShiftWrbScalar || v == Variant::TraceWrbScalar || v == Variant::ImageWrbScalar;
}

}  // namespace

std::uint64_t weight_via_walsh_sum(const ParyFunction& psi, Elem a, Elem b) {
  if (psi.codomain_degree != psi.ctx->m()) throw Error(ErrorKind::WrongCodomain, "Psi must map F_q to F_q");
  const auto& ctx = *psi.ctx;
  const std::uint32_t p = ctx.p();
  CycInt total(p);
  for (std::uint32_t w = 0; w < p; ++w) {
    const Elem om = ctx.from_int(w);
    const Elem wa = ctx.mul(om, a);
    const ParyFunction psi_wa = tabulate(psi.ctx, 1, [&](Elem x) { return Elem{ctx.abs_trace(ctx.mul(wa, psi(x)))}; });
    total += walsh_coefficient(psi_wa, ctx.mul(om, b));
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(ctx.size()) - divide_sum(total, p, "Walsh sum"));
}

std::uint64_t weight_via_character_sum(const DefiningSet& d, Elem x) {
  const auto& ctx = *d.ctx;
  const std::uint32_t p = ctx.p();
  const std::int64_t ps = ipow(p, d.base_degree);
  // chi_1(z) = zeta^{Tr_{p^m/p}(z)}, accumulated by exponent.
  std::vector<std::int64_t> counts(p, 0);
  for (Elem y : ctx.subfield_elements(d.base_degree)) {
    if (y == ctx.zero()) continue;
    const Elem yx = ctx.mul(y, x);
    for (Elem e : d.elements) counts[ctx.abs_trace(ctx.mul(yx, e))]++;
  }
  const CycInt sum = CycInt::from_raw(p, counts);
  const std::int64_t n = static_cast<std::int64_t>(d.size());
  // wt = ((ps - 1) n - sum) / ps.
  const CycInt numer = CycInt::from_int(p, (ps - 1) * n) - sum;
  return static_cast<std::uint64_t>(divide_sum(numer, ps, "character sum"));
}

std::uint64_t theorem1_weight(const ParyFunction& dual, int epsilon, Elem alpha, Elem beta) {
  const auto& ctx = *dual.ctx;
  const std::int64_t p = ctx.p();
  const std::uint32_t m = ctx.m();
  const std::int64_t q = ipow(p, m);
  if (alpha == ctx.zero()) return beta == ctx.zero() ? 0 : static_cast<std::uint64_t>(q - q / p);
  if (!ctx.in_prime_field(alpha)) throw Error(ErrorKind::AlphaOutsidePrimeField, "the closed form needs alpha in F_p^*");
  const std::uint32_t e = dual(ctx.div(beta, alpha)).index;
  if (p == 2) {
    const std::int64_t sign = e == 0 ? 1 : -1;
    return static_cast<std::uint64_t>(q / 2 - sign * ipow(2, m / 2 - 1));
  }
  const std::int64_t minus_one = legendre(p - 1, static_cast<std::uint32_t>(p));
  if (m % 2 == 0) {
    // eps (p*)^{m/2} = eps (-1/p)^{m/2} p^{m/2}.
    const std::int64_t t = epsilon * ipow(minus_one, m / 2) * ipow(p, m / 2);
    return static_cast<std::uint64_t>(e == 0 ? q - q / p - t * (p - 1) / p : q - q / p + t / p);
  }
  const std::int64_t t = epsilon * ipow(minus_one, (m + 1) / 2) * ipow(p, (m - 1) / 2) * legendre(e, static_cast<std::uint32_t>(p));
  return static_cast<std::uint64_t>(q - q / p - t);
}

std::uint64_t theorem1_weight(const BentClass& cls, Elem alpha, Elem beta) {
  if (!cls.dual || !cls.epsilon) throw Error(ErrorKind::NotBent, "psi_1 must be (weakly regular) bent");
  return theorem1_weight(*cls.dual, *cls.epsilon, alpha, beta);
}

WeightDistribution ding_weight_multiset(const ParyFunction& f) {
  const auto& ctx = *f.ctx;
  if (ctx.p() != 2) throw Error(ErrorKind::OddCharacteristic, "Boolean functions only");
  if (f.codomain_degree != 1) throw Error(ErrorKind::WrongCodomain, "f must be Boolean");
  const WalshSpectrum s = walsh_transform(f);
  const std::int64_t q = ctx.size();
  std::int64_t nf = 0;
  for (Elem v : f.table) nf += v.index;
  for (const auto& c : s.coeffs) {
    if (c.rational() == q || c.rational() == -q) throw Error(ErrorKind::AffineFunction, "f is affine");
  }
  WeightDistribution out{{0, 1}};
  for (std::uint32_t w = 1; w < ctx.size(); ++w) {
    const std::int64_t num = 2 * nf + s.coeffs[w].rational();
    if (num % 4 != 0) throw Error(ErrorKind::NonIntegerSum, "2 n_f + f^(w) is not a multiple of 4");
    out[static_cast<std::uint64_t>(num / 4)]++;
  }
  return out;
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ShiftWrbScalar: return "shift-wrb-scalar";
    case Variant::ShiftWrbGeneric: return "shift-wrb-generic";
    case Variant::TraceWrbScalar: return "trace-wrb-scalar";
    case Variant::TraceWrbGeneric: return "trace-wrb-generic";
    case Variant::GenericTrace: return "generic-trace";
    case Variant::GenericShift: return "generic-shift";
    case Variant::GenericDouble: return "generic-double";
    case Variant::ImageWrbScalar: return "image-wrb-scalar";
    case Variant::ImageWrbGeneric: return "image-wrb-generic";
    case Variant::ImageGeneric: return "image-generic";
  }
  return "?";
}

const std::vector<Variant>& first_variants() {
  static const std::vector<Variant> v{Variant::ShiftWrbScalar, Variant::ShiftWrbGeneric, Variant::TraceWrbScalar,
                                      Variant::TraceWrbGeneric, Variant::GenericTrace,   Variant::GenericShift,
                                      Variant::GenericDouble};
  return v;
}

const std::vector<Variant>& second_variants() {
  static const std::vector<Variant> v{Variant::ImageWrbScalar, Variant::ImageWrbGeneric, Variant::ImageGeneric};
  return v;
}

CycInt CodeCharacter::evaluate(const RowVec& c) const {
  CycInt acc = CycInt::from_int(p(), 1);
  for (std::size_t i = 0; i < factors.size(); ++i) acc *= factors[i].pow(static_cast<std::uint64_t>(c(static_cast<Eigen::Index>(i))));
  return acc;
}

std::uint32_t CodeCharacter::p() const { return factors.front().p(); }

LinearCode CodeCharacter::kernel_hyperplane() const {
  const Alphabet a = prime_alphabet(p());
  Matrix t(1, static_cast<Eigen::Index>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) t(0, static_cast<Eigen::Index>(i)) = static_cast<std::int32_t>(exponents[i]);
  return dual(from_rows(a, t));
}

ConditionContext ConditionContext::first(const ParyFunction& f, bool include_zero) {
  if (f.codomain_degree != f.ctx->m()) throw Error(ErrorKind::WrongCodomain, "the construction needs f: F_q -> F_q");
  ConditionContext cc;
  cc.first_ = true;
  cc.ctx_ = f.ctx;
  cc.f_ = f;
  cc.points_ = first_points(*f.ctx, include_zero);
  for (Elem x : cc.points_) cc.values_.push_back(f(x));
  cc.scalar_ok_ = is_scalar_respecting(f);
  const auto& ctx = *f.ctx;
  cc.prepare_wrb(cc.shift_, tabulate(f.ctx, 1, [&](Elem x) { return Elem{ctx.abs_trace(ctx.sub(f(x), x))}; }));
  cc.prepare_wrb(cc.trace_, trace_of(f));
  cc.code_ = first_generic(f, include_zero);
  cc.finish();
  return cc;
}

ConditionContext ConditionContext::image(const ParyFunction& f) {
  const DefiningSet d = make_image_set(f);
  ConditionContext cc;
  cc.first_ = false;
  cc.ctx_ = f.ctx;
  cc.f_ = f;
  cc.points_ = d.preimages;
  cc.values_ = d.elements;
  cc.scalar_ok_ = is_scalar_respecting(f);
  cc.prepare_wrb(cc.trace_, trace_of(f));
  cc.code_ = second_generic(d);
  cc.finish();
  return cc;
}

ConditionContext ConditionContext::defining_set(const DefiningSet& d) {
  if (d.base_degree != 1) throw Error(ErrorKind::InvalidArgument, "conditions are stated over F_p");
  ConditionContext cc;
  cc.first_ = false;
  cc.ctx_ = d.ctx;
  cc.points_ = d.preimages.empty() ? std::vector<Elem>(d.size(), d.ctx->zero()) : d.preimages;
  cc.values_ = d.elements;
  cc.code_ = second_generic(d);
  cc.finish();
  return cc;
}

void ConditionContext::prepare_wrb(Wrb& w, const ParyFunction& g) {
  const BentClass cls = classify_bent(walsh_transform(g));
  if (cls.kind != BentKind::WeaklyRegularBent && cls.kind != BentKind::RegularBent) return;
  w.cls = cls;
  w.valid = true;
  w.scale = bent_normaliser(*g.ctx) * BigInt(*cls.epsilon);
  const WalshSpectrum ds = walsh_transform(*cls.dual);
  for (const auto& c : ds.coeffs) w.dual_spectrum.push_back(cyclotomic_cast<BigInt>(c));
}

const std::vector<Variant>& ConditionContext::variants() const {
  return first_ ? first_variants() : second_variants();
}

const ConditionContext::Wrb& ConditionContext::wrb_for(Variant v) const {
  return (v == Variant::ShiftWrbScalar || v == Variant::ShiftWrbGeneric) ? shift_ : trace_;
}

bool ConditionContext::applicable(Variant v) const {
  const auto& vs = variants();
  if (std::find(vs.begin(), vs.end(), v) == vs.end()) return false;
  if (!f_ && v != Variant::ImageGeneric) return false;
  if (is_wrb_variant(v) && !wrb_for(v).valid) return false;
  if (is_scalar_variant(v) && !scalar_ok_) return false;
  return true;
}

std::vector<Elem> ConditionContext::generic_values(Variant v) const {
  // Value of g_i at x_i; elsewhere g_i = Tr.
  const auto& ctx = *ctx_;
  std::vector<Elem> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Elem x = points_[i], fx = values_[i];
    Elem arg;
    switch (v) {
      case Variant::GenericTrace: arg = fx; break;
      case Variant::GenericShift:
      case Variant::ImageGeneric: arg = ctx.add(fx, x); break;
      case Variant::GenericDouble: arg = ctx.add(x, x); break;
      default: throw Error(ErrorKind::InvalidArgument, "not a generic variant");
    }
    out.push_back(Elem{ctx.abs_trace(arg)});
  }
  return out;
}

CodeCharacter ConditionContext::character(Variant v) const {
  const auto it = chars_.find(v);
  if (it == chars_.end()) throw Error(ErrorKind::HypothesisFailed, std::string(to_string(v)) + " does not apply here");
  return it->second;
}

void ConditionContext::finish() {
  for (Variant v : variants())
    if (applicable(v) && !is_wrb_variant(v)) chars_.emplace(v, build_character(v));
}

CodeCharacter ConditionContext::build_character(Variant v) const {
  const auto& ctx = *ctx_;
  const std::uint32_t p = ctx.p();
  const std::int64_t q = ctx.size();
  const auto gv = generic_values(v);
  CodeCharacter ch{v, {}, {}};
  for (std::size_t i = 0; i < points_.size(); ++i) {
    // chi_{g_i}(1) = sum_x zeta^{g_i(x) - Tr(x)}, summed honestly.
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint32_t xi = 0; xi < ctx.size(); ++xi) {
      const Elem x{xi};
      const std::uint32_t gx = x == points_[i] ? gv[i].index : ctx.abs_trace(x);
      counts[(gx + p - ctx.abs_trace(x)) % p]++;
    }
    const CycInt factor = CycInt::from_raw(p, counts) + CycInt::from_int(p, 1 - q);
    const auto t = root_exponent(factor);
    if (!t) throw Error(ErrorKind::NonIntegerSum, "character factor is not a root of unity");
    ch.factors.push_back(factor);
    ch.exponents.push_back(*t);
  }
  return ch;
}

MembershipVerdict ConditionContext::dual_membership(Variant v, const RowVec& c) const {
  if (!applicable(v)) throw Error(ErrorKind::HypothesisFailed, std::string(to_string(v)) + " does not apply here");
  if (c.size() != static_cast<Eigen::Index>(points_.size())) throw Error(ErrorKind::InvalidArgument, "word has the wrong length");
  const auto& ctx = *ctx_;
  const std::uint32_t p = ctx.p();
  MembershipVerdict out{v, false, BigCyc(p), BigCyc(p), false};

  if (!is_wrb_variant(v)) {
    out.lhs = cyclotomic_cast<BigInt>(chars_.at(v).evaluate(c));
    out.rhs = BigCyc::from_int(p, 1);
  } else {
    const Wrb& w = wrb_for(v);
    const BigCyc& scale = *w.scale;
    BigCyc lhs = BigCyc::from_int(p, 1);
    std::uint64_t count = 0;
    if (is_scalar_variant(v)) {
      for (std::size_t i = 0; i < points_.size(); ++i) {
        const Elem y = ctx.mul(ctx.from_int(c(static_cast<Eigen::Index>(i))), points_[i]);
        lhs *= w.dual_spectrum[y.index];
      }
      count = points_.size();
    } else {
      for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto ci = static_cast<std::uint64_t>(c(static_cast<Eigen::Index>(i)));
        if (ci == 0) continue;
        lhs *= w.dual_spectrum[points_[i].index].pow(ci);
        count += ci;
      }
    }
    out.lhs = lhs * scale.pow(count);
    out.rhs = BigCyc::from_int(p, bigpow(p, static_cast<std::uint64_t>(ctx.m()) * count));
  }
  out.holds = out.lhs == out.rhs;
  out.imaginary_zero = out.lhs.conj() == out.lhs;
  return out;
}

MembershipVerdict nc_dual_membership(const ConditionContext& cc, const RowVec& c, Variant v) {
  return cc.dual_membership(v, c);
}

MembershipVerdict hull_membership_first(const ConditionContext& cc, Variant v, Elem alpha, Elem beta) {
  if (!cc.is_first() || !cc.function()) throw Error(ErrorKind::InvalidArgument, "first-construction context expected");
  // The exponents Tr(alpha f(x_i) + beta x_i) are the entries of c_{alpha,beta}.
  const bool include_zero = cc.points().size() == cc.ctx()->size();
  return cc.dual_membership(v, first_codeword(*cc.function(), alpha, beta, include_zero));
}

MembershipVerdict hull_membership_second(const ConditionContext& cc, const DefiningSet& d, Variant v, Elem x) {
  return cc.dual_membership(v, second_codeword(d, x));
}

namespace {

BigInt walsh_product(const ParyFunction& g, const std::vector<Elem>& points, const RowVec& c) {
  const auto& ctx = *g.ctx;
  if (ctx.p() != 2) throw Error(ErrorKind::OddCharacteristic, "the weight formula is for characteristic 2");
  if (c.size() != static_cast<Eigen::Index>(points.size())) throw Error(ErrorKind::InvalidArgument, "word has the wrong length");
  const BentClass cls = classify_bent(walsh_transform(g));
  if (!cls.dual) throw Error(ErrorKind::NotBent, "g must be bent");
  const WalshSpectrum ds = walsh_transform(*cls.dual);
  BigInt alpha = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (c(static_cast<Eigen::Index>(i)) == 0) continue;
    alpha *= BigInt(ds[points[i]].rational());
  }
  return alpha;
}

}  // namespace

std::uint64_t weight_from_walsh_even(const ParyFunction& g, const std::vector<Elem>& points, const RowVec& c) {
  const BigInt alpha = walsh_product(g, points, c);
  const BigInt sq = alpha * alpha;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(sq));
  if (sq != (BigInt(1) << bits) || bits % g.ctx->m() != 0) throw Error(ErrorKind::NotInDual, "alpha^2 is not a power of 2^m");
  return bits / g.ctx->m();
}

bool walsh_product_positive(const ParyFunction& g, const std::vector<Elem>& points, const RowVec& c) {
  return walsh_product(g, points, c) > 0;
}

bool in_pn_band(std::uint64_t w, std::uint32_t p, std::uint32_t m) {
  const BigInt pm = bigpow(p, m);
  const BigInt d = BigInt(p) * w - BigInt(p - 1) * pm;
  return d * d <= BigInt(p - 1) * (p - 1) * pm;
}

ApnReport apn_ab_dual_diagnostics(const ParyFunction& F, std::uint64_t guard) {
  const auto& ctx = *F.ctx;
  if (ctx.p() != 2) throw Error(ErrorKind::OddCharacteristic, "APN/AB diagnostics need characteristic 2");
  const LinearCode c = first_generic(F, false);
  ApnReport r;
  r.dimension = static_cast<std::uint32_t>(c.k());
  r.degenerate = r.dimension < 2 * ctx.m();
  r.differential_uniformity = differential_uniformity(F);
  for (const auto& [w, n] : weight_distribution(c, guard))
    if (w != 0) r.characteristic_set.insert(w);
  r.d_perp = min_distance(dual(c), guard);
  r.bound_holds = r.d_perp >= 3 && r.d_perp <= 5;
  r.is_apn = r.d_perp == 5;
  if (ctx.m() % 2 == 1) {
    const std::uint64_t h = std::uint64_t{1} << (ctx.m() - 1);
    const std::uint64_t s = std::uint64_t{1} << ((ctx.m() - 1) / 2);
    r.is_ab = r.characteristic_set == std::set<std::uint64_t>{h - s, h, h + s};
  }
  return r;
}

PnReport pn_bounds_check(const ParyFunction& F, std::uint64_t guard) {
  const auto& ctx = *F.ctx;
  if (F.codomain_degree != ctx.m()) throw Error(ErrorKind::WrongCodomain, "F must map F_q to F_q");
  if (F(ctx.zero()) != ctx.zero() || differential_uniformity(F) != 1) {
    throw Error(ErrorKind::NotPN, "F must be planar with F(0) = 0");
  }
  const std::uint32_t p = ctx.p(), m = ctx.m();
  const LinearCode c = first_generic(F, false);
  PnReport r;
  for (const auto& [w, n] : weight_distribution(c, guard))
    if (w != 0) r.weights.insert(w);
  Matrix ext(c.k() + 1, c.n());
  ext.topRows(c.k()) = c.generator();
  ext.row(c.k()).setOnes();
  for (const auto& [w, n] : weight_distribution(from_rows(c.alphabet(), ext), guard))
    if (w != 0) r.extended_weights.insert(w);
  r.all_in_band = std::all_of(r.weights.begin(), r.weights.end(), [&](auto w) { return in_pn_band(w, p, m); });
  r.extended_in_band =
      std::all_of(r.extended_weights.begin(), r.extended_weights.end(), [&](auto w) { return in_pn_band(w, p, m); });
  const double pm = static_cast<double>(ctx.size());
  const double root = std::sqrt(pm);
  r.lower = (p - 1.0) / p * (pm - root);
  r.upper = (p - 1.0) / p * (pm + root);
  return r;
}

}  // namespace hc
