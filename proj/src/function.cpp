#include "hullcodes/function.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <memory>

#include "hullcodes/error.hpp"

namespace hc {

ParyFunction tabulate(FieldPtr ctx, std::uint32_t codomain_degree, const std::function<Elem(Elem)>& fn) {
  ParyFunction f{ctx, codomain_degree, {}};
  f.table.resize(ctx->size());
  for (std::uint32_t i = 0; i < ctx->size(); ++i) f.table[i] = fn(Elem{i});
  return f;
}

ParyFunction trace_of(const ParyFunction& f) {
  const auto& ctx = *f.ctx;
  return tabulate(f.ctx, 1, [&](Elem x) { return Elem{ctx.abs_trace(f(x))}; });
}

// ---------------------------------------------------------------------------
// Mini-language

namespace {

struct Node {
  enum class Kind { Const, X, Add, Sub, Mul, Neg, Pow, Trace, Coord };
  Kind kind;
  Elem value{};
  std::uint64_t exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
  bool prime_valued = false;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Kind k, bool prime_valued, Elem v = {}) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->value = v;
  n->prime_valued = prime_valued;
  return n;
}

NodePtr unary(Node::Kind k, NodePtr child, bool prime_valued) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->lhs = std::move(child);
  n->prime_valued = prime_valued;
  return n;
}

NodePtr binary(Node::Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->prime_valued = a->prime_valued && b->prime_valued;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(const FieldCtx& ctx, std::string_view src) : ctx_(ctx), src_(src) {}

  NodePtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t integer() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec == std::errc::result_out_of_range) throw Error(ErrorKind::ExponentOverflow, "integer literal too large");
    (void)ptr;
    return v;
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Node::Kind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = unary_expr();
    while (accept('*')) lhs = binary(Node::Kind::Mul, std::move(lhs), unary_expr());
    return lhs;
  }

  NodePtr unary_expr() {
    if (accept('-')) {
      auto child = unary_expr();
      const bool pv = child->prime_valued;
      return unary(Node::Kind::Neg, std::move(child), pv);
    }
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (accept('^')) {
      auto n = unary(Node::Kind::Pow, std::move(base), false);
      n->prime_valued = n->lhs->prime_valued;
      n->exponent = integer();
      return n;
    }
    return base;
  }

  // x^e wrapped in tr(c * x^e).
  NodePtr trace_monomial(NodePtr c, std::uint64_t e) {
    auto xe = unary(Node::Kind::Pow, leaf(Node::Kind::X, false), false);
    xe->exponent = e;
    return unary(Node::Kind::Trace, binary(Node::Kind::Mul, std::move(c), std::move(xe)), true);
  }

  std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (r > std::numeric_limits<std::uint64_t>::max() / b) throw Error(ErrorKind::ExponentOverflow, "exponent overflows");
      r *= b;
    }
    return r;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer();
      return leaf(Node::Kind::Const, true, ctx_.from_int(static_cast<std::int64_t>(v % ctx_.p())));
    }
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    const auto name = identifier();
    if (name == "x") return leaf(Node::Kind::X, false);
    if (name == "w") return leaf(Node::Kind::Const, false, ctx_.generator());
    if (name == "g") return leaf(Node::Kind::Const, false, ctx_.primitive());
    if (name == "tr") {
      expect('(');
      auto e = expr();
      expect(')');
      return unary(Node::Kind::Trace, std::move(e), true);
    }
    if (name == "coord") {
      expect('(');
      const auto i = integer();
      expect(')');
      if (i >= ctx_.m()) fail("coordinate index out of range");
      auto n = leaf(Node::Kind::Coord, true);
      n->exponent = i;
      return n;
    }
    if (name == "quadratic" || name == "ternary_half") {
      expect('(');
      auto coef = expr();
      expect(',');
      const auto i = integer();
      expect(')');
      const std::uint64_t e = name == "quadratic" ? checked_pow(ctx_.p(), i) + 1 : (checked_pow(3, i) + 1) / 2;
      return trace_monomial(std::move(coef), e);
    }
    throw Error(ErrorKind::UndefinedSymbol, "unknown symbol '" + name + "'");
  }

  const FieldCtx& ctx_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

Elem eval(const Node& n, const FieldCtx& ctx, Elem x) {
  switch (n.kind) {
    case Node::Kind::Const: return n.value;
    case Node::Kind::X: return x;
    case Node::Kind::Add: return ctx.add(eval(*n.lhs, ctx, x), eval(*n.rhs, ctx, x));
    case Node::Kind::Sub: return ctx.sub(eval(*n.lhs, ctx, x), eval(*n.rhs, ctx, x));
    case Node::Kind::Mul: return ctx.mul(eval(*n.lhs, ctx, x), eval(*n.rhs, ctx, x));
    case Node::Kind::Neg: return ctx.neg(eval(*n.lhs, ctx, x));
    case Node::Kind::Pow: return ctx.pow(eval(*n.lhs, ctx, x), n.exponent);
    case Node::Kind::Trace: return Elem{ctx.abs_trace(eval(*n.lhs, ctx, x))};
    case Node::Kind::Coord: return Elem{ctx.coeffs(x)[n.exponent]};
  }
  return ctx.zero();
}

}  // namespace

ParyFunction parse_function(FieldPtr ctx, std::string_view spec) {
  Parser parser(*ctx, spec);
  const NodePtr root = parser.parse();
  const std::uint32_t s = root->prime_valued ? 1 : ctx->m();
  return tabulate(ctx, s, [&](Elem x) { return eval(*root, *ctx, x); });
}

// ---------------------------------------------------------------------------
// Walsh spectra

CycInt walsh_coefficient(const ParyFunction& f, Elem b) {
  if (f.codomain_degree != 1) throw Error(ErrorKind::WrongCodomain, "Walsh transform needs a p-ary function");
  const auto& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    const Elem x{i};
    const std::uint32_t e = (f(x).index + p - ctx.abs_trace(ctx.mul(b, x))) % p;
    ++counts[e];
  }
  return CycInt::from_raw(p, counts);
}

WalshSpectrum walsh_transform(const ParyFunction& f) {
  if (f.codomain_degree != 1) throw Error(ErrorKind::WrongCodomain, "Walsh transform needs a p-ary function");
  const auto& ctx = *f.ctx;
  WalshSpectrum s{f.ctx, {}};
  s.coeffs.reserve(ctx.size());
  CycInt total(ctx.p());
  for (std::uint32_t b = 0; b < ctx.size(); ++b) {
    s.coeffs.push_back(walsh_coefficient(f, Elem{b}));
    total += s.coeffs.back().abs2();
  }
  const auto q = static_cast<std::int64_t>(ctx.size());
  if (!(total == CycInt::from_int(ctx.p(), q * q))) {
    throw Error(ErrorKind::NonIntegerSum, "Parseval identity failed");
  }
  return s;
}

std::string_view to_string(BentKind k) {
  switch (k) {
    case BentKind::NotBent: return "NotBent";
    case BentKind::RegularBent: return "RegularBent";
    case BentKind::WeaklyRegularBent: return "WeaklyRegularBent";
    case BentKind::NonWeaklyRegularBent: return "NonWeaklyRegularBent";
  }
  return "?";
}

std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::PlusOne: return "+1";
    case Unit::MinusOne: return "-1";
    case Unit::PlusI: return "+i";
    case Unit::MinusI: return "-i";
  }
  return "?";
}

BigCyc bent_normaliser(const FieldCtx& ctx) {
  if (ctx.p() != 2) return gauss_sum_power(ctx.p(), ctx.m());
  BigInt v = 1;
  for (std::uint32_t i = 0; i < ctx.m() / 2; ++i) v *= 2;
  return BigCyc::from_int(2, v);
}

namespace {

Unit unit_from(int eps, std::uint32_t p, std::uint32_t m) {
  // u^{-1} = eps * G^m / p^{m/2}.
  const int minus_one_over_p = (p % 4 == 1) ? 1 : -1;
  if (m % 2 == 0) {
    int sign = eps;
    if ((m / 2) % 2 == 1) sign *= minus_one_over_p;
    return sign > 0 ? Unit::PlusOne : Unit::MinusOne;
  }
  if (p % 4 == 1) return eps > 0 ? Unit::PlusOne : Unit::MinusOne;
  // G^m = (-1)^{(m-1)/2} p^{m/2} i, so u = -i * eps * (-1)^{(m-1)/2}.
  int sign = -eps;
  if (((m - 1) / 2) % 2 == 1) sign = -sign;
  return sign > 0 ? Unit::PlusI : Unit::MinusI;
}

}  // namespace

BentClass classify_bent(const WalshSpectrum& spectrum) {
  const auto& ctx = *spectrum.ctx;
  const std::uint32_t p = ctx.p();
  std::int64_t pm = 1;
  for (std::uint32_t i = 0; i < ctx.m(); ++i) pm *= p;

  BentClass out;
  for (const auto& c : spectrum.coeffs) {
    const CycInt a2 = c.abs2();
    if (!a2.is_rational() || a2.rational() != pm) return out;
  }

  const CycInt norm = cyclotomic_cast<std::int64_t>(bent_normaliser(ctx));
  std::vector<Elem> dual(ctx.size());
  std::optional<int> eps;
  bool consistent = true;
  for (std::uint32_t b = 0; b < ctx.size() && consistent; ++b) {
    const CycInt& c = spectrum.coeffs[b];
    bool found = false;
    for (std::uint32_t e = 0; e < p && !found; ++e) {
      const CycInt base = norm.rotate(e);
      for (int s : {1, -1}) {
        if (p == 2 && s < 0) break;
        if (c == (s > 0 ? base : -base)) {
          if (eps && *eps != s) {
            consistent = false;
          } else {
            eps = s;
            dual[b] = Elem{e};
          }
          found = true;
          break;
        }
      }
    }
    if (!found) consistent = false;
  }
  if (!consistent) {
    out.kind = BentKind::NonWeaklyRegularBent;
    return out;
  }
  out.epsilon = eps;
  out.dual = ParyFunction{spectrum.ctx, 1, std::move(dual)};
  if (p == 2) {
    out.kind = BentKind::RegularBent;
    out.unit = Unit::PlusOne;
    out.regular = true;
  } else {
    out.kind = BentKind::WeaklyRegularBent;
    out.unit = unit_from(*eps, p, ctx.m());
    out.regular = *out.unit == Unit::PlusOne;
  }
  return out;
}

DualRelationReport verify_dual_relation(const ParyFunction& f, const BentClass& cls) {
  if (cls.kind != BentKind::WeaklyRegularBent && cls.kind != BentKind::RegularBent) {
    throw Error(ErrorKind::NotWeaklyRegular, "dual relation needs a weakly regular bent function");
  }
  const auto& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  const BigCyc norm = bent_normaliser(ctx);
  BigInt pm = 1;
  for (std::uint32_t i = 0; i < ctx.m(); ++i) pm *= p;
  const BigInt scale = pm * *cls.epsilon;

  DualRelationReport report;
  report.all = true;
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    const Elem x{i};
    const BigCyc lhs = cyclotomic_cast<BigInt>(walsh_coefficient(*cls.dual, x)) * norm;
    const BigCyc rhs = BigCyc::zeta_pow(p, f(ctx.neg(x)).index) * scale;
    report.points.push_back(lhs == rhs);
    report.all = report.all && report.points.back();
  }
  return report;
}

std::uint64_t differential_uniformity(const ParyFunction& f) {
  const auto& ctx = *f.ctx;
  if (f.codomain_degree != ctx.m()) throw Error(ErrorKind::WrongCodomain, "differential uniformity needs F_q -> F_q");
  std::uint64_t best = 0;
  std::vector<std::uint32_t> counts(ctx.size());
  for (std::uint32_t a = 1; a < ctx.size(); ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t i = 0; i < ctx.size(); ++i) {
      const Elem x{i};
      const Elem d = ctx.sub(f(ctx.add(x, Elem{a})), f(x));
      best = std::max<std::uint64_t>(best, ++counts[d.index]);
    }
  }
  return best;
}

}  // namespace hc
