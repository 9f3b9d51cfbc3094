#include "hullcodes/field.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "hullcodes/error.hpp"

namespace hc {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

// Remainder of a modulo a monic-or-not divisor b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = static_cast<std::uint32_t>(
          (a[shift + j] + static_cast<std::uint64_t>(p - b[j]) * c) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace poly {

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  // Multiplication of index-encoded polynomials modulo the modulus.
  auto mulmod = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint64_t> ca(m_), cb(m_), prod(2 * m_, 0);
    for (std::uint32_t j = 0; j < m_; ++j) {
      ca[j] = a % p_;
      a /= p_;
      cb[j] = b % p_;
      b /= p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (ca[i] == 0) continue;
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    for (std::uint32_t d = 2 * m_ - 1; d >= m_; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j <= m_; ++j) {
        prod[d - m_ + j] = (prod[d - m_ + j] + (p_ - modulus_[j]) * c) % p_;
      }
    }
    std::uint32_t out = 0;
    for (std::uint32_t j = m_; j-- > 0;) out = out * p_ + static_cast<std::uint32_t>(prod[j]);
    return out;
  };
  auto powmod = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t prim = 1;
  if (order > 1) {
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        if (powmod(cand, order / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        prim = cand;
        break;
      }
    }
  }

  prim_ = prim;
  exp_.assign(order, 1);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mulmod(cur, prim);
  }

  // Absolute trace via linearity: Tr(sum c_j w^j) = sum c_j Tr(w^j).
  std::vector<std::uint32_t> basis_trace(m_);
  for (std::uint32_t j = 0; j < m_; ++j) {
    std::uint32_t w_j = 1;
    for (std::uint32_t i = 0; i < j; ++i) w_j *= p_;
    std::uint32_t acc = 0;
    std::uint32_t x = w_j;
    for (std::uint32_t i = 0; i < m_; ++i) {
      acc = add(Elem{acc}, Elem{x}).index;
      x = powmod(x, p_);
    }
    basis_trace[j] = acc;  // lies in F_p, so the index is the value
  }
  trace_.assign(q_, 0);
  for (std::uint32_t idx = 0; idx < q_; ++idx) {
    std::uint64_t t = 0;
    std::uint32_t rest = idx;
    for (std::uint32_t j = 0; j < m_; ++j) {
      t += static_cast<std::uint64_t>(rest % p_) * basis_trace[j];
      rest /= p_;
    }
    trace_[idx] = static_cast<std::uint8_t>(t % p_);
  }
}

Elem FieldCtx::from_int(std::int64_t v) const {
  const std::int64_t r = ((v % p_) + p_) % p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, out = 0, scale = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::neg(Elem a) const {
  if (p_ == 2) return a;
  std::uint32_t x = a.index, out = 0, scale = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (a.index == 0 || b.index == 0) return Elem{0};
  const std::uint64_t s = static_cast<std::uint64_t>(log_[a.index]) + log_[b.index];
  return Elem{exp_[s % (q_ - 1)]};
}

Elem FieldCtx::inv(Elem a) const {
  if (a.index == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  const std::uint32_t l = log_[a.index];
  return Elem{exp_[l == 0 ? 0 : (q_ - 1 - l)]};
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t s = (static_cast<std::uint64_t>(log_[a.index]) * (e % (q_ - 1))) % (q_ - 1);
  return Elem{exp_[s]};
}

Elem FieldCtx::frobenius(Elem a, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % m_; ++i) e *= p_;
  return pow(a, e);
}

std::uint32_t FieldCtx::log(Elem a) const {
  if (a.index == 0) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return log_[a.index];
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  std::uint32_t x = a.index;
  for (std::uint32_t j = 0; j < m_; ++j) {
    c[j] = x % p_;
    x /= p_;
  }
  return c;
}

Elem FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != m_) throw Error(ErrorKind::DegreeMismatch, "coefficient vector length must equal m");
  std::uint32_t out = 0;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    out = out * p_ + c[j];
  }
  return Elem{out};
}

Elem FieldCtx::trace(Elem a, std::uint32_t s) const { return subfield_trace(a, m_, s); }

Elem FieldCtx::subfield_trace(Elem a, std::uint32_t t, std::uint32_t s) const {
  if (s == 0 || t % s != 0 || m_ % t != 0) {
    throw Error(ErrorKind::NotASubfield, "degree " + std::to_string(s) + " does not divide " + std::to_string(t));
  }
  if (s == 1 && t == m_) return Elem{trace_[a.index]};
  Elem acc = zero();
  Elem x = a;
  for (std::uint32_t i = 0; i < t / s; ++i) {
    acc = add(acc, x);
    x = frobenius(x, s);
  }
  return acc;
}

bool FieldCtx::in_subfield(Elem a, std::uint32_t s) const {
  if (s == 0 || m_ % s != 0) return false;
  return frobenius(a, s) == a;
}

std::vector<Elem> FieldCtx::subfield_elements(std::uint32_t s) const {
  if (s == 0 || m_ % s != 0) throw Error(ErrorKind::NotASubfield, "subfield degree must divide m");
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < q_; ++i) {
    if (in_subfield(Elem{i}, s)) out.push_back(Elem{i});
  }
  return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorKind::TooLarge, "field size exceeds 2^20");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree m");
    }
    for (auto c : mod) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (!poly::is_irreducible(mod, p)) throw Error(ErrorKind::ReducibleModulus, "modulus has a factor over F_p");
  } else {
    mod.assign(m + 1, 0);
    mod[m] = 1;
    std::uint64_t lower = 1;
    for (std::uint32_t i = 0; i < m; ++i) lower *= p;
    bool found = false;
    for (std::uint64_t idx = 0; idx < lower && !found; ++idx) {
      std::uint64_t rest = idx;
      for (std::uint32_t i = 0; i < m; ++i) {
        mod[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      found = poly::is_irreducible(mod, p);
    }
  }
  return std::make_shared<const FieldCtx>(p, m, std::move(mod));
}

namespace {

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view spec) {
  std::optional<std::uint32_t> p, m;
  std::optional<std::vector<std::uint32_t>> poly;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const auto eq = spec.find('=', pos);
    if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "malformed field spec");
    const auto key = spec.substr(pos, eq - pos);
    if (key == "poly") {
      // Coefficients run to the end of the spec.
      std::vector<std::uint32_t> c;
      auto rest = spec.substr(eq + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const auto tok = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
        c.push_back(parse_uint(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      poly = std::move(c);
      pos = spec.size();
      continue;
    }
    const auto comma = spec.find(',', eq);
    const auto value = spec.substr(eq + 1, comma == std::string_view::npos ? spec.npos : comma - eq - 1);
    if (key == "p") {
      p = parse_uint(value);
    } else if (key == "m") {
      m = parse_uint(value);
    } else {
      throw Error(ErrorKind::ParseError, "unknown field spec key '" + std::string(key) + "'");
    }
    pos = comma == std::string_view::npos ? spec.size() : comma + 1;
  }
  if (!p || !m) throw Error(ErrorKind::ParseError, "field spec needs p and m");
  return make_field(*p, *m, poly);
}

std::string field_spec(const FieldCtx& ctx) {
  std::ostringstream os;
  os << "p=" << ctx.p() << ",m=" << ctx.m() << ",poly=";
  for (std::size_t i = 0; i < ctx.modulus().size(); ++i) {
    if (i) os << ',';
    os << ctx.modulus()[i];
  }
  return os.str();
}

Elem trace(const FieldCtx& ctx, Elem x, std::uint32_t s) {
  if (s == 0 || ctx.m() % s != 0) {
    throw Error(ErrorKind::NotASubfield, std::to_string(s) + " does not divide " + std::to_string(ctx.m()));
  }
  return ctx.trace(x, s);
}

std::vector<Elem> trace_kernel(const FieldCtx& ctx) {
  std::vector<Elem> kernel;
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    if (ctx.abs_trace(Elem{i}) == 0) kernel.push_back(Elem{i});
  }
  std::set<Elem> artin_schreier;
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    const Elem a{i};
    artin_schreier.insert(ctx.sub(ctx.pow(a, ctx.p()), a));
  }
  if (artin_schreier.size() != kernel.size() ||
      !std::equal(kernel.begin(), kernel.end(), artin_schreier.begin())) {
    throw Error(ErrorKind::InvalidArgument, "trace kernel differs from {a^p - a}");
  }
  return kernel;
}

}  // namespace hc
