#include "hullcodes/constructions.hpp"

#include <algorithm>
#include <set>

#include "hullcodes/error.hpp"

namespace hc {

namespace {

std::int32_t as_int(Elem e) { return static_cast<std::int32_t>(e.index); }
Elem as_elem(std::int32_t v) { return Elem{static_cast<std::uint32_t>(v)}; }

void require_codomain(const ParyFunction& f) {
  if (f.codomain_degree != f.ctx->m()) throw Error(ErrorKind::WrongCodomain, "the construction needs f: F_q -> F_q");
}

/// Elements w^j with a single unit coordinate: an F_p-basis of ctx.
std::vector<Elem> power_basis(const FieldCtx& ctx) {
  std::vector<Elem> out;
  std::uint32_t idx = 1;
  for (std::uint32_t j = 0; j < ctx.m(); ++j, idx *= ctx.p()) out.push_back(Elem{idx});
  return out;
}

/// Powers 1, g, ..., g^{count-1} of a primitive element of F_{p^t}.
std::vector<Elem> subfield_powers(const FieldCtx& ctx, std::uint32_t t, std::uint32_t count) {
  std::uint64_t pt = 1;
  for (std::uint32_t i = 0; i < t; ++i) pt *= ctx.p();
  const Elem g = ctx.pow(ctx.primitive(), (ctx.size() - 1) / (pt - 1));
  std::vector<Elem> out;
  Elem cur = ctx.one();
  for (std::uint32_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = ctx.mul(cur, g);
  }
  return out;
}

/// Alphabet F_q of the ambient field, used for L-codes.
Alphabet ambient_alphabet(const FieldPtr& ctx) { return subfield_alphabet(ctx, ctx->m()); }

/// Left kernel of phi applied to the rows of g.
template <class F>
HullKernel kernel_of(const LinearCode& c, const Matrix& phi, const F& ops) {
  const Matrix t = phi.transpose();
  const Matrix u = nullspace(t, c.k(), ops);
  Matrix rows(u.rows(), c.n());
  for (Eigen::Index r = 0; r < u.rows(); ++r) rows.row(r) = left_multiply(u.row(r), c.generator(), ops);
  const Eigen::Index rk = phi.rows() == 0 ? 0 : rank(phi, ops);
  if (rows.rows() == 0) return HullKernel{zero_code(c.alphabet(), c.n()), rk};
  return HullKernel{from_rows(c.alphabet(), rows), rk};
}

void require_independent(const FieldCtx& ctx, const std::vector<Elem>& d) {
  if (prime_rank(ctx, d) != d.size()) throw Error(ErrorKind::NotIndependent, "d_i must be independent over F_p");
}

std::vector<Elem> elements_of(const FieldCtx& ctx, bool include_zero) {
  std::vector<Elem> out;
  for (std::uint32_t i = include_zero ? 0 : 1; i < ctx.size(); ++i) out.push_back(Elem{i});
  return out;
}

}  // namespace

std::vector<Elem> first_points(const FieldCtx& ctx, bool include_zero) { return elements_of(ctx, include_zero); }

RowVec first_codeword(const ParyFunction& f, Elem a, Elem b, bool include_zero) {
  require_codomain(f);
  const auto& ctx = *f.ctx;
  const auto xs = first_points(ctx, include_zero);
  RowVec w(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w(static_cast<Eigen::Index>(i)) =
        static_cast<std::int32_t>(ctx.abs_trace(ctx.add(ctx.mul(a, f(xs[i])), ctx.mul(b, xs[i]))));
  }
  return w;
}

LinearCode first_generic(const ParyFunction& f, bool include_zero) {
  require_codomain(f);
  const auto& ctx = *f.ctx;
  const auto basis = power_basis(ctx);
  const Eigen::Index n = static_cast<Eigen::Index>(ctx.size() - (include_zero ? 0 : 1));
  Matrix rows(2 * static_cast<Eigen::Index>(ctx.m()), n);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    rows.row(static_cast<Eigen::Index>(j)) = first_codeword(f, basis[j], ctx.zero(), include_zero);
    rows.row(static_cast<Eigen::Index>(j + basis.size())) = first_codeword(f, ctx.zero(), basis[j], include_zero);
  }
  return from_rows(prime_alphabet(ctx.p()), rows);
}

RowVec second_codeword(const DefiningSet& d, Elem x) {
  const auto& ctx = *d.ctx;
  RowVec w(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    w(static_cast<Eigen::Index>(i)) = as_int(ctx.trace(ctx.mul(x, d.elements[i]), d.base_degree));
  }
  return w;
}

LinearCode second_generic(const DefiningSet& d) {
  const Alphabet a = subfield_alphabet(d.ctx, d.base_degree);
  const Eigen::Index n = static_cast<Eigen::Index>(d.size());
  if (n == 0) throw Error(ErrorKind::EmptySet, "defining set is empty");
  const auto basis = power_basis(*d.ctx);
  Matrix rows(static_cast<Eigen::Index>(basis.size()), n);
  for (std::size_t j = 0; j < basis.size(); ++j) rows.row(static_cast<Eigen::Index>(j)) = second_codeword(d, basis[j]);
  return from_rows(a, rows);
}

LinearCode dual_first_closed_form(const ParyFunction& f, bool include_zero) {
  require_codomain(f);
  const auto& ctx = *f.ctx;
  const auto xs = first_points(ctx, include_zero);
  const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
  Matrix l(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    l(0, i) = as_int(xs[static_cast<std::size_t>(i)]);
    l(1, i) = as_int(f(xs[static_cast<std::size_t>(i)]));
  }
  const Alphabet fq = ambient_alphabet(f.ctx);
  const LinearCode l1 = from_rows(fq, Matrix(l.topRows(1)));
  const LinearCode l2 = from_rows(fq, Matrix(l.bottomRows(1)));
  return restrict_to_prime_subfield(intersect(dual(l1), dual(l2)));
}

LinearCode dual_second_closed_form(const DefiningSet& d, std::uint32_t j) {
  if (j % d.base_degree != 0) throw Error(ErrorKind::InvalidArgument, "the Frobenius power must fix F_{p^s}");
  const auto& ctx = *d.ctx;
  const Eigen::Index n = static_cast<Eigen::Index>(d.size());
  if (n == 0) throw Error(ErrorKind::EmptySet, "defining set is empty");
  Matrix l(1, n);
  for (Eigen::Index i = 0; i < n; ++i) l(0, i) = as_int(ctx.frobenius(d.elements[static_cast<std::size_t>(i)], j));
  return restrict_to_subfield(dual(from_rows(ambient_alphabet(d.ctx), l)), d.base_degree);
}

std::uint32_t prime_rank(const FieldCtx& ctx, const std::vector<Elem>& elems) {
  if (elems.empty()) return 0;
  Matrix m(static_cast<Eigen::Index>(elems.size()), static_cast<Eigen::Index>(ctx.m()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto c = ctx.coeffs(elems[i]);
    for (std::uint32_t j = 0; j < ctx.m(); ++j) m(static_cast<Eigen::Index>(i), j) = static_cast<std::int32_t>(c[j]);
  }
  return static_cast<std::uint32_t>(rank(m, PrimeField{ctx.p()}));
}

std::uint32_t dimension_via_span(const DefiningSet& d) {
  const auto& ctx = *d.ctx;
  if (d.base_degree == 1) return prime_rank(ctx, d.elements);
  const auto lambda = subfield_powers(ctx, d.base_degree, d.base_degree);
  std::vector<Elem> all;
  for (Elem e : d.elements)
    for (Elem l : lambda) all.push_back(ctx.mul(l, e));
  return prime_rank(ctx, all) / d.base_degree;
}

StandardForm standard_form_generator(const DefiningSet& d) {
  if (d.base_degree != 1) throw Error(ErrorKind::InvalidArgument, "standard form is implemented for F_p codes");
  const auto& ctx = *d.ctx;
  std::vector<std::size_t> front, back;
  std::vector<Elem> basis;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto trial = basis;
    trial.push_back(d.elements[i]);
    if (prime_rank(ctx, trial) == trial.size()) {
      basis = std::move(trial);
      front.push_back(i);
    } else {
      back.push_back(i);
    }
  }
  if (basis.empty()) throw Error(ErrorKind::CannotFrontLoad, "D spans the zero space");
  StandardForm out;
  out.order = front;
  out.order.insert(out.order.end(), back.begin(), back.end());

  // Solve sum_j a_j b_j = d_i column by column: [B^T | d_i^T] in coordinates.
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index n = static_cast<Eigen::Index>(d.size());
  const Eigen::Index m = ctx.m();
  const PrimeField ops{ctx.p()};
  out.generator = Matrix::Zero(k, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Matrix aug(m, k + 1);
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto c = ctx.coeffs(basis[static_cast<std::size_t>(j)]);
      for (Eigen::Index r = 0; r < m; ++r) aug(r, j) = static_cast<std::int32_t>(c[static_cast<std::size_t>(r)]);
    }
    const auto c = ctx.coeffs(d.elements[out.order[static_cast<std::size_t>(col)]]);
    for (Eigen::Index r = 0; r < m; ++r) aug(r, k) = static_cast<std::int32_t>(c[static_cast<std::size_t>(r)]);
    const Echelon e = rref(aug, ops);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.generator(e.pivots[r], col) = e.rows(static_cast<Eigen::Index>(r), k);
  }
  return out;
}

DefiningSet code_to_defining_set(const LinearCode& c, const FieldPtr& ctx) {
  if (c.alphabet().s != 1 || c.alphabet().p() != ctx->p()) {
    throw Error(ErrorKind::InvalidArgument, "code must be over the prime field of ctx");
  }
  if (c.k() > static_cast<Eigen::Index>(ctx->m())) {
    throw Error(ErrorKind::DimensionTooLarge, "need m >= k to realise the code as C_D");
  }
  const auto basis = power_basis(*ctx);
  DefiningSet d{ctx, 1, {}, "code", {}};
  for (Eigen::Index j = 0; j < c.n(); ++j) {
    Elem e = ctx->zero();
    for (Eigen::Index i = 0; i < c.k(); ++i) {
      e = ctx->add(e, ctx->mul(ctx->from_int(c.generator()(i, j)), basis[static_cast<std::size_t>(i)]));
    }
    d.elements.push_back(e);
  }
  return d;
}

HullKernel hull_first_kernel(const ParyFunction& f, bool include_zero) {
  const LinearCode c = first_generic(f, include_zero);
  const auto& ctx = *f.ctx;
  const auto xs = first_points(ctx, include_zero);
  const Eigen::Index m = ctx.m();
  Matrix phi = Matrix::Zero(c.k(), 2 * m);
  for (Eigen::Index r = 0; r < c.k(); ++r) {
    Elem s1 = ctx.zero(), s2 = ctx.zero();
    for (Eigen::Index i = 0; i < c.n(); ++i) {
      const Elem ci = ctx.from_int(c.generator()(r, i));
      s1 = ctx.add(s1, ctx.mul(ci, xs[static_cast<std::size_t>(i)]));
      s2 = ctx.add(s2, ctx.mul(ci, f(xs[static_cast<std::size_t>(i)])));
    }
    const auto a = ctx.coeffs(s1), b = ctx.coeffs(s2);
    for (Eigen::Index j = 0; j < m; ++j) {
      phi(r, j) = static_cast<std::int32_t>(a[static_cast<std::size_t>(j)]);
      phi(r, m + j) = static_cast<std::int32_t>(b[static_cast<std::size_t>(j)]);
    }
  }
  return kernel_of(c, phi, PrimeField{ctx.p()});
}

HullKernel hull_second_kernel(const DefiningSet& d) {
  const LinearCode c = second_generic(d);
  const auto& ctx = *d.ctx;
  const std::uint32_t s = d.base_degree;
  std::vector<Elem> sums;
  for (Eigen::Index r = 0; r < c.k(); ++r) {
    Elem acc = ctx.zero();
    for (Eigen::Index i = 0; i < c.n(); ++i) {
      acc = ctx.add(acc, ctx.mul(as_elem(c.generator()(r, i)), d.elements[static_cast<std::size_t>(i)]));
    }
    sums.push_back(acc);
  }
  if (s == 1) {
    Matrix phi(c.k(), static_cast<Eigen::Index>(ctx.m()));
    for (Eigen::Index r = 0; r < c.k(); ++r) {
      const auto a = ctx.coeffs(sums[static_cast<std::size_t>(r)]);
      for (std::uint32_t j = 0; j < ctx.m(); ++j) phi(r, j) = static_cast<std::int32_t>(a[j]);
    }
    return kernel_of(c, phi, PrimeField{ctx.p()});
  }
  const std::uint32_t rel = ctx.m() / s;
  const auto lambda = subfield_powers(ctx, ctx.m(), rel);
  Matrix phi(c.k(), static_cast<Eigen::Index>(rel));
  for (Eigen::Index r = 0; r < c.k(); ++r)
    for (std::uint32_t j = 0; j < rel; ++j)
      phi(r, j) = as_int(ctx.trace(ctx.mul(lambda[j], sums[static_cast<std::size_t>(r)]), s));
  return kernel_of(c, phi, ExtField{&ctx});
}

DefiningSet make_skew_set(const FieldPtr& ctx) {
  if (ctx->p() == 2) throw Error(ErrorKind::EvenCharacteristic, "x = -x in characteristic 2");
  DefiningSet d{ctx, 1, {}, "skew", {}};
  for (std::uint32_t i = 1; i < ctx->size(); ++i) {
    if (i < ctx->neg(Elem{i}).index) d.elements.push_back(Elem{i});
  }
  return d;
}

DefiningSet make_preimage_set(const ParyFunction& f, Elem b) {
  if (f.codomain_degree != 1) throw Error(ErrorKind::WrongCodomain, "preimage sets need f: F_q -> F_p");
  DefiningSet d{f.ctx, 1, {}, "preimage:b=" + std::to_string(b.index), {}};
  for (std::uint32_t i = 0; i < f.size(); ++i)
    if (f(Elem{i}) == b) d.elements.push_back(Elem{i});
  if (d.elements.empty()) throw Error(ErrorKind::EmptySet, "the preimage is empty");
  return d;
}

DefiningSet make_image_set(const ParyFunction& f) {
  require_codomain(f);
  std::vector<std::int64_t> first(f.ctx->size(), -1);
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    auto& slot = first[f(Elem{i}).index];
    if (slot < 0) slot = i;
  }
  DefiningSet d{f.ctx, 1, {}, "image", {}};
  for (std::uint32_t v = 1; v < f.ctx->size(); ++v) {
    if (first[v] < 0) continue;
    d.elements.push_back(Elem{v});
    d.preimages.push_back(Elem{static_cast<std::uint32_t>(first[v])});
  }
  if (d.elements.empty()) throw Error(ErrorKind::EmptySet, "the image is {0}");
  return d;
}

DefiningSet make_trace_zero_set(const FieldPtr& ctx) {
  if (ctx->m() % 2 != 0 || ctx->m() / 2 <= 1) throw Error(ErrorKind::BadDegree, "need m = 2s with s > 1");
  const std::uint32_t s = ctx->m() / 2;
  std::uint64_t ps = 1;
  for (std::uint32_t i = 0; i < s; ++i) ps *= ctx->p();
  DefiningSet d{ctx, 1, {}, "trace-zero", {}};
  for (std::uint32_t i = 1; i < ctx->size(); ++i) {
    const Elem n = ctx->pow(Elem{i}, ps + 1);
    if (ctx->subfield_trace(n, s, 1) == ctx->zero()) d.elements.push_back(Elem{i});
  }
  return d;
}

DefiningSet make_cyclotomic_set(const FieldPtr& ctx, std::uint32_t a, bool second_class) {
  const std::uint32_t p = ctx->p();
  if (a == 0 || ctx->m() % a != 0) throw Error(ErrorKind::BadParameters, "a must divide m");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < a; ++i) q *= p;
  const std::uint32_t b = ctx->m() / a;
  const std::uint64_t r = ctx->size();
  if (q % 3 != 2 || b % 2 != 0 || r <= 4) throw Error(ErrorKind::BadParameters, "need q = 2 mod 3, b even, r > 4");
  const std::uint64_t step = (r - 1) / (q - 1);
  std::vector<bool> seen(r, false);
  DefiningSet d{ctx, a, {}, std::string("cyclotomic:a=") + std::to_string(a) + (second_class ? ",class=2" : ",class=1"), {}};
  for (std::uint32_t i = 1; i < r; ++i) {
    if (seen[i]) continue;
    const std::uint32_t cls = ctx->log(Elem{i}) % 3;
    if (cls != 0 && !(second_class && cls == 1)) continue;
    d.elements.push_back(Elem{i});
    const Elem u = ctx->pow(ctx->primitive(), step);
    Elem cur = Elem{i};
    for (std::uint64_t t = 0; t < q - 1; ++t) {
      seen[cur.index] = true;
      cur = ctx->mul(cur, u);
    }
  }
  return d;
}

DefiningSet make_fixed_hull_set(const FieldPtr& ctx, const std::vector<Elem>& d, std::uint32_t l, Elem alpha,
                                Elem beta) {
  const std::uint32_t p = ctx->p();
  if (p % 4 != 1) throw Error(ErrorKind::MinusOneNotSquare, "-1 is not a square mod " + std::to_string(p));
  const Elem minus_one = ctx->neg(ctx->one());
  if (!ctx->in_prime_field(alpha) || ctx->mul(alpha, alpha) != minus_one) {
    throw Error(ErrorKind::BadAlpha, "alpha must satisfy alpha^2 = -1 in F_p");
  }
  if (!ctx->in_prime_field(beta) || beta == ctx->zero() || beta == ctx->one() || ctx->mul(beta, beta) == minus_one) {
    throw Error(ErrorKind::BadBeta, "beta must lie in F_p minus {0, 1} with beta^2 != -1");
  }
  require_independent(*ctx, d);
  if (l > d.size()) throw Error(ErrorKind::BadL, "l must not exceed k");
  DefiningSet out{ctx, 1, d, "fixed-hull:l=" + std::to_string(l), {}};
  for (std::size_t i = 0; i < d.size(); ++i) out.elements.push_back(ctx->mul(i < l ? alpha : beta, d[i]));
  return out;
}

DefiningSet make_lcd_set(const FieldPtr& ctx, std::uint32_t a, const std::vector<Elem>& d) {
  if (ctx->p() != 2) throw Error(ErrorKind::OddCharacteristic, "the LCD recipe needs characteristic 2");
  if (d.size() % 2 != 0) throw Error(ErrorKind::OddK, "k must be even");
  if (a == 0 || ctx->m() % a != 0) throw Error(ErrorKind::NotASubfield, "a must divide m");
  const auto lambda = subfield_powers(*ctx, a, a);
  std::vector<Elem> all;
  for (Elem e : d)
    for (Elem l : lambda) all.push_back(ctx->mul(l, e));
  if (prime_rank(*ctx, all) != a * d.size()) throw Error(ErrorKind::NotIndependent, "d_i must be independent over F_q");
  DefiningSet out{ctx, a, d, "lcd:a=" + std::to_string(a), {}};
  for (std::size_t i = 0; i + 1 < d.size(); i += 2) out.elements.push_back(ctx->add(d[i], d[i + 1]));
  return out;
}

DefiningSet make_mds_set(const FieldPtr& ctx, const std::vector<Elem>& d, MdsVariant variant,
                         const std::vector<Elem>& alphas) {
  if (alphas.size() != d.size()) throw Error(ErrorKind::InvalidArgument, "need one alpha per d_i");
  for (Elem a : alphas) {
    if (!ctx->in_prime_field(a)) throw Error(ErrorKind::InvalidArgument, "alpha_i must lie in F_p");
    if (a == ctx->zero()) throw Error(ErrorKind::AlphaZero, "alpha_i must be nonzero");
  }
  if (variant == MdsVariant::KPlus2) {
    if (ctx->p() - 1 < d.size()) throw Error(ErrorKind::NeedDistinctAlphas, "F_p^* has fewer than k elements");
    if (std::set<Elem>(alphas.begin(), alphas.end()).size() != alphas.size()) {
      throw Error(ErrorKind::NeedDistinctAlphas, "alpha_i must be pairwise distinct");
    }
  }
  require_independent(*ctx, d);
  DefiningSet out{ctx, 1, d, variant == MdsVariant::KPlus1 ? "mds:k+1" : "mds:k+2", {}};
  Elem comb = ctx->zero(), total = ctx->zero();
  for (std::size_t i = 0; i < d.size(); ++i) {
    comb = ctx->add(comb, ctx->mul(alphas[i], d[i]));
    total = ctx->add(total, d[i]);
  }
  out.elements.push_back(comb);
  if (variant == MdsVariant::KPlus2) out.elements.push_back(total);
  return out;
}

}  // namespace hc
