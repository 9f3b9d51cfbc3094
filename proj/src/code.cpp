#include "hullcodes/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "hullcodes/error.hpp"

namespace hc {

std::uint64_t Alphabet::size() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) q *= ctx->p();
  return q;
}

std::vector<Elem> Alphabet::letters() const {
  if (s == ctx->m()) {
    std::vector<Elem> out(ctx->size());
    for (std::uint32_t i = 0; i < ctx->size(); ++i) out[i] = Elem{i};
    return out;
  }
  return ctx->subfield_elements(s);
}

std::vector<Elem> Alphabet::prime_basis() const {
  // Powers of a primitive element of F_{p^s} are independent up to degree s.
  const std::uint64_t big = ctx->size() - 1;
  const std::uint64_t small = size() - 1;
  const Elem gamma = s == 1 ? ctx->one() : ctx->pow(ctx->primitive(), big / small);
  std::vector<Elem> out;
  Elem cur = ctx->one();
  for (std::uint32_t t = 0; t < s; ++t) {
    out.push_back(cur);
    cur = ctx->mul(cur, gamma);
  }
  return out;
}

Alphabet prime_alphabet(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, make_field(p, 1)).first;
  return Alphabet{it->second, 1};
}

Alphabet subfield_alphabet(const FieldPtr& ctx, std::uint32_t s) {
  if (s == 0 || ctx->m() % s != 0) throw Error(ErrorKind::NotASubfield, "alphabet degree must divide m");
  if (s == 1) return prime_alphabet(ctx->p());
  return Alphabet{ctx, s};
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.s != b.s || a.ctx->p() != b.ctx->p()) return false;
  if (a.s == 1) return true;
  return a.ctx == b.ctx || (a.ctx->m() == b.ctx->m() && a.ctx->modulus() == b.ctx->modulus());
}

std::uint64_t default_guard() {
  if (const char* env = std::getenv("HULLCODES_GUARD")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{1} << 22;
}

LinearCode::LinearCode(Alphabet alphabet, Matrix generator, Eigen::Index n)
    : alphabet_(std::move(alphabet)), generator_(std::move(generator)), n_(n) {}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.alphabet_ == b.alphabet_ && a.n_ == b.n_ && a.generator_.rows() == b.generator_.rows() &&
         a.generator_ == b.generator_;
}

LinearCode from_rows(const Alphabet& alphabet, const Matrix& rows) {
  const Eigen::Index n = rows.cols();
  if (n == 0) throw Error(ErrorKind::EmptyLength, "code length must be positive");
  if (rows.rows() == 0) return zero_code(alphabet, n);
  Matrix g = with_ops(alphabet, [&](auto ops) { return rref(rows, ops).rows; });
  return LinearCode(alphabet, std::move(g), n);
}

LinearCode from_rows(const Alphabet& alphabet, const std::vector<std::vector<std::uint32_t>>& rows, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyLength, "code length must be positive");
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  const auto letters = alphabet.letters();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::RaggedRows, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t v = rows[i][j];
      const bool ok = alphabet.s == alphabet.ctx->m()
                          ? v < alphabet.ctx->size()
                          : std::binary_search(letters.begin(), letters.end(), Elem{v});
      if (!ok) throw Error(ErrorKind::InvalidArgument, "entry outside the alphabet");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<std::int32_t>(v);
    }
  }
  return from_rows(alphabet, m);
}

LinearCode zero_code(const Alphabet& alphabet, Eigen::Index n) { return LinearCode(alphabet, Matrix(0, n), n); }

LinearCode full_space(const Alphabet& alphabet, Eigen::Index n) {
  return LinearCode(alphabet, Matrix::Identity(n, n), n);
}

LinearCode dual(const LinearCode& c) {
  Matrix h = with_ops(c.alphabet(), [&](auto ops) { return nullspace(c.generator(), c.n(), ops); });
  return LinearCode(c.alphabet(), std::move(h), c.n());
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
  const Matrix stacked = vstack(a.generator(), b.generator());
  if (stacked.rows() == 0) return zero_code(a.alphabet(), a.n());
  return from_rows(a.alphabet(), stacked);
}

LinearCode hull(const LinearCode& c) {
  const LinearCode d = dual(c);
  Matrix stacked = vstack(c.generator(), d.generator());
  if (stacked.rows() == 0) stacked = Matrix(0, c.n());
  Matrix h = with_ops(c.alphabet(), [&](auto ops) { return nullspace(stacked, c.n(), ops); });
  return LinearCode(c.alphabet(), std::move(h), c.n());
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
  Matrix m = with_ops(a.alphabet(), [&](auto ops) { return intersect_rowspaces(a.generator(), b.generator(), ops); });
  return LinearCode(a.alphabet(), std::move(m), a.n());
}

bool contains(const LinearCode& c, const RowVec& word) {
  return with_ops(c.alphabet(), [&](auto ops) {
    const Matrix stacked = vstack(c.generator(), Matrix(word));
    return rank(stacked, ops) == c.k();
  });
}

bool is_subcode(const LinearCode& a, const LinearCode& b) {
  for (Eigen::Index i = 0; i < a.k(); ++i) {
    if (!contains(b, a.generator().row(i))) return false;
  }
  return true;
}

std::uint64_t codeword_count(const LinearCode& c) {
  std::uint64_t total = 1;
  const std::uint64_t q = c.alphabet().size();
  for (Eigen::Index i = 0; i < c.k(); ++i) {
    if (total > (std::uint64_t{1} << 62) / q) return std::uint64_t{1} << 62;
    total *= q;
  }
  return total;
}

void for_each_codeword(const LinearCode& c, std::uint64_t guard, const std::function<void(const RowVec&)>& fn) {
  const std::uint64_t count = codeword_count(c);
  if (count > guard) {
    throw Error(ErrorKind::TooLarge, std::to_string(count) + " codewords exceed the guard of " + std::to_string(guard));
  }
  with_ops(c.alphabet(), [&](auto ops) {
    // F_p-generators: each basis letter times each generator row.
    const auto basis = c.alphabet().prime_basis();
    std::vector<RowVec> gens;
    for (Eigen::Index i = 0; i < c.k(); ++i) {
      for (const Elem b : basis) {
        RowVec v(c.n());
        for (Eigen::Index j = 0; j < c.n(); ++j) v(j) = ops.mul(static_cast<std::int32_t>(b.index), c.generator()(i, j));
        gens.push_back(std::move(v));
      }
    }
    const std::uint32_t p = c.alphabet().p();
    std::vector<std::uint32_t> digits(gens.size(), 0);
    RowVec word = RowVec::Zero(c.n());
    fn(word);
    for (std::uint64_t step = 1; step < count; ++step) {
      // Odometer: bump the lowest digit, carrying; p additions of a vector vanish.
      for (std::size_t d = 0; d < gens.size(); ++d) {
        for (Eigen::Index j = 0; j < c.n(); ++j) word(j) = ops.add(word(j), gens[d](j));
        if (++digits[d] < p) break;
        digits[d] = 0;
      }
      fn(word);
    }
    return 0;
  });
}

std::uint64_t hamming_weight(const RowVec& w) {
  std::uint64_t n = 0;
  for (Eigen::Index j = 0; j < w.size(); ++j) n += w(j) != 0;
  return n;
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t guard) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(c.n()) + 1, 0);
  for_each_codeword(c, guard, [&](const RowVec& w) { ++counts[hamming_weight(w)]; });
  WeightDistribution out;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if (counts[w]) out[w] = counts[w];
  }
  return out;
}

CompleteWeightEnumerator complete_weight_enumerator(const LinearCode& c, std::uint64_t guard) {
  const auto letters = c.alphabet().letters();
  std::map<std::int32_t, std::size_t> ordinal;
  for (std::size_t i = 0; i < letters.size(); ++i) ordinal[static_cast<std::int32_t>(letters[i].index)] = i;
  CompleteWeightEnumerator out;
  std::vector<std::uint64_t> comp(letters.size());
  for_each_codeword(c, guard, [&](const RowVec& w) {
    std::fill(comp.begin(), comp.end(), 0);
    for (Eigen::Index j = 0; j < w.size(); ++j) ++comp[ordinal.at(w(j))];
    ++out[comp];
  });
  return out;
}

WeightDistribution marginal(const CompleteWeightEnumerator& cwe) {
  WeightDistribution out;
  for (const auto& [comp, count] : cwe) {
    std::uint64_t n = 0;
    for (std::size_t i = 1; i < comp.size(); ++i) n += comp[i];
    out[n] += count;
  }
  return out;
}

std::uint64_t min_distance(const LinearCode& c, std::uint64_t guard) {
  if (c.k() == 0) throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code is undefined");
  const auto wd = weight_distribution(c, guard);
  for (const auto& [w, count] : wd) {
    if (w > 0) return w;
  }
  return 0;
}

bool is_mds(const LinearCode& c, std::uint64_t guard) {
  return static_cast<Eigen::Index>(min_distance(c, guard)) == c.n() - c.k() + 1;
}

Eigen::Index hull_dim(const LinearCode& c) { return hull(c).k(); }

bool is_lcd(const LinearCode& c) { return hull_dim(c) == 0; }

LinearCode restrict_to_subfield(const LinearCode& v, std::uint32_t s) {
  const Alphabet& from = v.alphabet();
  if (s == 0 || from.s % s != 0) throw Error(ErrorKind::NotASubfield, "target degree must divide the alphabet degree");
  const Alphabet to = subfield_alphabet(from.ctx, s);
  if (s == from.s) return v;
  const LinearCode h = dual(v);
  const auto& ctx = *from.ctx;
  const Eigen::Index n = v.n();

  if (s == 1) {
    // Each constraint sum h_i x_i = 0 splits into m coordinate equations.
    Matrix eqs(h.k() * ctx.m(), n);
    for (Eigen::Index r = 0; r < h.k(); ++r) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto c = ctx.coeffs(Elem{static_cast<std::uint32_t>(h.generator()(r, i))});
        for (std::uint32_t j = 0; j < ctx.m(); ++j) eqs(r * ctx.m() + j, i) = static_cast<std::int32_t>(c[j]);
      }
    }
    Matrix sol = nullspace(eqs, n, PrimeField{ctx.p()});
    return LinearCode(to, std::move(sol), n);
  }

  // Trace form: sum h_i x_i = 0 iff Tr_{t/s}(lambda_j sum h_i x_i) = 0 for a basis lambda_j.
  const std::uint32_t t = from.s;
  const std::uint32_t rel = t / s;
  const Elem gamma = ctx.pow(ctx.primitive(), (ctx.size() - 1) / (from.size() - 1));
  std::vector<Elem> lambda;
  Elem cur = ctx.one();
  for (std::uint32_t j = 0; j < rel; ++j) {
    lambda.push_back(cur);
    cur = ctx.mul(cur, gamma);
  }
  Matrix eqs(h.k() * rel, n);
  for (Eigen::Index r = 0; r < h.k(); ++r) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Elem hi{static_cast<std::uint32_t>(h.generator()(r, i))};
      for (std::uint32_t j = 0; j < rel; ++j) {
        eqs(r * rel + j, i) = static_cast<std::int32_t>(ctx.subfield_trace(ctx.mul(lambda[j], hi), t, s).index);
      }
    }
  }
  Matrix sol = nullspace(eqs, n, ExtField{&ctx});
  return LinearCode(to, std::move(sol), n);
}

LinearCode restrict_to_prime_subfield(const LinearCode& v) { return restrict_to_subfield(v, 1); }

}  // namespace hc
