#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hullcodes/field.hpp"
#include "hullcodes/matrix.hpp"

namespace hc {

/// Symbols of a code: the subfield F_{p^s} of ctx. Codes over F_p always use
/// a standalone prime field so their entries are plain residues.
struct Alphabet {
  FieldPtr ctx;
  std::uint32_t s = 1;

  std::uint32_t p() const { return ctx->p(); }
  std::uint64_t size() const;
  /// Letters in canonical order.
  std::vector<Elem> letters() const;
  /// An F_p-basis of the alphabet, as elements of ctx.
  std::vector<Elem> prime_basis() const;
};

Alphabet prime_alphabet(std::uint32_t p);
/// F_{p^s} inside ctx; s = 1 gives prime_alphabet(p).
Alphabet subfield_alphabet(const FieldPtr& ctx, std::uint32_t s);
bool operator==(const Alphabet& a, const Alphabet& b);

/// Runs fn with the arithmetic policy matching the alphabet.
template <class Fn>
decltype(auto) with_ops(const Alphabet& a, Fn&& fn) {
  if (a.ctx->m() == 1) return fn(PrimeField{a.ctx->p()});
  return fn(ExtField{a.ctx.get()});
}

/// Default enumeration guard: 2^22 codewords, or $HULLCODES_GUARD.
std::uint64_t default_guard();

/// Linear code with a canonical (RREF) generator matrix.
class LinearCode {
 public:
  LinearCode(Alphabet alphabet, Matrix generator, Eigen::Index n);

  const Alphabet& alphabet() const { return alphabet_; }
  Eigen::Index n() const { return n_; }
  Eigen::Index k() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  Alphabet alphabet_;
  Matrix generator_;
  Eigen::Index n_;
};

/// RREF of the given rows; dependent rows disappear.
LinearCode from_rows(const Alphabet& alphabet, const Matrix& rows);
LinearCode from_rows(const Alphabet& alphabet, const std::vector<std::vector<std::uint32_t>>& rows,
                     std::size_t n);
LinearCode zero_code(const Alphabet& alphabet, Eigen::Index n);
LinearCode full_space(const Alphabet& alphabet, Eigen::Index n);

LinearCode dual(const LinearCode& c);
/// C ∩ C^⊥ as the nullspace of the stacked generator and parity-check.
LinearCode hull(const LinearCode& c);
LinearCode sum(const LinearCode& a, const LinearCode& b);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
bool contains(const LinearCode& c, const RowVec& word);
bool is_subcode(const LinearCode& a, const LinearCode& b);

/// Visits every codeword once. Throws TooLarge when |C| exceeds the guard.
void for_each_codeword(const LinearCode& c, std::uint64_t guard, const std::function<void(const RowVec&)>& fn);
std::uint64_t codeword_count(const LinearCode& c);

using WeightDistribution = std::map<std::uint64_t, std::uint64_t>;
using CompleteWeightEnumerator = std::map<std::vector<std::uint64_t>, std::uint64_t>;

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t guard = default_guard());
/// Compositions are indexed by the alphabet's canonical letter order.
CompleteWeightEnumerator complete_weight_enumerator(const LinearCode& c, std::uint64_t guard = default_guard());
WeightDistribution marginal(const CompleteWeightEnumerator& cwe);

std::uint64_t hamming_weight(const RowVec& w);
std::uint64_t min_distance(const LinearCode& c, std::uint64_t guard = default_guard());
bool is_mds(const LinearCode& c, std::uint64_t guard = default_guard());
Eigen::Index hull_dim(const LinearCode& c);
bool is_lcd(const LinearCode& c);

/// V ∩ F_{p^s}^n for a code V over a larger subfield of the same context.
LinearCode restrict_to_subfield(const LinearCode& v, std::uint32_t s);
LinearCode restrict_to_prime_subfield(const LinearCode& v);

}  // namespace hc
