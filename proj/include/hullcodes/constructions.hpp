#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hullcodes/code.hpp"
#include "hullcodes/field.hpp"
#include "hullcodes/function.hpp"

namespace hc {

/// Ordered defining set (d_1, ..., d_n) in ctx; codewords take values in
/// F_{p^s}, s = base_degree, through Tr_{p^m/p^s}.
struct DefiningSet {
  FieldPtr ctx;
  std::uint32_t base_degree = 1;
  std::vector<Elem> elements;
  std::string provenance;
  /// For image sets: the smallest x_i with f(x_i) = d_i.
  std::vector<Elem> preimages;

  std::size_t size() const { return elements.size(); }
};

/// C(f) = {(Tr(a f(x) + b x))_x}, over F_q or F_q^* in canonical order.
LinearCode first_generic(const ParyFunction& f, bool include_zero = true);
/// The codeword c_{a,b} of C(f).
RowVec first_codeword(const ParyFunction& f, Elem a, Elem b, bool include_zero = true);
/// Evaluation points x_1, ..., x_n of C(f).
std::vector<Elem> first_points(const FieldCtx& ctx, bool include_zero = true);

/// C_D = {(Tr_{m/s}(x d_i))_i : x in F_{p^m}}.
LinearCode second_generic(const DefiningSet& d);
RowVec second_codeword(const DefiningSet& d, Elem x);

/// L_1^perp ∩ L_2^perp ∩ F_p^n with L_1, L_2 spanned over F_q by (x_i), (f(x_i)).
LinearCode dual_first_closed_form(const ParyFunction& f, bool include_zero = true);
/// Solutions over F_{p^s} of sum c_i d_i^{p^j} = 0. Needs s | j.
LinearCode dual_second_closed_form(const DefiningSet& d, std::uint32_t j = 0);

/// Dimension of the F_{p^s}-span of D.
std::uint32_t dimension_via_span(const DefiningSet& d);
/// F_p-rank of a list of field elements.
std::uint32_t prime_rank(const FieldCtx& ctx, const std::vector<Elem>& elems);

struct StandardForm {
  Matrix generator;                ///< (I_k | P) in the reordered coordinates
  std::vector<std::size_t> order;  ///< order[j] is the original index of column j
};
/// Coordinates of D over its first k independent elements, which are moved
/// to the front. Base degree 1 only.
StandardForm standard_form_generator(const DefiningSet& d);

/// D with C_D = C, using the basis w^0, ..., w^{k-1} of ctx.
DefiningSet code_to_defining_set(const LinearCode& c, const FieldPtr& ctx);

struct HullKernel {
  LinearCode hull;
  Eigen::Index rank_phi = 0;
};
/// ker of c_{a,b} -> (sum c_i x_i, sum c_i f(x_i)).
HullKernel hull_first_kernel(const ParyFunction& f, bool include_zero = true);
/// ker of c_x -> sum_i c_i d_i.
HullKernel hull_second_kernel(const DefiningSet& d);

/// One of each pair {x, -x}: the one with the smaller index.
DefiningSet make_skew_set(const FieldPtr& ctx);
/// f^{-1}(b) for f with codomain F_p.
DefiningSet make_preimage_set(const ParyFunction& f, Elem b);
/// f(F_q) \ {0}, canonical order.
DefiningSet make_image_set(const ParyFunction& f);
/// {z != 0 : Tr_{p^s/p}(z^{p^s+1}) = 0}, m = 2s, s > 1.
DefiningSet make_trace_zero_set(const FieldPtr& ctx);
/// Coset representatives of F_q^* in the cubes of F_r^*, r = q^b, q = p^a.
/// The second class adds the representatives of a non-cube coset.
DefiningSet make_cyclotomic_set(const FieldPtr& ctx, std::uint32_t a, bool second_class = false);
/// (d_1..d_k, alpha d_1..alpha d_l, beta d_{l+1}..beta d_k).
DefiningSet make_fixed_hull_set(const FieldPtr& ctx, const std::vector<Elem>& d, std::uint32_t l, Elem alpha,
                                Elem beta);
/// (d_1..d_k, d_1+d_2, ..., d_{k-1}+d_k) over F_q, q = 2^a.
DefiningSet make_lcd_set(const FieldPtr& ctx, std::uint32_t a, const std::vector<Elem>& d);

enum class MdsVariant { KPlus1, KPlus2 };
/// d_1..d_k, sum alpha_i d_i and, for KPlus2, sum d_i.
DefiningSet make_mds_set(const FieldPtr& ctx, const std::vector<Elem>& d, MdsVariant variant,
                         const std::vector<Elem>& alphas);

}  // namespace hc
