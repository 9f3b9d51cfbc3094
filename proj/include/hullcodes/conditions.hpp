#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hullcodes/code.hpp"
#include "hullcodes/constructions.hpp"
#include "hullcodes/cyclotomic.hpp"
#include "hullcodes/function.hpp"

namespace hc {

/// wt of Tr(a Psi(x) - b x) over all x as p^m - (1/p) sum_{w in F_p} chi_{psi_{wa}}(wb).
std::uint64_t weight_via_walsh_sum(const ParyFunction& psi, Elem a, Elem b);

/// wt(c_x) = (p^s - 1) n / p^s - (1/p^s) sum_{y in F_{p^s}^*} chi_1(y x D).
std::uint64_t weight_via_character_sum(const DefiningSet& d, Elem x);

/// Closed-form weight of Tr(alpha Psi - beta x) when psi_1 = Tr(Psi) is
/// (weakly regular) bent with dual `dual` and sign `epsilon` (normalised by G^m).
std::uint64_t theorem1_weight(const ParyFunction& dual, int epsilon, Elem alpha, Elem beta);
std::uint64_t theorem1_weight(const BentClass& cls, Elem alpha, Elem beta);

/// {(2 n_f + f^(w)) / 4 : w != 0} plus {0}, as weight -> multiplicity.
WeightDistribution ding_weight_multiset(const ParyFunction& f);

enum class Variant {
  ShiftWrbScalar,   ///< g = Tr(f - x), prod chi_{g*}(c_i x_i)
  ShiftWrbGeneric,  ///< g = Tr(f - x), prod chi_{g*}(x_i)^{c_i}
  TraceWrbScalar,   ///< g = Tr(f)
  TraceWrbGeneric,
  GenericTrace,     ///< g_i(x_i) = Tr(f(x_i))
  GenericShift,     ///< g_i(x_i) = Tr(f(x_i) + x_i)
  GenericDouble,    ///< g_i(x_i) = Tr(2 x_i)
  ImageWrbScalar,   ///< C_{D(f)}, g = Tr(f)
  ImageWrbGeneric,
  ImageGeneric,     ///< C_{D(f)}, g_i(x_i) = Tr(f(x_i) + x_i)
};

std::string_view to_string(Variant v);
const std::vector<Variant>& first_variants();
const std::vector<Variant>& second_variants();

struct MembershipVerdict {
  Variant variant;
  bool holds = false;
  BigCyc lhs;
  BigCyc rhs;
  /// lhs is fixed by zeta -> zeta^{-1}.
  bool imaginary_zero = false;
};

/// A weighted additive character c -> prod factor_i^{c_i} with
/// factor_i = zeta^{t_i}.
struct CodeCharacter {
  Variant variant;
  std::vector<CycInt> factors;
  std::vector<std::uint32_t> exponents;

  CycInt evaluate(const RowVec& c) const;
  /// {c : sum t_i c_i = 0} over F_p.
  LinearCode kernel_hyperplane() const;
  std::uint32_t p() const;
};

/// Shared data for the necessary conditions of one construction instance.
class ConditionContext {
 public:
  /// First construction C(f) on F_q (or F_q^*).
  static ConditionContext first(const ParyFunction& f, bool include_zero = true);
  /// Second construction on D(f), with x_i the smallest preimages.
  static ConditionContext image(const ParyFunction& f);
  /// Second construction on an arbitrary base-1 defining set; only the
  /// generic variant applies.
  static ConditionContext defining_set(const DefiningSet& d);

  bool is_first() const { return first_; }
  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<Elem>& points() const { return points_; }
  const std::vector<Variant>& variants() const;
  /// Whether the hypothesis of the variant holds on this instance.
  bool applicable(Variant v) const;
  const LinearCode& code() const { return code_; }
  const std::optional<ParyFunction>& function() const { return f_; }

  /// Throws HypothesisFailed when the variant does not apply.
  MembershipVerdict dual_membership(Variant v, const RowVec& c) const;
  CodeCharacter character(Variant v) const;

 private:
  struct Wrb {
    std::optional<BentClass> cls;
    std::vector<BigCyc> dual_spectrum;
    std::optional<BigCyc> scale;
    bool valid = false;
  };

  ConditionContext() = default;
  void prepare_wrb(Wrb& w, const ParyFunction& g);
  const Wrb& wrb_for(Variant v) const;
  std::vector<Elem> generic_values(Variant v) const;
  CodeCharacter build_character(Variant v) const;
  void finish();

  bool first_ = true;
  FieldPtr ctx_;
  std::optional<ParyFunction> f_;
  std::vector<Elem> points_;
  std::vector<Elem> values_;
  bool scalar_ok_ = false;
  Wrb shift_;
  Wrb trace_;
  std::map<Variant, CodeCharacter> chars_;
  LinearCode code_{prime_alphabet(2), Matrix(0, 1), 1};
};

MembershipVerdict nc_dual_membership(const ConditionContext& cc, const RowVec& c, Variant v);
/// Hull conditions for c_{alpha,beta} of C(f): exponents Tr(alpha f(x_i) + beta x_i).
MembershipVerdict hull_membership_first(const ConditionContext& cc, Variant v, Elem alpha, Elem beta);
/// Hull conditions for c_x of C_D: exponents Tr(x d_i).
MembershipVerdict hull_membership_second(const ConditionContext& cc, const DefiningSet& d, Variant v, Elem x);

/// wt(c) = log2(alpha^2) / m with alpha = prod chi_{g*}(x_i)^{c_i}; p = 2.
/// Throws NotInDual when alpha^2 is not a power of 2^m.
std::uint64_t weight_from_walsh_even(const ParyFunction& g, const std::vector<Elem>& points, const RowVec& c);
/// alpha > 0.
bool walsh_product_positive(const ParyFunction& g, const std::vector<Elem>& points, const RowVec& c);

struct ApnReport {
  std::uint32_t dimension = 0;
  std::uint64_t d_perp = 0;
  bool is_apn = false;
  std::uint64_t differential_uniformity = 0;
  std::set<std::uint64_t> characteristic_set;
  bool is_ab = false;
  /// dim C*(F) < 2m, so the distance bounds do not apply.
  bool degenerate = false;
  bool bound_holds = false;
};
ApnReport apn_ab_dual_diagnostics(const ParyFunction& F, std::uint64_t guard = default_guard());

struct PnReport {
  std::set<std::uint64_t> weights;
  std::set<std::uint64_t> extended_weights;
  /// Every nonzero weight of C*(F) is in the band.
  bool all_in_band = false;
  /// Same for the extension by constants (punctured at 0).
  bool extended_in_band = false;
  /// Band endpoints (p-1)/p (p^m -+ p^{m/2}); exact only when m is even.
  double lower = 0;
  double upper = 0;
};
PnReport pn_bounds_check(const ParyFunction& F, std::uint64_t guard = default_guard());
/// (p w - (p-1) p^m)^2 <= (p-1)^2 p^m.
bool in_pn_band(std::uint64_t w, std::uint32_t p, std::uint32_t m);

}  // namespace hc
