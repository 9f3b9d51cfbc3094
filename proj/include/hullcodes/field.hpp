#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hc {

/// Element of a finite field, identified by its canonical index.
///
/// The index of c_0 + c_1 w + ... + c_{m-1} w^{m-1} is sum c_j p^j, so the
/// canonical order is lexicographic in the coefficient vector with the
/// constant coefficient least significant, and 0 comes first. Prime-subfield
/// elements are exactly the indices below p.
struct Elem {
  std::uint32_t index = 0;

  friend auto operator<=>(Elem, Elem) = default;
};

/// Fields are refused above this many elements.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

bool is_prime(std::uint64_t n);

/// Builds F_{p^m}. Without a modulus the smallest monic irreducible (by the
/// canonical index of its lower coefficients) is chosen.
FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Parses `p=<int>,m=<int>[,poly=<c0,c1,...,1>]`.
FieldPtr parse_field_spec(std::string_view spec);
std::string field_spec(const FieldCtx& ctx);

/// F_{p^m} = F_p[w]/(modulus), immutable after construction.
class FieldCtx {
 public:
  FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t size() const { return q_; }
  /// Ascending coefficients, monic, length m + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The class of w, the root of the modulus.
  Elem generator() const { return m_ == 1 ? Elem{1} : Elem{p_}; }
  /// A fixed primitive element (generator of the multiplicative group).
  Elem primitive() const { return Elem{prim_}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  Elem element(std::uint32_t index) const { return Elem{index}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^k).
  Elem frobenius(Elem a, std::uint32_t k) const;
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  /// Absolute trace Tr_{p^m/p}(a) as an integer in [0, p).
  std::uint32_t abs_trace(Elem a) const { return trace_[a.index]; }
  /// Relative trace Tr_{p^m/p^s}(a); s must divide m.
  Elem trace(Elem a, std::uint32_t s) const;
  /// Tr_{p^t/p^s}(a) for a lying in the subfield F_{p^t}.
  Elem subfield_trace(Elem a, std::uint32_t t, std::uint32_t s) const;

  bool in_subfield(Elem a, std::uint32_t s) const;
  bool in_prime_field(Elem a) const { return a.index < p_; }
  /// Elements of F_{p^s} in canonical order.
  std::vector<Elem> subfield_elements(std::uint32_t s) const;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t prim_ = 1;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
};

/// Tr_{p^m/p^s}(x); throws NotASubfield unless s | m.
Elem trace(const FieldCtx& ctx, Elem x, std::uint32_t s);

/// All elements of the kernel of the absolute trace, in canonical order.
/// Each is cross-checked to have the shape a^p - a.
std::vector<Elem> trace_kernel(const FieldCtx& ctx);

/// Polynomial helpers over F_p on ascending coefficient vectors.
namespace poly {
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
}

}  // namespace hc
