#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullcodes/cyclotomic.hpp"
#include "hullcodes/field.hpp"

namespace hc {

/// Truth table of a map F_{p^m} -> F_{p^s}, indexed by canonical element order.
struct ParyFunction {
  FieldPtr ctx;
  std::uint32_t codomain_degree = 1;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x.index]; }
  std::size_t size() const { return table.size(); }
};

ParyFunction tabulate(FieldPtr ctx, std::uint32_t codomain_degree, const std::function<Elem(Elem)>& fn);

/// Tr_{p^m/p} composed with f.
ParyFunction trace_of(const ParyFunction& f);

/// Mini-language:
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' int)?
///   atom   := int | 'x' | 'w' | 'g' | '(' expr ')' | 'tr(' expr ')'
///           | 'quadratic(' expr ',' int ')' | 'ternary_half(' expr ',' int ')'
///           | 'coord(' int ')'
/// `w` is the root of the modulus, `g` the fixed primitive element and
/// `coord(i)` the i-th power-basis coordinate of x. An expression built only
/// from prime-valued pieces (tr, the named trace families, coord, integers)
/// has codomain degree 1, anything else degree m.
ParyFunction parse_function(FieldPtr ctx, std::string_view spec);

struct WalshSpectrum {
  FieldPtr ctx;
  std::vector<CycInt> coeffs;  ///< indexed by canonical index of b

  const CycInt& operator[](Elem b) const { return coeffs[b.index]; }
};

/// chi_f(b) = sum_x zeta^{f(x) - Tr(b x)} at a single point.
CycInt walsh_coefficient(const ParyFunction& f, Elem b);

/// Full spectrum; Parseval is checked before returning.
WalshSpectrum walsh_transform(const ParyFunction& f);

enum class BentKind { NotBent, RegularBent, WeaklyRegularBent, NonWeaklyRegularBent };
enum class Unit { PlusOne, MinusOne, PlusI, MinusI };

std::string_view to_string(BentKind k);
std::string_view to_string(Unit u);

struct BentClass {
  BentKind kind = BentKind::NotBent;
  std::optional<int> epsilon;
  std::optional<Unit> unit;
  std::optional<ParyFunction> dual;
  /// u == +1.
  bool regular = false;
};

/// chi(b) = eps * N * zeta^{f*(b)} with N = G^m (p odd) or 2^{m/2} (p = 2).
BentClass classify_bent(const WalshSpectrum& spectrum);

/// The constant N above as a cyclotomic integer.
BigCyc bent_normaliser(const FieldCtx& ctx);

struct DualRelationReport {
  std::vector<bool> points;
  bool all = false;
};

/// Checks chi_{f*}(x) * N = eps * p^m * zeta^{f(-x)} at every x.
DualRelationReport verify_dual_relation(const ParyFunction& f, const BentClass& cls);

/// max over a != 0, b of #{x : F(x + a) - F(x) = b}.
std::uint64_t differential_uniformity(const ParyFunction& f);

}  // namespace hc
