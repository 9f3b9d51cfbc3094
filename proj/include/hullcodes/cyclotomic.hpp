#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hullcodes/error.hpp"

namespace hc {

/// Exact element of Z[zeta_p], stored as sum c_i zeta^i over i in [0, p)
/// with the canonical normalisation c_{p-1} = 0.
///
/// The relation 1 + zeta + ... + zeta^{p-1} = 0 makes {1, ..., zeta^{p-2}} a
/// Z-basis, so canonical coefficient vectors are unique and equality is
/// coefficient-wise. The scalar type is a template parameter: spectra fit in
/// std::int64_t, long products of Walsh values need arbitrary precision.
template <class Int>
class Cyclotomic {
 public:
  Cyclotomic() = default;

  /// Zero of Z[zeta_p].
  explicit Cyclotomic(std::uint32_t p) : p_(p), c_(p, Int(0)) {}

  static Cyclotomic from_int(std::uint32_t p, const Int& v) {
    Cyclotomic out(p);
    out.c_[0] = v;
    out.canonicalize();
    return out;
  }

  /// zeta^e (e reduced mod p).
  static Cyclotomic zeta_pow(std::uint32_t p, std::int64_t e) {
    Cyclotomic out(p);
    out.c_[static_cast<std::size_t>(((e % p) + p) % p)] = Int(1);
    out.canonicalize();
    return out;
  }

  /// Canonicalises an arbitrary-length exponent vector: entry i multiplies
  /// zeta^(i mod p).
  static Cyclotomic from_raw(std::uint32_t p, std::span<const Int> raw) {
    Cyclotomic out(p);
    for (std::size_t i = 0; i < raw.size(); ++i) out.c_[i % p] += raw[i];
    out.canonicalize();
    return out;
  }

  std::uint32_t p() const { return p_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
  }
  /// True when the value is a rational integer.
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }
  /// Rational value; only meaningful when is_rational().
  const Int& rational() const { return c_[0]; }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const { return galois(p_ - 1); }

  /// The automorphism zeta -> zeta^k for k coprime to p.
  Cyclotomic galois(std::uint32_t k) const {
    Cyclotomic out(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out.c_[(i * k) % p_] += c_[i];
    }
    out.canonicalize();
    return out;
  }

  /// Multiplication by zeta^e.
  Cyclotomic rotate(std::int64_t e) const {
    Cyclotomic out(p_);
    const std::int64_t shift = ((e % p_) + p_) % p_;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[(i + shift) % p_] = c_[i];
    out.canonicalize();
    return out;
  }

  Cyclotomic pow(std::uint64_t e) const {
    Cyclotomic result = from_int(p_, Int(1));
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    std::vector<Int> prod(p_, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        prod[(i + j) % p_] += c_[i] * o.c_[j];
      }
    }
    c_ = std::move(prod);
    canonicalize();
    return *this;
  }
  Cyclotomic& operator*=(const Int& k) {
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Int& k) { return a *= k; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// a * conj(a); a rational integer for every sum of roots of unity times
  /// its conjugate only when the value is a Walsh-type sum, so callers check.
  Cyclotomic abs2() const { return *this * conj(); }

  /// Exact division by a rational integer; returns false when not divisible.
  bool divide_exact(const Int& d) {
    for (const auto& v : c_) {
      if (v % d != 0) return false;
    }
    for (auto& v : c_) v /= d;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += boost::lexical_cast<std::string>(c_[i]);
    }
    return s + "]";
  }

 private:
  void canonicalize() {
    const Int top = c_[p_ - 1];
    if (top == 0) return;
    for (std::size_t i = 0; i + 1 < p_; ++i) c_[i] -= top;
    c_[p_ - 1] = 0;
  }

  std::uint32_t p_ = 0;
  std::vector<Int> c_;
};

using BigInt = boost::multiprecision::cpp_int;
using CycInt = Cyclotomic<std::int64_t>;
using BigCyc = Cyclotomic<BigInt>;

template <class To, class From>
Cyclotomic<To> cyclotomic_cast(const Cyclotomic<From>& a) {
  std::vector<To> raw(a.coeffs().begin(), a.coeffs().end());
  return Cyclotomic<To>::from_raw(a.p(), raw);
}

/// Canonical form of a raw exponent vector of length >= p.
CycInt cyclo_canonicalize(std::uint32_t p, std::span<const std::int64_t> raw);

/// G^m where G = sum_{x in F_p} zeta^{x^2} is the quadratic Gauss sum, the
/// representative of sqrt(p*) with G^2 = (-1)^{(p-1)/2} p.
BigCyc gauss_sum_power(std::uint32_t p, std::uint32_t m);

/// Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}.
int legendre(std::int64_t a, std::uint32_t p);

}  // namespace hc
