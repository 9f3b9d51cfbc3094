#include "hullcodes/cyclotomic.hpp"

namespace hc {

CycInt cyclo_canonicalize(std::uint32_t p, std::span<const std::int64_t> raw) {
  return CycInt::from_raw(p, raw);
}

int legendre(std::int64_t a, std::uint32_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  // Euler's criterion.
  std::uint64_t base = static_cast<std::uint64_t>(r), e = (p - 1) / 2, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

BigCyc gauss_sum_power(std::uint32_t p, std::uint32_t m) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "no quadratic Gauss sum for p = 2");
  BigCyc g(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    g += BigCyc::zeta_pow(p, static_cast<std::int64_t>(x) * x);
  }
  return g.pow(m);
}

}  // namespace hc
