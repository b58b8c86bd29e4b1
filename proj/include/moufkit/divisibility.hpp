#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loop.hpp"

namespace moufkit {

/// Orders of all elements; throws NotPowerAssociative if any power is undefined.
inline std::vector<std::size_t> element_orders(const FiniteLoop& q) {
  std::vector<std::size_t> ord(q.order());
  for (std::size_t a = 0; a < q.order(); ++a) ord[a] = element_order(q, static_cast<element>(a));
  return ord;
}

/// h_d : x -> x^d as an image array.
inline std::vector<element> power_map(const FiniteLoop& q, std::size_t d) {
  std::vector<element> img(q.order());
  for (std::size_t a = 0; a < q.order(); ++a) {
    auto cp = cyclic_powers(q, static_cast<element>(a));
    img[a] = cp.powers[d % cp.order()];
  }
  return img;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

/// Every flag is computed on its own so that the equivalences between them
/// can be tested rather than assumed.
struct DivisibilityReport {
  std::size_t d = 2;
  bool surjective = false;
  bool injective = false;
  bool no_nonidentity_order_dividing_d = false;
  bool no_prime_order_dividing_d = false;
  std::optional<element> witness;  // first element of prime order dividing d
  bool coprime = false;            // gcd(|Q|, d) == 1
  bool uniquely_divisible() const noexcept { return surjective && injective; }
};

inline DivisibilityReport divisibility(const FiniteLoop& q, std::size_t d) {
  if (d < 2) throw std::invalid_argument("divisibility requires d > 1");
  const std::size_t n = q.order();
  auto ord = element_orders(q);
  auto img = power_map(q, d);

  DivisibilityReport r;
  r.d = d;
  std::vector<bool> hit(n, false);
  std::size_t distinct = 0;
  for (element v : img)
    if (!hit[v]) {
      hit[v] = true;
      ++distinct;
    }
  r.surjective = distinct == n;

  std::vector<element> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  r.no_nonidentity_order_dividing_d = true;
  r.no_prime_order_dividing_d = true;
  for (std::size_t a = 1; a < n; ++a) {
    if (d % ord[a] == 0) r.no_nonidentity_order_dividing_d = false;
    if (is_prime(ord[a]) && d % ord[a] == 0) {
      r.no_prime_order_dividing_d = false;
      if (!r.witness) r.witness = static_cast<element>(a);
    }
  }
  r.coprime = std::gcd(n, d) == 1;
  return r;
}

inline bool is_d_divisible(const FiniteLoop& q, std::size_t d) { return divisibility(q, d).surjective; }

enum class CauchyResult { holds, fails_with_no_witness, not_applicable };

constexpr const char* to_string(CauchyResult c) noexcept {
  switch (c) {
    case CauchyResult::holds: return "holds";
    case CauchyResult::fails_with_no_witness: return "fails-with-no-witness";
    case CauchyResult::not_applicable: return "not-applicable";
  }
  return "";
}

inline CauchyResult cauchy(const FiniteLoop& q, std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("cauchy requires a prime");
  if (q.order() % p != 0) return CauchyResult::not_applicable;
  for (std::size_t a = 0; a < q.order(); ++a)
    if (element_order(q, static_cast<element>(a)) == p) return CauchyResult::holds;
  return CauchyResult::fails_with_no_witness;
}

/// Every element order divides |Q|.
inline bool elementwise_lagrange(const FiniteLoop& q) {
  for (std::size_t o : element_orders(q))
    if (q.order() % o != 0) return false;
  return true;
}

}  // namespace moufkit
