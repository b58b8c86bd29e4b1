#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loop.hpp"
#include "parallel.hpp"
#include "subloops.hpp"

namespace moufkit {

enum class IdentityScheme {
  moufang_1,  // xy.zx = (x.yz)x
  moufang_2,  // xy.zx = x(yz.x)
  moufang_3,  // x(y.zy) = (xy.z)y
  moufang_4,  // x(y.xz) = (xy.x)z
  extra,      // x(y.zx) = (xy.z)x
  flexible,   // x(yx) = (xy)x
  left_inverse,
  right_inverse,
  associative,
  commutative,
  right_power_alternative,  // (a b^i) b^j = a b^(i+j)
};

inline constexpr std::array<IdentityScheme, 11> all_identity_schemes{
    IdentityScheme::moufang_1,     IdentityScheme::moufang_2,    IdentityScheme::moufang_3,
    IdentityScheme::moufang_4,     IdentityScheme::extra,        IdentityScheme::flexible,
    IdentityScheme::left_inverse,  IdentityScheme::right_inverse, IdentityScheme::associative,
    IdentityScheme::commutative,   IdentityScheme::right_power_alternative};

constexpr std::string_view to_string(IdentityScheme s) noexcept {
  switch (s) {
    case IdentityScheme::moufang_1: return "moufang-1";
    case IdentityScheme::moufang_2: return "moufang-2";
    case IdentityScheme::moufang_3: return "moufang-3";
    case IdentityScheme::moufang_4: return "moufang-4";
    case IdentityScheme::extra: return "extra";
    case IdentityScheme::flexible: return "flexible";
    case IdentityScheme::left_inverse: return "left-inverse";
    case IdentityScheme::right_inverse: return "right-inverse";
    case IdentityScheme::associative: return "associative";
    case IdentityScheme::commutative: return "commutative";
    case IdentityScheme::right_power_alternative: return "right-power-alternative";
  }
  return "";
}

inline std::optional<IdentityScheme> parse_identity_scheme(std::string_view name) {
  for (auto s : all_identity_schemes)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Outcome of an exhaustive identity scan. `witness` is the
/// lexicographically first violating tuple (empty when the identity holds).
/// For right-power-alternative the tuple is (a, b, i, j) with exponents
/// taken in [0, |b|).
struct IdentityCheck {
  bool holds = true;
  std::vector<std::int64_t> witness;
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

template <class Pred>
IdentityCheck scan2(const FiniteLoop& q, Pred ok) {
  const std::size_t n = q.order();
  auto hit = first_hit(n, [&](std::size_t x) -> std::optional<std::vector<std::int64_t>> {
    for (std::size_t y = 0; y < n; ++y)
      if (!ok(static_cast<element>(x), static_cast<element>(y)))
        return std::vector<std::int64_t>{std::int64_t(x), std::int64_t(y)};
    return std::nullopt;
  });
  if (!hit) return {};
  return {false, std::move(*hit)};
}

template <class Pred>
IdentityCheck scan3(const FiniteLoop& q, Pred ok) {
  const std::size_t n = q.order();
  auto hit = first_hit(n, [&](std::size_t x) -> std::optional<std::vector<std::int64_t>> {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!ok(static_cast<element>(x), static_cast<element>(y), static_cast<element>(z)))
          return std::vector<std::int64_t>{std::int64_t(x), std::int64_t(y), std::int64_t(z)};
    return std::nullopt;
  });
  if (!hit) return {};
  return {false, std::move(*hit)};
}

}  // namespace detail

inline IdentityCheck satisfies_identity(const FiniteLoop& q, IdentityScheme scheme) {
  const FiniteLoop& l = q;
  auto m = [&l](element a, element b) { return l.mul(a, b); };
  switch (scheme) {
    case IdentityScheme::moufang_1:
      return detail::scan3(q, [&](element x, element y, element z) {
        return m(m(x, y), m(z, x)) == m(m(x, m(y, z)), x);
      });
    case IdentityScheme::moufang_2:
      return detail::scan3(q, [&](element x, element y, element z) {
        return m(m(x, y), m(z, x)) == m(x, m(m(y, z), x));
      });
    case IdentityScheme::moufang_3:
      return detail::scan3(q, [&](element x, element y, element z) {
        return m(x, m(y, m(z, y))) == m(m(m(x, y), z), y);
      });
    case IdentityScheme::moufang_4:
      return detail::scan3(q, [&](element x, element y, element z) {
        return m(x, m(y, m(x, z))) == m(m(m(x, y), x), z);
      });
    case IdentityScheme::extra:
      return detail::scan3(q, [&](element x, element y, element z) {
        return m(x, m(y, m(z, x))) == m(m(m(x, y), z), x);
      });
    case IdentityScheme::associative:
      return detail::scan3(q, [&](element x, element y, element z) { return m(x, m(y, z)) == m(m(x, y), z); });
    case IdentityScheme::flexible:
      return detail::scan2(q, [&](element x, element y) { return m(x, m(y, x)) == m(m(x, y), x); });
    case IdentityScheme::commutative:
      return detail::scan2(q, [&](element x, element y) { return m(x, y) == m(y, x); });
    case IdentityScheme::left_inverse:
      // (1/x)(xy) = y
      return detail::scan2(q, [&](element x, element y) { return m(l.rdiv(0, x), m(x, y)) == y; });
    case IdentityScheme::right_inverse:
      // (yx)(x\1) = y
      return detail::scan2(q, [&](element x, element y) { return m(m(y, x), l.ldiv(x, 0)) == y; });
    case IdentityScheme::right_power_alternative: {
      const std::size_t n = q.order();
      std::vector<CyclicPowers> pw;
      pw.reserve(n);
      for (std::size_t b = 0; b < n; ++b) {
        try {
          pw.push_back(cyclic_powers(q, static_cast<element>(b)));
        } catch (const loop_error&) {
          // powers of b are undefined; report the lexicographically first such b
          // with a = 0 and exponents 1, 1.
          return {false, {0, std::int64_t(b), 1, 1}};
        }
      }
      auto hit = detail::first_hit(n, [&](std::size_t a) -> std::optional<std::vector<std::int64_t>> {
        for (std::size_t b = 0; b < n; ++b) {
          const auto& p = pw[b].powers;
          const std::size_t k = p.size();
          for (std::size_t i = 0; i < k; ++i) {
            element abi = m(static_cast<element>(a), p[i]);
            for (std::size_t j = 0; j < k; ++j)
              if (m(abi, p[j]) != m(static_cast<element>(a), p[(i + j) % k]))
                return std::vector<std::int64_t>{std::int64_t(a), std::int64_t(b), std::int64_t(i), std::int64_t(j)};
          }
        }
        return std::nullopt;
      });
      if (!hit) return {};
      return {false, std::move(*hit)};
    }
  }
  return {};
}

inline bool is_associative(const FiniteLoop& q) { return satisfies_identity(q, IdentityScheme::associative).holds; }
inline bool is_commutative(const FiniteLoop& q) { return satisfies_identity(q, IdentityScheme::commutative).holds; }
inline bool is_group(const FiniteLoop& q) { return is_associative(q); }
inline bool is_commutative_group(const FiniteLoop& q) { return is_commutative(q) && is_associative(q); }
inline bool is_moufang(const FiniteLoop& q) { return satisfies_identity(q, IdentityScheme::moufang_1).holds; }

/// Associativity of a subloop, scanned over its own elements.
inline bool subloop_is_associative(const FiniteLoop& q, const Subloop& s) {
  for (element x : s.elements())
    for (element y : s.elements())
      for (element z : s.elements())
        if (q.mul(x, q.mul(y, z)) != q.mul(q.mul(x, y), z)) return false;
  return true;
}

/// Result of a closure-associativity scan; `witness` lists the generators of
/// the first non-associative closure found.
struct ClosureCheck {
  bool holds = true;
  std::vector<element> witness;
  explicit operator bool() const noexcept { return holds; }
};

inline ClosureCheck is_power_associative(const FiniteLoop& q) {
  for (std::size_t a = 0; a < q.order(); ++a) {
    auto s = generated_subloop(q, {static_cast<element>(a)});
    if (!subloop_is_associative(q, s)) return {false, {static_cast<element>(a)}};
  }
  return {};
}

inline ClosureCheck is_diassociative(const FiniteLoop& q) {
  const std::size_t n = q.order();
  std::set<std::vector<element>> verified;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto s = generated_subloop(q, {static_cast<element>(a), static_cast<element>(b)});
      if (verified.count(s.elements())) continue;
      if (!subloop_is_associative(q, s)) return {false, {static_cast<element>(a), static_cast<element>(b)}};
      verified.insert(s.elements());
    }
  }
  return {};
}

}  // namespace moufkit
