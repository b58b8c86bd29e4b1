#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "divisibility.hpp"
#include "identities.hpp"
#include "loop.hpp"
#include "mappings.hpp"
#include "subloops.hpp"

namespace moufkit {

/// Data of an abelian extension of a commutative group X by a loop F:
/// (r,x)(s,y) = (rs, phi_{r,s}(x) + psi_{r,s}(y) + theta_{r,s}).
/// Tables are indexed by r * |F| + s; the kernel is written additively
/// through its own table.
struct ExtensionData {
  FiniteLoop factor;
  FiniteLoop kernel;
  std::vector<ElementMap> phi;
  std::vector<ElementMap> psi;
  std::vector<element> theta;

  std::size_t cell(element r, element s) const noexcept { return static_cast<std::size_t>(r) * factor.order() + s; }
  bool is_central() const {
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (!phi[i].is_identity() || !psi[i].is_identity()) return false;
    return true;
  }
};

/// Direct-product data: phi = psi = id, theta = 0.
inline ExtensionData trivial_extension_data(const FiniteLoop& factor, const FiniteLoop& kernel) {
  const std::size_t cells = factor.order() * factor.order();
  return {factor, kernel, std::vector<ElementMap>(cells, ElementMap::identity(kernel.order())),
          std::vector<ElementMap>(cells, ElementMap::identity(kernel.order())), std::vector<element>(cells, 0)};
}

/// First violated invariant of the data, if any.
inline std::optional<std::string> extension_data_violation(const ExtensionData& d) {
  const std::size_t f = d.factor.order();
  const std::size_t cells = f * f;
  if (!is_commutative_group(d.kernel)) return "kernel is not a commutative group";
  if (d.phi.size() != cells || d.psi.size() != cells || d.theta.size() != cells)
    return "phi/psi/theta tables must have |F|^2 entries";
  for (std::size_t i = 0; i < cells; ++i) {
    if (!is_automorphism(d.kernel, d.phi[i])) return "phi at cell " + std::to_string(i) + " is not an automorphism";
    if (!is_automorphism(d.kernel, d.psi[i])) return "psi at cell " + std::to_string(i) + " is not an automorphism";
    if (d.theta[i] >= d.kernel.order()) return "theta at cell " + std::to_string(i) + " is out of range";
  }
  for (std::size_t r = 0; r < f; ++r) {
    if (!d.phi[r * f].is_identity()) return "phi_{r,1} is not the identity for r = " + std::to_string(r);
    if (!d.psi[r].is_identity()) return "psi_{1,r} is not the identity for r = " + std::to_string(r);
    if (d.theta[r * f] != 0 || d.theta[r] != 0) return "theta is not 0 on the boundary at r = " + std::to_string(r);
  }
  return std::nullopt;
}

/// The loop on F x X, element (r, x) labeled r * |X| + x; identity (1, 0) is 0.
inline FiniteLoop build_extension(const ExtensionData& d) {
  if (auto v = extension_data_violation(d)) throw loop_error(errc::invalid_extension_data, *v);
  const std::size_t fx = d.factor.order(), kx = d.kernel.order();
  const FiniteLoop& k = d.kernel;
  try {
    return FiniteLoop::from_operation(fx * kx, [&](element a, element b) {
      element r = static_cast<element>(a / kx), x = static_cast<element>(a % kx);
      element s = static_cast<element>(b / kx), y = static_cast<element>(b % kx);
      std::size_t c = d.cell(r, s);
      element z = k.mul(k.mul(d.phi[c](x), d.psi[c](y)), d.theta[c]);
      return static_cast<element>(d.factor.mul(r, s) * kx + z);
    });
  } catch (const loop_error& e) {
    throw loop_error(errc::not_a_loop, e.what());
  }
}

struct DecomposeResult {
  std::optional<ExtensionData> data;
  std::string failure;  // first failing constraint when data is empty
  explicit operator bool() const noexcept { return data.has_value(); }
};

namespace detail {

struct KernelView {
  FiniteLoop kernel;
  std::vector<element> local;  // parent element -> kernel index (meaningful on X only)
};

inline KernelView kernel_view(const FiniteLoop& q, const Subloop& x) {
  KernelView kv{subloop_as_loop(q, x), std::vector<element>(q.order(), 0)};
  for (std::size_t i = 0; i < x.size(); ++i) kv.local[x.elements()[i]] = static_cast<element>(i);
  return kv;
}

/// Checks that u[k] lies in coset k (coset order of `quotient`) and u[0] = 1.
inline void require_transversal(const QuotientResult& qr, const std::vector<element>& u) {
  if (u.size() != qr.quotient.order()) throw std::invalid_argument("transversal has the wrong number of elements");
  if (u[0] != 0) throw std::invalid_argument("transversal must contain the identity as its first element");
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] >= qr.projection.size() || qr.projection[u[k]] != k)
      throw std::invalid_argument("transversal element " + std::to_string(k) + " is not in coset " + std::to_string(k));
}

}  // namespace detail

/// Decomposes Q over a normal commutative-group subloop X with transversal U
/// (U[k] in the k-th coset, U[0] = 1). The data are forced by specializing
/// rx.sy = u_{r,s}.phi(x)psi(y)theta at y = 1 and x = 1; the result is
/// returned only if those forced maps are automorphisms, meet the boundary
/// conditions, and satisfy the identity for every (r, s, x, y).
inline DecomposeResult decompose(const FiniteLoop& q, const Subloop& x, const std::vector<element>& u) {
  if (!is_normal(q, x)) throw loop_error(errc::not_normal, "X is not normal in Q");
  auto kv = detail::kernel_view(q, x);
  if (!is_commutative_group(kv.kernel))
    throw loop_error(errc::kernel_not_commutative_group, "X is not a commutative group");
  auto qr = quotient(q, x);
  detail::require_transversal(qr, u);

  const FiniteLoop& k = kv.kernel;
  const std::size_t f = qr.quotient.order();
  const auto& el = x.elements();
  ExtensionData d{qr.quotient, k, {}, {}, {}};
  d.phi.reserve(f * f);
  d.psi.reserve(f * f);

  auto fail = [](std::string why) { return DecomposeResult{std::nullopt, std::move(why)}; };
  auto cell_name = [](std::size_t r, std::size_t s) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
  };

  for (std::size_t ri = 0; ri < f; ++ri) {
    for (std::size_t si = 0; si < f; ++si) {
      const element r = u[ri], s = u[si];
      const element rs = q.mul(r, s);
      const element urs = u[qr.projection[rs]];
      const element theta = kv.local[q.ldiv(urs, rs)];
      const element neg_theta = k.inverse(theta);
      std::vector<element> phi(el.size()), psi(el.size());
      for (std::size_t i = 0; i < el.size(); ++i) {
        element a = q.ldiv(urs, q.mul(q.mul(r, el[i]), s));
        element b = q.ldiv(urs, q.mul(r, q.mul(s, el[i])));
        if (!x.contains(a) || !x.contains(b)) return fail("forced map leaves X at cell " + cell_name(ri, si));
        phi[i] = k.mul(kv.local[a], neg_theta);
        psi[i] = k.mul(kv.local[b], neg_theta);
      }
      ElementMap phi_map(std::move(phi)), psi_map(std::move(psi));
      if (!is_automorphism(k, phi_map)) return fail("phi_" + cell_name(ri, si) + " is not an automorphism of X");
      if (!is_automorphism(k, psi_map)) return fail("psi_" + cell_name(ri, si) + " is not an automorphism of X");
      if (si == 0 && !phi_map.is_identity()) return fail("phi_" + cell_name(ri, si) + " is not the identity");
      if (ri == 0 && !psi_map.is_identity()) return fail("psi_" + cell_name(ri, si) + " is not the identity");
      if ((ri == 0 || si == 0) && theta != 0) return fail("theta_" + cell_name(ri, si) + " is not 1");
      for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) {
          element lhs = q.mul(q.mul(r, el[i]), q.mul(s, el[j]));
          element rhs = q.mul(urs, el[k.mul(k.mul(phi_map(static_cast<element>(i)), psi_map(static_cast<element>(j))), theta)]);
          if (lhs != rhs)
            return fail("extension identity fails at cell " + cell_name(ri, si) + " for x = " + std::to_string(el[i]) +
                        ", y = " + std::to_string(el[j]));
        }
      d.phi.push_back(std::move(phi_map));
      d.psi.push_back(std::move(psi_map));
      d.theta.push_back(theta);
    }
  }
  return {std::move(d), {}};
}

inline DecomposeResult decompose(const FiniteLoop& q, const Subloop& x) { return decompose(q, x, transversal(q, x)); }

/// Decomposition with phi and psi pinned to the identity.
inline DecomposeResult decompose_central(const FiniteLoop& q, const Subloop& x, const std::vector<element>& u) {
  auto r = decompose(q, x, u);
  if (!r) return r;
  const std::size_t f = r.data->factor.order();
  for (std::size_t c = 0; c < f * f; ++c) {
    if (!r.data->phi[c].is_identity() || !r.data->psi[c].is_identity())
      return {std::nullopt, "phi or psi at cell (" + std::to_string(c / f) + "," + std::to_string(c % f) +
                                ") is not the identity"};
  }
  return r;
}

inline DecomposeResult decompose_central(const FiniteLoop& q, const Subloop& x) {
  return decompose_central(q, x, transversal(q, x));
}

/// Builds the extension from `d` and relabels (k, x) to U[k] * X[x] in Q.
/// Equal to Q's own table exactly when `d` realizes Q over (X, U).
inline FiniteLoop rebuild_in_parent(const FiniteLoop& q, const Subloop& x, const std::vector<element>& u,
                                    const ExtensionData& d) {
  FiniteLoop built = build_extension(d);
  const std::size_t kx = d.kernel.order();
  std::vector<element> to_parent(built.order());
  std::vector<bool> hit(q.order(), false);
  if (built.order() != q.order()) throw std::invalid_argument("extension order differs from Q");
  for (std::size_t a = 0; a < built.order(); ++a) {
    element v = q.mul(u[a / kx], x.elements()[a % kx]);
    if (hit[v]) throw std::invalid_argument("transversal and kernel do not cover Q bijectively");
    hit[v] = true;
    to_parent[a] = v;
  }
  std::vector<element> t(q.order() * q.order());
  for (std::size_t a = 0; a < built.order(); ++a)
    for (std::size_t b = 0; b < built.order(); ++b)
      t[to_parent[a] * q.order() + to_parent[b]] = to_parent[built.mul(static_cast<element>(a), static_cast<element>(b))];
  return FiniteLoop(q.order(), std::move(t));
}

/// Some a with a^3 = u, minimal index first.
inline element cube_root(const FiniteLoop& q, element u) {
  for (std::size_t a = 0; a < q.order(); ++a)
    if (power(q, static_cast<element>(a), 3) == u) return static_cast<element>(a);
  throw loop_error(errc::no_cube_root, "element " + std::to_string(u) + " is not a cube");
}

/// The automorphisms built step by step for a 3-divisible Moufang loop over a
/// 2-divisible commutative normal subgroup. All maps act on kernel indices.
struct MoufangExtensionMaps {
  ElementMap f1, f2, f3, f4;
  ElementMap phi;  // f4 f3 f1^-1 f2
  ElementMap psi;  // f4 f3
  element theta = 0;  // z = u\(rs), kernel index
  element u = 0;      // transversal element of the coset of rs
};

/// f1 = T_s|X, f2 = (L_{s^-1 r}^-1 L_s^-1 L_r)|X, f3 = (L_{rs}^-1 L_r L_s)|X,
/// f4 = (L_z^-1 L_u^-1 L_{rs})|X where rs = uz with u in U and z in X.
/// Q is assumed Moufang; divisibility preconditions are checked.
inline MoufangExtensionMaps moufang_extension_maps(const FiniteLoop& q, const Subloop& x,
                                                   const std::vector<element>& u, element r, element s) {
  if (!is_d_divisible(q, 3)) throw loop_error(errc::not_3_divisible, "cube map of Q is not surjective");
  if (!is_normal(q, x)) throw loop_error(errc::not_normal, "X is not normal in Q");
  auto kv = detail::kernel_view(q, x);
  if (!is_commutative_group(kv.kernel))
    throw loop_error(errc::kernel_not_commutative_group, "X is not a commutative group");
  if (!is_d_divisible(kv.kernel, 2)) throw loop_error(errc::kernel_not_2_divisible, "squaring on X is not surjective");
  auto qr = quotient(q, x);
  detail::require_transversal(qr, u);

  const std::size_t n = q.order();
  const element s_inv = q.inverse(s);
  const element sir = q.mul(s_inv, r);
  const element rs = q.mul(r, s);
  const element urs = u[qr.projection[rs]];
  const element z = q.ldiv(urs, rs);

  auto restricted = [&](auto fn, const char* name) {
    std::vector<element> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = fn(static_cast<element>(i));
    auto m = restrict_to(ElementMap(std::move(img)), x);
    if (!m || !is_automorphism(kv.kernel, *m))
      throw loop_error(errc::restriction_not_automorphism, std::string(name) + " does not restrict to an automorphism of X");
    return *m;
  };

  MoufangExtensionMaps m;
  m.f1 = restricted([&](element a) { return apply_t(q, s, a); }, "f1");
  m.f2 = restricted([&](element a) { return q.ldiv(sir, q.ldiv(s, q.mul(r, a))); }, "f2");
  m.f3 = restricted([&](element a) { return q.ldiv(rs, q.mul(r, q.mul(s, a))); }, "f3");
  m.f4 = restricted([&](element a) { return q.ldiv(z, q.ldiv(urs, q.mul(rs, a))); }, "f4");
  m.phi = m.f4 * m.f3 * m.f1.inverse() * m.f2;
  m.psi = m.f4 * m.f3;
  m.theta = kv.local[z];
  m.u = urs;
  return m;
}

/// Number of (x, y) in X^2 with rx.sy != u.(phi(x)psi(y))theta.
inline std::size_t extension_identity_violations(const FiniteLoop& q, const Subloop& x, element r, element s,
                                                 element u, const ElementMap& phi, const ElementMap& psi,
                                                 element theta) {
  auto kv = detail::kernel_view(q, x);
  const FiniteLoop& k = kv.kernel;
  const auto& el = x.elements();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      element lhs = q.mul(q.mul(r, el[i]), q.mul(s, el[j]));
      element rhs = q.mul(u, el[k.mul(k.mul(phi(static_cast<element>(i)), psi(static_cast<element>(j))), theta)]);
      if (lhs != rhs) ++bad;
    }
  return bad;
}

}  // namespace moufkit
