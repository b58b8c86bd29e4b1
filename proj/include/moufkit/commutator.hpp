#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "identities.hpp"
#include "loop.hpp"
#include "subloops.hpp"

namespace moufkit {

namespace detail {

inline void require_normal(const FiniteLoop& q, const Subloop& x, const char* what) {
  if (!is_normal(q, x)) throw loop_error(errc::not_normal, std::string(what) + " is not a normal subloop");
}

/// Minimal representative of the coset uY for each u.
inline std::vector<element> coset_representatives(const FiniteLoop& q, const Subloop& y) {
  auto p = cosets(q, y);
  std::vector<element> rep(q.order());
  for (std::size_t u = 0; u < q.order(); ++u) rep[u] = p.cosets[p.coset_of[u]].front();
  return rep;
}

/// Visits the generating pairs of [X,Y]_Q. For fixed a the values T_u(a),
/// L_{u1,u2}(a), R_{u1,u2}(a) must agree across Y-equivalent arguments; by
/// transitivity it suffices to pair each argument with the minimal
/// representatives of its cosets. `visit(b, c)` returns false to stop early.
template <class Visit>
bool for_each_commutator_pair(const FiniteLoop& q, const Subloop& x, const Subloop& y, Visit visit) {
  const std::size_t n = q.order();
  if (x.is_trivial() || y.is_trivial()) return true;
  auto rep = coset_representatives(q, y);
  for (element a : x.elements()) {
    for (std::size_t ui = 0; ui < n; ++ui) {
      element u = static_cast<element>(ui);
      if (rep[u] != u && !visit(apply_t(q, u, a), apply_t(q, rep[u], a))) return false;
    }
    for (std::size_t u1i = 0; u1i < n; ++u1i) {
      element u1 = static_cast<element>(u1i);
      for (std::size_t u2i = 0; u2i < n; ++u2i) {
        element u2 = static_cast<element>(u2i);
        if (rep[u1] == u1 && rep[u2] == u2) continue;
        if (!visit(apply_l2(q, u1, u2, a), apply_l2(q, rep[u1], rep[u2], a))) return false;
        if (!visit(apply_r2(q, u1, u2, a), apply_r2(q, rep[u1], rep[u2], a))) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// The commutator [X,Y]_Q of normal subloops: the normal subloop generated by
/// the quotients T_u1(a)/T_v1(a), L_{u1,u2}(a)/L_{v1,v2}(a),
/// R_{u1,u2}(a)/R_{v1,v2}(a) with a in X and u_i Y = v_i Y.
inline Subloop commutator(const FiniteLoop& q, const Subloop& x, const Subloop& y) {
  detail::require_normal(q, x, "X");
  detail::require_normal(q, y, "Y");
  detail::CongruenceClosure cc(q);
  detail::for_each_commutator_pair(q, x, y, [&](element b, element c) {
    cc.merge(b, c);
    return true;
  });
  return make_subloop_unchecked(q, cc.class_of(0));
}

/// [X,Y]_Q == 1, stopping at the first nontrivial generator.
inline bool commutator_is_trivial(const FiniteLoop& q, const Subloop& x, const Subloop& y) {
  detail::require_normal(q, x, "X");
  detail::require_normal(q, y, "Y");
  return detail::for_each_commutator_pair(q, x, y, [](element b, element c) { return b == c; });
}

inline bool is_central(const FiniteLoop& q, const Subloop& x) {
  return commutator_is_trivial(q, x, Subloop::whole(q));
}

inline bool is_abelian_in(const FiniteLoop& q, const Subloop& x) { return commutator_is_trivial(q, x, x); }

/// Normal closure in Q of the commutator deviations (xy)/(yx) and associator
/// deviations (x.yz)\((xy)z) for x, y, z ranging over N. For N = Q this is
/// the derived subloop.
inline Subloop derived_step(const FiniteLoop& q, const Subloop& n) {
  detail::CongruenceClosure cc(q);
  for (element x : n.elements())
    for (element y : n.elements()) {
      cc.merge(q.mul(x, y), q.mul(y, x));
      for (element z : n.elements()) cc.merge(q.mul(x, q.mul(y, z)), q.mul(q.mul(x, y), z));
    }
  return make_subloop_unchecked(q, cc.class_of(0));
}

/// Smallest normal subloop with commutative-group quotient.
inline Subloop derived_subloop(const FiniteLoop& q) { return derived_step(q, Subloop::whole(q)); }

/// Checks that Q/D is a commutative group and, when the normal-subloop
/// lattice is within `order_cap`, that no smaller normal subloop has that
/// property.
inline bool verify_derived_subloop(const FiniteLoop& q, const Subloop& d, std::size_t order_cap = 64) {
  if (!is_commutative_group(quotient(q, d).quotient)) return false;
  if (q.order() > order_cap) return true;
  for (const auto& n : all_normal_subloops(q, order_cap)) {
    if (n.size() >= d.size()) continue;
    if (is_commutative_group(quotient(q, n).quotient)) return false;
  }
  return true;
}

enum class SeriesKind { classical, congruence, central };

constexpr std::string_view to_string(SeriesKind k) noexcept {
  switch (k) {
    case SeriesKind::classical: return "classical";
    case SeriesKind::congruence: return "congruence";
    case SeriesKind::central: return "central";
  }
  return "";
}

constexpr std::string_view certificate_tag(SeriesKind k) noexcept {
  switch (k) {
    case SeriesKind::classical: return "factor-is-commutative-group";
    case SeriesKind::congruence: return "factor-abelian-in-quotient";
    case SeriesKind::central: return "factor-central-in-quotient";
  }
  return "";
}

/// A normal series Q = chain[0] >= ... >= chain.back() = {1}, each step
/// certified according to `kind`.
struct SeriesWitness {
  SeriesKind kind = SeriesKind::classical;
  std::vector<Subloop> chain;
  std::size_t length() const noexcept { return chain.empty() ? 0 : chain.size() - 1; }
};

/// Re-checks a witness from scratch: endpoints, normality in Q, inclusion,
/// and the factor property of every step.
inline bool verify_witness(const FiniteLoop& q, const SeriesWitness& w) {
  if (w.chain.empty() || !w.chain.front().is_whole() || !w.chain.back().is_trivial()) return false;
  for (const auto& s : w.chain)
    if (!is_normal(q, s)) return false;
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    const auto& upper = w.chain[i];
    const auto& lower = w.chain[i + 1];
    if (!lower.is_subset_of(upper)) return false;
    auto qr = quotient(q, lower);
    auto factor = image(qr, upper);
    switch (w.kind) {
      case SeriesKind::classical:
        if (!is_commutative_group(subloop_as_loop(qr.quotient, factor))) return false;
        break;
      case SeriesKind::congruence:
        if (!is_abelian_in(qr.quotient, factor)) return false;
        break;
      case SeriesKind::central:
        if (!factor.is_subset_of(center(qr.quotient))) return false;
        break;
    }
  }
  return true;
}

/// Iterates the Q-normal derived step; a witness iff it reaches {1}.
inline std::optional<SeriesWitness> classical_solvable(const FiniteLoop& q) {
  SeriesWitness w{SeriesKind::classical, {Subloop::whole(q)}};
  while (!w.chain.back().is_trivial()) {
    Subloop next = derived_step(q, w.chain.back());
    if (next == w.chain.back()) return std::nullopt;
    w.chain.push_back(std::move(next));
  }
  return w;
}

/// R_0 = Q, R_{i+1} = [R_i, R_i]_Q, stopping at {1} or at a repeat.
inline std::vector<Subloop> congruence_derived_series(const FiniteLoop& q) {
  std::vector<Subloop> series{Subloop::whole(q)};
  if (q.order() == 1) return series;
  for (;;) {
    Subloop next = commutator(q, series.back(), series.back());
    bool stop = next.is_trivial() || next == series.back();
    series.push_back(std::move(next));
    if (stop) return series;
  }
}

/// Upper central series Z_{i+1} = preimage of Z(Q/Z_i); a witness iff it
/// reaches Q.
inline std::optional<SeriesWitness> nilpotent(const FiniteLoop& q) {
  std::vector<Subloop> upper{Subloop::trivial(q)};
  while (!upper.back().is_whole()) {
    auto qr = quotient(q, upper.back());
    Subloop next = preimage(q, qr, center(qr.quotient).elements());
    if (next == upper.back()) return std::nullopt;
    upper.push_back(std::move(next));
  }
  std::reverse(upper.begin(), upper.end());
  return SeriesWitness{SeriesKind::central, std::move(upper)};
}

inline std::optional<std::size_t> nilpotency_class(const FiniteLoop& q) {
  auto w = nilpotent(q);
  if (!w) return std::nullopt;
  return w->length();
}

namespace detail {

/// Deterministic greedy relabeling: the identity first, then repeatedly the
/// unlabeled element of smallest (order, index) followed by the closure of
/// everything labeled so far, in product order. Not an isomorphism invariant.
struct CanonicalForm {
  std::vector<element> table;
  std::vector<element> to_canon;    // original -> canonical
  std::vector<element> from_canon;  // canonical -> original
};

inline CanonicalForm canonical_form(const FiniteLoop& q) {
  const std::size_t n = q.order();
  std::vector<std::pair<std::size_t, element>> keyed;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ord = 0;
    try {
      ord = element_order(q, static_cast<element>(a));
    } catch (const loop_error&) {
    }
    keyed.emplace_back(ord, static_cast<element>(a));
  }
  std::sort(keyed.begin(), keyed.end());

  CanonicalForm cf;
  std::vector<bool> placed(n, false);
  auto place = [&](element a) {
    if (!placed[a]) {
      placed[a] = true;
      cf.from_canon.push_back(a);
    }
  };
  place(0);
  std::size_t done = 0;
  std::size_t next_key = 0;
  while (cf.from_canon.size() < n) {
    while (placed[keyed[next_key].second]) ++next_key;
    place(keyed[next_key].second);
    while (done < cf.from_canon.size()) {
      element a = cf.from_canon[done];
      for (std::size_t j = 0; j <= done; ++j) {
        element b = cf.from_canon[j];
        place(q.mul(a, b));
        place(q.mul(b, a));
      }
      ++done;
    }
  }
  cf.to_canon.resize(n);
  for (std::size_t i = 0; i < n; ++i) cf.to_canon[cf.from_canon[i]] = static_cast<element>(i);
  cf.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cf.table[cf.to_canon[a] * n + cf.to_canon[b]] =
          cf.to_canon[q.mul(static_cast<element>(a), static_cast<element>(b))];
  return cf;
}

class CongruenceSolver {
 public:
  explicit CongruenceSolver(std::size_t cap) : cap_(cap) {}

  /// Chain of element sets (Q ... {0}) in the labels of `q`, or nullopt.
  std::optional<std::vector<std::vector<element>>> solve(const FiniteLoop& q) {
    if (q.order() == 1) return std::vector<std::vector<element>>{{0}};
    CanonicalForm cf = canonical_form(q);
    if (auto it = memo_.find(cf.table); it != memo_.end()) {
      if (!it->second) return std::nullopt;
      return relabel(*it->second, cf.from_canon);
    }
    auto found = search(q);
    if (found) {
      memo_[cf.table] = relabel(*found, cf.to_canon);
    } else {
      memo_[cf.table] = std::nullopt;
    }
    return found;
  }

 private:
  static std::vector<std::vector<element>> relabel(const std::vector<std::vector<element>>& chain,
                                                   const std::vector<element>& map) {
    std::vector<std::vector<element>> out;
    for (const auto& s : chain) {
      std::vector<element> t;
      for (element a : s) t.push_back(map[a]);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
    return out;
  }

  std::optional<std::vector<std::vector<element>>> search(const FiniteLoop& q) {
    std::vector<element> all(q.order());
    std::iota(all.begin(), all.end(), element{0});
    if (is_commutative_group(q)) return std::vector<std::vector<element>>{all, {0}};

    auto normals = all_normal_subloops(q, cap_);
    // Larger abelian kernels first: smaller quotients to recurse on.
    std::reverse(normals.begin(), normals.end());
    for (const auto& x : normals) {
      if (x.is_trivial() || x.is_whole()) continue;
      if (!is_commutative_group(subloop_as_loop(q, x))) continue;
      if (!is_abelian_in(q, x)) continue;
      auto qr = quotient(q, x);
      auto sub = solve(qr.quotient);
      if (!sub) continue;
      std::vector<std::vector<element>> chain;
      for (const auto& s : *sub) chain.push_back(preimage(q, qr, s).elements());
      chain.push_back({0});
      return chain;
    }
    return std::nullopt;
  }

  std::size_t cap_;
  std::map<std::vector<element>, std::optional<std::vector<std::vector<element>>>> memo_;
};

}  // namespace detail

/// Searches for a congruence solvable series: pick a nontrivial normal X
/// abelian in Q, recurse on Q/X, pull the quotient's series back. Exhausts
/// every choice before returning nullopt.
inline std::optional<SeriesWitness> congruence_solvable(const FiniteLoop& q, std::size_t order_cap = 64) {
  // A simple loop other than a commutative group has no such series at any order.
  if (q.order() > order_cap && is_simple(q) && !is_commutative_group(q)) return std::nullopt;
  if (q.order() > order_cap)
    throw loop_error(errc::order_cap_exceeded,
                     "order " + std::to_string(q.order()) + " exceeds cap " + std::to_string(order_cap));
  detail::CongruenceSolver solver(order_cap);
  auto chain = solver.solve(q);
  if (!chain) return std::nullopt;
  SeriesWitness w{SeriesKind::congruence, {}};
  for (auto& s : *chain) w.chain.push_back(Subloop::certify(q, std::move(s)));
  return w;
}

}  // namespace moufkit
