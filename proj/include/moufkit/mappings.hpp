#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "identities.hpp"
#include "loop.hpp"
#include "subloops.hpp"

namespace moufkit {

/// A function on the elements of a loop, stored as its image array.
///
/// Composition applies right to left: (f * g)(x) = f(g(x)).
class ElementMap {
 public:
  ElementMap() = default;
  explicit ElementMap(std::vector<element> images) : images_(std::move(images)) {}

  static ElementMap identity(std::size_t n) {
    std::vector<element> v(n);
    std::iota(v.begin(), v.end(), element{0});
    return ElementMap(std::move(v));
  }

  element operator()(element x) const noexcept { return images_[x]; }
  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<element>& images() const noexcept { return images_; }

  bool is_permutation() const {
    std::vector<bool> hit(images_.size(), false);
    for (element v : images_) {
      if (v >= images_.size() || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  ElementMap inverse() const {
    std::vector<element> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<element>(i);
    return ElementMap(std::move(inv));
  }

  friend ElementMap operator*(const ElementMap& f, const ElementMap& g) {
    std::vector<element> out(g.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.images_[g.images_[i]];
    return ElementMap(std::move(out));
  }

  friend bool operator==(const ElementMap&, const ElementMap&) = default;

 private:
  std::vector<element> images_;
};

struct ElementMapHash {
  std::size_t operator()(const ElementMap& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (element v : f.images()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

enum class Translation { L, R, T, M };
enum class InnerPair { L2, R2 };

/// L_x(y) = xy, R_x(y) = yx, T_x = R_x^-1 L_x, M_x = R_x L_x.
inline ElementMap translation(const FiniteLoop& q, Translation kind, element x) {
  const std::size_t n = q.order();
  std::vector<element> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    element y = static_cast<element>(i);
    switch (kind) {
      case Translation::L: img[i] = q.mul(x, y); break;
      case Translation::R: img[i] = q.mul(y, x); break;
      case Translation::T: img[i] = q.rdiv(q.mul(x, y), x); break;
      case Translation::M: img[i] = q.mul(q.mul(x, y), x); break;
    }
  }
  return ElementMap(std::move(img));
}

/// L_{x,y} = L_{xy}^-1 L_x L_y and R_{x,y} = R_{xy}^-1 R_y R_x.
inline ElementMap inner_generator(const FiniteLoop& q, InnerPair kind, element x, element y) {
  const std::size_t n = q.order();
  std::vector<element> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = kind == InnerPair::L2 ? apply_l2(q, x, y, static_cast<element>(i))
                                   : apply_r2(q, x, y, static_cast<element>(i));
  return ElementMap(std::move(img));
}

/// The generating set {T_x, R_{x,y}, L_{x,y}} of Inn(Q), deduplicated.
inline std::vector<ElementMap> inner_mapping_generators(const FiniteLoop& q) {
  const std::size_t n = q.order();
  std::unordered_set<ElementMap, ElementMapHash> seen;
  std::vector<ElementMap> gens;
  auto add = [&](ElementMap f) {
    if (!f.is_identity() && seen.insert(f).second) gens.push_back(std::move(f));
  };
  for (std::size_t x = 0; x < n; ++x) {
    add(translation(q, Translation::T, static_cast<element>(x)));
    for (std::size_t y = 0; y < n; ++y) {
      add(inner_generator(q, InnerPair::R2, static_cast<element>(x), static_cast<element>(y)));
      add(inner_generator(q, InnerPair::L2, static_cast<element>(x), static_cast<element>(y)));
    }
  }
  return gens;
}

/// Breadth-first closure of the inner-mapping generators under composition.
inline std::vector<ElementMap> inner_mapping_group(const FiniteLoop& q, std::size_t cap = std::size_t{1} << 20) {
  auto gens = inner_mapping_generators(q);
  std::unordered_set<ElementMap, ElementMapHash> seen;
  std::vector<ElementMap> group{ElementMap::identity(q.order())};
  seen.insert(group.front());
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      ElementMap h = g * group[i];
      if (seen.insert(h).second) {
        group.push_back(std::move(h));
        if (group.size() > cap)
          throw loop_error(errc::cap_exceeded, "inner mapping group exceeds " + std::to_string(cap) +
                                                   " elements (size so far " + std::to_string(group.size()) + ")");
      }
    }
  }
  return group;
}

// ---------------------------------------------------------------------------
// Pseudoautomorphisms

struct PseudoautomorphismPair {
  element companion = 0;
  ElementMap map;
  friend bool operator==(const PseudoautomorphismPair&, const PseudoautomorphismPair&) = default;
};

/// c f(x) * f(y) = c f(xy) for all x, y.
inline bool is_pseudoautomorphism(const FiniteLoop& q, element c, const ElementMap& f) {
  const std::size_t n = q.order();
  if (f.size() != n || !f.is_permutation()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    element cfx = q.mul(c, f(static_cast<element>(x)));
    for (std::size_t y = 0; y < n; ++y)
      if (q.mul(cfx, f(static_cast<element>(y))) != q.mul(c, f(q.mul(static_cast<element>(x), static_cast<element>(y)))))
        return false;
  }
  return true;
}

inline PseudoautomorphismPair certify_pseudoautomorphism(const FiniteLoop& q, element c, ElementMap f) {
  if (!is_pseudoautomorphism(q, c, f))
    throw loop_error(errc::not_pseudoautomorphism, "companion " + std::to_string(c) + " fails the defining identity");
  return {c, std::move(f)};
}

/// (c, f)(d, g) = (c f(d), f g), re-certified.
inline PseudoautomorphismPair lps_compose(const FiniteLoop& q, const PseudoautomorphismPair& p1,
                                          const PseudoautomorphismPair& p2) {
  return certify_pseudoautomorphism(q, q.mul(p1.companion, p1.map(p2.companion)), p1.map * p2.map);
}

/// (c, f)^-1 = (f^-1(c\1), f^-1), re-certified.
inline PseudoautomorphismPair lps_inverse(const FiniteLoop& q, const PseudoautomorphismPair& p) {
  ElementMap inv = p.map.inverse();
  element c = inv(q.ldiv(p.companion, 0));
  return certify_pseudoautomorphism(q, c, std::move(inv));
}

/// f(1) = 1 and f(x.yx) = f(x).f(y)f(x).
inline bool is_semiautomorphism(const FiniteLoop& q, const ElementMap& f) {
  const std::size_t n = q.order();
  if (f.size() != n || !f.is_permutation() || f(0) != 0) return false;
  for (std::size_t xi = 0; xi < n; ++xi) {
    element x = static_cast<element>(xi);
    for (std::size_t yi = 0; yi < n; ++yi) {
      element y = static_cast<element>(yi);
      if (f(q.mul(x, q.mul(y, x))) != q.mul(f(x), q.mul(f(y), f(x)))) return false;
    }
  }
  return true;
}

inline bool is_automorphism(const FiniteLoop& q, const ElementMap& f) {
  const std::size_t n = q.order();
  if (f.size() != n || !f.is_permutation()) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (f(q.mul(static_cast<element>(x), static_cast<element>(y))) !=
          q.mul(f(static_cast<element>(x)), f(static_cast<element>(y))))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Autotopisms

struct MapTriple {
  ElementMap f, g, h;
  friend bool operator==(const MapTriple&, const MapTriple&) = default;
};

/// f(x) g(y) = h(xy) for all x, y.
inline bool is_autotopism(const FiniteLoop& q, const MapTriple& t) {
  const std::size_t n = q.order();
  for (const auto* m : {&t.f, &t.g, &t.h})
    if (m->size() != n || !m->is_permutation()) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (q.mul(t.f(static_cast<element>(x)), t.g(static_cast<element>(y))) !=
          t.h(q.mul(static_cast<element>(x), static_cast<element>(y))))
        return false;
  return true;
}

inline MapTriple certify_autotopism(const FiniteLoop& q, MapTriple t) {
  if (!is_autotopism(q, t)) throw loop_error(errc::not_autotopism, "triple fails f(x)g(y) = h(xy)");
  return t;
}

inline MapTriple atp_compose(const FiniteLoop& q, const MapTriple& a, const MapTriple& b) {
  return certify_autotopism(q, {a.f * b.f, a.g * b.g, a.h * b.h});
}

inline MapTriple atp_inverse(const FiniteLoop& q, const MapTriple& a) {
  return certify_autotopism(q, {a.f.inverse(), a.g.inverse(), a.h.inverse()});
}

/// The four autotopisms every Moufang loop carries for each x:
/// (L, R, M), (L^-1, R^-1, M^-1), (R, M^-1, R^-1), (R^-1, M, R).
inline std::array<MapTriple, 4> moufang_autotopisms(const FiniteLoop& q, element x) {
  if (!is_moufang(q)) throw loop_error(errc::not_moufang, "loop fails the Moufang identity");
  ElementMap l = translation(q, Translation::L, x);
  ElementMap r = translation(q, Translation::R, x);
  ElementMap m = translation(q, Translation::M, x);
  ElementMap li = l.inverse(), ri = r.inverse(), mi = m.inverse();
  return {certify_autotopism(q, {l, r, m}), certify_autotopism(q, {li, ri, mi}),
          certify_autotopism(q, {r, mi, ri}), certify_autotopism(q, {ri, m, r})};
}

// ---------------------------------------------------------------------------
// Triality

/// A generator token of Mlt(Q): L_x, R_x or M_x, possibly inverted.
struct MultToken {
  enum class Kind { L, R, M } kind = Kind::L;
  element x = 0;
  bool inverted = false;
  friend bool operator==(const MultToken&, const MultToken&) = default;
};

/// The symbol-level map L_x -> R_x, L_x^-1 -> R_x^-1, R_x -> M_x^-1,
/// R_x^-1 -> M_x. M tokens are not in its domain.
inline MultToken triality_image(const MultToken& t) {
  switch (t.kind) {
    case MultToken::Kind::L: return {MultToken::Kind::R, t.x, t.inverted};
    case MultToken::Kind::R: return {MultToken::Kind::M, t.x, !t.inverted};
    case MultToken::Kind::M: break;
  }
  throw std::invalid_argument("triality_image is defined on L and R tokens only");
}

inline ElementMap evaluate(const FiniteLoop& q, const MultToken& t) {
  Translation k = t.kind == MultToken::Kind::L ? Translation::L
                  : t.kind == MultToken::Kind::R ? Translation::R
                                                 : Translation::M;
  ElementMap m = translation(q, k, t.x);
  return t.inverted ? m.inverse() : m;
}

struct TrialityReport {
  bool holds = true;                // every commutant element cubes to 1
  std::optional<element> witness;   // first commutant element with x^3 != 1
  bool trivial_nucleus = false;
};

inline TrialityReport triality_condition(const FiniteLoop& q) {
  if (auto d = is_diassociative(q); !d.holds)
    throw loop_error(errc::not_diassociative, "closure of elements " + std::to_string(d.witness.front()) +
                                                  " and " + std::to_string(d.witness.back()) + " is not associative");
  TrialityReport r;
  for (element x : distinguished_subloop(q, Distinguished::commutant)) {
    if (power(q, x, 3) != 0) {
      r.holds = false;
      r.witness = x;
      break;
    }
  }
  r.trivial_nucleus = distinguished_subloop(q, Distinguished::nucleus).size() == 1;
  return r;
}

/// Restriction of a map to a subloop it preserves, in the subloop's local
/// indices. Returns nullopt if some element leaves the subloop.
inline std::optional<ElementMap> restrict_to(const ElementMap& f, const Subloop& x) {
  const auto& el = x.elements();
  std::vector<element> local(f.size(), 0);
  for (std::size_t i = 0; i < el.size(); ++i) local[el[i]] = static_cast<element>(i);
  std::vector<element> img(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) {
    element v = f(el[i]);
    if (!x.contains(v)) return std::nullopt;
    img[i] = local[v];
  }
  return ElementMap(std::move(img));
}

}  // namespace moufkit
