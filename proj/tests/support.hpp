#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's closure machinery so that agreement with
// the library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <moufkit/moufkit.hpp>

namespace moufkit {

inline void PrintTo(const ElementMap& f, std::ostream* os) {
  *os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) *os << (i ? " " : "") << f(static_cast<element>(i));
  *os << ']';
}

inline void PrintTo(const PseudoautomorphismPair& p, std::ostream* os) {
  *os << "(" << p.companion << ", ";
  PrintTo(p.map, os);
  *os << ")";
}

}  // namespace moufkit

namespace testing_support {

using moufkit::element;
using moufkit::FiniteLoop;

inline std::vector<std::string> catalog_up_to(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& name : moufkit::fixture_catalog())
    if (moufkit::fixture(name).order() <= max_order) out.push_back(name);
  return out;
}

inline std::vector<std::string> moufang_catalog(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& name : catalog_up_to(max_order))
    if (moufkit::is_moufang(moufkit::fixture(name))) out.push_back(name);
  return out;
}

inline std::vector<std::string> power_associative_catalog(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& name : catalog_up_to(max_order))
    if (moufkit::is_power_associative(moufkit::fixture(name)).holds) out.push_back(name);
  return out;
}

/// Brute-force associativity over all triples.
inline bool brute_associative(const FiniteLoop& q) {
  const std::size_t n = q.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (q.mul(x, q.mul(y, z)) != q.mul(q.mul(x, y), z)) return false;
  return true;
}

/// Closure of a set under multiplication and both divisions.
inline std::set<element> closure(const FiniteLoop& q, std::set<element> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<element> cur(s.begin(), s.end());
    for (element a : cur)
      for (element b : cur)
        for (element c : {q.mul(a, b), q.ldiv(a, b), q.rdiv(a, b)})
          if (s.insert(c).second) grew = true;
  }
  return s;
}

/// Normal closure by alternating two fixpoints: close under the loop
/// operations, then under every T_u, L_{u,v}, R_{u,v}, until neither grows.
inline std::set<element> normal_closure_fixpoint(const FiniteLoop& q, std::set<element> s) {
  const std::size_t n = q.order();
  s = closure(q, std::move(s));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<element> cur(s.begin(), s.end());
    for (element a : cur)
      for (std::size_t u = 0; u < n; ++u) {
        if (s.insert(q.rdiv(q.mul(u, a), u)).second) grew = true;
        for (std::size_t v = 0; v < n; ++v) {
          element l = q.ldiv(q.mul(u, v), q.mul(u, q.mul(v, a)));
          element r = q.rdiv(q.mul(q.mul(a, u), v), q.mul(u, v));
          if (s.insert(l).second) grew = true;
          if (s.insert(r).second) grew = true;
        }
      }
    if (grew) s = closure(q, std::move(s));
  }
  return s;
}

/// Group commutator [X, Y]: normal closure of all x^-1 y^-1 x y, using
/// conjugation g^-1 h g for normality. Valid for groups only.
inline std::set<element> group_commutator(const FiniteLoop& g, const std::vector<element>& x,
                                          const std::vector<element>& y) {
  auto inv = [&](element a) { return g.ldiv(a, 0); };
  std::set<element> s{0};
  for (element a : x)
    for (element b : y) s.insert(g.mul(g.mul(inv(a), inv(b)), g.mul(a, b)));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<element> cur(s.begin(), s.end());
    for (element a : cur) {
      for (element b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
      for (std::size_t h = 0; h < g.order(); ++h)
        if (s.insert(g.mul(g.mul(inv(h), a), h)).second) grew = true;
    }
  }
  return s;
}

/// Barnes commutator by literal enumeration: every a in X and every pair of
/// pairs (u1, v1), (u2, v2) related modulo Y, the relation read with the
/// given division. The quotients are normally closed by the fixpoint oracle.
inline std::set<element> literal_commutator(const FiniteLoop& q, const moufkit::Subloop& x, const moufkit::Subloop& y,
                                            moufkit::Side side) {
  const std::size_t n = q.order();
  auto related = [&](std::size_t u, std::size_t v) {
    return y.contains(q.divide(side, static_cast<element>(u), static_cast<element>(v)));
  };
  std::vector<std::pair<element, element>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (related(u, v)) pairs.emplace_back(u, v);
  auto t = [&](element u, element a) { return q.rdiv(q.mul(u, a), u); };
  auto l = [&](element u, element v, element a) { return q.ldiv(q.mul(u, v), q.mul(u, q.mul(v, a))); };
  auto r = [&](element u, element v, element a) { return q.rdiv(q.mul(q.mul(a, u), v), q.mul(u, v)); };
  std::set<element> gens;
  for (element a : x.elements()) {
    for (auto [u1, v1] : pairs) {
      gens.insert(q.rdiv(t(u1, a), t(v1, a)));
      for (auto [u2, v2] : pairs) {
        gens.insert(q.rdiv(l(u1, u2, a), l(v1, v2, a)));
        gens.insert(q.rdiv(r(u1, u2, a), r(v1, v2, a)));
      }
    }
  }
  return normal_closure_fixpoint(q, gens);
}

inline std::set<element> as_set(const moufkit::Subloop& s) { return {s.elements().begin(), s.elements().end()}; }

/// Evaluates rx.sy against u.(phi(x) psi(y) theta) directly from the table.
inline std::size_t extension_violations(const FiniteLoop& q, const moufkit::Subloop& x, element r, element s,
                                        element u, const moufkit::ElementMap& phi, const moufkit::ElementMap& psi,
                                        element theta_local) {
  const auto& el = x.elements();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      element lhs = q.mul(q.mul(r, el[i]), q.mul(s, el[j]));
      element k = q.mul(q.mul(el[phi(static_cast<element>(i))], el[psi(static_cast<element>(j))]), el[theta_local]);
      if (lhs != q.mul(u, k)) ++bad;
    }
  return bad;
}

/// All automorphisms of a small loop, by brute force over permutations fixing 0.
inline std::vector<moufkit::ElementMap> automorphisms(const FiniteLoop& k) {
  std::vector<element> perm(k.order());
  std::iota(perm.begin(), perm.end(), element{0});
  std::vector<moufkit::ElementMap> out;
  if (perm.empty()) return out;
  do {
    moufkit::ElementMap f(perm);
    if (moufkit::is_automorphism(k, f)) out.push_back(f);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

/// Pseudo-random valid extension data over small factors and kernels.
inline moufkit::ExtensionData random_extension_data(std::mt19937& rng) {
  static const std::vector<std::string> factors = {"cyclic(2)", "cyclic(3)", "symmetric(3)", "abelian(2,2)",
                                                   "loop5-nonpa", "loop6-c2"};
  static const std::vector<std::string> kernels = {"cyclic(2)", "cyclic(3)", "cyclic(4)", "abelian(2,2)",
                                                   "cyclic(5)", "abelian(2,2,2)"};
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  FiniteLoop f = moufkit::fixture(factors[pick(factors.size())]);
  FiniteLoop k = moufkit::fixture(kernels[pick(kernels.size())]);
  auto aut = automorphisms(k);
  auto d = moufkit::trivial_extension_data(f, k);
  const std::size_t n = f.order();
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t s = 1; s < n; ++s) {
      std::size_t c = r * n + s;
      d.phi[c] = aut[pick(aut.size())];
      d.psi[c] = aut[pick(aut.size())];
      d.theta[c] = static_cast<element>(pick(k.order()));
    }
  return d;
}

}  // namespace testing_support
