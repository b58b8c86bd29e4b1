#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "identities.hpp"
#include "loop.hpp"
#include "subloops.hpp"

namespace moufkit {

/// Finite abelian group C_{n1} x ... x C_{nk} in mixed-radix coordinates;
/// the first factor is the most significant digit of the element index.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (std::size_t f : factors_) {
      if (f == 0) throw loop_error(errc::spec_invalid, "invariant factors must be positive");
      order_ *= f;
      if (order_ > max_loop_order) throw loop_error(errc::spec_invalid, "group is too large");
    }
  }

  const std::vector<std::size_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }

  std::vector<std::size_t> coords(std::size_t a) const {
    std::vector<std::size_t> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      c[i] = a % factors_[i];
      a /= factors_[i];
    }
    return c;
  }
  std::size_t index(const std::vector<std::size_t>& c) const {
    if (c.size() != factors_.size())
      throw loop_error(errc::spec_invalid, "element has " + std::to_string(c.size()) + " coordinates, expected " +
                                               std::to_string(factors_.size()));
    std::size_t a = 0;
    for (std::size_t i = 0; i < c.size(); ++i) a = a * factors_[i] + c[i] % factors_[i];
    return a;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = coords(a), y = coords(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % factors_[i];
    return index(x);
  }
  std::size_t neg(std::size_t a) const {
    auto x = coords(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (factors_[i] - x[i]) % factors_[i];
    return index(x);
  }

  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<std::size_t> span(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(order_, false);
    std::vector<std::size_t> out{0};
    in[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t g : gens) {
        std::size_t v = add(out[i], g);
        if (!in[v]) {
          in[v] = true;
          out.push_back(v);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  FiniteLoop as_loop() const {
    return FiniteLoop::from_operation(order_, [&](element a, element b) { return add(a, b); });
  }

 private:
  std::vector<std::size_t> factors_;
  std::size_t order_ = 1;
};

/// W with a chain F <= B <= W; generators are given as coordinate vectors.
struct FiniteAbelianGroupSpec {
  std::vector<std::size_t> factors;
  std::vector<std::vector<std::size_t>> f_generators;
  std::vector<std::vector<std::size_t>> b_generators;
};

/// The validated chain with W/B coordinates. `coset_bits[w]` is the
/// coordinate vector of w + B over the basis chosen greedily along cosets
/// ordered by their minimal element.
struct GroupChain {
  AbelianGroup w;
  std::vector<std::size_t> f;  // sorted, two elements
  std::vector<std::size_t> b;  // sorted
  std::size_t f_nonzero = 0;
  std::size_t dimension = 0;   // dim of W/B over GF(2)
  std::vector<std::uint32_t> coset_bits;
};

inline GroupChain validate_chain(const FiniteAbelianGroupSpec& spec) {
  AbelianGroup w(spec.factors);
  auto to_indices = [&](const std::vector<std::vector<std::size_t>>& gens) {
    std::vector<std::size_t> out;
    for (const auto& g : gens) out.push_back(w.index(g));
    return out;
  };
  GroupChain c{w, w.span(to_indices(spec.f_generators)), w.span(to_indices(spec.b_generators)), 0, 0, {}};
  if (c.f.size() != 2) throw loop_error(errc::spec_invalid, "F must have exactly two elements");
  c.f_nonzero = c.f[1];
  std::vector<bool> in_b(w.order(), false);
  for (std::size_t x : c.b) in_b[x] = true;
  if (!in_b[c.f_nonzero]) throw loop_error(errc::spec_invalid, "F is not contained in B");
  for (std::size_t u = 0; u < w.order(); ++u)
    if (!in_b[w.add(u, u)]) throw loop_error(errc::spec_invalid, "W/B is not elementary abelian: 2u not in B");

  // Cosets of B by minimal representative.
  std::vector<std::size_t> coset_rep(w.order(), w.order());
  std::vector<std::size_t> reps;
  for (std::size_t u = 0; u < w.order(); ++u) {
    if (coset_rep[u] != w.order()) continue;
    reps.push_back(u);
    for (std::size_t x : c.b) coset_rep[w.add(u, x)] = u;
  }
  // Greedy basis: a coset joins the basis when it is outside the current span.
  std::map<std::size_t, std::uint32_t> bits_of_rep{{0, 0}};
  for (std::size_t r : reps) {
    if (bits_of_rep.count(r)) continue;
    if (c.dimension >= 20) throw loop_error(errc::spec_invalid, "W/B is too large");
    std::uint32_t bit = std::uint32_t{1} << c.dimension++;
    auto snapshot = bits_of_rep;
    for (auto [rep, bits] : snapshot) bits_of_rep[coset_rep[w.add(rep, r)]] = bits ^ bit;
  }
  if (bits_of_rep.size() != reps.size()) throw loop_error(errc::spec_invalid, "W/B is not elementary abelian");
  c.coset_bits.resize(w.order());
  for (std::size_t u = 0; u < w.order(); ++u) c.coset_bits[u] = bits_of_rep[coset_rep[u]];
  return c;
}

/// A quadratic form on GF(2)^m by its value table; bit k-1 of the argument
/// index is the coordinate u_k.
class QuadraticFormGF2 {
 public:
  QuadraticFormGF2(std::size_t m, std::vector<std::uint8_t> values) : m_(m), values_(std::move(values)) {
    if (m > 16) throw loop_error(errc::not_bilinear, "dimension too large");
    if (values_.size() != (std::size_t{1} << m))
      throw loop_error(errc::not_bilinear, "value table must have 2^m entries");
    for (auto& v : values_) {
      if (v > 1) throw loop_error(errc::not_bilinear, "values must be 0 or 1");
    }
    if (values_[0] != 0) throw loop_error(errc::not_bilinear, "q(0) must be 0");
    // h is symmetric, so linearity in the first argument suffices: h(u, w)
    // must equal the sum of h(e_k, w) over the bits k of u.
    const std::size_t n = values_.size();
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t u = 0; u < n; ++u) {
        std::uint8_t expected = 0;
        for (std::size_t k = 0; k < m; ++k)
          if ((u >> k) & 1) expected ^= h(std::size_t{1} << k, w);
        if (h(u, w) != expected)
          throw loop_error(errc::not_bilinear, "associated form is not bilinear at (" + std::to_string(u) + ", " +
                                                   std::to_string(w) + ")");
      }
  }

  std::size_t dimension() const noexcept { return m_; }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  std::uint8_t operator()(std::size_t u) const { return values_[u]; }
  /// h(u, v) = q(u + v) + q(u) + q(v).
  std::uint8_t h(std::size_t u, std::size_t v) const { return values_[u ^ v] ^ values_[u] ^ values_[v]; }

  friend bool operator==(const QuadraticFormGF2& a, const QuadraticFormGF2& b) {
    return a.m_ == b.m_ && a.values_ == b.values_;
  }

 private:
  std::size_t m_;
  std::vector<std::uint8_t> values_;
};

/// h as a 2^m x 2^m table, row-major.
inline std::vector<std::uint8_t> associated_bilinear(const QuadraticFormGF2& q) {
  const std::size_t n = q.values().size();
  std::vector<std::uint8_t> t(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) t[u * n + v] = q.h(u, v);
  return t;
}

inline bool is_linear(const QuadraticFormGF2& q) {
  auto t = associated_bilinear(q);
  return std::all_of(t.begin(), t.end(), [](std::uint8_t v) { return v == 0; });
}

/// The form for a value table, or nullopt when the table is not a form.
inline std::optional<QuadraticFormGF2> try_form(std::size_t m, std::vector<std::uint8_t> values) {
  try {
    return QuadraticFormGF2(m, std::move(values));
  } catch (const loop_error&) {
    return std::nullopt;
  }
}

/// Every valid form on GF(2)^m, in order of the value table read as a binary number.
inline std::vector<QuadraticFormGF2> enumerate_forms(std::size_t m) {
  if (m > 3) throw std::invalid_argument("form enumeration is limited to m <= 3");
  const std::size_t n = std::size_t{1} << m;
  std::vector<QuadraticFormGF2> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<std::uint8_t> vals(n);
    for (std::size_t u = 0; u < n; ++u) vals[u] = (code >> u) & 1;
    if (auto f = try_form(m, std::move(vals))) out.push_back(std::move(*f));
  }
  return out;
}

/// Parses a GF(2) polynomial such as "u1u2 + u3" or "0" into a form on
/// GF(2)^m. Monomials of any degree are accepted and then validated.
inline QuadraticFormGF2 parse_form(std::string_view text, std::size_t m) {
  std::vector<std::vector<std::size_t>> monomials;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& why) {
    return loop_error(errc::spec_invalid, "form \"" + std::string(text) + "\": " + why);
  };
  skip();
  if (i == text.size()) throw bad("empty");
  while (i < text.size()) {
    std::vector<std::size_t> mono;
    bool constant_zero = false, constant_one = false;
    skip();
    if (i < text.size() && (text[i] == '0' || text[i] == '1')) {
      (text[i] == '0' ? constant_zero : constant_one) = true;
      ++i;
    } else {
      while (i < text.size() && text[i] == 'u') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw bad("expected a variable index after 'u'");
        std::size_t k = std::stoul(std::string(text.substr(start, i - start)));
        if (k == 0 || k > m) throw bad("variable u" + std::to_string(k) + " outside 1.." + std::to_string(m));
        mono.push_back(k - 1);
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        }
      }
      if (mono.empty()) throw bad("expected a monomial at offset " + std::to_string(i));
    }
    if (constant_one) throw bad("constant term 1 gives q(0) = 1");
    if (!constant_zero) monomials.push_back(std::move(mono));
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') throw bad("expected '+' at offset " + std::to_string(i));
    ++i;
    skip();
    if (i == text.size()) throw bad("trailing '+'");
  }
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::uint8_t> vals(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& mono : monomials) {
      bool all = std::all_of(mono.begin(), mono.end(), [&](std::size_t k) { return (u >> k) & 1; });
      vals[u] ^= all ? 1 : 0;
    }
  try {
    return QuadraticFormGF2(m, std::move(vals));
  } catch (const loop_error& e) {
    throw loop_error(errc::not_bilinear, e.what());
  }
}

/// The loop on F x W with (i,u)(j,v) = (i+j, u + v + j q(u) + i h(u,v)),
/// the scalar values read as the nonzero element of F. Element (i, u) has
/// index i * |W| + u.
struct QuadraticLoop {
  FiniteLoop loop;
  Subloop x;  // 0 x W
  Subloop b;  // 0 x B
  GroupChain chain;
};

inline QuadraticLoop build_quadratic_loop(const FiniteAbelianGroupSpec& spec, const QuadraticFormGF2& form) {
  GroupChain c = validate_chain(spec);
  if (form.dimension() != c.dimension)
    throw loop_error(errc::spec_invalid, "form has dimension " + std::to_string(form.dimension()) +
                                             " but W/B has dimension " + std::to_string(c.dimension));
  const std::size_t wn = c.w.order();
  // Precompute W addition for speed.
  std::vector<element> add(wn * wn);
  for (std::size_t u = 0; u < wn; ++u)
    for (std::size_t v = 0; v < wn; ++v) add[u * wn + v] = static_cast<element>(c.w.add(u, v));
  const element one = static_cast<element>(c.f_nonzero);

  FiniteLoop q = FiniteLoop::from_operation(2 * wn, [&](element a, element b) {
    std::size_t i = a / wn, u = a % wn, j = b / wn, v = b % wn;
    std::size_t s = add[u * wn + v];
    unsigned scalar = (j & form(c.coset_bits[u])) ^ (i & form.h(c.coset_bits[u], c.coset_bits[v]));
    if (scalar) s = add[s * wn + one];
    return static_cast<element>(((i + j) % 2) * wn + s);
  });
  std::vector<element> xs(wn), bs;
  for (std::size_t u = 0; u < wn; ++u) xs[u] = static_cast<element>(u);
  for (std::size_t u : c.b) bs.push_back(static_cast<element>(u));
  Subloop x = Subloop::certify(q, xs);
  Subloop b = Subloop::certify(q, bs);
  return {q, x, b, std::move(c)};
}

/// W = C2 x C4 with F = B = <(0,2)>.
inline FiniteAbelianGroupSpec example_spec_c2c4() { return {{2, 4}, {{0, 2}}, {{0, 2}}}; }
/// W = C2^3 with F = B = <(0,0,1)>.
inline FiniteAbelianGroupSpec example_spec_c2c2c2() { return {{2, 2, 2}, {{0, 0, 1}}, {{0, 0, 1}}}; }

namespace detail {

inline std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

/// The group generated by permutations, elements sorted (identity first).
inline FiniteLoop permutation_group(const std::vector<std::vector<int>>& gens) {
  const std::size_t deg = gens.front().size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      auto p = compose_perm(g, queue[k]);
      if (seen.insert(p).second) queue.push_back(p);
    }
  std::vector<std::vector<int>> el(seen.begin(), seen.end());
  std::map<std::vector<int>, element> index;
  for (std::size_t i = 0; i < el.size(); ++i) index[el[i]] = static_cast<element>(i);
  return FiniteLoop::from_operation(el.size(), [&](element a, element b) { return index.at(compose_perm(el[a], el[b])); });
}

inline std::size_t mod_pow(std::size_t k, std::size_t e, std::size_t n) {
  std::size_t r = 1 % n;
  for (std::size_t i = 0; i < e; ++i) r = r * k % n;
  return r;
}

}  // namespace detail

/// Z_n x| Z_m where the generator of Z_m acts by x -> kx; (a, b) has index b * n + a.
inline FiniteLoop semidirect(std::size_t n, std::size_t m, std::size_t k) {
  if (n == 0 || m == 0) throw loop_error(errc::unknown_fixture, "semidirect factors must be positive");
  if (detail::mod_pow(k, m, n) != 1 % n)
    throw loop_error(errc::unknown_fixture, "k^m is not 1 mod n; the action is not a homomorphism");
  return FiniteLoop::from_operation(n * m, [&](element x, element y) {
    std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
    return static_cast<element>(((b + d) % m) * n + (a + detail::mod_pow(k, b, n) * c) % n);
  });
}

inline FiniteLoop cyclic_group(std::size_t n) {
  return FiniteLoop::from_operation(n, [n](element a, element b) { return static_cast<element>((a + b) % n); });
}

/// Dihedral group of order 2n.
inline FiniteLoop dihedral_group(std::size_t n) { return semidirect(n, 2, n - 1); }

/// Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>; index e * 2n + i for a^i x^e.
inline FiniteLoop dicyclic_group(std::size_t n) {
  const std::size_t m = 2 * n;
  return FiniteLoop::from_operation(2 * m, [&](element p, element q) {
    std::size_t e = p / m, i = p % m, f = q / m, j = q % m;
    if (e == 0) return static_cast<element>(f * m + (i + j) % m);
    std::size_t base = (i + m - j) % m;
    if (f == 0) return static_cast<element>(m + base);
    return static_cast<element>((base + n) % m);
  });
}

inline FiniteLoop symmetric_group(std::size_t d) {
  if (d < 1 || d > 6) throw loop_error(errc::unknown_fixture, "symmetric degree must be in 1..6");
  if (d == 1) return FiniteLoop();
  std::vector<int> swap(d), cycle(d);
  for (std::size_t i = 0; i < d; ++i) {
    swap[i] = static_cast<int>(i);
    cycle[i] = static_cast<int>((i + 1) % d);
  }
  std::swap(swap[0], swap[1]);
  return detail::permutation_group({swap, cycle});
}

inline FiniteLoop alternating_group(std::size_t d) {
  if (d < 3 || d > 6) throw loop_error(errc::unknown_fixture, "alternating degree must be in 3..6");
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 2; i < d; ++i) {
    std::vector<int> p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<int>(k);
    p[0] = 1;
    p[1] = static_cast<int>(i);
    p[i] = 0;
    gens.push_back(p);  // the 3-cycle (0 1 i)
  }
  return detail::permutation_group(gens);
}

/// Upper unitriangular 3x3 matrices over Z_3.
inline FiniteLoop heisenberg27() {
  return FiniteLoop::from_operation(27, [](element x, element y) {
    std::size_t a = x / 9, b = x / 3 % 3, c = x % 3, d = y / 9, e = y / 3 % 3, f = y % 3;
    return static_cast<element>((a + d) % 3 * 9 + (b + e) % 3 * 3 + (c + f + a * e) % 3);
  });
}

/// M(G, 2) on G u Gu: g.h = gh, g.(hu) = (hg)u, (gu).h = (gh^-1)u, (gu).(hu) = h^-1 g.
/// g has index g and gu has index |G| + g.
inline FiniteLoop chein_double(const FiniteLoop& g) {
  const std::size_t n = g.order();
  return FiniteLoop::from_operation(2 * n, [&](element a, element b) {
    bool au = a >= n, bu = b >= n;
    element x = static_cast<element>(a % n), y = static_cast<element>(b % n);
    if (!au && !bu) return g.mul(x, y);
    if (!au) return static_cast<element>(n + g.mul(y, x));
    if (!bu) return static_cast<element>(n + g.mul(x, g.inverse(y)));
    return g.mul(g.inverse(y), x);
  });
}

/// Unit-determinant Zorn vector matrices over GF(2) under the split-octonion
/// product. A matrix (a, alpha, beta, b) is packed as a | alpha << 1 |
/// beta << 4 | b << 7; the identity comes first, the rest by code.
inline FiniteLoop paige_loop() {
  auto a_of = [](unsigned c) { return c & 1u; };
  auto al_of = [](unsigned c) { return (c >> 1) & 7u; };
  auto be_of = [](unsigned c) { return (c >> 4) & 7u; };
  auto b_of = [](unsigned c) { return (c >> 7) & 1u; };
  auto dot = [](unsigned x, unsigned y) { return static_cast<unsigned>(__builtin_popcount(x & y) & 1); };
  auto cross = [](unsigned x, unsigned y) {
    auto bit = [](unsigned v, int i) { return (v >> i) & 1u; };
    unsigned c0 = (bit(x, 1) & bit(y, 2)) ^ (bit(x, 2) & bit(y, 1));
    unsigned c1 = (bit(x, 2) & bit(y, 0)) ^ (bit(x, 0) & bit(y, 2));
    unsigned c2 = (bit(x, 0) & bit(y, 1)) ^ (bit(x, 1) & bit(y, 0));
    return c0 | c1 << 1 | c2 << 2;
  };
  auto scale = [](unsigned s, unsigned v) { return s ? v : 0u; };
  auto pack = [](unsigned a, unsigned al, unsigned be, unsigned b) { return a | al << 1 | be << 4 | b << 7; };

  const unsigned identity = pack(1, 0, 0, 1);
  std::vector<unsigned> codes{identity};
  for (unsigned c = 0; c < 256; ++c)
    if (c != identity && ((a_of(c) & b_of(c)) ^ dot(al_of(c), be_of(c))) == 1) codes.push_back(c);
  std::vector<int> index(256, -1);
  for (std::size_t i = 0; i < codes.size(); ++i) index[codes[i]] = static_cast<int>(i);

  return FiniteLoop::from_operation(codes.size(), [&](element x, element y) {
    unsigned p = codes[x], r = codes[y];
    unsigned a = a_of(p), al = al_of(p), be = be_of(p), b = b_of(p);
    unsigned c = a_of(r), ga = al_of(r), de = be_of(r), d = b_of(r);
    unsigned na = (a & c) ^ dot(al, de);
    unsigned nal = scale(a, ga) ^ scale(d, al) ^ cross(be, de);
    unsigned nbe = scale(c, be) ^ scale(b, de) ^ cross(al, ga);
    unsigned nb = dot(be, ga) ^ (b & d);
    int k = index[pack(na, nal, nbe, nb)];
    if (k < 0) throw loop_error(errc::not_a_loop, "Zorn product left the unit-determinant set");
    return static_cast<element>(k);
  });
}

/// A nonassociative loop of order 5 in which some element generates a nonassociative closure.
inline FiniteLoop non_power_associative_loop5() {
  return FiniteLoop::from_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
}

/// A nonassociative loop of order 6 with the normal subloop {0, 1}.
inline FiniteLoop nonassociative_loop6() {
  return FiniteLoop::from_table({{0, 1, 2, 3, 4, 5},
                                 {1, 0, 3, 2, 5, 4},
                                 {2, 3, 4, 5, 0, 1},
                                 {3, 2, 5, 4, 1, 0},
                                 {4, 5, 0, 1, 3, 2},
                                 {5, 4, 1, 0, 2, 3}});
}

namespace detail {

struct FixtureCall {
  std::string head;
  std::vector<std::string> args;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline FixtureCall parse_fixture_call(std::string_view name) {
  std::string s = trim(name);
  auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') throw loop_error(errc::unknown_fixture, "unbalanced parentheses in \"" + s + "\"");
  FixtureCall call{trim(s.substr(0, open)), {}};
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      call.args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !call.args.empty()) call.args.push_back(trim(cur));
  return call;
}

inline std::size_t parse_count(const std::string& s, const std::string& fixture) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size() || v == 0 || v > max_loop_order) throw std::invalid_argument("range");
    return v;
  } catch (const std::exception&) {
    throw loop_error(errc::unknown_fixture, "bad parameter \"" + s + "\" for " + fixture);
  }
}

}  // namespace detail

/// Named fixtures: cyclic(n), abelian(n1,...,nk), dihedral(n) (order 2n),
/// dicyclic(n) (order 4n), quaternion8, symmetric(n), alternating(n),
/// semidirect(n,m,k), frobenius20, frobenius21, heisenberg27,
/// chein-double(G) for any group fixture G, paige-M2, example-c2c4,
/// example-c2c2c2, loop5-nonpa, loop6-c2.
inline FiniteLoop fixture(std::string_view name) {
  auto call = detail::parse_fixture_call(name);
  const std::string& h = call.head;
  auto nargs = [&](std::size_t k) {
    if (call.args.size() != k)
      throw loop_error(errc::unknown_fixture, h + " expects " + std::to_string(k) + " parameter(s)");
  };
  auto num = [&](std::size_t i) { return detail::parse_count(call.args[i], h); };

  if (h == "cyclic") return nargs(1), cyclic_group(num(0));
  if (h == "abelian") {
    if (call.args.empty()) throw loop_error(errc::unknown_fixture, "abelian expects invariant factors");
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < call.args.size(); ++i) f.push_back(num(i));
    return AbelianGroup(f).as_loop();
  }
  if (h == "dihedral") return nargs(1), dihedral_group(num(0));
  if (h == "dicyclic") return nargs(1), dicyclic_group(num(0));
  if (h == "symmetric") return nargs(1), symmetric_group(num(0));
  if (h == "alternating") return nargs(1), alternating_group(num(0));
  if (h == "semidirect") {
    nargs(3);
    return semidirect(num(0), num(1), std::stoul(call.args[2]));
  }
  if (h == "chein-double") {
    nargs(1);
    FiniteLoop g = fixture(call.args[0]);
    if (!is_group(g)) throw loop_error(errc::unknown_fixture, "chein-double needs a group");
    return chein_double(g);
  }
  if (!call.args.empty()) throw loop_error(errc::unknown_fixture, h + " takes no parameters");
  if (h == "quaternion8") return dicyclic_group(2);
  if (h == "frobenius20") return semidirect(5, 4, 2);
  if (h == "frobenius21") return semidirect(7, 3, 2);
  if (h == "heisenberg27") return heisenberg27();
  if (h == "paige-M2") return paige_loop();
  if (h == "example-c2c4") return build_quadratic_loop(example_spec_c2c4(), parse_form("u1u2", 2)).loop;
  if (h == "example-c2c2c2") return build_quadratic_loop(example_spec_c2c2c2(), parse_form("u1u2", 2)).loop;
  if (h == "loop5-nonpa") return non_power_associative_loop5();
  if (h == "loop6-c2") return nonassociative_loop6();
  throw loop_error(errc::unknown_fixture, "no fixture named \"" + std::string(name) + "\"");
}

/// Group fixtures of order at most 16.
inline std::vector<std::string> small_group_fixtures() {
  std::vector<std::string> out;
  for (int n = 1; n <= 16; ++n) out.push_back("cyclic(" + std::to_string(n) + ")");
  for (const char* s : {"abelian(2,2)", "abelian(2,4)", "abelian(2,2,2)", "abelian(3,3)", "abelian(2,6)", "abelian(2,8)",
                        "abelian(4,4)", "abelian(2,2,4)", "abelian(2,2,2,2)", "dihedral(3)", "dihedral(4)",
                        "dihedral(5)", "dihedral(6)", "dihedral(7)", "dihedral(8)", "quaternion8", "dicyclic(3)",
                        "dicyclic(4)", "symmetric(3)", "alternating(4)", "semidirect(8,2,5)",
                        "semidirect(8,2,3)"})
    out.emplace_back(s);
  return out;
}

/// The full catalog, ordered by loop order.
inline std::vector<std::string> fixture_catalog() {
  auto out = small_group_fixtures();
  for (const char* s : {"loop5-nonpa", "loop6-c2", "chein-double(symmetric(3))", "chein-double(dihedral(4))",
                        "chein-double(quaternion8)", "example-c2c4", "example-c2c2c2", "abelian(3,5)", "frobenius20",
                        "chein-double(dihedral(5))", "frobenius21", "semidirect(7,6,3)", "symmetric(4)",
                        "chein-double(alternating(4))", "chein-double(dihedral(6))", "dicyclic(6)", "heisenberg27",
                        "abelian(3,9)", "chein-double(dihedral(7))", "alternating(5)", "paige-M2"})
    out.emplace_back(s);
  std::vector<std::pair<std::size_t, std::string>> keyed;
  for (auto& s : out) keyed.emplace_back(fixture(s).order(), std::move(s));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [n, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace moufkit
