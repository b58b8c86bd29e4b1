#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loop.hpp"

namespace moufkit {

/// A subset of a loop certified closed under multiplication and both
/// divisions. Elements are kept sorted; 0 is always present.
class Subloop {
 public:
  /// Checks closure and wraps the set. Throws NotASubloop otherwise.
  static Subloop certify(const FiniteLoop& q, std::vector<element> elems) {
    normalize(elems);
    if (elems.empty() || elems.front() != 0)
      throw loop_error(errc::not_a_subloop, "set does not contain the identity");
    if (!elems.empty() && elems.back() >= q.order())
      throw loop_error(errc::not_a_subloop, "element out of range");
    Subloop s(q, std::move(elems));
    for (element a : s.elements_)
      for (element b : s.elements_)
        if (!s.contains(q.mul(a, b)) || !s.contains(q.ldiv(a, b)) || !s.contains(q.rdiv(a, b)))
          throw loop_error(errc::not_a_subloop, "set is not closed under the loop operations");
    return s;
  }

  static Subloop whole(const FiniteLoop& q) {
    std::vector<element> all(q.order());
    std::iota(all.begin(), all.end(), element{0});
    return Subloop(q, std::move(all));
  }
  static Subloop trivial(const FiniteLoop& q) { return Subloop(q, {0}); }

  const FiniteLoop& parent() const noexcept { return parent_; }
  const std::vector<element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(element a) const noexcept { return a < mask_.size() && mask_[a]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }
  bool is_subset_of(const Subloop& other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](element a) { return other.contains(a); });
  }

  friend bool operator==(const Subloop& a, const Subloop& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const Subloop& a, const Subloop& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements_ < b.elements_;
  }

 private:
  friend Subloop make_subloop_unchecked(const FiniteLoop&, std::vector<element>);

  Subloop(const FiniteLoop& q, std::vector<element> sorted) : parent_(q), elements_(std::move(sorted)) {
    mask_.assign(q.order(), false);
    for (element a : elements_) mask_[a] = true;
  }

  static void normalize(std::vector<element>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  FiniteLoop parent_;
  std::vector<element> elements_;
  std::vector<bool> mask_;
};

/// For internal constructors whose output is closed by construction.
inline Subloop make_subloop_unchecked(const FiniteLoop& q, std::vector<element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subloop(q, std::move(elems));
}

namespace detail {

/// Builds the congruence of a loop generated by a set of pairs, using
/// union-find plus propagation through every left and right translation.
/// In a finite loop an equivalence invariant under all L_x, R_x is a
/// congruence, and its class of 1 is a normal subloop.
class CongruenceClosure {
 public:
  explicit CongruenceClosure(const FiniteLoop& q) : q_(q), parent_(q.order()), size_(q.order(), 1) {
    std::iota(parent_.begin(), parent_.end(), element{0});
  }

  element find(element a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool same(element a, element b) { return find(a) == find(b); }

  void merge(element a, element b) {
    element ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    pending_.emplace_back(a, b);
  }

  void close() {
    const std::size_t n = q_.order();
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      for (std::size_t i = 0; i < n; ++i) {
        element x = static_cast<element>(i);
        merge(q_.mul(x, a), q_.mul(x, b));
        merge(q_.mul(a, x), q_.mul(b, x));
      }
    }
  }

  std::size_t class_size(element a) { return size_[find(a)]; }

  std::vector<element> class_of(element a) {
    close();
    element r = find(a);
    std::vector<element> out;
    for (std::size_t i = 0; i < q_.order(); ++i)
      if (find(static_cast<element>(i)) == r) out.push_back(static_cast<element>(i));
    return out;
  }

 private:
  FiniteLoop q_;
  std::vector<element> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::pair<element, element>> pending_;
};

}  // namespace detail

/// Least subloop containing `gens`: worklist closure under *, \ and /.
inline Subloop generated_subloop(const FiniteLoop& q, const std::vector<element>& gens) {
  std::vector<bool> in(q.order(), false);
  std::vector<element> members{0};
  in[0] = true;
  std::size_t done = 0;
  auto add = [&](element v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };
  for (element g : gens) {
    if (g >= q.order()) throw loop_error(errc::not_a_subloop, "generator out of range");
    add(g);
  }
  // Each new element is combined with every element admitted so far.
  while (done < members.size()) {
    element a = members[done];
    for (std::size_t j = 0; j <= done; ++j) {
      element b = members[j];
      add(q.mul(a, b));
      add(q.mul(b, a));
      add(q.ldiv(a, b));
      add(q.ldiv(b, a));
      add(q.rdiv(a, b));
      add(q.rdiv(b, a));
    }
    ++done;
  }
  return make_subloop_unchecked(q, std::move(members));
}

/// T_u(a) = (u a)/u.
inline element apply_t(const FiniteLoop& q, element u, element a) { return q.rdiv(q.mul(u, a), u); }
/// L_{u,v}(a) = (u v)\(u (v a)).
inline element apply_l2(const FiniteLoop& q, element u, element v, element a) {
  return q.ldiv(q.mul(u, v), q.mul(u, q.mul(v, a)));
}
/// R_{u,v}(a) = ((a u) v)/(u v).
inline element apply_r2(const FiniteLoop& q, element u, element v, element a) {
  return q.rdiv(q.mul(q.mul(a, u), v), q.mul(u, v));
}

/// X is normal iff T_u, L_{u,v} and R_{u,v} map X into X for all u, v.
inline bool is_normal(const FiniteLoop& q, const Subloop& x) {
  const std::size_t n = q.order();
  if (x.is_trivial() || x.is_whole()) return true;
  for (std::size_t u = 0; u < n; ++u) {
    for (element a : x.elements())
      if (!x.contains(apply_t(q, static_cast<element>(u), a))) return false;
    for (std::size_t v = 0; v < n; ++v)
      for (element a : x.elements()) {
        if (!x.contains(apply_l2(q, static_cast<element>(u), static_cast<element>(v), a))) return false;
        if (!x.contains(apply_r2(q, static_cast<element>(u), static_cast<element>(v), a))) return false;
      }
  }
  return true;
}

/// Smallest normal subloop containing `seed`, read off as the class of 1 in
/// the congruence generated by the pairs (1, s).
inline Subloop normal_closure(const FiniteLoop& q, const std::vector<element>& seed) {
  detail::CongruenceClosure cc(q);
  for (element s : seed) {
    if (s >= q.order()) throw loop_error(errc::not_a_subloop, "element out of range");
    cc.merge(0, s);
  }
  return make_subloop_unchecked(q, cc.class_of(0));
}

enum class Distinguished { left_nucleus, middle_nucleus, right_nucleus, nucleus, center, commutant };

inline std::vector<element> distinguished_subloop(const FiniteLoop& q, Distinguished kind) {
  const std::size_t n = q.order();
  auto scan = [&](auto pred) {
    std::vector<element> out;
    for (std::size_t i = 0; i < n; ++i)
      if (pred(static_cast<element>(i))) out.push_back(static_cast<element>(i));
    return out;
  };
  auto all_pairs = [&](auto rel) {
    return [&q, n, rel](element x) {
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!rel(q, x, static_cast<element>(y), static_cast<element>(z))) return false;
      return true;
    };
  };
  auto left = all_pairs([](const FiniteLoop& l, element x, element y, element z) {
    return l.mul(x, l.mul(y, z)) == l.mul(l.mul(x, y), z);
  });
  auto middle = all_pairs([](const FiniteLoop& l, element x, element y, element z) {
    return l.mul(y, l.mul(x, z)) == l.mul(l.mul(y, x), z);
  });
  auto right = all_pairs([](const FiniteLoop& l, element x, element y, element z) {
    return l.mul(y, l.mul(z, x)) == l.mul(l.mul(y, z), x);
  });
  auto commutes = [&](element x) {
    for (std::size_t y = 0; y < n; ++y)
      if (q.mul(x, static_cast<element>(y)) != q.mul(static_cast<element>(y), x)) return false;
    return true;
  };
  switch (kind) {
    case Distinguished::left_nucleus: return scan(left);
    case Distinguished::middle_nucleus: return scan(middle);
    case Distinguished::right_nucleus: return scan(right);
    case Distinguished::nucleus: return scan([&](element x) { return left(x) && middle(x) && right(x); });
    case Distinguished::center:
      return scan([&](element x) { return commutes(x) && left(x) && middle(x) && right(x); });
    case Distinguished::commutant: return scan(commutes);
  }
  return {};
}

inline Subloop nucleus(const FiniteLoop& q) {
  return make_subloop_unchecked(q, distinguished_subloop(q, Distinguished::nucleus));
}
inline Subloop center(const FiniteLoop& q) {
  return make_subloop_unchecked(q, distinguished_subloop(q, Distinguished::center));
}

/// Left cosets uX. `coset_of[a]` indexes `cosets`; cosets are ordered by
/// their minimal element, so the coset of 1 comes first.
struct CosetPartition {
  std::vector<std::vector<element>> cosets;
  std::vector<std::size_t> coset_of;
  bool normal = false;
};

inline CosetPartition cosets(const FiniteLoop& q, const Subloop& x) {
  const std::size_t n = q.order();
  const std::size_t none = static_cast<std::size_t>(-1);
  CosetPartition p;
  p.normal = is_normal(q, x);
  p.coset_of.assign(n, none);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<element> c;
    c.reserve(x.size());
    for (element a : x.elements()) c.push_back(q.mul(static_cast<element>(u), a));
    std::sort(c.begin(), c.end());
    if (p.coset_of[u] != none) {
      if (p.cosets[p.coset_of[u]] != c)
        throw loop_error(errc::not_partition, "left cosets of the subloop overlap at element " + std::to_string(u));
      continue;
    }
    for (element v : c)
      if (p.coset_of[v] != none)
        throw loop_error(errc::not_partition, "left cosets of the subloop overlap at element " + std::to_string(v));
    const std::size_t idx = p.cosets.size();
    for (element v : c) p.coset_of[v] = idx;
    p.cosets.push_back(std::move(c));
  }
  return p;
}

/// Minimal-index representative of each coset, in coset order; starts with 0.
inline std::vector<element> transversal(const FiniteLoop& q, const Subloop& x) {
  auto p = cosets(q, x);
  std::vector<element> u;
  u.reserve(p.cosets.size());
  for (auto& c : p.cosets) u.push_back(c.front());
  return u;
}

struct QuotientResult {
  FiniteLoop quotient;
  std::vector<element> projection;  // parent element -> coset index
  std::vector<element> section;     // coset index -> minimal representative
};

inline QuotientResult quotient(const FiniteLoop& q, const Subloop& x) {
  if (!is_normal(q, x)) throw loop_error(errc::not_normal, "quotient requires a normal subloop");
  auto p = cosets(q, x);
  const std::size_t m = p.cosets.size();
  QuotientResult r;
  r.projection.resize(q.order());
  for (std::size_t a = 0; a < q.order(); ++a) r.projection[a] = static_cast<element>(p.coset_of[a]);
  for (auto& c : p.cosets) r.section.push_back(c.front());
  std::vector<element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t[i * m + j] = r.projection[q.mul(r.section[i], r.section[j])];
  r.quotient = FiniteLoop(m, std::move(t));
  return r;
}

/// Preimage under the projection of a set of quotient elements.
inline Subloop preimage(const FiniteLoop& q, const QuotientResult& qr, const std::vector<element>& image) {
  std::vector<bool> want(qr.quotient.order(), false);
  for (element c : image) want[c] = true;
  std::vector<element> out;
  for (std::size_t a = 0; a < q.order(); ++a)
    if (want[qr.projection[a]]) out.push_back(static_cast<element>(a));
  return Subloop::certify(q, std::move(out));
}

/// Image of a subloop under the projection.
inline Subloop image(const QuotientResult& qr, const Subloop& x) {
  std::vector<element> out;
  for (element a : x.elements()) out.push_back(qr.projection[a]);
  return Subloop::certify(qr.quotient, std::move(out));
}

/// The subloop as a loop in its own right; local index i is x.elements()[i].
inline FiniteLoop subloop_as_loop(const FiniteLoop& q, const Subloop& x) {
  const auto& el = x.elements();
  const std::size_t m = el.size();
  std::vector<element> local(q.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[el[i]] = static_cast<element>(i);
  std::vector<element> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = local[q.mul(el[i], el[j])];
  return FiniteLoop(m, std::move(t));
}

/// True iff the only normal subloops are {1} and Q.
inline bool is_simple(const FiniteLoop& q) {
  if (q.order() == 1) return false;
  for (std::size_t a = 1; a < q.order(); ++a)
    if (!normal_closure(q, {static_cast<element>(a)}).is_whole()) return false;
  return true;
}

/// Every normal subloop, from single-element normal closures joined until the
/// family is closed under joins. Sorted by size, then lexicographically.
inline std::vector<Subloop> all_normal_subloops(const FiniteLoop& q, std::size_t order_cap = 64,
                                                std::size_t max_count = 4096) {
  if (q.order() > order_cap)
    throw loop_error(errc::order_cap_exceeded,
                     "order " + std::to_string(q.order()) + " exceeds cap " + std::to_string(order_cap));
  std::set<std::vector<element>> seen;
  std::vector<std::vector<element>> family;
  auto admit = [&](std::vector<element> s) {
    if (seen.insert(s).second) {
      family.push_back(std::move(s));
      if (family.size() > max_count)
        throw loop_error(errc::cap_exceeded, "more than " + std::to_string(max_count) + " normal subloops");
    }
  };
  for (std::size_t a = 0; a < q.order(); ++a) admit(normal_closure(q, {static_cast<element>(a)}).elements());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<element> seed = family[i];
      seed.insert(seed.end(), family[j].begin(), family[j].end());
      admit(normal_closure(q, seed).elements());
    }
  }
  std::vector<Subloop> out;
  out.reserve(family.size());
  for (auto& s : family) out.push_back(make_subloop_unchecked(q, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace moufkit
