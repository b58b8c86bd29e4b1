#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace moufkit {

/// Index of an element of a finite loop. The identity is always 0.
using element = std::uint16_t;

inline constexpr std::size_t max_loop_order = std::size_t{1} << 16;

enum class Side { left, right };

/// A finite loop given by its Cayley table. Immutable; copies share storage.
///
/// Construction validates the latin-square property and the existence of a
/// two-sided identity. If the identity is not element 0 the labels of the
/// identity and 0 are swapped, and `original_labels()` records the mapping
/// from new labels to the labels of the input.
class FiniteLoop {
 public:
  /// The trivial loop of order 1.
  FiniteLoop() : FiniteLoop(1, std::vector<element>{0}) {}

  /// Validates a row-major n*n table.
  FiniteLoop(std::size_t n, std::vector<element> table) { init(n, std::move(table)); }

  static FiniteLoop from_table(const std::vector<std::vector<std::int64_t>>& raw) {
    const std::size_t n = raw.size();
    if (n == 0) throw loop_error(errc::not_latin_square, "empty table");
    if (n > max_loop_order)
      throw loop_error(errc::order_too_large, "order " + std::to_string(n) + " exceeds 65536");
    std::vector<element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n)
        throw loop_error(errc::not_latin_square,
                         "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                             " entries, expected " + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        auto v = raw[i][j];
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw loop_error(errc::not_latin_square, "entry " + std::to_string(v) + " at row " +
                                                       std::to_string(i) + ", column " +
                                                       std::to_string(j) + " is out of range");
        flat.push_back(static_cast<element>(v));
      }
    }
    return FiniteLoop(n, std::move(flat));
  }

  /// Builds a loop from a binary operation on [0, n).
  template <class Op>
  static FiniteLoop from_operation(std::size_t n, Op op) {
    std::vector<element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        flat[a * n + b] = static_cast<element>(op(static_cast<element>(a), static_cast<element>(b)));
    return FiniteLoop(n, std::move(flat));
  }

  std::size_t order() const noexcept { return d_->n; }

  element mul(element a, element b) const noexcept { return d_->mul[a * d_->n + b]; }
  /// a\b: the unique c with a*c = b.
  element ldiv(element a, element b) const noexcept { return d_->ldiv[a * d_->n + b]; }
  /// a/b: the unique c with c*b = a.
  element rdiv(element a, element b) const noexcept { return d_->rdiv[a * d_->n + b]; }

  element divide(Side side, element a, element b) const noexcept {
    return side == Side::left ? ldiv(a, b) : rdiv(a, b);
  }

  /// a\1, the right inverse of a.
  element inverse(element a) const noexcept { return ldiv(a, 0); }

  std::span<const element> row(element a) const noexcept {
    return {d_->mul.data() + static_cast<std::size_t>(a) * d_->n, d_->n};
  }
  const std::vector<element>& table() const noexcept { return d_->mul; }

  const std::vector<element>& original_labels() const noexcept { return d_->labels; }
  bool relabeled() const noexcept { return d_->labels.size() > 1 && d_->labels[0] != 0; }

  friend bool operator==(const FiniteLoop& a, const FiniteLoop& b) {
    return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->mul == b.d_->mul);
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<element> mul, ldiv, rdiv, labels;
  };

  void init(std::size_t n, std::vector<element> t) {
    if (n == 0 || t.size() != n * n)
      throw loop_error(errc::not_latin_square, "table is not square");
    if (n > max_loop_order)
      throw loop_error(errc::order_too_large, "order " + std::to_string(n) + " exceeds 65536");

    std::vector<std::size_t> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t j = 0; j < n; ++j) {
        element v = t[i * n + j];
        if (v >= n)
          throw loop_error(errc::not_latin_square, "entry " + std::to_string(v) + " at row " +
                                                       std::to_string(i) + ", column " +
                                                       std::to_string(j) + " is out of range");
        if (seen[v] != n)
          throw loop_error(errc::not_latin_square,
                           "row " + std::to_string(i) + " repeats " + std::to_string(v) +
                               " at columns " + std::to_string(seen[v]) + " and " +
                               std::to_string(j));
        seen[v] = j;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t i = 0; i < n; ++i) {
        element v = t[i * n + j];
        if (seen[v] != n)
          throw loop_error(errc::not_latin_square,
                           "column " + std::to_string(j) + " repeats " + std::to_string(v) +
                               " at rows " + std::to_string(seen[v]) + " and " +
                               std::to_string(i));
        seen[v] = i;
      }
    }

    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = t[c * n + x] == x && t[x * n + c] == x;
      if (ok) e = c;
    }
    if (e == n) throw loop_error(errc::no_two_sided_identity, "no element acts as identity on both sides");

    auto d = std::make_shared<Data>();
    d->n = n;
    d->labels.resize(n);
    std::iota(d->labels.begin(), d->labels.end(), element{0});
    if (e != 0) {
      // swap labels 0 and e
      auto relabel = [e](element v) -> element {
        return v == 0 ? static_cast<element>(e) : (v == e ? element{0} : v);
      };
      std::vector<element> r(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          r[relabel(static_cast<element>(a)) * n + relabel(static_cast<element>(b))] = relabel(t[a * n + b]);
      t = std::move(r);
      std::swap(d->labels[0], d->labels[e]);
    }
    d->mul = std::move(t);
    d->ldiv.resize(n * n);
    d->rdiv.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        element c = d->mul[a * n + b];
        d->ldiv[a * n + c] = static_cast<element>(b);
        d->rdiv[c * n + b] = static_cast<element>(a);
      }
    d_ = std::move(d);
  }

  std::shared_ptr<const Data> d_;
};

/// The verified powers a^0, a^1, ..., a^(k-1) of an element whose cyclic
/// closure is a cyclic group of order k.
struct CyclicPowers {
  std::vector<element> powers;
  std::size_t order() const noexcept { return powers.size(); }
};

/// Computes the powers of `a`, checking that left- and right-bracketed powers
/// agree and that they multiply as a cyclic group (which makes <a> associative).
inline CyclicPowers cyclic_powers(const FiniteLoop& q, element a) {
  const std::size_t n = q.order();
  CyclicPowers cp;
  cp.powers.push_back(0);
  element left = 0, right = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    left = q.mul(left, a);
    right = q.mul(a, right);
    if (left != right)
      throw loop_error(errc::not_power_associative,
                       "element " + std::to_string(a) + ": left and right bracketed power " +
                           std::to_string(i) + " differ");
    if (left == 0) break;
    cp.powers.push_back(left);
  }
  const std::size_t k = cp.powers.size();
  if (q.mul(cp.powers.back(), a) != 0)
    throw loop_error(errc::not_power_associative,
                     "powers of element " + std::to_string(a) + " never return to the identity");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (q.mul(cp.powers[i], cp.powers[j]) != cp.powers[(i + j) % k])
        throw loop_error(errc::not_power_associative,
                         "<" + std::to_string(a) + "> is not associative: a^" + std::to_string(i) +
                             " * a^" + std::to_string(j) + " != a^" + std::to_string((i + j) % k));
  return cp;
}

inline std::size_t element_order(const FiniteLoop& q, element a) { return cyclic_powers(q, a).order(); }

/// a^k by square-and-multiply inside <a>; negative k uses a\1.
inline element power(const FiniteLoop& q, element a, std::int64_t k) {
  (void)cyclic_powers(q, a);
  element base = a;
  if (k < 0) {
    base = q.inverse(a);
    k = -k;
  }
  element acc = 0;
  while (k > 0) {
    if (k & 1) acc = q.mul(acc, base);
    base = q.mul(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace moufkit
