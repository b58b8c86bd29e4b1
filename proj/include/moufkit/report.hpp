#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelext.hpp"
#include "commutator.hpp"
#include "divisibility.hpp"
#include "identities.hpp"
#include "loop.hpp"
#include "mappings.hpp"
#include "subloops.hpp"

namespace moufkit {

struct AnalysisOptions {
  std::size_t max_order = 512;                     // O(n^3) scans
  std::size_t max_inn = std::size_t{1} << 20;      // inner mapping group size
  std::size_t max_normal_lattice = 64;             // normal-subloop enumeration and solvability search
  std::size_t max_inn_order = 64;                  // loop order above which Inn(Q) is not attempted
};

namespace detail {

using json = nlohmann::json;

inline json elements_json(const Subloop& s) { return s.elements(); }

inline json series_json(const std::optional<SeriesWitness>& w) {
  json j;
  j["holds"] = w.has_value();
  if (w) {
    j["certificate"] = std::string(certificate_tag(w->kind));
    json chain = json::array();
    for (const auto& s : w->chain) chain.push_back(s.elements());
    j["series"] = chain;
  }
  return j;
}

/// Runs one report section; domain errors become {"error": "..."} so the
/// remaining sections still run.
inline void section(json& out, const std::string& key, const std::function<json()>& body) {
  try {
    out[key] = body();
  } catch (const loop_error& e) {
    out[key] = json{{"error", e.what()}};
  }
}

inline void require_order(const FiniteLoop& q, std::size_t cap, const char* flag) {
  if (q.order() > cap)
    throw loop_error(errc::order_cap_exceeded, "order " + std::to_string(q.order()) + " exceeds " + flag + " " +
                                                   std::to_string(cap));
}

}  // namespace detail

/// Full analysis as a JSON document with sorted keys. Every value is the
/// direct result of the corresponding library call.
inline nlohmann::json analyze(const FiniteLoop& q, const AnalysisOptions& opt = {}, const std::string& source = "") {
  using detail::json;
  json r;
  r["schema"] = 1;
  r["source"] = source;
  r["order"] = q.order();
  r["relabeled"] = q.relabeled();

  detail::section(r, "identities", [&] {
    detail::require_order(q, opt.max_order, "--max-order");
    json j;
    for (auto s : all_identity_schemes) {
      auto c = satisfies_identity(q, s);
      json e{{"holds", c.holds}};
      if (!c.holds) e["witness"] = c.witness;
      j[std::string(to_string(s))] = e;
    }
    return j;
  });

  detail::section(r, "properties", [&] {
    detail::require_order(q, opt.max_order, "--max-order");
    json j;
    j["group"] = is_group(q);
    j["commutative"] = is_commutative(q);
    j["moufang"] = is_moufang(q);
    j["extra"] = satisfies_identity(q, IdentityScheme::extra).holds;
    auto pa = is_power_associative(q);
    j["power_associative"] = pa.holds;
    if (!pa.holds) j["power_associative_witness"] = pa.witness;
    auto da = is_diassociative(q);
    j["diassociative"] = da.holds;
    if (!da.holds) j["diassociative_witness"] = da.witness;
    return j;
  });

  detail::section(r, "distinguished", [&] {
    detail::require_order(q, opt.max_order, "--max-order");
    json j;
    const std::pair<const char*, Distinguished> kinds[] = {
        {"left_nucleus", Distinguished::left_nucleus}, {"middle_nucleus", Distinguished::middle_nucleus},
        {"right_nucleus", Distinguished::right_nucleus}, {"nucleus", Distinguished::nucleus},
        {"center", Distinguished::center},             {"commutant", Distinguished::commutant}};
    for (auto [name, kind] : kinds) j[name] = distinguished_subloop(q, kind);
    return j;
  });

  detail::section(r, "simple", [&] { return json(is_simple(q)); });

  detail::section(r, "normal_subloops", [&] {
    detail::require_order(q, opt.max_normal_lattice, "--max-normal-lattice");
    json list = json::array();
    json abelian = json::array();
    for (const auto& x : all_normal_subloops(q, opt.max_normal_lattice)) {
      list.push_back(x.elements());
      if (x.is_trivial() || !is_commutative_group(subloop_as_loop(q, x))) continue;
      bool in_q = is_abelian_in(q, x);
      abelian.push_back(json{{"elements", x.elements()},
                             {"abelian_in_q", in_q},
                             {"central", is_central(q, x)},
                             {"decomposes", decompose(q, x).data.has_value()}});
    }
    return json{{"all", list}, {"abelian", abelian}};
  });

  detail::section(r, "nilpotent", [&] {
    auto w = nilpotent(q);
    json j = detail::series_json(w);
    if (w) j["class"] = w->length();
    return j;
  });
  detail::section(r, "classical_solvable", [&] { return detail::series_json(classical_solvable(q)); });
  detail::section(r, "congruence_solvable",
                  [&] { return detail::series_json(congruence_solvable(q, opt.max_normal_lattice)); });
  detail::section(r, "congruence_derived_series", [&] {
    json chain = json::array();
    for (const auto& s : congruence_derived_series(q)) chain.push_back(s.elements());
    return chain;
  });

  detail::section(r, "divisibility", [&] {
    json j;
    for (std::size_t d : {2, 3, 6}) {
      auto rep = divisibility(q, d);
      json e{{"surjective", rep.surjective},
             {"injective", rep.injective},
             {"no_nonidentity_order_dividing_d", rep.no_nonidentity_order_dividing_d},
             {"no_prime_order_dividing_d", rep.no_prime_order_dividing_d},
             {"coprime", rep.coprime}};
      if (rep.witness) e["witness"] = *rep.witness;
      j[std::to_string(d)] = e;
    }
    return j;
  });

  detail::section(r, "cauchy", [&] {
    json j = json::object();
    for (std::size_t p = 2; p <= q.order(); ++p)
      if (is_prime(p) && q.order() % p == 0) j[std::to_string(p)] = to_string(cauchy(q, p));
    return j;
  });

  detail::section(r, "elementwise_lagrange", [&] { return json(elementwise_lagrange(q)); });

  detail::section(r, "inner_mapping_group", [&] {
    detail::require_order(q, opt.max_inn_order, "the inner-mapping order limit");
    return json{{"order", inner_mapping_group(q, opt.max_inn).size()}};
  });

  detail::section(r, "triality", [&] {
    detail::require_order(q, opt.max_order, "--max-order");
    auto t = triality_condition(q);
    json j{{"holds", t.holds}, {"trivial_nucleus", t.trivial_nucleus}};
    if (t.witness) j["witness"] = *t.witness;
    return j;
  });

  return r;
}

}  // namespace moufkit
