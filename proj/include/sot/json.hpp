#pragma once

// JSON forms of reports, tables, matrices and the trilinear dictionary.
// Exact values are written as strings ("-1/2"), binary64 values as numbers.

#include <sot/identities.hpp>
#include <sot/triality.hpp>

#include <json.hpp>

#include <string>

namespace sot {

using Json = nlohmann::ordered_json;

template <Scalar T>
Json scalar_json(const T& v) {
  if constexpr (is_exact_v<T>)
    return to_string(v);
  else
    return v;
}

inline Json to_json(const IdentityResult& r) {
  return Json{{"name", r.name},
              {"cases", r.cases},
              {"failures", r.failures},
              {"max_residual", r.max_residual},
              {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)}};
}

inline Json to_json(const VerificationReport& r) {
  Json ids = Json::array();
  for (const auto& i : r.identities) ids.push_back(to_json(i));
  return Json{{"suite", r.suite},
              {"mode", r.mode},
              {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
              {"cases", r.cases()},
              {"failures", r.failures()},
              {"max_residual", r.max_residual()},
              {"passed", r.passed()},
              {"identities", std::move(ids)},
              {"notes", r.notes}};
}

/// 8x8 array of {unit, sign}.
inline Json to_json(const StructureConstants& sc) {
  Json rows = Json::array();
  for (BasisUnit a : kAllUnits) {
    Json row = Json::array();
    for (BasisUnit b : kAllUnits) row.push_back({{"unit", std::string(name(sc(a, b).unit))}, {"sign", sc(a, b).sign}});
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Flat list of the 64 products {left, right, result_unit, sign}.
inline Json product_entries(const StructureConstants& sc) {
  Json out = Json::array();
  for (BasisUnit a : kAllUnits)
    for (BasisUnit b : kAllUnits)
      out.push_back({{"left", std::string(name(a))},
                     {"right", std::string(name(b))},
                     {"result_unit", std::string(name(sc(a, b).unit))},
                     {"sign", sc(a, b).sign}});
  return out;
}

/// Sum of terms {unit, coefficient} for a split octonion.
template <Scalar T>
Json terms_json(const SplitOctonion<T>& s) {
  Json out = Json::array();
  for (BasisUnit u : kAllUnits)
    if (!is_zero(s[u])) out.push_back({{"unit", std::string(name(u))}, {"coefficient", scalar_json(s[u])}});
  return out;
}

/// Non-vanishing associators of unit triples x < y < z (canonical order);
/// every other ordering follows by total antisymmetry.
inline Json associator_entries() {
  Json out = Json::array();
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b)
      for (std::size_t c = b + 1; c < 8; ++c) {
        const auto A = associator(unit<Rational>(unit_at(a)), unit<Rational>(unit_at(b)), unit<Rational>(unit_at(c)));
        if (A.is_zero()) continue;
        out.push_back({{"x", std::string(name(unit_at(a)))},
                       {"y", std::string(name(unit_at(b)))},
                       {"z", std::string(name(unit_at(c)))},
                       {"value", terms_json(A)}});
      }
  return out;
}

inline Json associator_families() {
  return Json::array({"A(jn,jm,Jk) = -eps_nmk I - d_nk Jm + d_mk Jn", "A(jn,jm,I) = eps_nmk Jk",
                      "A(jn,Jm,Jk) = d_nm jk - d_nk jm", "A(jn,Jm,I) = -eps_nmk jk", "A(Jn,Jm,Jk) = -eps_nmk I",
                      "A(Jn,Jm,I) = eps_nmk Jk"});
}

/// Rows of {re, im} entries.
template <Scalar T, std::size_t N>
Json to_json(const ComplexMatrix<T, N>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < N; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back({{"re", scalar_json(m(r, c).re)}, {"im", scalar_json(m(r, c).im)}});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const std::array<SlotEntry, 8>& slot) {
  Json out = Json::array();
  for (const auto& e : slot) out.push_back({{"index", e.index}, {"sign", e.sign}});
  return out;
}

inline Json to_json(const CorrespondenceMap& m) {
  return Json{{"phi", to_json(m.phi)},       {"x", to_json(m.x)},
              {"psi", to_json(m.psi)},       {"scale", m.scale},
              {"max_residual", m.max_residual}, {"basis_triples", m.basis_triples}};
}

}  // namespace sot
