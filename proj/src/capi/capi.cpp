#include "veron.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "core/bundle.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/lie.hpp"
#include "core/nilpotent.hpp"
#include "core/sl2.hpp"

using veron::Err;
using veron::Json;

struct veron_qmatrix {
  veron::QMatrix m;
};
struct veron_lmatrix {
  veron::LMatrix m;
};
struct veron_report {
  Json result;
  std::vector<std::pair<std::string, bool>> checks;
};

namespace {

thread_local veron_status tl_status = VERON_OK;
thread_local std::string tl_message;

veron_status map_code(Err e) {
  int v = int(e);
  return v >= 1 && v <= int(Err::Internal) ? veron_status(v) : VERON_ERR_UNKNOWN;
}

// Runs f with the thread error slot cleared; maps exceptions to statuses.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  tl_status = VERON_OK;
  tl_message.clear();
  try {
    return f();
  } catch (const veron::VError& e) {
    tl_status = map_code(e.code());
    tl_message = e.what();
  } catch (const std::exception& e) {
    tl_status = VERON_ERR_UNKNOWN;
    tl_message = e.what();
  }
  return nullptr;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

using Checks = std::vector<std::pair<std::string, bool>>;

const veron::QMatrix& deref(const veron_qmatrix* m) {
  veron::require(m != nullptr, Err::BadArgument, "null matrix handle");
  return m->m;
}

const veron::LMatrix& deref(const veron_lmatrix* m) {
  veron::require(m != nullptr, Err::BadArgument, "null matrix handle");
  return m->m;
}

Json weights_json(const std::vector<std::pair<long long, int>>& w) {
  Json out = Json::array();
  for (const auto& [value, mult] : w) out.push_back(Json::array({value, mult}));
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

veron::Flag flag_from_json(const Json& doc, const char* key, veron::FlagDir dir) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].empty())
    veron::raise(Err::Parse, std::string("\"") + key + "\" must be a nonempty array of matrices");
  std::vector<veron::Subspace> spaces;
  for (const Json& m : doc[key])
    spaces.push_back(veron::Subspace::span_of_columns(veron::qmatrix_from_json(m)));
  return veron::Flag(dir, std::move(spaces));
}

}  // namespace

extern "C" {

const char* veron_status_name(veron_status s) {
  if (s == VERON_OK) return "Ok";
  if (s >= 1 && s <= int(Err::Internal)) return veron::err_name(Err(s));
  return "Unknown";
}

veron_status veron_last_status(void) { return tl_status; }

const char* veron_last_error(void) { return tl_message.c_str(); }

veron_qmatrix* veron_qmatrix_parse(const char* json_text) {
  return guarded([&]() -> veron_qmatrix* {
    veron::require(json_text != nullptr, Err::BadArgument, "null input text");
    return new veron_qmatrix{veron::qmatrix_from_json(veron::parse_json_text(json_text))};
  });
}

char* veron_qmatrix_to_json(const veron_qmatrix* m) {
  return guarded([&]() -> char* { return dup_string(veron::qmatrix_to_json(deref(m)).dump()); });
}

void veron_qmatrix_free(veron_qmatrix* m) { delete m; }

veron_lmatrix* veron_lmatrix_parse(const char* json_text) {
  return guarded([&]() -> veron_lmatrix* {
    veron::require(json_text != nullptr, Err::BadArgument, "null input text");
    return new veron_lmatrix{veron::lmatrix_from_json(veron::parse_json_text(json_text))};
  });
}

char* veron_lmatrix_to_json(const veron_lmatrix* m) {
  return guarded([&]() -> char* { return dup_string(veron::lmatrix_to_json(deref(m)).dump()); });
}

void veron_lmatrix_free(veron_lmatrix* m) { delete m; }

void veron_string_free(char* s) { std::free(s); }

char* veron_report_result_json(const veron_report* r) {
  return guarded([&]() -> char* {
    veron::require(r != nullptr, Err::BadArgument, "null report handle");
    return dup_string(r->result.dump());
  });
}

size_t veron_report_check_count(const veron_report* r) { return r ? r->checks.size() : 0; }

const char* veron_report_check_name(const veron_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].first.c_str() : nullptr;
}

int veron_report_check_pass(const veron_report* r, size_t i) {
  return r && i < r->checks.size() ? (r->checks[i].second ? 1 : 0) : 0;
}

void veron_report_free(veron_report* r) { delete r; }

veron_report* veron_nilpotent_analyze(const veron_qmatrix* a) {
  return guarded([&]() -> veron_report* {
    const veron::QMatrix& m = deref(a);
    veron::NilpotentProfile p = veron::nilpotent_profile(m);
    Json result;
    result["degree"] = p.degree;
    result["kernel_dims"] = p.ker_dims;
    result["image_dims"] = p.im_dims;
    result["partition"] = p.partition;
    Checks checks;
    checks.emplace_back("power_vanishes", m.pow(p.degree).is_zero() &&
                                              (p.degree == 1 || !m.pow(p.degree - 1).is_zero()));
    checks.emplace_back("partition_total_is_dimension",
                        std::accumulate(p.partition.begin(), p.partition.end(), 0) == m.rows());
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_orbit_curve(const veron_qmatrix* a, const veron_qmatrix* u) {
  return guarded([&]() -> veron_report* {
    const veron::QMatrix& m = deref(a);
    const veron::QMatrix& seed = deref(u);
    veron::OrbitCurve oc = veron::orbit_curve(m, seed);
    Json result;
    result["degree"] = oc.degree;
    Json coeffs = Json::array();
    for (const auto& c : oc.coeffs) coeffs.push_back(veron::qmatrix_to_json(c));
    result["coefficients"] = std::move(coeffs);
    Checks checks;
    checks.emplace_back("leading_coefficient_nonzero", !oc.coeffs.back().is_zero());
    checks.emplace_back("seed_killed_by_next_power", (m.pow(oc.degree + 1) * seed).is_zero());
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_flags_check(const char* flags_json) {
  return guarded([&]() -> veron_report* {
    veron::require(flags_json != nullptr, Err::BadArgument, "null input text");
    Json doc = veron::parse_json_text(flags_json);
    if (!doc.is_object()) veron::raise(Err::Parse, "flags document must be a JSON object");
    veron::Flag asc = flag_from_json(doc, "ascending", veron::FlagDir::Ascending);
    veron::Flag desc = flag_from_json(doc, "descending", veron::FlagDir::Descending);
    bool comp = veron::check_complementary_flags(asc, desc);
    Json result;
    result["ambient"] = asc.ambient();
    result["levels"] = asc.length();
    result["complementary"] = comp;
    Checks checks;
    if (comp) {
      std::vector<veron::Subspace> refinement = veron::flag_refinement(asc, desc);
      Json dims = Json::array();
      bool split_ok = true;
      for (size_t j = 0; j < refinement.size(); ++j) {
        dims.push_back(refinement[j].dim());
        split_ok = split_ok && veron::is_direct_sum_of(asc.space(int(j) + 1), asc.space(int(j)),
                                                       refinement[j]);
      }
      result["refinement_dims"] = std::move(dims);
      checks.emplace_back("refinement_direct_sums", split_ok);
    } else {
      result["refinement_dims"] = nullptr;
    }
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_sl2_complete(const veron_qmatrix* a) {
  return guarded([&]() -> veron_report* {
    const veron::QMatrix& m = deref(a);
    veron::Sl2Triple t = veron::jacobson_morozov(m);
    Json result;
    result["a"] = veron::qmatrix_to_json(t.a);
    result["b"] = veron::qmatrix_to_json(t.b);
    result["h"] = veron::qmatrix_to_json(t.h);
    Checks checks;
    checks.emplace_back("a_unchanged", t.a == m);
    checks.emplace_back("h_is_bracket_a_b", veron::bracket(t.a, t.b) == t.h);
    checks.emplace_back("bracket_h_a_is_2a", veron::bracket(t.h, t.a) == veron::Rat(2) * t.a);
    checks.emplace_back("bracket_h_b_is_minus_2b",
                        veron::bracket(t.h, t.b) == veron::Rat(-2) * t.b);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_sl2_projection(const veron_qmatrix* a, const veron_qmatrix* b) {
  return guarded([&]() -> veron_report* {
    const veron::QMatrix& ma = deref(a);
    const veron::QMatrix& mb = deref(b);
    veron::Sl2FlagData data = veron::sl2_flags_and_projection(ma, mb);
    int k = data.asc.length();
    Json result;
    result["scale"] = data.scale.str();
    result["h"] = veron::qmatrix_to_json(data.h);
    result["projection"] = veron::qmatrix_to_json(data.p);
    result["projection_scale"] = data.c.str();
    Json asc_dims = Json::array(), desc_dims = Json::array();
    for (int j = 0; j < k; ++j) {
      asc_dims.push_back(data.asc.space(j).dim());
      desc_dims.push_back(data.desc.space(j).dim());
    }
    result["ascending_dims"] = std::move(asc_dims);
    result["descending_dims"] = std::move(desc_dims);
    Checks checks;
    checks.emplace_back("flags_complementary", data.flags_complementary);
    checks.emplace_back("h_preserves_flags", data.h_invariant);
    veron::QMatrix bs = data.scale * mb;
    checks.emplace_back("bracket_h_a_is_2a", veron::bracket(data.h, ma) == veron::Rat(2) * ma);
    checks.emplace_back("bracket_h_b_is_minus_2b",
                        veron::bracket(data.h, bs) == veron::Rat(-2) * bs);
    checks.emplace_back("projection_idempotent", data.p * data.p == data.p);
    const veron::QMatrix& image = data.desc.space(k - 1).basis();
    const veron::QMatrix& kern = data.asc.space(k - 1).basis();
    checks.emplace_back("projection_fixes_image", data.p * image == image);
    checks.emplace_back("projection_kills_kernel", (data.p * kern).is_zero());
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_clebsch_gordan(int m, int n) {
  return guarded([&]() -> veron_report* {
    std::vector<int> comps = veron::clebsch_gordan(m, n);
    Json result;
    result["m"] = m;
    result["n"] = n;
    result["components"] = comps;
    std::vector<int> expected;
    for (int k = m + n; k >= std::abs(m - n); k -= 2) expected.push_back(k);
    Checks checks;
    checks.emplace_back("closed_form_agreement", comps == expected);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_identify_irrep(const long long* weights, size_t count) {
  return guarded([&]() -> veron_report* {
    veron::require(weights != nullptr && count > 0, Err::BadArgument, "empty weight list");
    std::vector<long long> vals(weights, weights + count);
    std::sort(vals.rbegin(), vals.rend());
    std::vector<std::pair<long long, int>> multiset;
    for (long long v : vals) {
      if (!multiset.empty() && multiset.back().first == v)
        ++multiset.back().second;
      else
        multiset.emplace_back(v, 1);
    }
    auto id = veron::identify_twisted_irrep(multiset);
    Json result;
    result["weights"] = weights_json(multiset);
    Checks checks;
    if (id) {
      result["identified"] = true;
      result["twist"] = id->first;
      result["irrep"] = id->second;
      std::vector<std::pair<long long, int>> model;
      for (int i = 0; i <= id->second; ++i)
        model.emplace_back((long long)id->first + id->second - 2 * i, 1);
      checks.emplace_back("weights_match_model", model == multiset);
    } else {
      result["identified"] = false;
      result["twist"] = nullptr;
      result["irrep"] = nullptr;
    }
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_veronese_normal(int n) {
  return guarded([&]() -> veron_report* {
    veron::VeroneseWeights vw = veron::veronese_weights(n);
    std::vector<int> cok = veron::cokernel_splitting(n);
    std::vector<int> weight_route(size_t(vw.identification.second) + 1, vw.identification.first);
    Json result;
    result["n"] = n;
    result["quotient_weights"] = weights_json(vw.quotient);
    result["identification"] =
        Json{{"twist", vw.identification.first}, {"irrep", vw.identification.second}};
    result["weight_route_splitting"] = weight_route;
    result["cokernel_splitting"] = cok;
    result["normal_bundle"] = cok;
    Checks checks;
    checks.emplace_back("routes_agree", cok == weight_route);
    checks.emplace_back("rank_matches", int(cok.size()) == n - 1);
    checks.emplace_back("degree_matches",
                        std::accumulate(cok.begin(), cok.end(), 0L) == long(n) * (n + 1) - 2);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_lie_analyze(const char* basis_json, unsigned long long seed) {
  return guarded([&]() -> veron_report* {
    veron::require(basis_json != nullptr, Err::BadArgument, "null input text");
    Json doc = veron::parse_json_text(basis_json);
    if (!doc.is_object() || !doc.contains("ambient_dim") ||
        !doc["ambient_dim"].is_number_integer() || !doc.contains("generators") ||
        !doc["generators"].is_array())
      veron::raise(Err::Parse, "basis document needs \"ambient_dim\" and \"generators\"");
    long long d = doc["ambient_dim"].get<long long>();
    veron::require(d >= 1 && d <= 4096, Err::Parse, "\"ambient_dim\" out of range");
    std::vector<veron::QMatrix> gens;
    for (const Json& g : doc["generators"]) {
      gens.push_back(veron::qmatrix_from_json(g));
      veron::require(gens.back().rows() == int(d) && gens.back().cols() == int(d),
                     Err::AmbientMismatch, "generator size differs from \"ambient_dim\"");
    }
    veron::LieBasis l = veron::lie_closure(gens);
    veron::StructureReport sr = veron::structure_report(l);
    veron::CommutantReport cr = veron::commutant_dimension(l);
    std::optional<veron::QMatrix> nil = veron::find_nilpotent(l, seed);

    Json result;
    result["dim"] = l.dim();
    result["input_was_closed"] = l.input_was_closed;
    result["is_abelian"] = sr.is_abelian;
    result["derived_dim"] = sr.derived.dim();
    result["center_dim"] = sr.center_dim;
    result["killing"] = veron::qmatrix_to_json(sr.killing);
    result["killing_nondegenerate"] = sr.killing_nondegenerate;
    Json comm;
    comm["dimension"] = cr.dim;
    switch (cr.cert) {
      case veron::CommutantCert::IrreducibleOverC: comm["certificate"] = "irreducible_over_C"; break;
      case veron::CommutantCert::ReducibleRationalWitness:
        comm["certificate"] = "reducible_rational_witness";
        break;
      case veron::CommutantCert::InconclusiveOverQ:
        comm["certificate"] = "inconclusive_over_Q";
        break;
    }
    comm["invariant_subspace"] =
        cr.invariant_subspace ? Json(veron::qmatrix_to_json(cr.invariant_subspace->basis()))
                              : Json(nullptr);
    result["commutant"] = std::move(comm);
    result["nilpotent_witness"] = nil ? Json(veron::qmatrix_to_json(*nil)) : Json(nullptr);

    Checks checks;
    bool structure_ok = true;
    for (int i = 0; i < l.dim() && structure_ok; ++i)
      for (int j = 0; j < l.dim() && structure_ok; ++j) {
        veron::QMatrix lhs = veron::bracket(l.gens[size_t(i)], l.gens[size_t(j)]);
        veron::QMatrix rhs(static_cast<int>(d), static_cast<int>(d));
        for (int k = 0; k < l.dim(); ++k)
          rhs += l.structure[size_t(i)][size_t(j)][size_t(k)] * l.gens[size_t(k)];
        structure_ok = lhs == rhs;
      }
    checks.emplace_back("structure_constants_reproduce_brackets", structure_ok);
    checks.emplace_back("killing_symmetric", sr.killing == sr.killing.transpose());
    if (nil)
      checks.emplace_back("nilpotent_witness_is_nilpotent",
                          !nil->is_zero() && nil->pow(int(d)).is_zero());
    if (cr.invariant_subspace) {
      const veron::Subspace& s = *cr.invariant_subspace;
      bool inv = s.dim() > 0 && s.dim() < int(d);
      for (const auto& g : l.gens)
        inv = inv && s.contains(veron::Subspace::span_of_columns(g * s.basis()));
      checks.emplace_back("invariant_subspace_verified", inv);
    }
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_field_zeros(const veron_qmatrix* a) {
  return guarded([&]() -> veron_report* {
    const veron::QMatrix& m = deref(a);
    veron::FieldZeros fz = veron::linear_field_zeros(m);
    Json zeros = Json::array();
    bool eigen_ok = true;
    for (const auto& [value, space] : fz.zeros) {
      zeros.push_back(Json{{"eigenvalue", value.str()},
                           {"eigenspace", veron::qmatrix_to_json(space.basis())}});
      eigen_ok = eigen_ok && m * space.basis() == value * space.basis();
    }
    Json result;
    result["zeros"] = std::move(zeros);
    Checks checks;
    checks.emplace_back("eigenvector_equations", eigen_ok);
    bool descending = true;
    for (size_t i = 1; i < fz.zeros.size(); ++i)
      descending = descending && fz.zeros[i].first < fz.zeros[i - 1].first;
    checks.emplace_back("eigenvalues_strictly_descending", descending);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_h0(const veron_lmatrix* t, int n) {
  return guarded([&]() -> veron_report* {
    const veron::LMatrix& m = deref(t);
    int h = veron::h0_twisted(m, n);
    Json result;
    result["n"] = n;
    result["h0"] = h;
    Checks checks;
    veron::validate_transition(m);
    checks.emplace_back("transition_invertible", true);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_splitting_type(const veron_lmatrix* t) {
  return guarded([&]() -> veron_report* {
    const veron::LMatrix& m = deref(t);
    std::vector<int> exps = veron::splitting_type(m);
    Json result;
    result["splitting_type"] = exps;
    Checks checks;
    checks.emplace_back("weakly_decreasing", weakly_decreasing(exps));
    veron::TransitionDet dt = veron::validate_transition(m);
    checks.emplace_back("total_degree_matches_determinant",
                        std::accumulate(exps.begin(), exps.end(), 0L) == dt.exp);
    return new veron_report{std::move(result), std::move(checks)};
  });
}

veron_report* veron_birkhoff_factorize(const veron_lmatrix* t) {
  return guarded([&]() -> veron_report* {
    const veron::LMatrix& m = deref(t);
    veron::BirkhoffFactorization f = veron::birkhoff_factorize(m);
    Json result;
    result["plus"] = veron::lmatrix_to_json(f.plus);
    result["diag"] = f.diag;
    result["minus"] = veron::lmatrix_to_json(f.minus);
    Checks checks;
    checks.emplace_back("product_identity",
                        f.plus * veron::LMatrix::diag_monomials(f.diag) * f.minus == m);
    checks.emplace_back("minus_polynomial_in_inverse_variable", f.minus.is_poly_in_u());
    checks.emplace_back("plus_polynomial", f.plus.is_poly_in_z());
    checks.emplace_back("diag_matches_splitting_type",
                        f.diag == veron::splitting_type(m));
    veron::LPoly dm = f.minus.det(), dp = f.plus.det();
    checks.emplace_back("minus_determinant_constant",
                        !dm.is_zero() && dm.is_monomial() && dm.min_exp() == 0);
    checks.emplace_back("plus_determinant_constant",
                        !dp.is_zero() && dp.is_monomial() && dp.min_exp() == 0);
    checks.emplace_back("diag_weakly_decreasing", weakly_decreasing(f.diag));
    return new veron_report{std::move(result), std::move(checks)};
  });
}

}  // extern "C"
