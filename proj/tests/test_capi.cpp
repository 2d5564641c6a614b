#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "veron.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kJ3 =
    R"({"rows": 3, "cols": 3, "entries": [[0,1,0],[0,0,1],[0,0,0]]})";

struct Report {  // RAII around a report handle
  veron_report* r;
  explicit Report(veron_report* p) : r(p) {}
  ~Report() { veron_report_free(r); }
  Report(const Report&) = delete;
  Report& operator=(const Report&) = delete;
};

Json result_of(const veron_report* r) {
  char* text = veron_report_result_json(r);
  REQUIRE(text != nullptr);
  Json j = Json::parse(text);
  veron_string_free(text);
  return j;
}

bool all_checks_pass(const veron_report* r) {
  for (size_t i = 0; i < veron_report_check_count(r); ++i)
    if (!veron_report_check_pass(r, i)) return false;
  return true;
}

}  // namespace

TEST_CASE("qmatrix handles round-trip through JSON") {
  veron_qmatrix* m = veron_qmatrix_parse(R"({"rows":1,"cols":2,"entries":[["1/2",3]]})");
  REQUIRE(m != nullptr);
  CHECK(veron_last_status() == VERON_OK);
  char* text = veron_qmatrix_to_json(m);
  REQUIRE(text != nullptr);
  CHECK(Json::parse(text) ==
        Json::parse(R"({"rows":1,"cols":2,"entries":[["1/2","3"]]})"));
  veron_string_free(text);
  veron_qmatrix_free(m);
}

TEST_CASE("parse failures set status and message") {
  CHECK(veron_qmatrix_parse("{nope") == nullptr);
  CHECK(veron_last_status() == VERON_ERR_PARSE);
  CHECK(std::string(veron_last_error()).size() > 0);

  CHECK(veron_lmatrix_parse(R"({"size": 1})") == nullptr);
  CHECK(veron_last_status() == VERON_ERR_PARSE);

  CHECK(veron_qmatrix_parse(nullptr) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_BAD_ARGUMENT);

  CHECK(veron_nilpotent_analyze(nullptr) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_BAD_ARGUMENT);
}

TEST_CASE("status names mirror the error enum") {
  CHECK(std::string(veron_status_name(VERON_OK)) == "Ok");
  CHECK(std::string(veron_status_name(VERON_ERR_PARSE)) == "Parse");
  CHECK(std::string(veron_status_name(VERON_ERR_NOT_NILPOTENT)) == "NotNilpotent");
  CHECK(std::string(veron_status_name(VERON_ERR_UNKNOWN)) == "Unknown");
}

TEST_CASE("nilpotent analysis report") {
  veron_qmatrix* m = veron_qmatrix_parse(kJ3);
  REQUIRE(m != nullptr);
  Report rep(veron_nilpotent_analyze(m));
  REQUIRE(rep.r != nullptr);
  Json j = result_of(rep.r);
  CHECK(j["degree"] == 3);
  CHECK(j["partition"] == Json::array({3}));
  CHECK(veron_report_check_count(rep.r) == 2);
  CHECK(all_checks_pass(rep.r));
  CHECK(veron_report_check_name(rep.r, 0) != nullptr);
  CHECK(veron_report_check_name(rep.r, 99) == nullptr);  // out of range
  CHECK(veron_report_check_pass(rep.r, 99) == 0);
  veron_qmatrix_free(m);
}

TEST_CASE("domain errors surface as null reports with status") {
  veron_qmatrix* m =
      veron_qmatrix_parse(R"({"rows":2,"cols":2,"entries":[[1,0],[0,1]]})");
  REQUIRE(m != nullptr);
  CHECK(veron_sl2_complete(m) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_NOT_NILPOTENT);
  CHECK(std::string(veron_status_name(veron_last_status())) == "NotNilpotent");
  veron_qmatrix_free(m);
}

TEST_CASE("clebsch gordan through the C surface") {
  Report rep(veron_clebsch_gordan(2, 1));
  REQUIRE(rep.r != nullptr);
  CHECK(result_of(rep.r)["components"] == Json::array({3, 1}));
  CHECK(all_checks_pass(rep.r));
  CHECK(veron_clebsch_gordan(-1, 0) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_BAD_ARGUMENT);
}

TEST_CASE("identify irrep from a raw weight buffer") {
  std::vector<long long> w{6, 4, 2};
  Report rep(veron_identify_irrep(w.data(), w.size()));
  REQUIRE(rep.r != nullptr);
  Json j = result_of(rep.r);
  CHECK(j["identified"] == true);
  CHECK(j["twist"] == 4);
  CHECK(j["irrep"] == 2);
  CHECK(veron_identify_irrep(nullptr, 3) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_BAD_ARGUMENT);
}

TEST_CASE("veronese normal bundle through the C surface") {
  Report rep(veron_veronese_normal(3));
  REQUIRE(rep.r != nullptr);
  Json j = result_of(rep.r);
  CHECK(j["normal_bundle"] == Json::array({5, 5}));
  CHECK(j["identification"]["twist"] == 5);
  CHECK(j["identification"]["irrep"] == 1);
  CHECK(all_checks_pass(rep.r));
}

TEST_CASE("birkhoff factorization report and splitting agreement") {
  veron_lmatrix* t = veron_lmatrix_parse(
      R"({"size":2,"entries":[[[[1,"1"]],[[0,"1"]]],[[],[[-1,"1"]]]]})");
  REQUIRE(t != nullptr);
  Report fac(veron_birkhoff_factorize(t));
  REQUIRE(fac.r != nullptr);
  CHECK(result_of(fac.r)["diag"] == Json::array({1, -1}));
  CHECK(all_checks_pass(fac.r));

  Report split(veron_splitting_type(t));
  REQUIRE(split.r != nullptr);
  CHECK(result_of(split.r)["splitting_type"] == Json::array({1, -1}));

  Report h0(veron_h0(t, -1));
  REQUIRE(h0.r != nullptr);
  CHECK(result_of(h0.r)["h0"] == 1);
  veron_lmatrix_free(t);
}

TEST_CASE("lie analysis accepts a JSON basis document") {
  const char* doc = R"({"ambient_dim": 2, "generators": [
    {"rows":2,"cols":2,"entries":[[0,1],[0,0]]},
    {"rows":2,"cols":2,"entries":[[0,0],[1,0]]}]})";
  Report rep(veron_lie_analyze(doc, 7));
  REQUIRE(rep.r != nullptr);
  Json j = result_of(rep.r);
  CHECK(j["dim"] == 3);
  CHECK(j["killing_nondegenerate"] == true);
  CHECK(j["commutant"]["dimension"] == 1);
  CHECK(j["commutant"]["certificate"] == "irreducible_over_C");
  CHECK(all_checks_pass(rep.r));

  CHECK(veron_lie_analyze(R"({"ambient_dim": 2})", 0) == nullptr);
  CHECK(veron_last_status() == VERON_ERR_PARSE);
}

TEST_CASE("flags check reports non-complementary pairs as results") {
  const char* doc = R"({"ascending": [{"rows":2,"cols":1,"entries":[[1],[0]]}],
                        "descending": [{"rows":2,"cols":1,"entries":[[1],[0]]}]})";
  Report rep(veron_flags_check(doc));
  REQUIRE(rep.r != nullptr);
  CHECK(result_of(rep.r)["complementary"] == false);
  CHECK(result_of(rep.r)["refinement_dims"].is_null());
}
