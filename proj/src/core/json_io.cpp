#include "core/json_io.hpp"

#include "core/error.hpp"

namespace veron {

namespace {

int get_size_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    raise(Err::Parse, std::string("missing or non-integer \"") + key + "\" field");
  long long v = j[key].get<long long>();
  if (v < 0 || v > 4096) raise(Err::Parse, std::string("\"") + key + "\" out of range");
  return int(v);
}

Rat rat_from_json(const Json& v) {
  if (v.is_number_integer()) return Rat(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  raise(Err::Parse, "matrix entry must be an integer or a \"p/q\" string");
}

}  // namespace

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_object()) raise(Err::Parse, "matrix document must be a JSON object");
  int rows = get_size_field(j, "rows"), cols = get_size_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() || int(j["entries"].size()) != rows)
    raise(Err::Parse, "\"entries\" must be an array of `rows` rows");
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j["entries"][size_t(i)];
    if (!row.is_array() || int(row.size()) != cols)
      raise(Err::Parse, "matrix row " + std::to_string(i) + " has wrong length");
    for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(row[size_t(k)]);
  }
  return m;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

LMatrix lmatrix_from_json(const Json& j) {
  if (!j.is_object()) raise(Err::Parse, "Laurent matrix document must be a JSON object");
  int n = get_size_field(j, "size");
  if (!j.contains("entries") || !j["entries"].is_array() || int(j["entries"].size()) != n)
    raise(Err::Parse, "\"entries\" must be an array of `size` rows");
  LMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j["entries"][size_t(i)];
    if (!row.is_array() || int(row.size()) != n)
      raise(Err::Parse, "Laurent matrix row " + std::to_string(i) + " has wrong length");
    for (int k = 0; k < n; ++k) {
      const Json& entry = row[size_t(k)];
      if (!entry.is_array())
        raise(Err::Parse, "Laurent entry must be a list of [exponent, coefficient] pairs");
      LPoly p;
      for (const Json& term : entry) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
          raise(Err::Parse, "Laurent term must be an [exponent, coefficient] pair");
        long long e = term[0].get<long long>();
        if (e < -1024 || e > 1024) raise(Err::Parse, "Laurent exponent out of range");
        p.add_term(int(e), rat_from_json(term[1]));
      }
      m.at(i, k) = p;
    }
  }
  return m;
}

Json lmatrix_to_json(const LMatrix& m) {
  require(m.is_square(), Err::BadArgument, "Laurent file format is square-only");
  Json j;
  j["size"] = m.rows();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) {
      Json entry = Json::array();
      for (const auto& [e, c] : m.at(i, k).terms()) entry.push_back(Json::array({e, c.str()}));
      row.push_back(std::move(entry));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace veron
