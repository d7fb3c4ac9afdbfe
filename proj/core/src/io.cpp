#include "l1f/io.hpp"

#include <json.hpp>

#include "l1f/bass_relations.hpp"
#include "l1f/errors.hpp"
#include "l1f/nt.hpp"

namespace l1f {

namespace {

using Json = nlohmann::ordered_json;

Json value_to_json(const CycElem& v) {
  if (auto r = v.as_rational()) return to_string(*r);
  Json obj;
  obj["conductor"] = v.conductor();
  Json coeffs = Json::array();
  for (const Rational& c : v.coeffs()) coeffs.push_back(to_string(c));
  obj["coeffs"] = std::move(coeffs);
  return obj;
}

CycElem value_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return CycElem::from_rational(Rational(static_cast<long>(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return CycElem::from_rational(parse_rational(j.get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_object()) {
    if (!j.contains("conductor") || !j["conductor"].is_number_integer())
      throw ParseError(where + ": field element needs integer \"conductor\"");
    const long L = j["conductor"].get<long>();
    if (L < 1) throw ParseError(where + ": conductor must be positive");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw ParseError(where + ": field element needs \"coeffs\" array");
    const long phi = euler_phi(L);
    if (static_cast<long>(j["coeffs"].size()) != phi) {
      throw ParseError(where + ": expected " + std::to_string(phi) +
                       " coefficients for conductor " + std::to_string(L) +
                       ", got " + std::to_string(j["coeffs"].size()));
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(phi);
    for (std::size_t k = 0; k < j["coeffs"].size(); ++k) {
      const Json& c = j["coeffs"][k];
      if (c.is_number_integer()) {
        coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
      } else if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else {
        throw ParseError(where + ".coeffs[" + std::to_string(k) +
                         "]: expected integer or rational string");
      }
    }
    return CycElem::from_coeffs(L, std::move(coeffs));
  }
  throw ParseError(where +
                   ": expected integer, rational string, or field element");
}

Json function_to_json(long q, long conductor,
                      const std::vector<CycElem>& values) {
  Json doc;
  doc["v"] = 1;
  doc["q"] = q;
  doc["conductor"] = conductor;
  Json vals = Json::array();
  for (const CycElem& v : values) vals.push_back(value_to_json(v));
  doc["values"] = std::move(vals);
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json numeric_to_json(const NumericResult& r) {
  const long digits = static_cast<long>(r.precision_bits * 0.30103) + 5;
  Json n;
  n["value_re"] = r.value.re.mid().decimal(digits);
  n["value_im"] = r.value.im.mid().decimal(digits);
  n["error_bound"] = r.error_bound.decimal(5);
  n["precision_bits"] = r.precision_bits;
  n["route"] = route_name(r.route);
  return n;
}

}  // namespace

PeriodicFunction parse_function_document(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be an object");
  if (doc.contains("v") && doc["v"] != 1)
    throw ParseError("unsupported schema version; expected \"v\": 1");
  if (!doc.contains("q") || !doc["q"].is_number_integer())
    throw ParseError("missing integer field \"q\"");
  const long q = doc["q"].get<long>();
  if (q < 1) throw ParseError("\"q\" must be a positive integer");
  if (!doc.contains("values") || !doc["values"].is_array())
    throw ParseError("missing \"values\" array");
  const Json& vals = doc["values"];
  if (static_cast<long>(vals.size()) != q) {
    throw ParseError("\"values\" has " + std::to_string(vals.size()) +
                     " entries; expected q = " + std::to_string(q));
  }

  std::vector<CycElem> values;
  values.reserve(q);
  bool any_irrational = false;
  for (long i = 0; i < q; ++i) {
    values.push_back(
        value_from_json(vals[i], "values[" + std::to_string(i) + "]"));
    if (!values.back().is_rational()) any_irrational = true;
  }

  long conductor = any_irrational ? q : 1;
  if (doc.contains("conductor")) {
    if (!doc["conductor"].is_number_integer() || doc["conductor"].get<long>() < 1)
      throw ParseError("\"conductor\" must be a positive integer");
    conductor = doc["conductor"].get<long>();
  }
  for (long i = 0; i < q; ++i) {
    if (conductor % values[i].conductor() != 0) {
      throw ParseError("values[" + std::to_string(i) + "]: conductor " +
                       std::to_string(values[i].conductor()) +
                       " does not divide the document conductor " +
                       std::to_string(conductor));
    }
    values[i] = values[i].lifted(conductor);
  }
  return PeriodicFunction::make(q, std::move(values));
}

std::string serialize_function(const PeriodicFunction& f) {
  return dump(function_to_json(f.period(), f.conductor(), f.values()));
}

std::string serialize_spectral(const SpectralFunction& g) {
  return dump(function_to_json(g.period(), g.conductor(), g.values()));
}

std::string serialize_verdict(const Verdict& v) {
  Json doc;
  doc["v"] = 1;
  doc["vanishes"] = v.vanishes;

  Json odd;
  odd["vanishes"] = v.odd.vanishes;
  odd["weighted_sum"] = value_to_json(v.odd.weighted_sum);
  odd["cotangent_form"] = value_to_json(v.odd.cotangent_form);
  doc["odd"] = std::move(odd);

  Json even;
  even["member"] = v.even.member;
  Json coeffs = Json::array();
  for (const auto& [idx, val] : v.even.coefficients) {
    Json c;
    c["d"] = idx.d;
    c["c"] = idx.c;
    c["value"] = value_to_json(val);
    coeffs.push_back(std::move(c));
  }
  even["coefficients"] = std::move(coeffs);
  if (v.even.member) {
    even["residual"] = nullptr;
  } else {
    Json res = Json::array();
    for (const CycElem& r : v.even.residual) res.push_back(value_to_json(r));
    even["residual"] = std::move(res);
  }
  doc["even"] = std::move(even);

  doc["numeric"] = v.numeric ? numeric_to_json(*v.numeric) : Json(nullptr);
  doc["input"] = function_to_json(v.function.period(), v.function.conductor(),
                                  v.function.values());
  return dump(doc);
}

std::string serialize_numeric(const NumericResult& r) {
  return dump(numeric_to_json(r));
}

std::string serialize_decomposition(const PeriodicFunction& f) {
  auto [fo, fe] = parity_decompose(f);
  Json doc;
  doc["v"] = 1;
  doc["odd"] = function_to_json(fo.period(), fo.conductor(), fo.values());
  doc["even"] = function_to_json(fe.period(), fe.conductor(), fe.values());
  return dump(doc);
}

std::string serialize_blocks(long q) {
  Json doc;
  doc["v"] = 1;
  doc["q"] = q;
  Json arr = Json::array();
  for (BlockIndex idx : enumerate_blocks(q)) {
    const BlockFunction F = block_F(q, idx);
    const SpectralFunction Fhat = block_F_hat(q, idx);
    Json b;
    b["d"] = idx.d;
    b["c"] = idx.c;
    Json vals = Json::array();
    for (const Rational& r : F.values) vals.push_back(to_string(r));
    b["values"] = std::move(vals);
    Json tr = Json::array();
    for (const CycElem& t : Fhat.values()) tr.push_back(value_to_json(t));
    b["transform"] = std::move(tr);
    b["verified"] = (Fhat == dft(PeriodicFunction::make_rational(q, F.values)));
    arr.push_back(std::move(b));
  }
  doc["blocks"] = std::move(arr);
  return dump(doc);
}

std::string serialize_relations(long q) {
  Json doc;
  doc["v"] = 1;
  doc["q"] = q;
  Json arr = Json::array();
  for (const RelationVector& r : relation_vectors(q)) {
    Json e;
    if (r.kind == RelationKind::R1) {
      e["kind"] = "R1";
      e["x"] = r.x;
      e["verified"] = verify_R1(q, r.x);
    } else {
      e["kind"] = "R2";
      e["d"] = r.d;
      e["c"] = r.c;
      e["verified"] = verify_R2(q, r.d, r.c);
    }
    e["coefficients"] = r.coeffs;
    arr.push_back(std::move(e));
  }
  doc["relations"] = std::move(arr);
  return dump(doc);
}

Route route_from_name(const std::string& name) {
  if (name == "log" || name == "log_form") return Route::LogForm;
  if (name == "split" || name == "split_form") return Route::SplitForm;
  if (name == "partial" || name == "partial_sum") return Route::PartialSum;
  throw DomainError("unknown route \"" + name + "\" (log, split, partial)");
}

}  // namespace l1f
