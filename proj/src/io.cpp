#include "cubicdisc/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cubicdisc {

namespace {

mpq_class parse_rational(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError("scalar", std::string("missing rational string '") + key + "'");
  try {
    mpq_class q(j[key].get<std::string>(), 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("scalar", "bad rational '" + j[key].get<std::string>() + "'");
  }
}

void require_kind(const Json& j, const std::string& kind) {
  if (!j.is_object()) throw ParseError(kind, "expected an object");
  if (j.contains("kind") && j["kind"] != kind)
    throw ParseError(kind, "document kind is " + j["kind"].dump());
}

}  // namespace

template <>
Json scalar_to_json(const ExactScalar& x) {
  return Json{{"a", x.a().get_str()}, {"b", x.b().get_str()}, {"c", x.c().get_str()}, {"d", x.d().get_str()}};
}

template <>
Json scalar_to_json(const FloatScalar& x) {
  return Json{{"re", x.re()}, {"im", x.im()}};
}

template <>
ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scalar", "expected an object");
  return ExactScalar(parse_rational(j, "a"), parse_rational(j, "b"), parse_rational(j, "c"), parse_rational(j, "d"));
}

template <>
FloatScalar scalar_from_json(const Json& j) {
  if (j.is_object() && j.contains("re")) {
    if (!j["re"].is_number() || (j.contains("im") && !j["im"].is_number()))
      throw ParseError("scalar", "re/im must be numbers");
    return FloatScalar(j["re"].get<double>(), j.value("im", 0.0));
  }
  return scalar_from_json<ExactScalar>(j).to_float();
}

template <class T>
Json to_json(const IndexedTensor<T>& t) {
  Json sig = Json::array();
  for (const auto& s : t.signature()) sig.push_back(s.code());
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(scalar_to_json(c));
  return Json{{"kind", "tensor"}, {"signature", sig}, {"real", t.real()}, {"components", comps}};
}

template <class T>
IndexedTensor<T> indexed_tensor_from_json(const Json& j) {
  require_kind(j, "tensor");
  if (!j.contains("signature") || !j["signature"].is_array()) throw ParseError("tensor", "missing signature array");
  if (!j.contains("components") || !j["components"].is_array()) throw ParseError("tensor", "missing components array");
  Signature sig;
  try {
    for (const auto& s : j["signature"]) sig.push_back(IndexSlot::from_code(s.get<std::string>()));
  } catch (const std::exception& e) {
    throw ParseError("tensor.signature", e.what());
  }
  std::size_t expected = 1;
  for (std::size_t k = 0; k < sig.size(); ++k) expected *= kDimW;
  if (j["components"].size() != expected)
    throw ParseError("tensor.components", "expected " + std::to_string(expected) + " entries, found " +
                                              std::to_string(j["components"].size()));
  std::vector<T> comps;
  for (const auto& c : j["components"]) comps.push_back(scalar_from_json<T>(c));
  return IndexedTensor<T>(std::move(sig), std::move(comps), j.value("real", true));
}

template <class T>
Json to_json(const SymQuartic<T>& s) {
  Json comps = Json::object();
  for (const auto& [key, v] : s.independent_components()) comps[key] = scalar_to_json(v);
  return Json{{"kind", "sym_quartic"}, {"components", comps}};
}

template <class T>
SymQuartic<T> sym_quartic_from_json(const Json& j) {
  require_kind(j, "sym_quartic");
  if (!j.contains("components") || !j["components"].is_object())
    throw ParseError("sym_quartic", "missing components object");
  std::map<std::string, T> comps;
  for (const auto& [key, v] : j["components"].items()) comps[key] = scalar_from_json<T>(v);
  try {
    return SymQuartic<T>::from_independent_components(comps);
  } catch (const std::exception& e) {
    throw ParseError("sym_quartic.components", e.what());
  }
}

template <class T>
Json to_json(const HKTensor<T>& k) {
  Json t = to_json(k.mixed());
  t["kind"] = "hk_tensor";
  return t;
}

template <class T>
HKTensor<T> hk_tensor_from_json(const Json& j) {
  require_kind(j, "hk_tensor");
  Json t = j;
  t["kind"] = "tensor";
  try {
    return HKTensor<T>(indexed_tensor_from_json<T>(t));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("hk_tensor", e.what());
  }
}

template <class T>
Json to_json(const CoframeSystem<T>& cs) {
  Json labels = Json::array();
  for (const auto& l : label_names()) labels.push_back(l);
  Json d = Json::object();
  for (int k = 0; k < kNumLabels; ++k) {
    Json rows = Json::array();
    for (const auto& [m, c] : cs.d[k].terms()) {
      std::vector<int> ls;
      for (int l = 0; l < kNumLabels; ++l)
        if (m & label_bit(l)) ls.push_back(l);
      rows.push_back(Json::array({label_names()[ls.at(0)], label_names()[ls.at(1)], scalar_to_json(c)}));
    }
    d[label_names()[k]] = rows;
  }
  Json out{{"kind", "coframe"}, {"name", cs.name}, {"labels", labels}, {"d", d}};
  if (cs.h) out["h"] = scalar_to_json(*cs.h);
  return out;
}

template <class T>
CoframeSystem<T> coframe_from_json(const Json& j) {
  require_kind(j, "coframe");
  if (!j.contains("labels") || j["labels"] != Json(label_names()))
    throw ParseError("coframe.labels", "labels must list psi1..psi3, phi1..phi3, th1..th4, thb1..thb4 in order");
  if (!j.contains("d") || !j["d"].is_object()) throw ParseError("coframe", "missing d object");
  CoframeSystem<T> cs;
  cs.name = j.value("name", std::string("loaded"));
  for (const auto& [name, rows] : j["d"].items()) {
    const int k = label_index(name);
    if (k < 0) throw ParseError("coframe.d", "unknown label '" + name + "'");
    if (!rows.is_array()) throw ParseError("coframe.d." + name, "expected an array of terms");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_string() || !row[1].is_string())
        throw ParseError("coframe.d." + name, "term must be [label, label, coefficient]");
      const int p = label_index(row[0].template get<std::string>()), q = label_index(row[1].template get<std::string>());
      if (p < 0 || q < 0 || p == q) throw ParseError("coframe.d." + name, "bad wedge pair " + row.dump());
      cs.d[k] += Form<T>::pair(p, q, scalar_from_json<T>(row[2]));
    }
  }
  if (j.contains("h") && !j["h"].is_null()) cs.h = scalar_from_json<T>(j["h"]);
  return cs;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

template <class T>
bool io_roundtrip(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("kind")) throw ParseError(path, "missing \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  const std::string copy = path + ".roundtrip.json";
  auto cycle = [&](auto load, auto same) {
    const auto value = load(doc);
    write_json_file(copy, to_json(value));
    const auto again = load(read_json_file(copy));
    std::filesystem::remove(copy);
    return same(value, again);
  };
  auto eq = [](const auto& x, const auto& y) { return x == y; };
  if (kind == "tensor") return cycle(indexed_tensor_from_json<T>, eq);
  if (kind == "sym_quartic") return cycle(sym_quartic_from_json<T>, eq);
  if (kind == "hk_tensor") return cycle(hk_tensor_from_json<T>, eq);
  if (kind == "coframe")
    return cycle(coframe_from_json<T>, [](const CoframeSystem<T>& x, const CoframeSystem<T>& y) {
      return x == y && x.h.has_value() == y.h.has_value() && (!x.h || *x.h == *y.h);
    });
  throw ParseError(path, "unknown kind '" + kind + "'");
}

#define CUBICDISC_INSTANTIATE(T)                                            \
  template Json to_json(const IndexedTensor<T>&);                           \
  template IndexedTensor<T> indexed_tensor_from_json(const Json&);          \
  template Json to_json(const SymQuartic<T>&);                              \
  template SymQuartic<T> sym_quartic_from_json(const Json&);                \
  template Json to_json(const HKTensor<T>&);                                \
  template HKTensor<T> hk_tensor_from_json(const Json&);                    \
  template Json to_json(const CoframeSystem<T>&);                           \
  template CoframeSystem<T> coframe_from_json(const Json&);                 \
  template bool io_roundtrip<T>(const std::string&);

CUBICDISC_INSTANTIATE(ExactScalar)
CUBICDISC_INSTANTIATE(FloatScalar)

}  // namespace cubicdisc
