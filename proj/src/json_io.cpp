#include "charp/json_io.hpp"

#include "charp/errors.hpp"

namespace charp {

namespace {

nlohmann::json weight_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a weight array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("weight coordinates must be integers");
    v[i++] = x.get<Int>();
  }
  return v;
}

}  // namespace

nlohmann::json render_character(const CharacterDocument& doc) {
  nlohmann::json j;
  j["type"] = doc.type.to_string();
  j["p"] = doc.p;
  j["lambda"] = weight_json(doc.lambda);
  j["kind"] = doc.kind;
  if (doc.k) j["k"] = *doc.k;
  nlohmann::json terms = nlohmann::json::array();
  // Lexicographically sorted by weight vector, largest first so the leading
  // term heads the list.
  for (auto it = doc.character.terms().rbegin(); it != doc.character.terms().rend(); ++it) {
    nlohmann::json t;
    t["weight"] = weight_json(it->first);
    t["mult"] = it->second.to_int64();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["dimension"] = doc.character.dimension().to_int64();
  return j;
}

CharacterDocument parse_character(const nlohmann::json& j) {
  CharacterDocument doc;
  try {
    doc.type = CartanType::parse(j.at("type").get<std::string>());
    doc.p = j.at("p").get<Int>();
    doc.lambda = weight_from_json(j.at("lambda"));
    doc.kind = j.at("kind").get<std::string>();
    if (j.contains("k")) doc.k = j.at("k").get<Int>();
    for (const auto& t : j.at("terms")) {
      doc.character.add_term(weight_from_json(t.at("weight")), Integer(t.at("mult").get<Int>()));
    }
    Integer dim(j.at("dimension").get<Int>());
    if (dim != doc.character.dimension()) {
      throw ParseError("character document dimension does not match its terms");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad character document: ") + e.what());
  }
  return doc;
}

nlohmann::json render_matrix(const CoeffMatrix& m, const Vec& lambda) {
  nlohmann::json j;
  j["type"] = m.type.to_string();
  j["p"] = m.p;
  j["lambda"] = weight_json(lambda);
  j["kind"] = m.kind == CoeffMatrix::Kind::P ? "p_matrix" : "q_matrix";
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : m.weights) weights.push_back(weight_json(w));
  j["weights"] = std::move(weights);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(c.to_int64());
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j;
}

CoeffMatrix parse_matrix(const nlohmann::json& j) {
  CoeffMatrix m;
  try {
    m.type = CartanType::parse(j.at("type").get<std::string>());
    m.p = j.at("p").get<Int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "p_matrix") {
      m.kind = CoeffMatrix::Kind::P;
    } else if (kind == "q_matrix") {
      m.kind = CoeffMatrix::Kind::Q;
    } else {
      throw ParseError("bad matrix kind '" + kind + "'");
    }
    for (const auto& w : j.at("weights")) m.weights.push_back(weight_from_json(w));
    for (const auto& row : j.at("matrix")) {
      std::vector<Integer> r;
      for (const auto& c : row) r.push_back(Integer(c.get<Int>()));
      m.entries.push_back(std::move(r));
    }
    if (m.entries.size() != m.weights.size()) throw ParseError("matrix row count does not match weights");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix document: ") + e.what());
  }
  return m;
}

}  // namespace charp
