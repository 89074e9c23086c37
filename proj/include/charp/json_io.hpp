#ifndef CHARP_JSON_IO_HPP
#define CHARP_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "charp/characters.hpp"

namespace charp {

// Serializable character document. Kinds: "E_infinity", "E_0", "E_k" (the
// latter carries k). Terms are sorted lexicographically by weight vector and
// the rendering is byte-deterministic.
struct CharacterDocument {
  CartanType type;
  Int p = 2;
  Vec lambda;
  std::string kind;
  std::optional<Int> k;
  GroupRingElement character;

  bool operator==(const CharacterDocument& o) const {
    return type == o.type && p == o.p && lambda == o.lambda && kind == o.kind && k == o.k &&
           character == o.character;
  }
};

nlohmann::json render_character(const CharacterDocument& doc);
CharacterDocument parse_character(const nlohmann::json& j);

nlohmann::json render_matrix(const CoeffMatrix& m, const Vec& lambda);
CoeffMatrix parse_matrix(const nlohmann::json& j);

}  // namespace charp

#endif
