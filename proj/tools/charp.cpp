// charp: exact characters of irreducible modular representations via the
// Kazhdan-Lusztig recursion for the affine Weyl group.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 computation bound
// exceeded, 3 verification failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charp/characters.hpp"
#include "charp/errors.hpp"
#include "charp/json_io.hpp"
#include "charp/verify.hpp"

namespace {

using namespace charp;

struct Options {
  std::string type = "A1";
  Int p = 0;
  std::string weight;
  std::string format = "text";
  std::string cache_dir;
  Int max_len = 24;
  Int k = 0;
  std::string y_word;
  std::string w_word;
  std::string identity;
  Int max_weight = 10;
};

Vec parse_weight(const std::string& text, int rank) {
  std::vector<Int> coords;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty weight");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    coords.push_back(Integer::parse(tok).to_int64());
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != rank) {
    throw ParseError("weight '" + text + "' has " + std::to_string(coords.size()) +
                     " coordinates, expected " + std::to_string(rank));
  }
  Vec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = coords[static_cast<std::size_t>(i)];
  return v;
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  if (text.empty()) return word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Int g = Integer::parse(tok).to_int64();
    if (g < 0 || g > rank) throw ParseError("word letter " + tok + " out of range 0.." + std::to_string(rank));
    word.push_back(static_cast<int>(g));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return word;
}

std::string weight_str(const Vec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Flag beats CHARP_CACHE, which beats "no cache".
std::optional<std::filesystem::path> cache_path(const Options& opt, const CartanType& type) {
  std::string dir = opt.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("CHARP_CACHE")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return std::filesystem::path(dir) / (type.affine_key() + ".klcache");
}

struct Session {
  std::unique_ptr<Engine> engine;
  std::optional<std::filesystem::path> cache_file;

  explicit Session(const Options& opt, bool use_cache = true) {
    CartanType type = CartanType::parse(opt.type);
    EngineOptions eopt;
    eopt.max_len = opt.max_len;
    engine = std::make_unique<Engine>(type, opt.p, eopt);
    if (use_cache) {
      cache_file = cache_path(opt, type);
      if (cache_file && std::filesystem::exists(*cache_file)) {
        engine->kl().absorb(KLCache::load(*cache_file));
      }
    }
  }

  void save_cache() {
    if (!cache_file) return;
    std::filesystem::create_directories(cache_file->parent_path());
    KLCache cache;
    if (std::filesystem::exists(*cache_file)) cache = KLCache::load(*cache_file);
    engine->kl().export_into(cache);
    cache.store(*cache_file);
  }
};

void print_character(const Options& opt, Engine& engine, const Vec& lambda, const std::string& kind,
                     std::optional<Int> k, const GroupRingElement& ch) {
  if (opt.format == "json") {
    CharacterDocument doc{engine.datum().type(), engine.p(), lambda, kind, k, ch};
    std::cout << render_character(doc).dump() << "\n";
  } else {
    std::cout << kind << (k ? "[k=" + std::to_string(*k) + "]" : "") << "(" << weight_str(lambda)
              << ") = " << ch.to_string() << "\n";
    std::cout << "dimension = " << ch.dimension().to_string() << "\n";
  }
}

void print_matrix(const Options& opt, const CoeffMatrix& m, const Vec& lambda) {
  if (opt.format == "json") {
    std::cout << render_matrix(m, lambda).dump() << "\n";
    return;
  }
  std::cout << (m.kind == CoeffMatrix::Kind::P ? "p" : "q") << "-matrix, columns:";
  for (const auto& w : m.weights) std::cout << " " << weight_str(w);
  std::cout << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::cout << (j ? " " : "") << m.at(i, j).to_string();
    }
    std::cout << "   # " << weight_str(m.weights[i]) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Characters of irreducible modular representations of simple algebraic groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool needs_weight) {
    cmd->add_option("--type", opt.type, "Cartan type, e.g. A1, B2, G2")->required();
    cmd->add_option("--p", opt.p, "characteristic (prime)")->required();
    if (needs_weight) {
      cmd->add_option("--weight", opt.weight, "weight, comma-separated fundamental-weight coordinates")
          ->required();
    }
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cache-dir", opt.cache_dir, "KL cache directory (overrides CHARP_CACHE)");
    cmd->add_option("--max-len", opt.max_len, "affine table length bound");
  };

  auto* cmd_char = app.add_subcommand("char", "irreducible character E_infinity of V_lambda");
  add_common(cmd_char, true);
  auto* cmd_weylchar = app.add_subcommand("weylchar", "Weyl character E^0");
  add_common(cmd_weylchar, true);
  auto* cmd_ek = app.add_subcommand("ek", "the element E^k");
  add_common(cmd_ek, true);
  cmd_ek->add_option("--k", opt.k, "recursion level k")->required()->check(CLI::NonNegativeNumber);
  auto* cmd_digits = app.add_subcommand("digits", "p-adic digits of a dominant weight");
  add_common(cmd_digits, true);
  auto* cmd_pmat = app.add_subcommand("pmat", "p-coefficient matrix over the linkage class");
  add_common(cmd_pmat, true);
  auto* cmd_qmat = app.add_subcommand("qmat", "q-coefficient matrix over the linkage class");
  add_common(cmd_qmat, true);
  auto* cmd_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{y,w}");
  add_common(cmd_kl, false);
  cmd_kl->add_option("--y", opt.y_word, "word for y over generators 0..rank (empty = identity)");
  cmd_kl->add_option("--w", opt.w_word, "word for w over generators 0..rank (empty = identity)");
  auto* cmd_verify = app.add_subcommand("verify", "machine-verify one of the proved identities");
  add_common(cmd_verify, false);
  cmd_verify->add_option("identity", opt.identity, "identity id: 4b 4c 4d 5stab 5c 5d 6a 6b 6c 8a")
      ->required();
  cmd_verify->add_option("--max-weight", opt.max_weight, "verify all dominant weights with coordinates <= N");

  CLI11_PARSE(app, argc, argv);

  if (cmd_digits->parsed()) {
    // No affine machinery needed.
    RootDatum rd(CartanType::parse(opt.type));
    validate_characteristic(opt.p);
    Vec lambda = parse_weight(opt.weight, rd.rank());
    auto digits = p_adic_digits(rd, lambda, opt.p);
    if (opt.format == "json") {
      nlohmann::json j;
      j["type"] = rd.type().to_string();
      j["p"] = opt.p;
      j["lambda"] = nlohmann::json::array();
      for (int i = 0; i < rd.rank(); ++i) j["lambda"].push_back(lambda[i]);
      j["digits"] = nlohmann::json::array();
      for (const auto& d : digits) {
        nlohmann::json a = nlohmann::json::array();
        for (int i = 0; i < rd.rank(); ++i) a.push_back(d[i]);
        j["digits"].push_back(std::move(a));
      }
      std::cout << j.dump() << "\n";
    } else {
      std::string out;
      for (const auto& d : digits) {
        if (!out.empty()) out += ",";
        out += weight_str(d);
      }
      std::cout << out << "\n";
    }
    return 0;
  }

  Session session(opt);
  Engine& engine = *session.engine;
  const int rank = engine.datum().rank();

  if (cmd_char->parsed()) {
    Vec lambda = parse_weight(opt.weight, rank);
    CharacterResult result = engine.irreducible_character(lambda);
    for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << "\n";
    print_character(opt, engine, lambda, "E_infinity", std::nullopt, result.character);
  } else if (cmd_weylchar->parsed()) {
    Vec lambda = parse_weight(opt.weight, rank);
    print_character(opt, engine, lambda, "E_0", std::nullopt, engine.weyl_character(lambda));
  } else if (cmd_ek->parsed()) {
    Vec lambda = parse_weight(opt.weight, rank);
    print_character(opt, engine, lambda, "E_k", opt.k, engine.e_k(lambda, opt.k));
  } else if (cmd_pmat->parsed()) {
    Vec lambda = parse_weight(opt.weight, rank);
    print_matrix(opt, engine.p_matrix(lambda), lambda);
  } else if (cmd_qmat->parsed()) {
    Vec lambda = parse_weight(opt.weight, rank);
    print_matrix(opt, engine.q_matrix(lambda), lambda);
  } else if (cmd_kl->parsed()) {
    AffineElement y = engine.affine_table().element_of_word(parse_word(opt.y_word, rank));
    AffineElement w = engine.affine_table().element_of_word(parse_word(opt.w_word, rank));
    KLPolynomial poly = engine.kl().polynomial(y, w);
    if (opt.format == "json") {
      nlohmann::json j;
      j["type"] = engine.datum().type().affine_key();
      j["y"] = opt.y_word;
      j["w"] = opt.w_word;
      j["coefficients"] = nlohmann::json::array();
      for (const auto& c : poly.coeffs()) j["coefficients"].push_back(c.to_int64());
      j["polynomial"] = poly.to_string();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << poly.to_string() << "\n";
    }
  } else if (cmd_verify->parsed()) {
    IdentityId id = parse_identity(opt.identity);
    VerifySample sample;
    sample.lambdas = weight_box(engine.datum(), opt.max_weight);
    VerifyReport report = verify(engine, id, sample);
    if (opt.format == "json") {
      nlohmann::json cases = nlohmann::json::array();
      for (const auto& c : report.cases) {
        nlohmann::json jc;
        jc["case"] = c.description;
        jc["status"] = c.status == CaseStatus::Pass
                           ? "pass"
                           : (c.status == CaseStatus::Fail ? "fail" : "outside validity range");
        if (!c.detail.empty()) jc["detail"] = c.detail;
        cases.push_back(std::move(jc));
      }
      nlohmann::json j;
      j["identity"] = identity_name(id);
      j["passed"] = report.passed;
      j["failed"] = report.failed;
      j["outside_validity"] = report.outside;
      j["cases"] = std::move(cases);
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& c : report.cases) {
        switch (c.status) {
          case CaseStatus::Pass: std::cout << "PASS " << identity_name(id) << " " << c.description << "\n"; break;
          case CaseStatus::Fail:
            std::cout << "FAIL " << identity_name(id) << " " << c.description << ": " << c.detail << "\n";
            break;
          case CaseStatus::OutsideValidity:
            std::cout << "OUTSIDE-VALIDITY " << identity_name(id) << " " << c.description
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            break;
        }
      }
      std::cout << "verify " << identity_name(id) << ": " << report.passed << " passed, " << report.failed
                << " failed, " << report.outside << " outside validity range\n";
    }
    session.save_cache();
    return report.ok() ? 0 : 3;
  }

  session.save_cache();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidCartanType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidCharacteristic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotDominant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CacheTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CacheVersionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CacheFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
