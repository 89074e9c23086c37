#include "charp/kl.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "charp/errors.hpp"

namespace charp {

Integer KLPolynomial::at_one() const {
  Integer s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

void KLPolynomial::add_scaled(const KLPolynomial& other, const Integer& scale, Int shift) {
  if (other.is_zero() || scale.is_zero()) return;
  std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need, Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i + static_cast<std::size_t>(shift)] += scale * other.coeffs_[i];
  }
  normalize();
}

std::string KLPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Integer& c = coeffs_[d];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += c.to_string();
    } else {
      if (c != Integer(1)) out += c.to_string() + "*";
      out += d == 1 ? "q" : "q^" + std::to_string(d);
    }
  }
  return out;
}

std::string KLCache::word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

KLCache::Word KLCache::word_from_string(const std::string& s) {
  Word w;
  if (s.empty()) return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw CacheFormatError("empty word letter in '" + s + "'");
    for (char c : tok) {
      if (c < '0' || c > '9') throw CacheFormatError("bad word letter '" + tok + "'");
    }
    w.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

KLCache KLCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open cache file " + path.string());
  std::string header;
  if (!std::getline(in, header)) throw CacheFormatError("empty cache file " + path.string());
  std::istringstream hs(header);
  std::string magic, version, type;
  hs >> magic >> version >> type;
  if (magic != "klcache" || type.empty()) {
    throw CacheFormatError("bad cache header '" + header + "'");
  }
  if (version != "1") throw CacheVersionError("unsupported cache version '" + version + "'");
  KLCache cache;
  cache.type_key = type;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t bar1 = line.find('|');
    std::size_t bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) {
      throw CacheFormatError("malformed cache line " + std::to_string(lineno) + ": '" + line + "'");
    }
    Word y = word_from_string(line.substr(0, bar1));
    Word w = word_from_string(line.substr(bar1 + 1, bar2 - bar1 - 1));
    std::vector<Integer> coeffs;
    std::string rest = line.substr(bar2 + 1);
    if (rest.empty()) throw CacheFormatError("missing coefficients on line " + std::to_string(lineno));
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        coeffs.push_back(Integer::parse(tok));
      } catch (const ParseError&) {
        throw CacheFormatError("bad coefficient '" + tok + "' on line " + std::to_string(lineno));
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    cache.entries[{std::move(y), std::move(w)}] = std::move(coeffs);
  }
  return cache;
}

void KLCache::store(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << "klcache 1 " << type_key << "\n";
    for (const auto& [words, coeffs] : entries) {
      out << word_to_string(words.first) << '|' << word_to_string(words.second) << '|';
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ',';
        out << coeffs[i].to_string();
      }
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

int KLComputer::descent_of(int w) const {
  if (rule_ == DescentRule::SmallestIndex) return table_->smallest_left_descent(w);
  int found = -1;
  for (int g = 0; g <= table_->datum().rank(); ++g) {
    if (table_->left_descent(g, w)) found = g;
  }
  if (found < 0) throw ConsistencyError("element of positive length has no left descent");
  return found;
}

const KLPolynomial& KLComputer::polynomial(int y, int w) {
  auto key = pack(y, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (!table_->bruhat_leq(y, w)) return zero_;
  KLPolynomial result;
  if (y == w) {
    result = KLPolynomial::one();
  } else {
    const int s = descent_of(w);
    const int sw = table_->left_mult(s, w);
    const int sy = table_->left_mult(s, y);
    if (table_->element(sy).length > table_->element(y).length) {
      result = polynomial(sy, w);
    } else {
      result = polynomial(sy, sw);
      result.add_scaled(polynomial(y, sw), Integer(1), 1);
      const Int ly = table_->element(y).length;
      const Int lw = table_->element(w).length;
      const Int lsw = lw - 1;
      for (Int lz = ly; lz < lsw; ++lz) {
        auto [first, last] = table_->length_range(lz);
        for (int z = first; z < last; ++z) {
          if (!table_->left_descent(s, z)) continue;
          Integer m = mu(z, sw);
          if (m.is_zero()) continue;
          if (!table_->bruhat_leq(y, z)) continue;
          result.add_scaled(polynomial(y, z), -m, (lw - lz) / 2);
        }
      }
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

KLPolynomial KLComputer::polynomial(const AffineElement& y, const AffineElement& w) {
  if (y.length > w.length) return KLPolynomial();
  table_->ensure_length(w.length);
  auto yid = table_->find(y.map);
  auto wid = table_->find(w.map);
  if (!yid || !wid) throw ConsistencyError("element not present in the affine table");
  return polynomial(*yid, *wid);
}

Integer KLComputer::mu(int z, int w) {
  if (z == w) return Integer(0);
  const Int gap = table_->element(w).length - table_->element(z).length;
  if (gap <= 0 || gap % 2 == 0) return Integer(0);
  if (!table_->bruhat_leq(z, w)) return Integer(0);
  return polynomial(z, w).coeff((gap - 1) / 2);
}

void KLComputer::absorb(const KLCache& cache) {
  if (cache.type_key != table_->datum().type().affine_key()) {
    throw CacheTypeError("cache is for type " + cache.type_key + ", session is " +
                         table_->datum().type().affine_key());
  }
  for (const auto& [words, coeffs] : cache.entries) {
    for (int g : words.first) {
      if (g > table_->datum().rank()) throw CacheFormatError("word letter out of range for type");
    }
    for (int g : words.second) {
      if (g > table_->datum().rank()) throw CacheFormatError("word letter out of range for type");
    }
    try {
      AffineElement y = table_->element_of_word(words.first);
      AffineElement w = table_->element_of_word(words.second);
      auto yid = table_->find(y.map);
      auto wid = table_->find(w.map);
      memo_.emplace(pack(*yid, *wid), KLPolynomial(coeffs));
    } catch (const BoundExceeded&) {
      // Entry lies beyond this session's table bound; leave it for later.
    }
  }
}

void KLComputer::export_into(KLCache& cache) const {
  cache.type_key = table_->datum().type().affine_key();
  for (const auto& [key, poly] : memo_) {
    const int y = static_cast<int>(key >> 32);
    const int w = static_cast<int>(key & 0xffffffffu);
    if (poly.is_zero()) continue;  // zero pairs are implied by Bruhat order
    cache.entries[{table_->element(y).word, table_->element(w).word}] = poly.coeffs();
  }
}

}  // namespace charp
