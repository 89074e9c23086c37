#include "charp/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "charp/errors.hpp"

namespace charp {

Vec vec_of(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

CartanType::CartanType(char series_, int rank_) : series(series_), rank(rank_) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank == 6 || rank == 7 || rank == 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    throw InvalidCartanType("invalid Cartan type " + std::string(1, series) + std::to_string(rank));
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + std::string(text) + "'");
  char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 100) {
      throw InvalidCartanType("cannot parse Cartan type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
  }
  return CartanType(s, rank);
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

std::string CartanType::affine_key() const { return std::string(1, series) + "~" + std::to_string(rank); }

Integer CartanType::weyl_order() const {
  auto factorial = [](int n) {
    Integer r(1);
    for (int i = 2; i <= n; ++i) r *= Integer(i);
    return r;
  };
  auto pow2 = [](int n) {
    Integer r(1);
    for (int i = 0; i < n; ++i) r *= Integer(2);
    return r;
  };
  switch (series) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return pow2(rank) * factorial(rank);
    case 'D': return pow2(rank - 1) * factorial(rank);
    case 'E':
      if (rank == 6) return Integer(51840);
      if (rank == 7) return Integer(2903040);
      return Integer(696729600);
    case 'F': return Integer(1152);
    default: return Integer(12);  // G2
  }
}

namespace {

struct Diagram {
  std::vector<Int> d;                        // half squared root lengths
  std::vector<std::pair<int, int>> edges;    // adjacency, 0-based Bourbaki
  Int coxeter_number;
};

Diagram diagram_of(const CartanType& t) {
  const int n = t.rank;
  Diagram g;
  g.d.assign(n, 1);
  auto path = [&]() {
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (t.series) {
    case 'A':
      path();
      g.coxeter_number = n + 1;
      break;
    case 'B':
      path();
      g.d.assign(n, 2);
      g.d[n - 1] = 1;  // last node short
      g.coxeter_number = 2 * n;
      break;
    case 'C':
      path();
      g.d[n - 1] = 2;  // last node long
      g.coxeter_number = 2 * n;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 2; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(n - 3, n - 2);
      g.edges.emplace_back(n - 3, n - 1);
      g.coxeter_number = 2 * n - 2;
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      g.edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(1, 3);
      g.coxeter_number = t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
      break;
    case 'F':
      path();
      g.d = {2, 2, 1, 1};
      g.coxeter_number = 12;
      break;
    default:  // G2, node 1 short, node 2 long
      path();
      g.d = {1, 3};
      g.coxeter_number = 6;
      break;
  }
  return g;
}

}  // namespace

// Exact determinant by fraction-free Bareiss elimination.
Int det_exact(Mat m) {
  const Eigen::Index n = m.rows();
  Int prev = 1;
  Int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (chk_sub(chk_mul(m(i, j), m(k, k)), chk_mul(m(i, k), m(k, j)))) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? sign : chk_mul(sign, m(n - 1, n - 1));
}

Mat adjugate_exact(const Mat& m) {
  const Eigen::Index n = m.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  Mat minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index mr = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == i) continue;
        Eigen::Index mc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int cof = det_exact(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
    }
  }
  return adj;
}

RootDatum::RootDatum(CartanType type) : type_(type) {
  const int n = type_.rank;
  const Diagram g = diagram_of(type_);

  cartan_ = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) cartan_(i, i) = 2;
  for (auto [i, j] : g.edges) {
    Int m = std::max(g.d[i], g.d[j]);
    cartan_(i, j) = -m / g.d[i];
    cartan_(j, i) = -m / g.d[j];
  }

  rho_ = Vec::Ones(n);

  simple_coroots_.resize(n);
  for (int i = 0; i < n; ++i) {
    simple_coroots_[i].coords = Vec::Zero(n);
    simple_coroots_[i].coords[i] = 1;
    simple_coroots_[i].paired_root = cartan_.col(i);
  }

  // Close the simple coroots under all simple reflections.  The reflection
  // s_j acts on coroot coordinates by b -> b - (b . C e_j) e_j and on the
  // paired root (fundamental-weight coordinates) by x -> x - x_j alpha_j.
  std::map<Vec, Vec, VecLexLess> orbit;  // coroot coords -> paired root
  std::vector<Vec> frontier;
  for (const auto& c : simple_coroots_) {
    orbit.emplace(c.coords, c.paired_root);
    frontier.push_back(c.coords);
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& b : frontier) {
      const Vec root = orbit.at(b);
      for (int j = 0; j < n; ++j) {
        Int pj = 0;
        for (int i = 0; i < n; ++i) pj += b[i] * cartan_(i, j);
        Vec nb = b;
        nb[j] -= pj;
        Vec nroot = root;
        nroot -= root[j] * cartan_.col(j);
        if (orbit.emplace(nb, nroot).second) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  coroots_.reserve(orbit.size());
  for (auto& [coords, root] : orbit) coroots_.push_back({coords, root});
  for (const auto& c : coroots_) {
    bool pos = true;
    for (int i = 0; i < n; ++i) pos = pos && c.coords[i] >= 0;
    if (pos) positive_coroots_.push_back(c);
  }

  // Highest coroot: the unique positive y in the coroot set with
  // y + coroot_i outside the set for every i.
  std::set<Vec, VecLexLess> coord_set;
  for (const auto& c : coroots_) coord_set.insert(c.coords);
  const Coroot* highest = nullptr;
  for (const auto& c : positive_coroots_) {
    bool top = true;
    for (int i = 0; i < n && top; ++i) {
      Vec up = c.coords;
      up[i] += 1;
      top = coord_set.find(up) == coord_set.end();
    }
    if (top) {
      if (highest != nullptr) throw ConsistencyError("highest coroot is not unique");
      highest = &c;
    }
  }
  if (highest == nullptr) throw ConsistencyError("no highest coroot found");
  highest_coroot_ = *highest;

  coxeter_number_ = g.coxeter_number;
  if (coxeter_number_ != 1 + highest_coroot_.coords.sum()) {
    throw ConsistencyError("Coxeter number does not match the height of the highest coroot");
  }
  if (static_cast<Int>(coroots_.size()) != Int(n) * coxeter_number_) {
    throw ConsistencyError("coroot count differs from rank * Coxeter number");
  }

  det_ = det_exact(cartan_);
  adjugate_ = adjugate_exact(cartan_);

  height_functional_ = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) height_functional_[j] += adjugate_(i, j);
  }

  form_ = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) form_(i, j) = chk_mul(g.d[i], adjugate_(i, j));
  }
  if (form_ != form_.transpose().eval()) {
    throw ConsistencyError("invariant form is not symmetric");
  }
}

Int RootDatum::height(const Vec& weight) const {
  check_rank(weight);
  Int h = 0;
  for (int i = 0; i < rank(); ++i) h = chk_add(h, chk_mul(height_functional_[i], weight[i]));
  return h;
}

Int RootDatum::form(const Vec& x, const Vec& y) const {
  check_rank(x);
  check_rank(y);
  Int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      acc = chk_add(acc, chk_mul(chk_mul(x[i], form_(i, j)), y[j]));
    }
  }
  return acc;
}

void RootDatum::check_rank(const Vec& weight) const {
  if (weight.size() != rank()) {
    throw RankMismatch("weight has " + std::to_string(weight.size()) + " coordinates, rank is " +
                       std::to_string(rank()));
  }
}

Int pairing(const Coroot& y, const Vec& lambda) {
  if (y.coords.size() != lambda.size()) {
    throw RankMismatch("coroot and weight come from different root data");
  }
  Int acc = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) acc = chk_add(acc, chk_mul(y.coords[i], lambda[i]));
  return acc;
}

bool is_dominant(const RootDatum& rd, const Vec& lambda) {
  rd.check_rank(lambda);
  return (lambda.array() >= 0).all();
}

std::pair<bool, bool> dominance_flags(const RootDatum& rd, const Vec& lambda, Int p) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  bool dom = is_dominant(rd, lambda);
  bool restricted = dom && (lambda.array() <= p - 1).all();
  return {dom, restricted};
}

bool dominance_leq(const RootDatum& rd, const Vec& lo, const Vec& hi) {
  rd.check_rank(lo);
  rd.check_rank(hi);
  // Solve C x = hi - lo exactly: x = adj(C) (hi - lo) / det(C); the
  // difference is a nonnegative root combination iff all entries are
  // nonnegative multiples of det.
  const Vec delta = hi - lo;
  for (int i = 0; i < rd.rank(); ++i) {
    Int num = 0;
    for (int j = 0; j < rd.rank(); ++j) num = chk_add(num, chk_mul(rd.cartan_adjugate()(i, j), delta[j]));
    if (num < 0 || num % rd.cartan_det() != 0) return false;
  }
  return true;
}

std::vector<Vec> p_adic_digits(const RootDatum& rd, const Vec& lambda, Int p) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  if (!is_dominant(rd, lambda)) {
    throw NotDominant("p-adic digits need a dominant weight");
  }
  std::vector<Vec> digits;
  Vec rest = lambda;
  while ((rest.array() != 0).any()) {
    Vec digit(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) {
      digit[i] = rest[i] % p;
      rest[i] /= p;
    }
    digits.push_back(std::move(digit));
  }
  return digits;
}

Vec p_adic_digit(const RootDatum& rd, const Vec& lambda, Int p, int k) {
  auto digits = p_adic_digits(rd, lambda, p);
  if (k < 0 || static_cast<std::size_t>(k) >= digits.size()) return Vec::Zero(rd.rank());
  return digits[static_cast<std::size_t>(k)];
}

void validate_characteristic(Int p) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2, got " + std::to_string(p));
  for (Int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw InvalidCharacteristic("p must be prime, got composite " + std::to_string(p) + " = " +
                                  std::to_string(d) + " * " + std::to_string(p / d));
    }
  }
}

}  // namespace charp
