#include "charp/weyl.hpp"

#include <map>
#include <set>

#include "charp/errors.hpp"

namespace charp {

Mat weyl_generator_matrix(const RootDatum& rd, int i) {
  if (i < 0 || i >= rd.rank()) throw Error("generator index out of range: " + std::to_string(i));
  Mat m = Mat::Identity(rd.rank(), rd.rank());
  m.col(i) -= rd.cartan().col(i);  // lambda_i alpha_i contributes via column i
  return m;
}

Vec simple_reflection(const RootDatum& rd, int i, const Vec& lambda) {
  rd.check_rank(lambda);
  if (i < 0 || i >= rd.rank()) throw Error("generator index out of range: " + std::to_string(i));
  return lambda - lambda[i] * rd.simple_root(i);
}

namespace {

struct MatLexLess {
  bool operator()(const Mat& a, const Mat& b) const {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
      }
    }
    return false;
  }
};

}  // namespace

WeylGroup::WeylGroup(const RootDatum& rd, Int bound) : rd_(&rd) {
  if (rd.type().weyl_order() > Integer(bound)) {
    throw BoundExceeded("Weyl group of type " + rd.type().to_string() + " has " +
                            rd.type().weyl_order().to_string() + " elements, above the enumeration bound " +
                            std::to_string(bound),
                        bound, "weyl_bound");
  }
  const int n = rd.rank();
  std::vector<Mat> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = weyl_generator_matrix(rd, i);

  // BFS by left multiplication; index elements in discovery order so that
  // lengths are nondecreasing.
  std::map<Mat, int, MatLexLess> index;
  std::vector<Mat> mats{Mat::Identity(n, n)};
  std::vector<int> lengths{0};
  index.emplace(mats[0], 0);
  std::size_t head = 0;
  while (head < mats.size()) {
    const Mat cur = mats[head];
    const int len = lengths[head];
    ++head;
    for (int i = 0; i < n; ++i) {
      Mat next = gens[i] * cur;
      if (index.emplace(next, static_cast<int>(mats.size())).second) {
        mats.push_back(std::move(next));
        lengths.push_back(len + 1);
      }
    }
  }

  // Lexicographically smallest reduced word: the first letter is the
  // smallest left descent, the rest is the lex-min word of the shortened
  // element.
  elements_.resize(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    elements_[k].matrix = mats[k];
    if (lengths[k] == 0) continue;
    for (int i = 0; i < n; ++i) {
      Mat down = gens[i] * mats[k];
      auto it = index.find(down);
      if (it != index.end() && lengths[static_cast<std::size_t>(it->second)] == lengths[k] - 1) {
        elements_[k].word = elements_[static_cast<std::size_t>(it->second)].word;
        elements_[k].word.insert(elements_[k].word.begin(), i);
        break;
      }
    }
    if (elements_[k].length() != lengths[k]) throw ConsistencyError("Weyl BFS produced a non-reduced word");
  }
}

std::vector<Vec> WeylGroup::orbit(const Vec& lambda) const {
  rd_->check_rank(lambda);
  std::set<Vec, VecLexLess> seen;
  std::vector<Vec> out;
  for (const auto& w : elements_) {
    Vec img = w.matrix * lambda;
    if (seen.insert(img).second) out.push_back(std::move(img));
  }
  return out;
}

ToDominant to_dominant(const RootDatum& rd, const Vec& lambda) {
  rd.check_rank(lambda);
  Vec x = lambda;
  std::vector<int> word;
  Mat acc = Mat::Identity(rd.rank(), rd.rank());
  for (;;) {
    int i = -1;
    for (int j = 0; j < rd.rank(); ++j) {
      if (x[j] < 0) {
        i = j;
        break;
      }
    }
    if (i < 0) break;
    x = simple_reflection(rd, i, x);
    word.push_back(i);
    acc = acc * weyl_generator_matrix(rd, i);
  }
  ToDominant result;
  result.dominant = std::move(x);
  result.w.matrix = std::move(acc);
  result.w.word = std::move(word);
  result.sign = result.w.sign();
  return result;
}

const std::vector<Coroot>& coroot_set(const RootDatum& rd) { return rd.coroots(); }

}  // namespace charp
