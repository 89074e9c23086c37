#ifndef CHARP_WEYL_HPP
#define CHARP_WEYL_HPP

#include <vector>

#include "charp/cartan.hpp"

namespace charp {

// Finite Weyl group element: matrix of the action on fundamental-weight
// coordinates together with a reduced word (0-based generator indices).
// Enumeration always stores the lexicographically smallest reduced word.
struct WeylElement {
  Mat matrix;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

// Matrix of s_i on fundamental-weight coordinates.
Mat weyl_generator_matrix(const RootDatum& rd, int i);

// lambda - <coroot_i, lambda> alpha_i.
Vec simple_reflection(const RootDatum& rd, int i, const Vec& lambda);

// Full enumeration by breadth-first closure on matrices, identity first,
// nondecreasing length.  Enumerating a group larger than `bound` throws
// BoundExceeded before any work is done.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, Int bound = 1000000);

  const RootDatum& datum() const { return *rd_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  // Distinct weights in the orbit of a weight.
  std::vector<Vec> orbit(const Vec& lambda) const;

 private:
  const RootDatum* rd_;
  std::vector<WeylElement> elements_;
};

struct ToDominant {
  Vec dominant;
  WeylElement w;  // w(dominant) = input
  int sign;
};

// Deterministic: repeatedly reflect at the smallest index with a negative
// coordinate.
ToDominant to_dominant(const RootDatum& rd, const Vec& lambda);

// The coroot set R^ as a Weyl orbit of the simple coroots.
const std::vector<Coroot>& coroot_set(const RootDatum& rd);

}  // namespace charp

#endif
