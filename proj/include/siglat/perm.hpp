#pragma once

#include <string>
#include <vector>

namespace siglat {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Composition acts on points from the left: (p*q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return int(img_.size()); }
  int apply(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;

  bool is_identity() const;
  int order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

/// Parses cycle notation, e.g. "(1 2 3)(4 5)". Points are 1-based in text
/// and 0-based internally; "()" is the identity. Points past the cycles are
/// fixed up to `degree`.
Permutation parse_cycles(const std::string& text, int degree);

/// Formats a permutation back into 1-based cycle notation.
std::string to_cycles(const Permutation& p);

}  // namespace siglat
