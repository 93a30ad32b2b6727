#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isopoly {

/// A bijection on {0..n-1}, stored as its image array: sigma(i) = image[i].
/// Immutable after construction; ordering is lexicographic on the image.
class Permutation {
 public:
  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img), unchecked{});
  }

  /// Validates that `image` is a bijection on {0..n-1}.
  static Permutation from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("permutation image is not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
    return Permutation(std::move(image), unchecked{});
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv), unchecked{});
  }

  /// Composition acting left-to-right through application: result(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(image_.size());
    for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(img), unchecked{});
  }

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  struct unchecked {};
  Permutation(std::vector<int> image, unchecked) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// Calls f(sigma) for every permutation of {0..n-1} in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  do {
    f(Permutation::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

/// |{i : sigma(i) = pi(i)}|, the trace of P Q^T.
inline int agreement_count(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw std::invalid_argument("agreement_count: size mismatch");
  int count = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) == pi(i)) ++count;
  return count;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace isopoly
