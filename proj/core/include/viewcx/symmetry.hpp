#pragma once

#include <array>
#include <vector>

#include "viewcx/complex.hpp"
#include "viewcx/view.hpp"

namespace viewcx {

/// A permutation of [n], acting on local views, views, keys and complexes by
/// relabeling process ids.
class Permutation {
public:
  static Permutation identity(int n);
  /// Image table perm[p] = pi(p); must be a bijection of [n].
  static Permutation from_images(int n, const std::vector<int>& images);
  /// All (n+1)! permutations in lexicographic image-table order.
  static std::vector<Permutation> all(int n);

  int n() const { return n_; }
  Pid operator()(Pid p) const { return images_[p]; }
  bool is_identity() const;

  PidSet apply(PidSet s) const;
  LocalView apply(LocalView v) const;
  SimplexKey apply(const SimplexKey& key) const;
  /// Relabeling preserves the chain, so the image is again canonical.
  View apply(const View& w) const;

  std::vector<int> images() const;
  bool operator==(const Permutation&) const = default;

private:
  Permutation() = default;
  int n_ = 0;
  std::array<Pid, kMaxN + 1> images_{};
};

/// The S_[n]-orbit of a view, deduplicated and sorted by canonical key;
/// |orbit| * |stabilizer| = (n+1)!.
std::vector<View> orbit(const View& w);

/// The canonical representative: the orbit minimum under the key order.
View canonical_rep(const View& w);

std::vector<SimplexKey> key_orbit(const SimplexKey& key, int n);

/// σ is G-free in c iff it is free and for every permutation image
/// τ = π(σ) ≠ σ the coface sets F(K)_{>=σ} and F(K)_{>=τ} are disjoint.
/// Two coface sets intersect iff σ∪τ is a simplex of c, so the test reduces
/// to membership probes. Throws SimplexAbsentError when σ ∉ c.
bool is_g_free(const Complex& c, const SimplexKey& simplex);

}  // namespace viewcx
