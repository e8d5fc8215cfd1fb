#include "viewcx/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace viewcx {

Permutation Permutation::identity(int n) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("permutation: n must be in 0..15");
  Permutation pi;
  pi.n_ = n;
  for (int p = 0; p <= n; ++p) pi.images_[static_cast<std::size_t>(p)] = static_cast<Pid>(p);
  return pi;
}

Permutation Permutation::from_images(int n, const std::vector<int>& images) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("permutation: n must be in 0..15");
  if (static_cast<int>(images.size()) != n + 1)
    throw std::invalid_argument("permutation: image table must have n+1 entries");
  PidSet seen;
  Permutation pi;
  pi.n_ = n;
  for (int p = 0; p <= n; ++p) {
    const int img = images[static_cast<std::size_t>(p)];
    if (img < 0 || img > n || seen.contains(static_cast<Pid>(img)))
      throw std::invalid_argument("permutation: image table is not a bijection of [n]");
    seen = seen | PidSet::single(static_cast<Pid>(img));
    pi.images_[static_cast<std::size_t>(p)] = static_cast<Pid>(img);
  }
  return pi;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> images(static_cast<std::size_t>(n + 1));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(from_images(n, images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (int p = 0; p <= n_; ++p)
    if (images_[static_cast<std::size_t>(p)] != p) return false;
  return true;
}

PidSet Permutation::apply(PidSet s) const {
  std::uint16_t bits = 0;
  for (Pid p : s) bits |= static_cast<std::uint16_t>(1u << images_[p]);
  return PidSet(bits);
}

LocalView Permutation::apply(LocalView v) const {
  return LocalView{apply(v.snap), images_[v.pid]};
}

SimplexKey Permutation::apply(const SimplexKey& key) const {
  SimplexKey out;
  out.reserve(key.size());
  for (const LocalView& lv : key) out.push_back(apply(lv));
  std::sort(out.begin(), out.end());
  return out;
}

View Permutation::apply(const View& w) const {
  std::vector<ViewColumn> cols;
  cols.reserve(static_cast<std::size_t>(w.t()));
  for (const ViewColumn& c : w.columns()) cols.push_back(ViewColumn{apply(c.snap), apply(c.group)});
  return ViewBuilder::unchecked(w.n(), std::move(cols));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(static_cast<std::size_t>(n_ + 1));
  for (int p = 0; p <= n_; ++p) out[static_cast<std::size_t>(p)] = images_[static_cast<std::size_t>(p)];
  return out;
}

std::vector<View> orbit(const View& w) {
  std::vector<View> out;
  for (const Permutation& pi : Permutation::all(w.n())) {
    View img = pi.apply(w);
    bool fresh = true;
    for (const View& seen : out) {
      if (seen == img) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end(), view_key_less);
  return out;
}

View canonical_rep(const View& w) { return orbit(w).front(); }

std::vector<SimplexKey> key_orbit(const SimplexKey& key, int n) {
  std::vector<SimplexKey> out;
  for (const Permutation& pi : Permutation::all(n)) {
    SimplexKey img = pi.apply(key);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_g_free(const Complex& c, const SimplexKey& simplex) {
  if (!c.contains(simplex)) throw SimplexAbsentError("is_g_free: simplex not in complex");
  if (!c.is_free(simplex)) return false;
  SimplexKey merged;
  for (const SimplexKey& image : key_orbit(simplex, c.n())) {
    if (image == simplex) continue;
    merged.clear();
    std::set_union(simplex.begin(), simplex.end(), image.begin(), image.end(),
                   std::back_inserter(merged));
    if (c.contains(merged)) return false;  // a common coface exists
  }
  return true;
}

}  // namespace viewcx
