#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "viewcx/errors.hpp"
#include "viewcx/sets.hpp"

namespace viewcx {

/// A local view (V, x): process x saw exactly the processes in V.
/// Invariant: x in V, V a subset of [n]. These are the vertices of View^n.
struct LocalView {
  PidSet snap;
  Pid pid = 0;

  /// Checked construction; throws std::invalid_argument on pid not in snap.
  static LocalView make(PidSet snap, Pid pid);

  bool valid() const { return snap.contains(pid); }

  /// Canonical packing: (snap bits << 4) | pid. Numeric order on the packed
  /// value is the canonical order (snap mask major, pid minor).
  constexpr std::uint32_t encoded() const {
    return (static_cast<std::uint32_t>(snap.bits()) << 4) | pid;
  }

  constexpr bool operator==(const LocalView& o) const { return encoded() == o.encoded(); }
  constexpr auto operator<=>(const LocalView& o) const { return encoded() <=> o.encoded(); }

  std::string to_string() const;  // "({0,1},0)"
};

/// A simplex of View^n as its canonically sorted vertex set. Strictly
/// increasing in the LocalView order; the empty simplex is the empty vector.
using SimplexKey = std::vector<LocalView>;

bool key_is_canonical(const SimplexKey& key);
std::string key_to_string(const SimplexKey& key);

/// One column of the view matrix: the snapshot value and the processes
/// whose local view it is.
struct ViewColumn {
  PidSet snap;
  PidSet group;

  bool operator==(const ViewColumn&) const = default;
};

/// An n-view: a 2xt matrix of subsets of [n]
///
///     ( V_1 ... V_{t-1} [n]  )
///     ( I_1 ... I_{t-1} I_t  )
///
/// with 0 != V_1 < ... < V_{t-1} < [n] a strict chain, the groups I_k
/// pairwise disjoint, and 0 != I_k <= V_k for k < t. The last group may be
/// empty; every view is stored in this canonical form, so equal simplices
/// compare equal as values. Views of dimension d have d+1 local views; the
/// unique view of dimension -1 is ([n]; 0).
class View {
public:
  /// validate_view: returns the view iff the definition's conditions hold.
  /// Throws ViewError with the violated condition otherwise, and
  /// std::invalid_argument when n is out of 0..15 or a set spills past [n].
  static View make(int n, std::vector<ViewColumn> columns);

  /// The dimension -1 view ([n]; 0).
  static View empty(int n);

  int n() const { return n_; }
  int t() const { return static_cast<int>(cols_.size()); }
  std::span<const ViewColumn> columns() const { return cols_; }
  const ViewColumn& column(int k) const { return cols_[static_cast<std::size_t>(k)]; }

  /// |I_1| + ... + |I_t| - 1.
  int dim() const;

  /// All (V_k, x) with x in I_k, canonically sorted; size dim()+1.
  SimplexKey local_views() const;

  /// The dim()-many faces of codimension 1: drop one pid from one group,
  /// deleting a column that empties unless it is the last. Empty result for
  /// the dimension -1 view.
  std::vector<View> facets() const;

  /// U <= W as simplices: every local view of `u` is a local view of this.
  bool contains(const View& u) const;

  /// I_k <= V_k \ V_{k-1} for k = 2..t; vacuous for t = 1.
  bool immediate_snapshot() const;

  bool operator==(const View& o) const { return n_ == o.n_ && cols_ == o.cols_; }

  std::string to_string() const;  // "({0,1} {0} | {0,1,2} {1,2})"

private:
  View(int n, std::vector<ViewColumn> cols) : n_(n), cols_(std::move(cols)) {}

  int n_ = 0;
  std::vector<ViewColumn> cols_;

  friend class ViewBuilder;
};

/// Canonical order on views = lexicographic order of their simplex keys.
bool view_key_less(const View& a, const View& b);

enum class NotASimplexReason {
  chain_violation, // distinct snaps not totally ordered by strict inclusion
  duplicate_pid,   // some pid carries two local views
};

/// Reconstructs the unique view whose vertex set is `key`, or nullopt when
/// the key is not a simplex of View^n. Inverse of View::local_views.
std::optional<View> view_from_local_views(const SimplexKey& key, int n,
                                          NotASimplexReason* reason = nullptr);

/// Internal-use constructor for callers that guarantee validity (enumerators,
/// the symmetry action). Checks invariants in debug builds only.
class ViewBuilder {
public:
  static View unchecked(int n, std::vector<ViewColumn> cols);
};

}  // namespace viewcx
