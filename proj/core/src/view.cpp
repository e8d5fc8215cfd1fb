#include "viewcx/view.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace viewcx {

const char* to_string(ViewErrorCode code) {
  switch (code) {
    case ViewErrorCode::chain_violation: return "ChainViolation";
    case ViewErrorCode::disjointness_violation: return "DisjointnessViolation";
    case ViewErrorCode::empty_group: return "EmptyGroup";
    case ViewErrorCode::containment_violation: return "ContainmentViolation";
    case ViewErrorCode::last_column_not_full: return "LastColumnNotFull";
  }
  return "ViewError";
}

std::string PidSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Pid p : *this) {
    if (!first) out += ',';
    out += std::to_string(int(p));
    first = false;
  }
  out += '}';
  return out;
}

LocalView LocalView::make(PidSet snap, Pid pid) {
  if (pid > kMaxN || !snap.contains(pid))
    throw std::invalid_argument("local view requires pid in snap");
  return LocalView{snap, pid};
}

std::string LocalView::to_string() const {
  return "(" + snap.to_string() + "," + std::to_string(int(pid)) + ")";
}

bool key_is_canonical(const SimplexKey& key) {
  return std::is_sorted(key.begin(), key.end()) &&
         std::adjacent_find(key.begin(), key.end()) == key.end();
}

std::string key_to_string(const SimplexKey& key) {
  std::string out = "{";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ", ";
    out += key[i].to_string();
  }
  out += '}';
  return out;
}

View View::make(int n, std::vector<ViewColumn> columns) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("view: n must be in 0..15");
  if (columns.empty()) throw std::invalid_argument("view: at least one column required");
  const PidSet full = PidSet::full(n);
  for (const ViewColumn& c : columns) {
    if (!c.snap.subset_of(full) || !c.group.subset_of(full))
      throw std::invalid_argument("view: sets must be subsets of [n]");
  }
  const int t = static_cast<int>(columns.size());
  if (columns.back().snap != full)
    throw ViewError(ViewErrorCode::last_column_not_full, "view: V_t must equal [n]");
  PidSet prev;
  for (int k = 0; k + 1 < t; ++k) {
    const PidSet v = columns[static_cast<std::size_t>(k)].snap;
    if (v.empty() || !(k == 0 ? true : prev.strict_subset_of(v)) || !v.strict_subset_of(full))
      throw ViewError(ViewErrorCode::chain_violation,
                      "view: snapshots must form a strict chain below [n]");
    prev = v;
  }
  PidSet used;
  for (int k = 0; k < t; ++k) {
    const ViewColumn& c = columns[static_cast<std::size_t>(k)];
    if (k + 1 < t) {
      if (c.group.empty())
        throw ViewError(ViewErrorCode::empty_group, "view: internal group column is empty");
      if (!c.group.subset_of(c.snap))
        throw ViewError(ViewErrorCode::containment_violation,
                        "view: group not contained in its snapshot");
    }
    if (c.group.intersects(used))
      throw ViewError(ViewErrorCode::disjointness_violation, "view: groups must be disjoint");
    used = used | c.group;
  }
  return View(n, std::move(columns));
}

View View::empty(int n) {
  return ViewBuilder::unchecked(n, {ViewColumn{PidSet::full(n), PidSet{}}});
}

View ViewBuilder::unchecked(int n, std::vector<ViewColumn> cols) {
#ifndef NDEBUG
  return View::make(n, std::move(cols));
#else
  return View(n, std::move(cols));
#endif
}

int View::dim() const {
  int total = 0;
  for (const ViewColumn& c : cols_) total += c.group.size();
  return total - 1;
}

SimplexKey View::local_views() const {
  SimplexKey key;
  key.reserve(static_cast<std::size_t>(dim() + 1));
  // Columns are a strict chain, so snap masks increase along the matrix and
  // the per-column pid order already yields the canonical sorted key.
  for (const ViewColumn& c : cols_)
    for (Pid p : c.group) key.push_back(LocalView{c.snap, p});
  assert(key_is_canonical(key));
  return key;
}

std::vector<View> View::facets() const {
  std::vector<View> out;
  const int t = static_cast<int>(cols_.size());
  for (int k = 0; k < t; ++k) {
    for (Pid p : cols_[static_cast<std::size_t>(k)].group) {
      std::vector<ViewColumn> cols = cols_;
      ViewColumn& c = cols[static_cast<std::size_t>(k)];
      c.group = c.group.minus(PidSet::single(p));
      if (c.group.empty() && k + 1 < t) cols.erase(cols.begin() + k);
      out.push_back(ViewBuilder::unchecked(n_, std::move(cols)));
    }
  }
  return out;
}

bool View::contains(const View& u) const {
  const SimplexKey big = local_views();
  const SimplexKey small = u.local_views();
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool View::immediate_snapshot() const {
  PidSet prev;
  for (const ViewColumn& c : cols_) {
    if (c.group.intersects(prev)) return false;
    prev = c.snap;
  }
  return true;
}

std::string View::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    if (k) os << " | ";
    os << cols_[k].snap.to_string() << " " << cols_[k].group.to_string();
  }
  os << ")";
  return os.str();
}

bool view_key_less(const View& a, const View& b) {
  const SimplexKey ka = a.local_views();
  const SimplexKey kb = b.local_views();
  return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

std::optional<View> view_from_local_views(const SimplexKey& key, int n,
                                          NotASimplexReason* reason) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("view: n must be in 0..15");
  for (const LocalView& lv : key)
    if (!lv.valid() || !lv.snap.subset_of(PidSet::full(n)))
      throw std::invalid_argument("malformed local view");
  SimplexKey sorted = key;
  std::sort(sorted.begin(), sorted.end());

  PidSet pids;
  for (const LocalView& lv : sorted) {
    if (pids.contains(lv.pid)) {
      if (reason) *reason = NotASimplexReason::duplicate_pid;
      return std::nullopt;
    }
    pids = pids | PidSet::single(lv.pid);
  }

  // Group consecutive equal snaps; keys are sorted by snap mask, so distinct
  // snaps appear in mask order, which must then be a strict inclusion chain.
  std::vector<ViewColumn> cols;
  for (const LocalView& lv : sorted) {
    if (!cols.empty() && cols.back().snap == lv.snap) {
      cols.back().group = cols.back().group | PidSet::single(lv.pid);
    } else {
      if (!cols.empty() && !cols.back().snap.strict_subset_of(lv.snap)) {
        if (reason) *reason = NotASimplexReason::chain_violation;
        return std::nullopt;
      }
      cols.push_back(ViewColumn{lv.snap, PidSet::single(lv.pid)});
    }
  }
  const PidSet full = PidSet::full(n);
  if (cols.empty() || cols.back().snap != full) cols.push_back(ViewColumn{full, PidSet{}});
  return ViewBuilder::unchecked(n, std::move(cols));
}

}  // namespace viewcx
