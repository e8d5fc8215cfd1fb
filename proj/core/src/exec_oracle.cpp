#include "viewcx/exec_oracle.hpp"

#include <algorithm>
#include <map>

namespace viewcx {

ExecutionProfile ExecutionProfile::make(int n, std::vector<PidSet> views) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("profile: n must be in 0..15");
  if (static_cast<int>(views.size()) != n + 1)
    throw std::invalid_argument("profile: one snap set per process required");
  const PidSet full = PidSet::full(n);
  std::vector<PidSet> distinct;
  for (int p = 0; p <= n; ++p) {
    const PidSet v = views[static_cast<std::size_t>(p)];
    if (!v.subset_of(full) || !v.contains(static_cast<Pid>(p)))
      throw std::invalid_argument("profile: process must appear in its own snapshot");
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  }
  std::sort(distinct.begin(), distinct.end(),
            [](PidSet a, PidSet b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
    if (!distinct[i].strict_subset_of(distinct[i + 1]))
      throw std::invalid_argument("profile: snapshots must form an inclusion chain");
  if (distinct.back() != full)
    throw std::invalid_argument("profile: the last snapshot sees every write");
  return ExecutionProfile(n, std::move(views));
}

namespace {

void enumerate_snapshot(int n, std::int64_t budget, std::vector<ExecutionProfile>& out) {
  const std::uint16_t full = PidSet::full(n).bits();
  std::vector<PidSet> assign(static_cast<std::size_t>(n + 1));
  // Stage: fresh writers A (nonempty), then snapshotters B among the written
  // and not yet snapshotted (nonempty); everyone in B returns the write set.
  const auto rec = [&](auto&& self, std::uint16_t written, std::uint16_t snapped) -> void {
    if (snapped == full) {
      out.push_back(ExecutionProfile::make(n, assign));
      if (static_cast<std::int64_t>(out.size()) > budget)
        throw ResourceLimitError("profile budget exceeded");
      return;
    }
    for (Subsets a(static_cast<std::uint16_t>(full & ~written)); !a.done(); a.next()) {
      if (a.current() == 0) continue;
      const std::uint16_t now_written = written | a.current();
      const std::uint16_t candidates = now_written & static_cast<std::uint16_t>(~snapped);
      for (Subsets b(candidates); !b.done(); b.next()) {
        if (b.current() == 0) continue;
        for (Pid p : PidSet(b.current())) assign[p] = PidSet(now_written);
        self(self, now_written, snapped | b.current());
      }
    }
  };
  rec(rec, 0, 0);
}

void enumerate_immediate(int n, std::int64_t budget, std::vector<ExecutionProfile>& out) {
  const std::uint16_t full = PidSet::full(n).bits();
  std::vector<PidSet> assign(static_cast<std::size_t>(n + 1));
  // Ordered set partitions: each block writes and snapshots together, so its
  // members see the union of blocks so far.
  const auto rec = [&](auto&& self, std::uint16_t done) -> void {
    if (done == full) {
      out.push_back(ExecutionProfile::make(n, assign));
      if (static_cast<std::int64_t>(out.size()) > budget)
        throw ResourceLimitError("profile budget exceeded");
      return;
    }
    for (Subsets blk(static_cast<std::uint16_t>(full & ~done)); !blk.done(); blk.next()) {
      if (blk.current() == 0) continue;
      const std::uint16_t seen = done | blk.current();
      for (Pid p : PidSet(blk.current())) assign[p] = PidSet(seen);
      self(self, seen);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<ExecutionProfile> enumerate_profiles(int n, ExecModel model, std::int64_t budget) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_profiles: n must be in 1..5");
  std::vector<ExecutionProfile> out;
  if (model == ExecModel::snapshot) {
    enumerate_snapshot(n, budget, out);
  } else {
    enumerate_immediate(n, budget, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

View profile_to_view(const ExecutionProfile& p) {
  const int n = p.n();
  std::map<PidSet, PidSet> groups;  // snap -> pids that saw it; keys sort by mask
  for (int pid = 0; pid <= n; ++pid) {
    const PidSet snap = p.view_of(static_cast<Pid>(pid));
    groups[snap] = groups[snap] | PidSet::single(static_cast<Pid>(pid));
  }
  std::vector<ViewColumn> cols;
  cols.reserve(groups.size() + 1);
  for (const auto& [snap, group] : groups) cols.push_back(ViewColumn{snap, group});
  if (cols.back().snap != PidSet::full(n))
    cols.push_back(ViewColumn{PidSet::full(n), PidSet{}});
  return View::make(n, std::move(cols));
}

namespace {

std::vector<SimplexKey> top_keys(const Complex& c) {
  std::vector<SimplexKey> out;
  const std::size_t want = static_cast<std::size_t>(c.n() + 1);
  c.for_each_simplex([&](const SimplexKey& k) {
    if (k.size() == want) out.push_back(k);
  });
  std::sort(out.begin(), out.end());
  return out;
}

CrossValidationSide validate_side(const std::vector<ExecutionProfile>& profiles,
                                  const Complex& complex) {
  CrossValidationSide side;
  std::vector<SimplexKey> from_profiles;
  from_profiles.reserve(profiles.size());
  for (const ExecutionProfile& p : profiles)
    from_profiles.push_back(profile_to_view(p).local_views());
  std::sort(from_profiles.begin(), from_profiles.end());
  from_profiles.erase(std::unique(from_profiles.begin(), from_profiles.end()),
                      from_profiles.end());
  const std::vector<SimplexKey> tops = top_keys(complex);
  side.profile_count = static_cast<std::int64_t>(from_profiles.size());
  side.top_count = static_cast<std::int64_t>(tops.size());
  std::set_difference(from_profiles.begin(), from_profiles.end(), tops.begin(), tops.end(),
                      std::back_inserter(side.only_profiles));
  std::set_difference(tops.begin(), tops.end(), from_profiles.begin(), from_profiles.end(),
                      std::back_inserter(side.only_complex));
  return side;
}

}  // namespace

CrossValidationReport cross_validate(int n, const BuildOptions& options) {
  CrossValidationReport report;
  report.n = n;
  report.snapshot = validate_side(enumerate_profiles(n, ExecModel::snapshot, options.budget),
                                  build_view_complex(n, options));
  report.immediate = validate_side(enumerate_profiles(n, ExecModel::immediate, options.budget),
                                   build_chromatic(n, options));
  return report;
}

}  // namespace viewcx
