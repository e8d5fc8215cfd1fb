#pragma once

#include <cstdint>
#include <vector>

#include "viewcx/complex.hpp"
#include "viewcx/view.hpp"

namespace viewcx {

/// What each process's one snapshot returned in a one-round execution.
/// Invariants: p in views[p] for every p; the distinct snap sets form an
/// inclusion chain; the largest snap set is [n] (the last snapshot in an
/// execution runs after every write).
class ExecutionProfile {
public:
  static ExecutionProfile make(int n, std::vector<PidSet> views);

  int n() const { return n_; }
  PidSet view_of(Pid p) const { return views_[p]; }
  const std::vector<PidSet>& views() const { return views_; }

  bool operator==(const ExecutionProfile&) const = default;
  auto operator<=>(const ExecutionProfile&) const = default;

private:
  ExecutionProfile(int n, std::vector<PidSet> views) : n_(n), views_(std::move(views)) {}
  int n_;
  std::vector<PidSet> views_;
};

enum class ExecModel { snapshot, immediate };

/// Enumerates every realizable one-round profile, sorted.
///
/// Executions are enumerated at profile granularity, as stages: each stage
/// first admits a fresh nonempty set of writers, then a nonempty set of
/// snapshotters among the written-but-unsnapshotted. Any chain-consistent
/// profile is realizable this way (schedule the writes of snap_k \ snap_{k-1}
/// before the snapshots of group k), so this matches raw write/snapshot
/// interleavings exactly; the test suite brute-forces the raw interleavings
/// for small n to pin that equivalence down. The immediate model instead
/// walks ordered set partitions of [n]: a block writes and snapshots as one
/// concurrency class, so each process sees exactly the blocks up to and
/// including its own.
std::vector<ExecutionProfile> enumerate_profiles(int n, ExecModel model,
                                                 std::int64_t budget = 50'000'000);

/// Groups processes by identical snapshots into the columns of a view;
/// total on valid profiles and always top-dimensional.
View profile_to_view(const ExecutionProfile& p);

struct CrossValidationSide {
  std::int64_t profile_count = 0;
  std::int64_t top_count = 0;
  /// Views seen by exactly one route (expected empty).
  std::vector<SimplexKey> only_profiles;
  std::vector<SimplexKey> only_complex;

  bool ok() const { return only_profiles.empty() && only_complex.empty(); }
};

struct CrossValidationReport {
  int n = 0;
  CrossValidationSide snapshot;   // profiles vs top simplices of View^n
  CrossValidationSide immediate;  // profiles vs top simplices of χ(Δ^n)

  bool ok() const { return snapshot.ok() && immediate.ok(); }
};

/// Set equality between operationally enumerated executions and the
/// combinatorially built complexes, both models.
CrossValidationReport cross_validate(int n, const BuildOptions& options = {});

}  // namespace viewcx
