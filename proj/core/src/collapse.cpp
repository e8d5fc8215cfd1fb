#include "viewcx/collapse.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "viewcx/symmetry.hpp"

namespace viewcx {

const char* to_string(CollapseMode m) {
  return m == CollapseMode::plain ? "plain" : "equivariant";
}

const char* to_string(CollapseTarget t) {
  return t == CollapseTarget::chromatic ? "chromatic" : "void";
}

const char* to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::none: return "OK";
    case VerifyFailure::sequence_mismatch: return "SequenceMismatch";
    case VerifyFailure::batch_not_singleton: return "BatchNotSingleton";
    case VerifyFailure::batch_not_orbit: return "BatchNotOrbit";
    case VerifyFailure::rep_absent: return "RepAbsent";
    case VerifyFailure::not_free: return "NotFree";
    case VerifyFailure::g_free_violation: return "GFreeViolation";
    case VerifyFailure::interval_mismatch: return "IntervalMismatch";
    case VerifyFailure::phase_state_mismatch: return "PhaseStateMismatch";
    case VerifyFailure::final_state_mismatch: return "FinalStateMismatch";
  }
  return "?";
}

View phi(const View& w) {
  std::vector<ViewColumn> cols(w.columns().begin(), w.columns().end());
  const PidSet prev = cols.size() >= 2 ? cols[cols.size() - 2].snap : PidSet{};
  cols.back().group = cols.back().group & prev;
  return ViewBuilder::unchecked(w.n(), std::move(cols));
}

View psi(const View& w) {
  std::vector<ViewColumn> cols(w.columns().begin(), w.columns().end());
  const PidSet prev = cols.size() >= 2 ? cols[cols.size() - 2].snap : PidSet{};
  // [n] \ V_{t-1} misses every earlier group (each lies inside V_{t-1}),
  // so the enlarged last group keeps the columns disjoint.
  cols.back().group = cols.back().group | prev.complement_in(w.n());
  return ViewBuilder::unchecked(w.n(), std::move(cols));
}

Interval Interval::of(const View& w) {
  View rep = phi(w);
  View hi = psi(rep);
  return Interval(std::move(rep), std::move(hi));
}

int Interval::rank() const { return hi_.dim() - rep_.dim(); }

bool Interval::member(const View& u) const {
  return u.contains(rep_) && hi_.contains(u);
}

std::vector<SimplexKey> Interval::member_keys() const {
  const SimplexKey lo_key = rep_.local_views();
  const SimplexKey hi_key = hi_.local_views();
  SimplexKey extra;
  std::set_difference(hi_key.begin(), hi_key.end(), lo_key.begin(), lo_key.end(),
                      std::back_inserter(extra));
  std::vector<SimplexKey> out;
  out.reserve(std::size_t{1} << extra.size());
  for (std::uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
    SimplexKey k = lo_key;
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (mask & (1u << i)) k.push_back(extra[i]);
    std::sort(k.begin(), k.end());
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool rep_order(const View& a, const View& b) {
  const int da = a.dim(), db = b.dim();
  if (da != db) return da > db;  // larger |V(rep)| first
  return view_key_less(a, b);
}

struct KeyLess {
  bool operator()(const SimplexKey& a, const SimplexKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

std::vector<Interval> interval_partition(const Complex& c) {
  if (c.is_void() || c.kind() == ComplexKind::derived)
    throw NotAViewComplexError("interval partition requires a built view/chromatic complex");
  std::map<SimplexKey, View, KeyLess> reps;
  c.for_each_simplex([&](const SimplexKey& key) {
    const std::optional<View> u = view_from_local_views(key, c.n());
    assert(u.has_value());
    View rep = phi(*u);
    SimplexKey rep_key = rep.local_views();
    reps.emplace(std::move(rep_key), std::move(rep));
  });
  std::vector<Interval> out;
  out.reserve(reps.size());
  for (const auto& [key, rep] : reps) out.push_back(Interval::of(rep));
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return rep_order(a.rep(), b.rep()); });
  return out;
}

namespace {

struct RepPools {
  std::vector<View> outside;  // reps with non-immediate-snapshot intervals
  std::vector<View> inside;   // reps inside χ(Δ^n)
};

// Φ(W) immediate-snapshot iff the whole interval lies in χ(Δ^n), so the rep
// classifies its interval.
RepPools split_reps(const std::vector<Interval>& partition) {
  RepPools pools;
  for (const Interval& iv : partition) {
    (iv.rep().immediate_snapshot() ? pools.inside : pools.outside).push_back(iv.rep());
  }
  return pools;
}

void require_source(const Complex& c, CollapseTarget target) {
  if (c.kind() == ComplexKind::chromatic && target == CollapseTarget::chromatic)
    throw std::invalid_argument("the chromatic target requires a view complex source");
}

}  // namespace

CollapseSequence plain_sequence(const Complex& c, CollapseTarget target) {
  require_source(c, target);
  const std::vector<Interval> partition = interval_partition(c);
  RepPools pools = split_reps(partition);
  std::sort(pools.outside.begin(), pools.outside.end(), rep_order);
  std::sort(pools.inside.begin(), pools.inside.end(), rep_order);

  CollapseSequence seq;
  seq.mode = CollapseMode::plain;
  seq.target = target;
  seq.n = c.n();
  seq.kind = c.kind();
  seq.phase_boundary = static_cast<int>(pools.outside.size());
  for (View& rep : pools.outside) seq.batches.push_back({std::move(rep)});
  if (target == CollapseTarget::to_void)
    for (View& rep : pools.inside) seq.batches.push_back({std::move(rep)});
  return seq;
}

CollapseSequence equivariant_sequence(const Complex& c, CollapseTarget target) {
  require_source(c, target);
  const std::vector<Interval> partition = interval_partition(c);
  RepPools pools = split_reps(partition);

  CollapseSequence seq;
  seq.mode = CollapseMode::equivariant;
  seq.target = target;
  seq.n = c.n();
  seq.kind = c.kind();

  Complex working = c;
  const auto run_phase = [&](std::vector<View>& reps) {
    std::sort(reps.begin(), reps.end(), rep_order);
    std::set<SimplexKey, KeyLess> scheduled;
    for (const View& rep : reps) {
      if (scheduled.count(rep.local_views())) continue;
      std::vector<View> batch = orbit(rep);
      // Orbit members are Φ-fixed reps of their own intervals; mark them off.
      for (const View& member : batch) scheduled.insert(member.local_views());
      if (!is_g_free(working, batch.front().local_views()))
        throw std::logic_error("equivariant_sequence: batch rep is not G-free");
      for (const View& member : batch) working.collapse_at_in_place(member.local_views());
      seq.batches.push_back(std::move(batch));
    }
  };

  run_phase(pools.outside);
  seq.phase_boundary = static_cast<int>(seq.batches.size());
  if (target == CollapseTarget::to_void) run_phase(pools.inside);
  return seq;
}

namespace {

struct Replay {
  const CollapseSequence& seq;
  Complex working;
  VerifyReport report;
  std::optional<Complex> chromatic_ref;

  const Complex& chromatic() {
    if (!chromatic_ref) chromatic_ref = build_chromatic(seq.n);
    return *chromatic_ref;
  }

  bool fail(VerifyFailure f, int batch_index, std::string detail) {
    report.ok = false;
    report.failure = f;
    if (batch_index >= 0) report.failed_batch = batch_index + 1;
    report.detail = std::move(detail);
    return false;
  }

  // Freeness from raw membership probes, independent of the generators'
  // interval bookkeeping: the coface set of a free σ is [σ, σ∪U] for the
  // extension set U.
  std::optional<SimplexKey> coface_top(const SimplexKey& key) const {
    PidSet used;
    for (const LocalView& lv : key) used = used | PidSet::single(lv.pid);
    SimplexKey extensions;
    for (const LocalView& v : working.vertices()) {
      if (used.contains(v.pid)) continue;
      SimplexKey probe = key;
      probe.insert(std::lower_bound(probe.begin(), probe.end(), v), v);
      if (working.contains(probe)) extensions.push_back(v);
    }
    if (extensions.empty()) return std::nullopt;
    SimplexKey top;
    std::set_union(key.begin(), key.end(), extensions.begin(), extensions.end(),
                   std::back_inserter(top));
    if (!working.contains(top)) return std::nullopt;
    return top;
  }

  bool check_phase_state(int batches_done) {
    if (!seq.phase_boundary || seq.kind == ComplexKind::derived) return true;
    if (*seq.phase_boundary != batches_done) return true;
    if (!(working == chromatic()))
      return fail(VerifyFailure::phase_state_mismatch, batches_done - 1,
                  "state after the declared phase boundary differs from chromatic");
    return true;
  }

  bool run() {
    if (working.n() != seq.n)
      return fail(VerifyFailure::sequence_mismatch, -1, "sequence n differs from complex n");
    if (!check_phase_state(0)) return false;
    for (std::size_t b = 0; b < seq.batches.size(); ++b) {
      const std::vector<View>& batch = seq.batches[b];
      const int bi = static_cast<int>(b);
      if (batch.empty()) return fail(VerifyFailure::batch_not_singleton, bi, "empty batch");
      StepReport step{batch.front(), 0, false};

      if (seq.mode == CollapseMode::plain && batch.size() != 1)
        return fail(VerifyFailure::batch_not_singleton, bi, "plain batches hold one rep");
      if (seq.mode == CollapseMode::equivariant) {
        std::vector<SimplexKey> expected = key_orbit(batch.front().local_views(), seq.n);
        std::vector<SimplexKey> got;
        got.reserve(batch.size());
        for (const View& w : batch) got.push_back(w.local_views());
        std::sort(got.begin(), got.end());
        if (got != expected)
          return fail(VerifyFailure::batch_not_orbit, bi,
                      "batch is not exactly one S_[n]-orbit");
      }

      // Presence and freeness of every member, then orbit disjointness:
      // translates share a coface iff the union of their keys is a simplex.
      std::vector<SimplexKey> keys, tops;
      for (const View& member : batch) {
        SimplexKey key = member.local_views();
        if (!working.contains(key))
          return fail(VerifyFailure::rep_absent, bi, member.to_string() + " is not present");
        std::optional<SimplexKey> top = coface_top(key);
        if (!top)
          return fail(VerifyFailure::not_free, bi, member.to_string() + " is not free");
        keys.push_back(std::move(key));
        tops.push_back(std::move(*top));
      }
      if (seq.mode == CollapseMode::equivariant) {
        for (std::size_t i = 0; i < keys.size(); ++i)
          for (std::size_t j = i + 1; j < keys.size(); ++j) {
            SimplexKey merged;
            std::set_union(keys[i].begin(), keys[i].end(), keys[j].begin(), keys[j].end(),
                           std::back_inserter(merged));
            if (working.contains(merged))
              return fail(VerifyFailure::g_free_violation, bi,
                          "orbit members " + key_to_string(keys[i]) + " and " +
                              key_to_string(keys[j]) + " share a coface");
          }
      }

      // Removal: the actual coface interval must equal the claimed interval
      // [rep, Ψ(rep)], member by member.
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const SimplexKey claimed_top = psi(batch[i]).local_views();
        if (tops[i] != claimed_top)
          return fail(VerifyFailure::interval_mismatch, bi,
                      "cofaces of " + batch[i].to_string() + " top out at " +
                          key_to_string(tops[i]) + ", claimed " + key_to_string(claimed_top));
        SimplexKey extra;
        std::set_difference(tops[i].begin(), tops[i].end(), keys[i].begin(), keys[i].end(),
                            std::back_inserter(extra));
        for (std::uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
          SimplexKey victim = keys[i];
          for (std::size_t e = 0; e < extra.size(); ++e)
            if (mask & (1u << e)) victim.push_back(extra[e]);
          std::sort(victim.begin(), victim.end());
          working.erase_simplex(victim);
          ++step.removed;
        }
      }
      report.removed_total += step.removed;
      step.ok = true;
      report.steps.push_back(step);
      if (!check_phase_state(static_cast<int>(b) + 1)) return false;
    }

    if (seq.target == CollapseTarget::to_void) {
      if (!working.is_void())
        return fail(VerifyFailure::final_state_mismatch, -1,
                    "target void but " + std::to_string(working.size()) + " simplices remain");
    } else {
      if (!(working == chromatic()))
        return fail(VerifyFailure::final_state_mismatch, -1,
                    "final state differs from the chromatic complex");
    }
    report.ok = true;
    return true;
  }
};

}  // namespace

VerifyReport verify_sequence(const Complex& c, const CollapseSequence& seq) {
  Replay replay{seq, c, {}, {}};
  replay.run();
  return std::move(replay.report);
}

}  // namespace viewcx
