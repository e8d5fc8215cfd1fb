#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "viewcx/complex.hpp"
#include "viewcx/view.hpp"

namespace viewcx {

/// Φ: replace the last group I_t by I_t ∩ V_{t-1}, with V_0 := ∅. Shrinks the
/// view; Φ(W) is the empty simplex exactly when t = 1.
View phi(const View& w);

/// Ψ: replace the last group I_t by I_t ∪ ([n] \ V_{t-1}). Grows the view.
View psi(const View& w);

/// The Boolean interval I(W) = [Φ(W), Ψ(W)] in the face poset, held by its
/// Φ-fixed representative. Φ and Ψ are constant on the interval, its members
/// are exactly the views between lo and hi, and rank >= 1 always.
class Interval {
public:
  /// Interval of the view w: rep = Φ(w), hi = Ψ(w).
  static Interval of(const View& w);

  const View& rep() const { return rep_; }
  const View& lo() const { return rep_; }
  const View& hi() const { return hi_; }
  /// |V(hi)| - |V(lo)|; the member set is order-isomorphic to B_rank.
  int rank() const;

  bool member(const View& u) const;
  /// All 2^rank member keys, sorted.
  std::vector<SimplexKey> member_keys() const;

  bool operator==(const Interval& o) const { return rep_ == o.rep_; }

private:
  Interval(View rep, View hi) : rep_(std::move(rep)), hi_(std::move(hi)) {}
  View rep_;
  View hi_;
};

/// The interval partition of the face poset: pairwise disjoint intervals
/// covering every simplex of the complex, the empty one included. Only
/// freshly built view/chromatic complexes qualify; anything else throws
/// NotAViewComplexError. Output sorted by (descending |V(rep)|, key).
std::vector<Interval> interval_partition(const Complex& c);

enum class CollapseMode { plain, equivariant };
enum class CollapseTarget { chromatic, to_void };
const char* to_string(CollapseMode m);
const char* to_string(CollapseTarget t);

/// An ordered list of collapse batches. Every batch lists interval
/// representatives whose cofaces are removed simultaneously: a single rep in
/// plain mode, a full S_[n]-orbit in equivariant mode. phase_boundary is the
/// number of batches in the View^n -> χ(Δ^n) phase (0 when the source is
/// already chromatic); it is absent only on hand-assembled sequences for
/// derived complexes, where no chromatic intermediate state applies.
struct CollapseSequence {
  CollapseMode mode = CollapseMode::plain;
  CollapseTarget target = CollapseTarget::to_void;
  int n = 0;
  ComplexKind kind = ComplexKind::view;
  std::optional<int> phase_boundary;
  std::vector<std::vector<View>> batches;
};

/// One interval collapse per batch; simplices outside χ(Δ^n) go first, each
/// phase ordered by decreasing |V(rep)| with key ties. The source must be a
/// view complex, or a chromatic complex with the void target.
CollapseSequence plain_sequence(const Complex& c, CollapseTarget target);

/// One S_[n]-orbit per batch; within a phase the orbit of the largest rep
/// goes first (key-smallest among equal sizes). Every batch is checked G-free
/// on its canonical rep before being applied; a failure (never expected)
/// throws std::logic_error.
CollapseSequence equivariant_sequence(const Complex& c, CollapseTarget target);

enum class VerifyFailure {
  none,
  sequence_mismatch,     // sequence n does not match the complex
  batch_not_singleton,   // plain batch with several reps
  batch_not_orbit,       // equivariant batch is not one full orbit
  rep_absent,            // rep already removed (or never present)
  not_free,              // rep not free in the current complex
  g_free_violation,      // orbit translates share a coface
  interval_mismatch,     // removed coface set != claimed interval [rep, Ψ(rep)]
  phase_state_mismatch,  // state after the declared boundary != χ(Δ^n)
  final_state_mismatch,  // end state != target
};
const char* to_string(VerifyFailure f);

struct StepReport {
  View rep;
  std::int64_t removed = 0;
  bool ok = false;
};

struct VerifyReport {
  bool ok = false;
  VerifyFailure failure = VerifyFailure::none;
  std::optional<int> failed_batch;  // 1-based, as reported to users
  std::string detail;
  std::vector<StepReport> steps;
  std::int64_t removed_total = 0;
};

/// Independent replay of a collapse sequence against `c`: every rep must be
/// free (G-free with its whole orbit batched, in equivariant mode), every
/// removed coface set must equal the claimed interval, the state after
/// phase_boundary batches must equal a freshly built χ(Δ^n), and the final
/// state must match the target. Never throws on a bad sequence; the report
/// carries the first violation.
VerifyReport verify_sequence(const Complex& c, const CollapseSequence& seq);

}  // namespace viewcx
