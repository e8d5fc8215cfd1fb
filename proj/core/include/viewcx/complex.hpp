#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "viewcx/view.hpp"

namespace viewcx {

enum class ComplexKind { view, chromatic, derived };
const char* to_string(ComplexKind kind);

/// Simplex counts by dimension. counts[d+1] = f_d, so counts[0] = f_{-1}
/// (1 for any non-void complex).
struct FVector {
  std::vector<std::int64_t> counts;

  int max_dim() const { return static_cast<int>(counts.size()) - 2; }
  std::int64_t f(int dim) const {
    const int i = dim + 1;
    return (i >= 0 && i < static_cast<int>(counts.size())) ? counts[static_cast<std::size_t>(i)]
                                                           : 0;
  }
  std::int64_t total() const;
  /// Sum over d >= 0 of (-1)^d f_d.
  std::int64_t euler() const;
  /// Collapsibility necessary condition: #simplices in even dimensions equals
  /// #simplices in odd dimensions, the empty simplex (dim -1) counted odd.
  bool parity_balanced() const;

  bool operator==(const FVector&) const = default;
};

struct PseudomanifoldReport {
  bool pure = false;
  int top_dim = -1;
  /// facet-count -> number of ridges with that many top-dimensional cofaces.
  std::map<int, std::int64_t> ridge_histogram;
  /// Some ridge contained in more than two top simplices, if any.
  std::optional<SimplexKey> witness;

  bool pseudomanifold() const { return pure && !witness.has_value(); }
};

/// A finite abstract simplicial complex on local-view vertices, stored as the
/// set of all its simplex keys (downward closed, containing the empty key),
/// plus a vertex dictionary LocalView <-> dense id. The void complex (no
/// simplices at all) is a distinguished state, distinct from the empty
/// complex {∅}.
class Complex {
public:
  static Complex void_complex(int n, ComplexKind kind = ComplexKind::derived);

  int n() const { return n_; }
  ComplexKind kind() const { return kind_; }
  bool is_void() const { return void_; }

  /// Number of stored simplices, including the empty one; 0 iff void.
  std::size_t size() const { return void_ ? 0 : store_.size(); }
  bool contains(const SimplexKey& key) const { return !void_ && store_.count(key) > 0; }

  /// Vertex dictionary in canonical order; dense id = position. Vertices stay
  /// in the dictionary after collapses remove them from the complex.
  const std::vector<LocalView>& vertices() const { return vertices_; }
  std::optional<std::uint32_t> vertex_id(LocalView v) const;

  /// All simplices in deterministic order (by dimension, then key),
  /// including the empty key.
  std::vector<SimplexKey> simplices_sorted() const;
  void for_each_simplex(const std::function<void(const SimplexKey&)>& fn) const;

  FVector f_vector() const;                  // throws VoidComplexError
  std::int64_t euler_characteristic() const; // throws VoidComplexError

  /// lk(σ) = {τ | τ∩σ = ∅, τ∪σ ∈ K} as a derived complex.
  /// Throws SimplexAbsentError when σ ∉ K.
  Complex link(const SimplexKey& simplex) const;

  /// σ is free iff its link is a nonempty simplex; equivalently the upper set
  /// F(K)_{>=σ} is a Boolean lattice B_t with t >= 1.
  bool is_free(const SimplexKey& simplex) const;

  /// The top of the coface interval [σ, σ∪U] when σ is free (U = the link's
  /// vertex set), nullopt otherwise. Throws SimplexAbsentError when σ ∉ K.
  std::optional<SimplexKey> free_top(const SimplexKey& simplex) const;

  /// K↓σ: deletes all cofaces of a free σ. Collapsing at ∅ yields the void
  /// complex. Throws NotFreeError.
  Complex collapsed_at(const SimplexKey& simplex) const;
  /// In-place form; the caller holds exclusive access.
  std::int64_t collapse_at_in_place(const SimplexKey& simplex);

  /// Erases one simplex without any freeness bookkeeping. Verification-replay
  /// primitive; the caller maintains downward closure batch-wise.
  void erase_simplex(const SimplexKey& key);

  /// Ridge/facet incidence of the top dimension. Throws VoidComplexError.
  PseudomanifoldReport pseudomanifold_report() const;

  /// Every simplex of `other` is a simplex of this complex.
  bool contains_subcomplex(const Complex& other) const;

  /// Value equality: ambient n, voidness, and the simplex set. The kind tag
  /// and vertex dictionary do not participate.
  bool operator==(const Complex& o) const;

private:
  struct KeyHash {
    std::size_t operator()(const SimplexKey& k) const {
      std::uint64_t h = 1469598103934665603ull;
      for (const LocalView& lv : k) {
        h ^= lv.encoded();
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
  using Store = std::unordered_set<SimplexKey, KeyHash>;

  Complex(int n, ComplexKind kind) : n_(n), kind_(kind) {}

  void rebuild_vertex_index();

  int n_ = 0;
  ComplexKind kind_ = ComplexKind::derived;
  bool void_ = false;
  std::vector<LocalView> vertices_;
  Store store_;

  friend class ComplexAssembler;
  friend struct ComplexBuildAccess;
};

struct BuildOptions {
  /// Hard cap on stored simplices; exceeded -> ResourceLimitError.
  std::int64_t budget = 50'000'000;
  /// Enumeration worker threads; results are identical for any value.
  int threads = 1;
};

/// The view complex View^n: simplices are the vertex sets V(W) of all
/// n-views. Pure of dimension n. Requires 1 <= n <= 15.
Complex build_view_complex(int n, const BuildOptions& options = {});

/// The standard chromatic subdivision χ(Δ^n): the subcomplex of View^n on
/// immediate snapshot views.
Complex build_chromatic(int n, const BuildOptions& options = {});

struct VertexEdgeCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  bool operator==(const VertexEdgeCounts&) const = default;
};

/// Closed forms for View^n: (n+1)*2^n vertices and
/// (n+1)*n*(2*3^(n-1) - 2^(n-2)) edges, evaluated in exact integer
/// arithmetic (the 2^(n-2) term as (n+1)*n*2^n / 4, an exact division).
VertexEdgeCounts count_formulas(int n);

/// Rebuilds a complex from raw parts (cache loading). Validates the
/// downward-closure and key-canonicity invariants.
class ComplexAssembler {
public:
  static Complex from_keys(int n, ComplexKind kind, std::vector<SimplexKey> keys);
};

}  // namespace viewcx
