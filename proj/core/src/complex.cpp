#include "viewcx/complex.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>

namespace viewcx {

const char* to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::view: return "view";
    case ComplexKind::chromatic: return "chromatic";
    case ComplexKind::derived: return "derived";
  }
  return "?";
}

std::int64_t FVector::total() const {
  std::int64_t t = 0;
  for (std::int64_t c : counts) t += c;
  return t;
}

std::int64_t FVector::euler() const {
  std::int64_t e = 0;
  for (int d = 0; d <= max_dim(); ++d) e += (d % 2 == 0 ? 1 : -1) * f(d);
  return e;
}

bool FVector::parity_balanced() const {
  std::int64_t even = 0, odd = f(-1);
  for (int d = 0; d <= max_dim(); ++d) (d % 2 == 0 ? even : odd) += f(d);
  return even == odd;
}

// ---------------------------------------------------------------------------
// Enumeration of views.
//
// Every n-view in canonical form arises exactly once from: a strict chain
// 0 != V_1 < ... < V_{t-1} < [n], nonempty groups I_k <= V_k disjoint from
// all earlier groups (k < t), and a final column ([n], I_t) with I_t any
// subset of the unused pids. The chromatic restriction additionally demands
// I_k ∩ V_{k-1} = 0 for k >= 2. Keys are emitted pre-sorted: the chain makes
// snap masks increase along the matrix.
// ---------------------------------------------------------------------------
namespace {

struct EmitState {
  int n;
  std::uint16_t full;
  bool immediate;
  std::vector<SimplexKey>* out;
  std::atomic<std::int64_t>* emitted;
  std::int64_t budget;

  void emit(const SimplexKey& prefix, std::uint16_t last_group) {
    SimplexKey key = prefix;
    for (Pid p : PidSet(last_group)) key.push_back(LocalView{PidSet(full), p});
    out->push_back(std::move(key));
    if (emitted->fetch_add(1, std::memory_order_relaxed) + 1 > budget)
      throw ResourceLimitError("simplex budget exceeded");
  }

  // prefix holds the local views of committed columns; prev/used their masks.
  void close(const SimplexKey& prefix, std::uint16_t prev, std::uint16_t used) {
    std::uint16_t avail = full & ~used;
    if (immediate) avail &= ~prev;
    for (Subsets s(avail); !s.done(); s.next()) emit(prefix, s.current());
  }

  void extend(const SimplexKey& prefix, std::uint16_t prev, std::uint16_t used) {
    close(prefix, prev, used);
    const std::uint16_t comp = full & ~prev;
    for (Subsets a(comp); !a.done(); a.next()) {
      if (a.current() == 0 || a.current() == comp) continue;  // strict chain
      const std::uint16_t snap = prev | a.current();
      std::uint16_t allowed = snap & ~used;
      if (immediate) allowed &= ~prev;
      for (Subsets g(allowed); !g.done(); g.next()) {
        if (g.current() == 0) continue;
        SimplexKey next = prefix;
        for (Pid p : PidSet(g.current())) next.push_back(LocalView{PidSet(snap), p});
        extend(next, snap, used | g.current());
      }
    }
  }
};

// Work strata for deterministic parallel enumeration: stratum 0 is the
// chainless block (t = 1), stratum i >= 1 fixes the first column.
struct FirstColumn {
  std::uint16_t snap;
  std::uint16_t group;
};

std::vector<FirstColumn> enumerate_first_columns(int n) {
  const std::uint16_t full = PidSet::full(n).bits();
  std::vector<FirstColumn> out;
  for (std::uint16_t snap = 1; snap < full; ++snap) {
    for (Subsets g(snap); !g.done(); g.next())
      if (g.current() != 0) out.push_back({snap, g.current()});
  }
  return out;
}

std::vector<SimplexKey> enumerate_views(int n, bool immediate, const BuildOptions& options) {
  const std::uint16_t full = PidSet::full(n).bits();
  std::atomic<std::int64_t> emitted{0};
  const auto run_stratum = [&](int index, const std::vector<FirstColumn>& firsts,
                               std::vector<SimplexKey>& sink) {
    EmitState st{n, full, immediate, &sink, &emitted, options.budget};
    if (index == 0) {
      st.close({}, 0, 0);  // t = 1 views, including the empty simplex
      return;
    }
    const FirstColumn& fc = firsts[static_cast<std::size_t>(index - 1)];
    SimplexKey prefix;
    for (Pid p : PidSet(fc.group)) prefix.push_back(LocalView{PidSet(fc.snap), p});
    st.extend(prefix, fc.snap, fc.group);
  };

  const std::vector<FirstColumn> firsts = enumerate_first_columns(n);
  const int strata = 1 + static_cast<int>(firsts.size());
  std::vector<std::vector<SimplexKey>> buckets(static_cast<std::size_t>(strata));

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (int i = 0; i < strata; ++i) run_stratum(i, firsts, buckets[static_cast<std::size_t>(i)]);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= strata) return;
        try {
          run_stratum(i, firsts, buckets[static_cast<std::size_t>(i)]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  // Merge in stratum order: contents are identical for any thread count.
  std::vector<SimplexKey> keys;
  std::int64_t total = 0;
  for (const auto& b : buckets) total += static_cast<std::int64_t>(b.size());
  keys.reserve(static_cast<std::size_t>(total));
  for (auto& b : buckets)
    for (auto& k : b) keys.push_back(std::move(k));
  return keys;
}

std::vector<LocalView> all_local_views(int n) {
  std::vector<LocalView> out;
  const std::uint16_t full = PidSet::full(n).bits();
  for (std::uint16_t snap = 1; snap <= full; ++snap)
    for (Pid p : PidSet(snap)) out.push_back(LocalView{PidSet(snap), p});
  return out;
}

Complex build(int n, bool immediate, const BuildOptions& options) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("build: n must be in 1..15");
  Complex c(n, immediate ? ComplexKind::chromatic : ComplexKind::view);
  c.vertices_ = all_local_views(n);
  std::vector<SimplexKey> keys = enumerate_views(n, immediate, options);
  c.store_.reserve(keys.size() * 2);
  for (SimplexKey& k : keys) c.store_.insert(std::move(k));
  return c;
}

}  // namespace

Complex build_view_complex(int n, const BuildOptions& options) {
  return build(n, /*immediate=*/false, options);
}

Complex build_chromatic(int n, const BuildOptions& options) {
  return build(n, /*immediate=*/true, options);
}

VertexEdgeCounts count_formulas(int n) {
  if (n < 1) throw std::invalid_argument("count_formulas: n >= 1 required");
  const std::int64_t m = n;
  std::int64_t pow2n = 1, pow3 = 1;
  for (int i = 0; i < n; ++i) pow2n *= 2;
  for (int i = 0; i + 1 < n; ++i) pow3 *= 3;
  VertexEdgeCounts out;
  out.vertices = (m + 1) * pow2n;
  // (n+1)*n*2^n is divisible by 4 for every n >= 1.
  out.edges = (m + 1) * m * 2 * pow3 - (m + 1) * m * pow2n / 4;
  return out;
}

// ---------------------------------------------------------------------------
// Complex members.
// ---------------------------------------------------------------------------

Complex Complex::void_complex(int n, ComplexKind kind) {
  Complex c(n, kind);
  c.void_ = true;
  return c;
}

std::optional<std::uint32_t> Complex::vertex_id(LocalView v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::vector<SimplexKey> Complex::simplices_sorted() const {
  std::vector<SimplexKey> out(store_.begin(), store_.end());
  std::sort(out.begin(), out.end(), [](const SimplexKey& a, const SimplexKey& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

void Complex::for_each_simplex(const std::function<void(const SimplexKey&)>& fn) const {
  for (const SimplexKey& k : store_) fn(k);
}

FVector Complex::f_vector() const {
  if (void_) throw VoidComplexError("f_vector of the void complex");
  FVector fv;
  for (const SimplexKey& k : store_) {
    const std::size_t slot = k.size();  // dim + 1
    if (fv.counts.size() <= slot) fv.counts.resize(slot + 1, 0);
    ++fv.counts[slot];
  }
  return fv;
}

std::int64_t Complex::euler_characteristic() const { return f_vector().euler(); }

namespace {
bool key_includes(const SimplexKey& big, const SimplexKey& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

SimplexKey key_minus(const SimplexKey& big, const SimplexKey& small) {
  SimplexKey out;
  out.reserve(big.size() - small.size());
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                      std::back_inserter(out));
  return out;
}

SimplexKey key_union(const SimplexKey& a, const SimplexKey& b) {
  SimplexKey out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplexKey key_with(const SimplexKey& k, LocalView v) {
  SimplexKey out;
  out.reserve(k.size() + 1);
  const auto it = std::lower_bound(k.begin(), k.end(), v);
  out.insert(out.end(), k.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, k.end());
  return out;
}
}  // namespace

Complex Complex::link(const SimplexKey& simplex) const {
  if (!contains(simplex)) throw SimplexAbsentError("link: simplex not in complex");
  Complex out(n_, ComplexKind::derived);
  for (const SimplexKey& k : store_) {
    if (key_includes(k, simplex)) out.store_.insert(key_minus(k, simplex));
  }
  out.rebuild_vertex_index();
  return out;
}

void Complex::rebuild_vertex_index() {
  vertices_.clear();
  for (const SimplexKey& k : store_)
    for (const LocalView& lv : k) vertices_.push_back(lv);
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::optional<SimplexKey> Complex::free_top(const SimplexKey& simplex) const {
  if (!contains(simplex)) throw SimplexAbsentError("free_top: simplex not in complex");
  PidSet used;
  for (const LocalView& lv : simplex) used = used | PidSet::single(lv.pid);
  SimplexKey extensions;
  for (const LocalView& v : vertices_) {
    if (used.contains(v.pid)) continue;  // one local view per pid in any simplex
    if (store_.count(key_with(simplex, v))) extensions.push_back(v);
  }
  if (extensions.empty()) return std::nullopt;
  SimplexKey top = key_union(simplex, extensions);
  if (!store_.count(top)) return std::nullopt;
  return top;
}

bool Complex::is_free(const SimplexKey& simplex) const {
  return free_top(simplex).has_value();
}

std::int64_t Complex::collapse_at_in_place(const SimplexKey& simplex) {
  const std::optional<SimplexKey> top = free_top(simplex);
  if (!top) throw NotFreeError("collapse_at: simplex is not free");
  const SimplexKey extra = key_minus(*top, simplex);
  std::int64_t removed = 0;
  const std::uint32_t bits = static_cast<std::uint32_t>(extra.size());
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    SimplexKey victim = simplex;
    for (std::uint32_t i = 0; i < bits; ++i)
      if (mask & (1u << i)) victim.push_back(extra[i]);
    std::sort(victim.begin(), victim.end());
    removed += static_cast<std::int64_t>(store_.erase(victim));
  }
  assert(removed == (std::int64_t{1} << bits));
  if (store_.empty()) void_ = true;
  return removed;
}

Complex Complex::collapsed_at(const SimplexKey& simplex) const {
  Complex out = *this;
  out.kind_ = ComplexKind::derived;
  out.collapse_at_in_place(simplex);
  return out;
}

void Complex::erase_simplex(const SimplexKey& key) {
  store_.erase(key);
  if (store_.empty()) void_ = true;
}

PseudomanifoldReport Complex::pseudomanifold_report() const {
  if (void_) throw VoidComplexError("pseudomanifold_report of the void complex");
  PseudomanifoldReport report;
  std::size_t top_size = 0;
  for (const SimplexKey& k : store_) top_size = std::max(top_size, k.size());
  report.top_dim = static_cast<int>(top_size) - 1;

  // Purity: every maximal simplex has the top dimension. A simplex is
  // maximal iff it has no single-vertex extension in the store.
  report.pure = true;
  for (const SimplexKey& k : store_) {
    if (k.size() == top_size) continue;
    PidSet used;
    for (const LocalView& lv : k) used = used | PidSet::single(lv.pid);
    bool extendable = false;
    for (const LocalView& v : vertices_) {
      if (used.contains(v.pid)) continue;
      if (store_.count(key_with(k, v))) {
        extendable = true;
        break;
      }
    }
    if (!extendable) {
      report.pure = false;
      break;
    }
  }

  if (top_size == 0) return report;  // the empty complex: no ridges
  for (const SimplexKey& k : store_) {
    if (k.size() + 1 != top_size) continue;
    PidSet used;
    for (const LocalView& lv : k) used = used | PidSet::single(lv.pid);
    int cofacets = 0;
    for (const LocalView& v : vertices_) {
      if (used.contains(v.pid)) continue;
      if (store_.count(key_with(k, v))) ++cofacets;
    }
    ++report.ridge_histogram[cofacets];
    if (cofacets > 2 && !report.witness) report.witness = k;
  }
  return report;
}

bool Complex::contains_subcomplex(const Complex& other) const {
  if (other.void_) return true;
  if (void_) return false;
  for (const SimplexKey& k : other.store_)
    if (!store_.count(k)) return false;
  return true;
}

bool Complex::operator==(const Complex& o) const {
  if (n_ != o.n_ || void_ != o.void_) return false;
  if (void_) return true;
  if (store_.size() != o.store_.size()) return false;
  for (const SimplexKey& k : store_)
    if (!o.store_.count(k)) return false;
  return true;
}

Complex ComplexAssembler::from_keys(int n, ComplexKind kind, std::vector<SimplexKey> keys) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("complex: n must be in 0..15");
  Complex c(n, kind);
  if (keys.empty()) {
    c.void_ = true;
    return c;
  }
  for (SimplexKey& k : keys) {
    if (!key_is_canonical(k)) throw std::invalid_argument("complex: non-canonical key");
    c.store_.insert(std::move(k));
  }
  for (const SimplexKey& k : c.store_) {
    if (k.empty()) continue;
    for (std::size_t i = 0; i < k.size(); ++i) {
      SimplexKey facet = k;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
      if (!c.store_.count(facet))
        throw std::invalid_argument("complex: simplex set is not downward closed");
    }
  }
  if (!c.store_.count(SimplexKey{}))
    throw std::invalid_argument("complex: missing the empty simplex");
  c.rebuild_vertex_index();
  return c;
}

}  // namespace viewcx
