#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "viewcx/exec_oracle.hpp"
#include "viewcx/io.hpp"
#include "viewcx/symmetry.hpp"

namespace viewcx::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

Complex obtain_complex(const RunConfig& config) {
  if (!config.cache_dir.empty()) {
    const fs::path file = cache_path(config.cache_dir, config.n, config.kind);
    if (std::optional<Complex> cached = load_cache(file, config.n, config.kind)) return *cached;
  }
  const BuildOptions options{config.budget, config.threads};
  Complex c = config.kind == ComplexKind::chromatic ? build_chromatic(config.n, options)
                                                    : build_view_complex(config.n, options);
  if (!config.cache_dir.empty()) {
    std::error_code ec;
    fs::create_directories(config.cache_dir, ec);
    if (!ec) save_cache(c, cache_path(config.cache_dir, config.n, config.kind));
  }
  return c;
}

int write_output(const std::string& text, const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  if (config.output_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream os(config.output_path, std::ios::trunc);
  os << text;
  if (!os) {
    err << "error: cannot write " << config.output_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string fvector_line(const FVector& fv) {
  std::ostringstream os;
  os << "(";
  for (int d = 0; d <= fv.max_dim(); ++d) {
    if (d) os << ", ";
    os << fv.f(d);
  }
  os << ")";
  return os.str();
}

}  // namespace

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Complex c = obtain_complex(config);
    const FVector fv = c.f_vector();

    if (config.format == OutputFormat::json) {
      const int rc = write_output(complex_to_json(c).dump(2) + "\n", config, out, err);
      if (rc != kExitOk) return rc;
    } else if (config.format == OutputFormat::dot) {
      const int rc = write_output(complex_to_dot(c, config.hasse), config, out, err);
      if (rc != kExitOk) return rc;
    }

    out << to_string(c.kind()) << " complex, n=" << c.n() << "\n";
    out << "  f-vector: " << fvector_line(fv) << "  (" << fv.total()
        << " simplices incl. empty)\n";
    out << "  euler characteristic: " << fv.euler() << "\n";
    const VertexEdgeCounts formulas = count_formulas(config.n);
    out << "  closed forms: vertices " << formulas.vertices << " ("
        << (fv.f(0) == formulas.vertices ? "match" : "MISMATCH") << "), edges "
        << formulas.edges << " (";
    if (config.kind == ComplexKind::view)
      out << (fv.f(1) == formulas.edges ? "match" : "MISMATCH");
    else
      out << "view-complex formula";
    out << ")\n";
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_collapse(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Complex c = obtain_complex(config);
    const CollapseSequence seq = config.mode == CollapseMode::plain
                                     ? plain_sequence(c, config.target)
                                     : equivariant_sequence(c, config.target);
    const int rc = write_output(sequence_to_json(seq).dump(2) + "\n", config, out, err);
    if (rc != kExitOk) return rc;
    out << to_string(seq.mode) << " collapse of " << to_string(c.kind()) << " complex, n="
        << seq.n << ", target " << to_string(seq.target) << "\n";
    out << "  batches: " << seq.batches.size() << " (phase boundary "
        << (seq.phase_boundary ? std::to_string(*seq.phase_boundary) : std::string("-"))
        << ")\n";
    std::size_t reps = 0;
    for (const auto& b : seq.batches) reps += b.size();
    out << "  interval reps: " << reps << "\n";
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_verify(const std::string& sequence_file, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  std::ifstream is(sequence_file);
  if (!is) {
    err << "error: cannot read " << sequence_file << "\n";
    return kExitIo;
  }
  // A malformed sequence is a verification failure, never a crash.
  CollapseSequence seq;
  try {
    seq = sequence_from_json(json::parse(is));
  } catch (const std::exception& e) {
    out << "verification: FAIL (malformed sequence: " << e.what() << ")\n";
    return kExitVerifyFailed;
  }
  try {
    const BuildOptions options{config.budget, config.threads};
    const Complex c = seq.kind == ComplexKind::chromatic ? build_chromatic(seq.n, options)
                                                         : build_view_complex(seq.n, options);
    const VerifyReport report = verify_sequence(c, seq);
    if (!config.output_path.empty()) {
      std::ofstream os(config.output_path, std::ios::trunc);
      os << verify_report_to_json(report).dump(2) << "\n";
      if (!os) {
        err << "error: cannot write " << config.output_path << "\n";
        return kExitIo;
      }
    }
    if (report.ok) {
      out << "verification: OK (" << report.steps.size() << " batches, "
          << report.removed_total << " simplices removed)\n";
      return kExitOk;
    }
    out << "verification: FAIL " << to_string(report.failure);
    if (report.failed_batch) out << " at batch " << *report.failed_batch;
    out << "\n  " << report.detail << "\n";
    return kExitVerifyFailed;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const CrossValidationReport report =
        cross_validate(config.n, BuildOptions{config.budget, config.threads});
    out << "oracle n=" << report.n << ": snapshot " << report.snapshot.profile_count << " = "
        << report.snapshot.top_count << ", immediate " << report.immediate.profile_count
        << " = " << report.immediate.top_count << ", "
        << (report.ok() ? "MATCH" : "MISMATCH") << "\n";
    if (!config.output_path.empty()) {
      std::ofstream os(config.output_path, std::ios::trunc);
      os << cross_validation_to_json(report).dump(2) << "\n";
      if (!os) {
        err << "error: cannot write " << config.output_path << "\n";
        return kExitIo;
      }
    }
    if (!report.ok()) {
      for (const SimplexKey& k : report.snapshot.only_profiles)
        out << "  snapshot profile without view simplex: " << key_to_string(k) << "\n";
      for (const SimplexKey& k : report.snapshot.only_complex)
        out << "  view simplex without snapshot profile: " << key_to_string(k) << "\n";
      for (const SimplexKey& k : report.immediate.only_profiles)
        out << "  immediate profile without chromatic simplex: " << key_to_string(k) << "\n";
      for (const SimplexKey& k : report.immediate.only_complex)
        out << "  chromatic simplex without immediate profile: " << key_to_string(k) << "\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const BuildOptions options{config.budget, config.threads};
    for (int n = config.stats_from; n <= config.n; ++n) {
      out << "n=" << n << "\n";
      for (const ComplexKind kind : {ComplexKind::view, ComplexKind::chromatic}) {
        const Complex c =
            kind == ComplexKind::chromatic ? build_chromatic(n, options)
                                           : build_view_complex(n, options);
        const FVector fv = c.f_vector();
        const PseudomanifoldReport pm = c.pseudomanifold_report();
        const std::vector<Interval> partition = interval_partition(c);
        const CollapseSequence eq = equivariant_sequence(c, CollapseTarget::to_void);
        out << "  " << to_string(kind) << ": f=" << fvector_line(fv)
            << " chi=" << fv.euler()
            << " parity=" << (fv.parity_balanced() ? "balanced" : "UNBALANCED")
            << " pseudomanifold=" << (pm.pseudomanifold() ? "yes" : "no");
        if (pm.witness)
          out << " (witness ridge " << key_to_string(*pm.witness) << ")";
        out << " intervals=" << partition.size() << " orbit-batches=" << eq.batches.size()
            << "\n";
      }
    }
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace viewcx::cli
