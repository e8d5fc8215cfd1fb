#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "viewcx/collapse.hpp"
#include "viewcx/complex.hpp"
#include "viewcx/exec_oracle.hpp"
#include "viewcx/symmetry.hpp"
#include "viewcx/view.hpp"

namespace viewcx {

/// Version stamp carried by every JSON document and cache file.
inline constexpr int kFormatVersion = 1;

nlohmann::json local_view_to_json(const LocalView& v);
LocalView local_view_from_json(const nlohmann::json& j, int n);

nlohmann::json view_to_json(const View& w);
View view_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& pi);
Permutation permutation_from_json(const nlohmann::json& j, int n);

nlohmann::json profile_to_json(const ExecutionProfile& p);
ExecutionProfile profile_from_json(const nlohmann::json& j);

/// {"format_version", "n", "kind", "void", "vertices", "simplices"} with
/// simplices as ascending dense-id arrays, deterministically ordered; the
/// empty simplex is implied and not listed.
nlohmann::json complex_to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const CollapseSequence& seq);
CollapseSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json cross_validation_to_json(const CrossValidationReport& report);

/// 1-skeleton in DOT graph syntax; with hasse=true instead the face-poset
/// Hasse diagram as a digraph (sensible to render for n <= 2 only).
std::string complex_to_dot(const Complex& c, bool hasse = false);

/// Cache file name for a built complex: <kind>_n<k>_v<format>.vxc.
std::filesystem::path cache_path(const std::filesystem::path& dir, int n, ComplexKind kind);

void save_cache(const Complex& c, const std::filesystem::path& file);

/// Loads a cached complex; nullopt when the file is missing, has a foreign
/// header, or fails validation (a cache miss, never an error).
std::optional<Complex> load_cache(const std::filesystem::path& file, int n, ComplexKind kind);

}  // namespace viewcx
