#include "viewcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace viewcx {

using nlohmann::json;

namespace {

json pidset_to_json(PidSet s) {
  json out = json::array();
  for (Pid p : s) out.push_back(int(p));
  return out;
}

PidSet pidset_from_json(const json& j, int n) {
  PidSet out;
  for (const json& e : j) {
    const int p = e.get<int>();
    if (p < 0 || p > n) throw std::invalid_argument("pid out of [n]");
    out = out | PidSet::single(static_cast<Pid>(p));
  }
  return out;
}

}  // namespace

json local_view_to_json(const LocalView& v) {
  return json{{"snap", pidset_to_json(v.snap)}, {"pid", int(v.pid)}};
}

LocalView local_view_from_json(const json& j, int n) {
  return LocalView::make(pidset_from_json(j.at("snap"), n),
                         static_cast<Pid>(j.at("pid").get<int>()));
}

json view_to_json(const View& w) {
  json cols = json::array();
  for (const ViewColumn& c : w.columns())
    cols.push_back(json{{"snap", pidset_to_json(c.snap)}, {"group", pidset_to_json(c.group)}});
  return json{{"n", w.n()}, {"columns", cols}};
}

View view_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxN) throw std::invalid_argument("view json: n out of range");
  std::vector<ViewColumn> cols;
  for (const json& c : j.at("columns"))
    cols.push_back(ViewColumn{pidset_from_json(c.at("snap"), n),
                              pidset_from_json(c.at("group"), n)});
  return View::make(n, std::move(cols));
}

json permutation_to_json(const Permutation& pi) { return json(pi.images()); }

Permutation permutation_from_json(const json& j, int n) {
  return Permutation::from_images(n, j.get<std::vector<int>>());
}

json profile_to_json(const ExecutionProfile& p) {
  json views = json::object();
  for (int pid = 0; pid <= p.n(); ++pid)
    views[std::to_string(pid)] = pidset_to_json(p.view_of(static_cast<Pid>(pid)));
  return json{{"n", p.n()}, {"views", views}};
}

ExecutionProfile profile_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<PidSet> views(static_cast<std::size_t>(n + 1));
  for (int pid = 0; pid <= n; ++pid)
    views[static_cast<std::size_t>(pid)] =
        pidset_from_json(j.at("views").at(std::to_string(pid)), n);
  return ExecutionProfile::make(n, std::move(views));
}

json complex_to_json(const Complex& c) {
  json out;
  out["format_version"] = kFormatVersion;
  out["n"] = c.n();
  out["kind"] = to_string(c.kind());
  out["void"] = c.is_void();
  json vertices = json::array();
  for (const LocalView& v : c.vertices()) vertices.push_back(local_view_to_json(v));
  out["vertices"] = vertices;
  json simplices = json::array();
  if (!c.is_void()) {
    for (const SimplexKey& key : c.simplices_sorted()) {
      if (key.empty()) continue;  // f_{-1} is implied
      json ids = json::array();
      for (const LocalView& v : key) ids.push_back(*c.vertex_id(v));
      simplices.push_back(ids);
    }
  }
  out["simplices"] = simplices;
  return out;
}

Complex complex_from_json(const json& j) {
  if (j.at("format_version").get<int>() != kFormatVersion)
    throw std::invalid_argument("complex json: unsupported format version");
  const int n = j.at("n").get<int>();
  const std::string kind_name = j.at("kind").get<std::string>();
  ComplexKind kind = ComplexKind::derived;
  if (kind_name == "view") kind = ComplexKind::view;
  else if (kind_name == "chromatic") kind = ComplexKind::chromatic;
  else if (kind_name != "derived") throw std::invalid_argument("complex json: unknown kind");
  if (j.at("void").get<bool>()) return Complex::void_complex(n, kind);
  std::vector<LocalView> vertices;
  for (const json& v : j.at("vertices")) vertices.push_back(local_view_from_json(v, n));
  std::vector<SimplexKey> keys;
  keys.emplace_back();
  for (const json& ids : j.at("simplices")) {
    SimplexKey key;
    for (const json& id : ids) {
      const std::size_t i = id.get<std::size_t>();
      if (i >= vertices.size()) throw std::invalid_argument("complex json: vertex id range");
      key.push_back(vertices[i]);
    }
    keys.push_back(std::move(key));
  }
  return ComplexAssembler::from_keys(n, kind, std::move(keys));
}

json sequence_to_json(const CollapseSequence& seq) {
  json out;
  out["format_version"] = kFormatVersion;
  out["mode"] = to_string(seq.mode);
  out["target"] = to_string(seq.target);
  out["n"] = seq.n;
  out["kind"] = to_string(seq.kind);
  out["phase_boundary"] = seq.phase_boundary ? json(*seq.phase_boundary) : json(nullptr);
  json batches = json::array();
  for (const std::vector<View>& batch : seq.batches) {
    json b = json::array();
    for (const View& w : batch) b.push_back(view_to_json(w));
    batches.push_back(b);
  }
  out["batches"] = batches;
  return out;
}

CollapseSequence sequence_from_json(const json& j) {
  if (j.at("format_version").get<int>() != kFormatVersion)
    throw std::invalid_argument("sequence json: unsupported format version");
  CollapseSequence seq;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "plain") seq.mode = CollapseMode::plain;
  else if (mode == "equivariant") seq.mode = CollapseMode::equivariant;
  else throw std::invalid_argument("sequence json: unknown mode");
  const std::string target = j.at("target").get<std::string>();
  if (target == "chromatic") seq.target = CollapseTarget::chromatic;
  else if (target == "void") seq.target = CollapseTarget::to_void;
  else throw std::invalid_argument("sequence json: unknown target");
  seq.n = j.at("n").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "view") seq.kind = ComplexKind::view;
  else if (kind == "chromatic") seq.kind = ComplexKind::chromatic;
  else if (kind == "derived") seq.kind = ComplexKind::derived;
  else throw std::invalid_argument("sequence json: unknown kind");
  if (!j.at("phase_boundary").is_null()) seq.phase_boundary = j.at("phase_boundary").get<int>();
  for (const json& batch : j.at("batches")) {
    std::vector<View> views;
    for (const json& w : batch) {
      View v = view_from_json(w);
      if (v.n() != seq.n) throw std::invalid_argument("sequence json: rep n mismatch");
      views.push_back(std::move(v));
    }
    seq.batches.push_back(std::move(views));
  }
  return seq;
}

json verify_report_to_json(const VerifyReport& report) {
  json steps = json::array();
  for (const StepReport& s : report.steps)
    steps.push_back(json{{"rep", view_to_json(s.rep)},
                         {"removed_count", s.removed},
                         {"ok", s.ok}});
  return json{{"ok", report.ok},
              {"failure", to_string(report.failure)},
              {"failed_batch", report.failed_batch ? json(*report.failed_batch) : json(nullptr)},
              {"detail", report.detail},
              {"removed_total", report.removed_total},
              {"steps", steps}};
}

json cross_validation_to_json(const CrossValidationReport& report) {
  const auto side = [](const CrossValidationSide& s) {
    json only_p = json::array(), only_c = json::array();
    for (const SimplexKey& k : s.only_profiles) only_p.push_back(key_to_string(k));
    for (const SimplexKey& k : s.only_complex) only_c.push_back(key_to_string(k));
    return json{{"profiles", s.profile_count},
                {"tops", s.top_count},
                {"match", s.ok()},
                {"only_profiles", only_p},
                {"only_complex", only_c}};
  };
  return json{{"n", report.n},
              {"ok", report.ok()},
              {"snapshot", side(report.snapshot)},
              {"immediate", side(report.immediate)}};
}

std::string complex_to_dot(const Complex& c, bool hasse) {
  std::ostringstream os;
  if (c.is_void()) {
    os << (hasse ? "digraph" : "graph") << " void_complex {\n}\n";
    return os.str();
  }
  const std::vector<SimplexKey> simplices = c.simplices_sorted();
  if (!hasse) {
    os << "graph " << to_string(c.kind()) << "_n" << c.n() << " {\n";
    for (const SimplexKey& key : simplices) {
      if (key.size() == 1)
        os << "  v" << *c.vertex_id(key[0]) << " [label=\"" << key[0].to_string() << "\"];\n";
    }
    for (const SimplexKey& key : simplices) {
      if (key.size() == 2)
        os << "  v" << *c.vertex_id(key[0]) << " -- v" << *c.vertex_id(key[1]) << ";\n";
    }
    os << "}\n";
    return os.str();
  }
  // Hasse diagram of the face poset: covering relations, bottom to top.
  os << "digraph " << to_string(c.kind()) << "_n" << c.n() << "_poset {\n";
  os << "  rankdir=BT;\n";
  std::vector<std::string> names(simplices.size());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    names[i] = "s" + std::to_string(i);
    os << "  " << names[i] << " [label=\"" << key_to_string(simplices[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (std::size_t k = 0; k < simplices[i].size(); ++k) {
      SimplexKey facet = simplices[i];
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      const auto it = std::lower_bound(
          simplices.begin(), simplices.end(), facet,
          [](const SimplexKey& a, const SimplexKey& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
          });
      os << "  " << names[static_cast<std::size_t>(it - simplices.begin())] << " -> "
         << names[i] << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Binary cache. Little-endian, fixed header; content mismatches read as a
// cache miss rather than an error.
// ---------------------------------------------------------------------------
namespace {

constexpr char kMagic[4] = {'V', 'X', 'C', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
               static_cast<char>(v >> 24)};
  os.write(b, 4);
}

bool get_u32(std::istream& is, std::uint32_t& v) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
  v = std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
      (std::uint32_t(b[3]) << 24);
  return true;
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, ComplexKind kind) {
  return dir / (std::string(to_string(kind)) + "_n" + std::to_string(n) + "_v" +
                std::to_string(kFormatVersion) + ".vxc");
}

void save_cache(const Complex& c, const std::filesystem::path& file) {
  std::ofstream os(file, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cache: cannot open " + file.string() + " for writing");
  os.write(kMagic, 4);
  put_u32(os, kFormatVersion);
  put_u32(os, static_cast<std::uint32_t>(c.n()));
  put_u32(os, static_cast<std::uint32_t>(c.kind()));
  const std::vector<SimplexKey> simplices = c.is_void() ? std::vector<SimplexKey>{}
                                                        : c.simplices_sorted();
  put_u32(os, static_cast<std::uint32_t>(simplices.size()));
  for (const SimplexKey& key : simplices) {
    put_u32(os, static_cast<std::uint32_t>(key.size()));
    for (const LocalView& v : key) put_u32(os, v.encoded());
  }
  if (!os) throw std::runtime_error("cache: write failed on " + file.string());
}

std::optional<Complex> load_cache(const std::filesystem::path& file, int n, ComplexKind kind) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4];
  if (!is.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) return std::nullopt;
  std::uint32_t version, file_n, file_kind, count;
  if (!get_u32(is, version) || version != kFormatVersion) return std::nullopt;
  if (!get_u32(is, file_n) || file_n != static_cast<std::uint32_t>(n)) return std::nullopt;
  if (!get_u32(is, file_kind) || file_kind != static_cast<std::uint32_t>(kind))
    return std::nullopt;
  if (!get_u32(is, count)) return std::nullopt;
  std::vector<SimplexKey> keys;
  keys.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint32_t len;
    if (!get_u32(is, len) || len > 16) return std::nullopt;
    SimplexKey key;
    key.reserve(len);
    for (std::uint32_t k = 0; k < len; ++k) {
      std::uint32_t enc;
      if (!get_u32(is, enc)) return std::nullopt;
      const PidSet snap(static_cast<std::uint16_t>(enc >> 4));
      const Pid pid = static_cast<Pid>(enc & 0xF);
      if (!snap.contains(pid) || !snap.subset_of(PidSet::full(n))) return std::nullopt;
      key.push_back(LocalView{snap, pid});
    }
    keys.push_back(std::move(key));
  }
  try {
    return ComplexAssembler::from_keys(n, kind, std::move(keys));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace viewcx
