#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fhre {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit content fingerprint (reproducibility checks, not crypto).
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

/// Record of one emitted artifact.
struct ArtifactRecord {
  std::string path;   // relative to the manifest directory
  std::string hash;   // fnv1a64 hex of the bytes
  std::uint64_t size_bytes = 0;
};

/// Written last by every CLI run; identical inputs and seed reproduce
/// identical artifact hashes (the timestamp field alone may differ).
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t master_seed = 0;
  std::string tool_version = kToolVersion;
  std::string timestamp;  // ISO-8601 UTC
  std::vector<ArtifactRecord> artifacts;
};

/// Collects artifacts under an output directory and writes manifest.json.
class ReportWriter {
 public:
  ReportWriter(std::filesystem::path out_dir, std::string command, std::uint64_t seed);

  /// Writes bytes to out_dir/name and records the artifact.
  void write(const std::string& name, const std::string& bytes);

  void add_input(const std::string& path);

  /// Serialize the manifest to out_dir/manifest.json.
  void finalize();

  const std::filesystem::path& out_dir() const { return out_dir_; }

 private:
  std::filesystem::path out_dir_;
  RunManifest manifest_;
};

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace fhre
