#include "fhre/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fhre {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ReportWriter::ReportWriter(std::filesystem::path out_dir, std::string command,
                           std::uint64_t seed)
    : out_dir_(std::move(out_dir)) {
  std::filesystem::create_directories(out_dir_);
  manifest_.command = std::move(command);
  manifest_.master_seed = seed;
  manifest_.timestamp = utc_timestamp();
}

void ReportWriter::write(const std::string& name, const std::string& bytes) {
  const std::filesystem::path path = out_dir_ / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  manifest_.artifacts.push_back({name, fnv1a64_hex(bytes), bytes.size()});
}

void ReportWriter::add_input(const std::string& path) { manifest_.inputs.push_back(path); }

void ReportWriter::finalize() {
  nlohmann::json doc;
  doc["command"] = manifest_.command;
  doc["inputs"] = manifest_.inputs;
  doc["master_seed"] = manifest_.master_seed;
  doc["tool_version"] = manifest_.tool_version;
  doc["timestamp"] = manifest_.timestamp;
  auto artifacts = nlohmann::json::array();
  for (const auto& a : manifest_.artifacts) {
    artifacts.push_back({{"path", a.path}, {"hash", a.hash}, {"size_bytes", a.size_bytes}});
  }
  doc["artifacts"] = artifacts;
  const std::filesystem::path path = out_dir_ / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const std::string bytes = doc.dump(2) + "\n";
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace fhre
