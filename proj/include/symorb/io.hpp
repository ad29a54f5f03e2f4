#pragma once

// Orbit files (JSON) and trajectory export.

#include <cstdint>
#include <string>

#include "symorb/loop.hpp"

namespace symorb {

struct OrbitRecord {
  std::string group_name;
  std::string generators;  // one generator per line
  std::size_t group_order = 0;
  double omega = 0;
  double alpha = 1;
  std::uint64_t seed = 0;
  int quad_points = 0;
  double angular_momentum = 0;
  MinimizeResult result;
};

/// FNV-1a over the %.17g text of the modes.
std::uint64_t modes_checksum(const std::vector<cd>& modes);

std::string orbit_to_json(const OrbitRecord& r);
/// Throws SchemaError on missing or malformed fields, ChecksumMismatch on
/// altered modes, SchemaError when the stored order disagrees with re-closure.
OrbitRecord orbit_from_json(const std::string& text);

void save_orbit(const std::string& path, const OrbitRecord& r);
OrbitRecord load_orbit(const std::string& path);

/// t,x1re,x1im,x2re,x2im,x3re,x3im over one period.
std::string trajectory_csv(const Loop& x, int samples = 512);

}  // namespace symorb
