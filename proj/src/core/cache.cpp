#include "cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fillprobe {

namespace {

std::string cache_key(const GroupPresentation& p, unsigned radius) {
  return presentation_id(p) + "-r" + std::to_string(radius) + ".json";
}

}  // namespace

std::string presentation_id(const GroupPresentation& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : p.canonical_text()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string cache_dir_from_env() {
  const char* dir = std::getenv("FILLPROBE_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

TwoComplex load_or_build_complex(const GroupPresentation& p, const RewritingSystem& rws, unsigned radius,
                                 BallLimits limits, const std::string& cache_dir) {
  if (cache_dir.empty()) return attach_cells(build_ball(p, rws, radius, limits), p);
  namespace fs = std::filesystem;
  fs::path file = fs::path(cache_dir) / cache_key(p, radius);
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      std::ifstream in(file);
      nlohmann::json j = nlohmann::json::parse(in);
      TwoComplex x = complex_from_json(j, p, rws);
      if (x.ball.radius == radius) return x;
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  TwoComplex x = attach_cells(build_ball(p, rws, radius, limits), p);
  fs::create_directories(cache_dir, ec);
  if (!ec) {
    fs::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << complex_to_json(x, p).dump();
    }
    fs::rename(tmp, file, ec);
  }
  return x;
}

}  // namespace fillprobe
