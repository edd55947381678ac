#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace tse {

/// Writes through a temporary file and renames on success, so a failed
/// run never leaves a partial artifact behind.
inline void atomic_write(const std::filesystem::path& path,
                         const std::function<void(std::ostream&)>& writer,
                         bool binary = false) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    try {
      writer(out);
    } catch (...) {
      out.close();
      fs::remove(tmp);
      throw;
    }
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

}  // namespace tse
