#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace sbinet {

struct ServeOptions {
  std::filesystem::path bundle_dir;
  std::optional<std::filesystem::path> viewer_dir;  // built-in index page when absent
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
};

/// Read-only HTTP server over a bundle directory and the viewer assets.
class BundleServer {
 public:
  explicit BundleServer(ServeOptions options);
  ~BundleServer();
  BundleServer(const BundleServer&) = delete;
  BundleServer& operator=(const BundleServer&) = delete;

  /// False when the port cannot be bound (typically already in use).
  bool bind();
  int port() const;

  /// Blocks until stop() is called from another thread.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// MIME type by file extension.
std::string content_type_for(const std::filesystem::path& path);

/// Minimal page that lists the objects of the served dashboard.
const std::string& builtin_index_page();

}  // namespace sbinet
