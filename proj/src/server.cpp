#include "sbinet/server.hpp"

#include <httplib.h>

namespace sbinet {

std::string content_type_for(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return "application/json";
  if (ext == ".csv") return "text/csv; charset=utf-8";
  if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".svg") return "image/svg+xml";
  return "application/octet-stream";
}

const std::string& builtin_index_page() {
  static const std::string page = R"(<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Dashboard</title>
<style>
body { font-family: sans-serif; margin: 2rem; }
section { border: 1px solid #ccc; padding: 0.5rem 1rem; margin-bottom: 1rem; }
code { color: #555; }
</style>
</head>
<body>
<h1 id="title">Dashboard</h1>
<div id="objects"></div>
<script>
fetch('dashboard.json').then(r => r.json()).then(d => {
  document.getElementById('title').textContent = d.domain + ' dashboard';
  const root = document.getElementById('objects');
  if (!d.objects.length) { root.textContent = 'empty dashboard'; return; }
  for (const o of d.objects) {
    const s = document.createElement('section');
    s.id = 'object-' + o.id;
    const h = document.createElement('h2');
    h.textContent = o.title;
    const p = document.createElement('p');
    const measures = o.measure.map(m => m.op + '(' + m.column + ')').join(', ');
    p.innerHTML = '<code>' + o.viz + '</code> ' + measures +
      (o.dimension ? ' by ' + o.dimension.column : '') + ' from ' + o.data.source;
    s.append(h, p);
    root.append(s);
  }
}).catch(e => { document.getElementById('objects').textContent = 'cannot load bundle: ' + e; });
</script>
</body>
</html>
)";
  return page;
}

struct BundleServer::Impl {
  ServeOptions options;
  httplib::Server server;
  int bound_port = -1;
};

BundleServer::BundleServer(ServeOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto& svr = impl_->server;
  // httplib's default sets SO_REUSEPORT, which lets a second server share
  // the port silently.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  const auto viewer = impl_->options.viewer_dir;
  svr.Get("/", [viewer](const httplib::Request&, httplib::Response& res) {
    if (viewer) {
      std::ifstream in(*viewer / "index.html", std::ios::binary);
      if (in) {
        std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        res.set_content(body, "text/html; charset=utf-8");
        return;
      }
    }
    res.set_content(builtin_index_page(), "text/html; charset=utf-8");
  });
  for (const char* ext : {"json", "csv", "html", "htm", "js", "mjs", "css", "svg"}) {
    svr.set_file_extension_and_mimetype_mapping(
        ext, content_type_for(std::string("x.") + ext));
  }
  svr.set_mount_point("/", impl_->options.bundle_dir.string());
  if (viewer) svr.set_mount_point("/", viewer->string());
}

BundleServer::~BundleServer() { stop(); }

bool BundleServer::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    impl_->bound_port = impl_->server.bind_to_any_port(o.host);
    return impl_->bound_port > 0;
  }
  if (!impl_->server.bind_to_port(o.host, o.port)) return false;
  impl_->bound_port = o.port;
  return true;
}

int BundleServer::port() const { return impl_->bound_port; }

void BundleServer::listen() { impl_->server.listen_after_bind(); }

void BundleServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace sbinet
