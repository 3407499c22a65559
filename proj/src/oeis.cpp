#include "coinweigh/oeis.hpp"

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef COINWEIGH_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace coinweigh {

namespace fs = std::filesystem;

namespace {

bool well_formed_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::string fetch_http(const std::string& id) {
#ifdef COINWEIGH_HAVE_OPENSSL
  httplib::SSLClient client("oeis.org");
#else
  httplib::Client client("oeis.org");
#endif
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const std::string path = "/" + id + "/" + bfile_name(id);
  auto res = client.Get(path);
  if (!res) throw NetworkUnavailable("could not reach oeis.org for " + id);
  if (res->status != 200) {
    throw NetworkUnavailable("oeis.org returned status " + std::to_string(res->status) +
                             " for " + path);
  }
  return res->body;
}

void write_cache_atomic(const fs::path& dir, const std::string& id, const std::string& body) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path final_path = dir / bfile_name(id);
  // Unique temp name so concurrent fetches of the same id cannot interleave;
  // the rename is what makes the cache entry appear.
  static std::atomic<unsigned> counter{0};
  const fs::path tmp_path =
      dir / (bfile_name(id) + ".tmp." + std::to_string(::getpid()) + "." +
             std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;  // caching is best-effort
    out << body;
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);
}

}  // namespace

std::string resolve_cache_dir(const OeisOptions& options) {
  if (!options.cache_dir.empty()) return options.cache_dir;
  if (const char* env = std::getenv("COINWEIGH_OEIS_CACHE")) return env;
  return {};
}

BFileTerms parse_bfile(const std::string& text) {
  BFileTerms terms;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    Int index = 0, value = 0;
    const char* p = line.data() + b;
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, index);
    if (r1.ec != std::errc()) throw ParseError("b-file line " + std::to_string(lineno) + ": bad index");
    p = r1.ptr;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, value);
    if (r2.ec != std::errc()) throw ParseError("b-file line " + std::to_string(lineno) + ": bad value");
    p = r2.ptr;
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p != end) throw ParseError("b-file line " + std::to_string(lineno) + ": trailing junk");
    terms.emplace_back(index, value);
  }
  if (terms.empty()) throw ParseError("b-file has no terms");
  return terms;
}

BFileTerms oeis_fetch(const std::string& id, const OeisOptions& options) {
  if (!well_formed_id(id)) throw ParseError("malformed OEIS id: " + id);

  const std::string cache_dir = resolve_cache_dir(options);
  if (!cache_dir.empty()) {
    const fs::path cached = fs::path(cache_dir) / bfile_name(id);
    std::error_code ec;
    if (fs::exists(cached, ec)) {
      std::ifstream in(cached, std::ios::binary);
      std::ostringstream body;
      body << in.rdbuf();
      return parse_bfile(body.str());
    }
  }

  std::string body;
  if (options.offline) {
    const auto& fixtures = oeis_fixtures();
    auto it = fixtures.find(id);
    if (it == fixtures.end()) {
      throw NetworkUnavailable("offline and no fixture or cache for " + id);
    }
    body = it->second;
  } else {
    body = fetch_http(id);
  }
  BFileTerms terms = parse_bfile(body);
  if (!cache_dir.empty()) write_cache_atomic(cache_dir, id, body);
  return terms;
}

}  // namespace coinweigh
