#include "fishburn/oeis.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "httplib.h"

namespace fishburn::oeis {

namespace fs = std::filesystem;

std::string to_string(Source s) {
  switch (s) {
    case Source::embedded: return "embedded";
    case Source::cache: return "cache";
    case Source::network: return "network";
  }
  return "?";
}

bool valid_id(const std::string& id) {
  static const std::regex re("A[0-9]{6}");
  return std::regex_match(id, re);
}

Sequence parse_bfile(const std::string& text, const std::string& id) {
  Sequence s;
  s.id = id;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string a, b, extra;
    ls >> a >> b;
    if (b.empty() || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected 'n a(n)'");
    static const std::regex index_re("-?[0-9]+"), value_re("[-+]?[0-9]+");
    if (!std::regex_match(a, index_re) || !std::regex_match(b, value_re))
      throw ParseError("line " + std::to_string(lineno) + ": non-integer token");
    const long n = std::stol(a);
    if (s.terms.count(n)) throw ParseError("line " + std::to_string(lineno) + ": duplicate index " + a);
    if (!s.terms.empty() && n != s.last() + 1)
      throw ParseError("line " + std::to_string(lineno) + ": indices are not contiguous");
    s.terms.emplace(n, mpz_class(b[0] == '+' ? b.substr(1) : b));
  }
  if (s.terms.empty()) throw ParseError("b-file contains no terms");
  return s;
}

std::string to_bfile(const Sequence& s) {
  std::string out = "# " + s.id + "\n";
  for (const auto& [n, v] : s.terms) out += std::to_string(n) + " " + v.get_str() + "\n";
  return out;
}

Sequence embedded(const std::string& id) {
  for (const auto& f : fixtures())
    if (id == f.id) {
      Sequence s;
      s.id = id;
      s.source = Source::embedded;
      long n = f.offset;
      for (const char* t : f.terms) s.terms.emplace(n++, mpz_class(t));
      return s;
    }
  throw UnknownIdError("no embedded terms for " + id);
}

Mode parse_mode(const std::string& s) {
  if (s == "offline") return Mode::offline;
  if (s == "cached") return Mode::cached;
  if (s == "network") return Mode::network;
  throw std::invalid_argument("unknown fetch mode: " + s);
}

FetchOptions from_environment(FetchOptions base) {
  if (const char* dir = std::getenv("FORGE_OEIS_CACHE"); dir && *dir) base.cache_dir = dir;
  if (const char* off = std::getenv("FORGE_OFFLINE"); off && std::string(off) == "1") {
    base.network_allowed = false;
    base.mode = Mode::offline;
  }
  return base;
}

std::string cache_path(const std::string& dir, const std::string& id) {
  return (fs::path(dir) / ("b" + id.substr(1) + ".txt")).string();
}

void write_atomic(const std::string& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string download(const std::string& id, const FetchOptions& opt) {
  if (!opt.network_allowed) throw NetworkError("network access is disabled");
  const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  std::string last_error;
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(200 * attempt));
    try {
      httplib::Client cli(opt.base_url);
      cli.set_connection_timeout(opt.timeout_seconds, 0);
      cli.set_read_timeout(opt.timeout_seconds, 0);
      cli.set_follow_location(true);
      auto res = cli.Get(path);
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status == 200) return res->body;
      last_error = "HTTP " + std::to_string(res->status);
      if (res->status >= 400 && res->status < 500) break;
    } catch (const std::exception& e) {
      last_error = e.what();
    }
  }
  throw NetworkError("fetching " + id + " failed: " + last_error);
}

Sequence from_network(const std::string& id, const FetchOptions& opt) {
  const std::string body = download(id, opt);
  Sequence s = parse_bfile(body, id);
  s.source = Source::network;
  if (!opt.cache_dir.empty()) write_atomic(cache_path(opt.cache_dir, id), body);
  return s;
}

}  // namespace

Sequence fetch(const std::string& id, const FetchOptions& opt) {
  if (!valid_id(id)) throw std::invalid_argument("not an A-number: " + id);
  switch (opt.mode) {
    case Mode::offline: return embedded(id);
    case Mode::network: return from_network(id, opt);
    case Mode::cached: {
      if (!opt.cache_dir.empty()) {
        const fs::path p = cache_path(opt.cache_dir, id);
        if (fs::exists(p)) {
          Sequence s = parse_bfile(read_file(p), id);
          s.source = Source::cache;
          return s;
        }
      }
      if (opt.network_allowed) return from_network(id, opt);
      return embedded(id);
    }
  }
  throw std::invalid_argument("unknown fetch mode");
}

CrossCheck cross_check(const std::vector<mpq_class>& computed, long offset, const Sequence& seq,
                       Scaling scaling) {
  CrossCheck r;
  r.overlap_first = std::max(offset, seq.first());
  r.overlap_last = std::min(offset + long(computed.size()) - 1, seq.last());
  if (r.overlap_first > r.overlap_last) throw std::invalid_argument("computed terms and sequence do not overlap");
  mpz_class fact = 1;
  for (long n = 2; n <= r.overlap_first; ++n) fact *= n;
  for (long n = r.overlap_first; n <= r.overlap_last; ++n) {
    if (n > r.overlap_first && n > 1) fact *= n;
    mpq_class v = computed[std::size_t(n - offset)];
    if (scaling == Scaling::times_factorial) v *= fact;
    const mpz_class& want = seq.terms.at(n);
    if (v.get_den() != 1 || v.get_num() != want) {
      r.first_mismatch = n;
      r.expected = want;
      r.computed = v.get_den() == 1 ? v.get_num() : mpz_class(0);
      return r;
    }
  }
  r.match = true;
  return r;
}

CrossCheck cross_check(const std::vector<mpz_class>& computed, long offset, const Sequence& seq) {
  return cross_check(std::vector<mpq_class>(computed.begin(), computed.end()), offset, seq);
}

}  // namespace fishburn::oeis
