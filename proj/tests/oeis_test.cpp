#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "fishburn/families.hpp"
#include "fishburn/oeis.hpp"
#include "httplib.h"

namespace fishburn::oeis {
namespace {

namespace fs = std::filesystem;

const char* kFishburnBfile =
    "# Fishburn numbers\n"
    "0 1\n1 1\n2 2\n3 5\n4 15\n5 53\n6 217\n7 1014\n8 5335\n\n";

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("oeis_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

// Serves b-files on 127.0.0.1 and counts requests.
class LocalServer {
 public:
  LocalServer() {
    server_.Get(R"(/(A\d{6})/b(\d{6})\.txt)", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      if (req.matches[1] == "A022493") res.set_content(kFishburnBfile, "text/plain");
      else if (req.matches[1] == "A999998") res.set_content("0 1\n1 x\n", "text/plain");
      else res.status = 404;
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  std::atomic<int> requests{0};

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

FetchOptions local(const LocalServer& s, Mode mode, const std::string& cache = "") {
  FetchOptions o;
  o.mode = mode;
  o.base_url = s.url();
  o.cache_dir = cache;
  o.timeout_seconds = 5;
  o.retries = 2;
  return o;
}

TEST(Bfile, ParsesCommentsAndBlankLines) {
  const auto s = parse_bfile(kFishburnBfile, "A022493");
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.last(), 8);
  EXPECT_EQ(s.terms.at(7), 1014);
}

TEST(Bfile, RejectsMalformedInput) {
  EXPECT_THROW(parse_bfile("0 1\n1\n"), ParseError);
  EXPECT_THROW(parse_bfile("0 1\n1 2x\n"), ParseError);
  EXPECT_THROW(parse_bfile("0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_bfile("0 1\n2 1\n"), ParseError);
  EXPECT_THROW(parse_bfile("# nothing\n"), ParseError);
}

TEST(Bfile, RoundTrip) {
  const auto s = parse_bfile("1 -3\n2 12345678901234567890123\n3 0\n");
  const auto t = parse_bfile(to_bfile(s));
  EXPECT_EQ(s.terms, t.terms);
}

TEST(Ids, Validation) {
  EXPECT_TRUE(valid_id("A022493"));
  EXPECT_FALSE(valid_id("A22493"));
  EXPECT_FALSE(valid_id("B022493"));
  EXPECT_FALSE(valid_id("A02249x"));
  EXPECT_THROW(fetch("../etc", FetchOptions{}), std::invalid_argument);
  EXPECT_EQ(parse_mode("cached"), Mode::cached);
  EXPECT_THROW(parse_mode("sometimes"), std::invalid_argument);
}

TEST(Embedded, EveryCatalogueIdAgreesWithComputedTerms) {
  for (const auto& e : catalog()) {
    const auto seq = embedded(e.id);
    EXPECT_GE(seq.terms.size(), 10u) << e.id;
    const auto computed = catalog_terms(e.id, int(seq.last() - e.offset + 1));
    const auto cc = cross_check(computed, e.offset, seq);
    EXPECT_TRUE(cc.match) << e.id << " at " << cc.first_mismatch;
  }
  EXPECT_THROW(embedded("A000004"), UnknownIdError);
}

TEST(CrossCheck, ReportsFirstMismatch) {
  const auto seq = parse_bfile(kFishburnBfile);
  std::vector<mpz_class> computed = {1, 1, 2, 5, 16, 53};
  const auto cc = cross_check(computed, 0, seq);
  EXPECT_FALSE(cc.match);
  EXPECT_EQ(cc.first_mismatch, 4);
  EXPECT_EQ(cc.expected, 15);
  EXPECT_EQ(cc.computed, 16);
  EXPECT_EQ(cc.overlap_last, 5);
  EXPECT_THROW(cross_check(computed, 100, seq), std::invalid_argument);
}

TEST(CrossCheck, FactorialScaling) {
  const auto seq = parse_bfile("0 1\n1 1\n2 3\n3 19\n");
  const std::vector<mpq_class> egf = {1, 1, mpq_class(3, 2), mpq_class(19, 6)};
  EXPECT_TRUE(cross_check(egf, 0, seq, Scaling::times_factorial).match);
  EXPECT_FALSE(cross_check(egf, 0, seq, Scaling::identity).match);
}

TEST(Fetch, OfflineUsesEmbeddedTerms) {
  FetchOptions o;
  o.mode = Mode::offline;
  o.network_allowed = false;
  const auto s = fetch("A022493", o);
  EXPECT_EQ(s.source, Source::embedded);
  EXPECT_EQ(s.terms.at(6), 217);
}

TEST(Fetch, NetworkWritesCache) {
  LocalServer server;
  TempDir dir;
  const auto s = fetch("A022493", local(server, Mode::network, dir.str()));
  EXPECT_EQ(s.source, Source::network);
  EXPECT_EQ(s.terms.at(8), 5335);
  EXPECT_TRUE(fs::exists(cache_path(dir.str(), "A022493")));
  // The cached mode now reads the file without a request.
  const int before = server.requests;
  const auto c = fetch("A022493", local(server, Mode::cached, dir.str()));
  EXPECT_EQ(c.source, Source::cache);
  EXPECT_EQ(server.requests, before);
  EXPECT_EQ(c.terms, s.terms);
}

TEST(Fetch, CachedFallsBackToEmbeddedWithoutNetwork) {
  LocalServer server;
  TempDir dir;
  auto o = local(server, Mode::cached, dir.str());
  o.network_allowed = false;
  EXPECT_EQ(fetch("A022493", o).source, Source::embedded);
  EXPECT_EQ(server.requests, 0);
}

TEST(Fetch, NotFoundIsNotRetried) {
  LocalServer server;
  EXPECT_THROW(fetch("A000004", local(server, Mode::network)), NetworkError);
  EXPECT_EQ(server.requests, 1);
}

TEST(Fetch, MalformedDownloadIsAParseError) {
  LocalServer server;
  TempDir dir;
  EXPECT_THROW(fetch("A999998", local(server, Mode::network, dir.str())), ParseError);
  EXPECT_FALSE(fs::exists(cache_path(dir.str(), "A999998")));
}

TEST(Fetch, UnreachableHostRetriesThenFails) {
  FetchOptions o;
  o.mode = Mode::network;
  o.base_url = "http://127.0.0.1:1";
  o.timeout_seconds = 1;
  o.retries = 1;
  EXPECT_THROW(fetch("A022493", o), NetworkError);
}

TEST(Fetch, EnvironmentForbidsNetwork) {
  LocalServer server;
  ::setenv("FORGE_OFFLINE", "1", 1);
  const auto o = from_environment(local(server, Mode::network));
  ::unsetenv("FORGE_OFFLINE");
  EXPECT_FALSE(o.network_allowed);
  EXPECT_EQ(o.mode, Mode::offline);
  EXPECT_EQ(fetch("A022493", o).source, Source::embedded);
  auto forced = o;
  forced.mode = Mode::network;
  EXPECT_THROW(fetch("A022493", forced), NetworkError);
  EXPECT_EQ(server.requests, 0);
}

TEST(Fetch, EnvironmentSetsCacheDirectory) {
  ::setenv("FORGE_OEIS_CACHE", "/tmp/some-cache", 1);
  const auto o = from_environment();
  ::unsetenv("FORGE_OEIS_CACHE");
  EXPECT_EQ(o.cache_dir, "/tmp/some-cache");
  EXPECT_EQ(cache_path("/c", "A022493"), "/c/b022493.txt");
}

TEST(Cache, AtomicWriteReplacesContent) {
  TempDir dir;
  const std::string p = dir.str() + "/sub/b000001.txt";
  write_atomic(p, "0 1\n");
  write_atomic(p, "0 2\n");
  std::ifstream in(p);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "0 2\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.str() + "/sub")) ++files;
  EXPECT_EQ(files, 1u);
}

TEST(Cache, ConcurrentWritersLeaveOneCompleteFile) {
  TempDir dir;
  const std::string p = dir.str() + "/b000002.txt";
  std::vector<std::thread> ts;
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&, i] {
      for (int r = 0; r < 20; ++r) write_atomic(p, std::string(1000, char('a' + i)));
    });
  for (auto& t : ts) t.join();
  std::ifstream in(p);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ASSERT_EQ(content.size(), 1000u);
  EXPECT_EQ(content.find_first_not_of(content[0]), std::string::npos);
}

}  // namespace
}  // namespace fishburn::oeis
