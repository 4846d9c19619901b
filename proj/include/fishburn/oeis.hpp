#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fishburn::oeis {

struct Fixture {
  const char* id;
  long offset;
  std::vector<const char*> terms;
};
// Embedded terms for every catalogued sequence.
const std::vector<Fixture>& fixtures();

enum class Source { embedded, cache, network };
std::string to_string(Source s);

struct Sequence {
  std::string id;
  std::map<long, mpz_class> terms;  // index -> a(index), contiguous
  Source source = Source::embedded;

  long first() const { return terms.begin()->first; }
  long last() const { return terms.rbegin()->first; }
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownIdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool valid_id(const std::string& id);

// "n a(n)" lines; '#' comments and blank lines are skipped.
Sequence parse_bfile(const std::string& text, const std::string& id = "");
std::string to_bfile(const Sequence& s);

Sequence embedded(const std::string& id);

enum class Mode { offline, cached, network };
Mode parse_mode(const std::string& s);

struct FetchOptions {
  Mode mode = Mode::offline;
  std::string cache_dir;                     // empty: no cache
  std::string base_url = "https://oeis.org";  // scheme://host[:port]
  int timeout_seconds = 30;
  int retries = 2;
  bool network_allowed = true;
};
// Applies FORGE_OEIS_CACHE and FORGE_OFFLINE=1 on top of the given options.
FetchOptions from_environment(FetchOptions base = {});

// offline: embedded terms only. cached: the cache directory first, then the network when
// allowed (writing the cache), then the embedded terms. network: always downloads.
Sequence fetch(const std::string& id, const FetchOptions& opt);

std::string cache_path(const std::string& dir, const std::string& id);
// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

enum class Scaling { identity, times_factorial };

struct CrossCheck {
  bool match = false;
  long overlap_first = 0;
  long overlap_last = -1;
  long first_mismatch = -1;
  mpz_class expected, computed;  // at the first mismatch
};
// computed[i] is the term of index offset + i; times_factorial multiplies it by index!.
CrossCheck cross_check(const std::vector<mpq_class>& computed, long offset, const Sequence& seq,
                       Scaling scaling = Scaling::identity);
CrossCheck cross_check(const std::vector<mpz_class>& computed, long offset, const Sequence& seq);

}  // namespace fishburn::oeis
