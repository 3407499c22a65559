#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coinweigh/checked.hpp"

namespace coinweigh {

// Cache directory resolution order: explicit option, then the
// COINWEIGH_OEIS_CACHE environment variable, else no caching.
struct OeisOptions {
  std::string cache_dir;
  bool offline = false;
};

using BFileTerms = std::vector<std::pair<Int, Int>>;

// Strict "index value" lines; '#' comments and blank lines are skipped.
BFileTerms parse_bfile(const std::string& text);

// Resolution order: cache file, then (offline) embedded fixture or (online)
// https://oeis.org/<id>/b<digits>.txt. Successful lookups are written back
// to the cache atomically.
BFileTerms oeis_fetch(const std::string& id, const OeisOptions& options = {});

// Embedded b-files for the nine sequences the checks reference.
const std::map<std::string, const char*>& oeis_fixtures();

std::string resolve_cache_dir(const OeisOptions& options);

}  // namespace coinweigh
