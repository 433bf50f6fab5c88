#pragma once

#include "telescope/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace telescope {

/// "A6256" / "a006256" -> "A006256".
std::string oeis_normalize_id(const std::string& id);

/// Lenient b-file parse: "n value" lines, '#' comments, blank lines ignored.
std::map<long, Int> parse_bfile(const std::string& content);

/// Cache directory resolution: explicit flag, then TELESCOPE_CACHE, then
/// ~/.cache/telescope.
std::string oeis_cache_dir(const std::optional<std::string>& flag);

struct OeisOutcome {
    int exit_code;  // 0 ok, 3 mismatch, 4 network failure without cache
    std::string message;
};

/// Fetches (or replays from cache) the b-file for `id` and compares entries
/// 0..limit against `local`. The fetch is a plain HTTP GET, persisted to the
/// cache directory as b<digits>.txt.
OeisOutcome oeis_check(const std::string& id, long limit, const std::string& cache_dir,
                       bool offline, const std::function<Int(long)>& local);

}  // namespace telescope
