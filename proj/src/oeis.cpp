#include "telescope/oeis.hpp"

#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace telescope {

std::string oeis_normalize_id(const std::string& id) {
    std::string digits;
    for (char c : id) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digits += c;
        else if (c != 'A' && c != 'a')
            throw std::domain_error("oeis: bad id '" + id + "'");
    }
    if (digits.empty() || digits.size() > 6) throw std::domain_error("oeis: bad id '" + id + "'");
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "A" + digits;
}

std::map<long, Int> parse_bfile(const std::string& content) {
    std::map<long, Int> out;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string ns, vs;
        if (!(ls >> ns >> vs)) continue;
        try {
            out[std::stol(ns)] = Int(vs);
        } catch (const std::exception&) {
            continue;  // tolerate malformed rows
        }
    }
    return out;
}

std::string oeis_cache_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("TELESCOPE_CACHE"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/telescope";
    return ".telescope-cache";
}

OeisOutcome oeis_check(const std::string& id, long limit, const std::string& cache_dir,
                       bool offline, const std::function<Int(long)>& local) {
    const std::string canon = oeis_normalize_id(id);
    const std::string fname = "b" + canon.substr(1) + ".txt";
    const std::filesystem::path cache_path = std::filesystem::path(cache_dir) / fname;

    std::string content;
    if (std::filesystem::exists(cache_path)) {
        std::ifstream in(cache_path);
        std::stringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    } else if (offline) {
        return {4, "offline and no cached b-file at " + cache_path.string()};
    } else {
        httplib::Client client("http://oeis.org");
        client.set_follow_location(true);
        auto res = client.Get("/" + canon + "/" + fname);
        if (!res || res->status != 200) {
            return {4, "fetch of " + canon + " failed" +
                           (res ? " (status " + std::to_string(res->status) + ")" : "")};
        }
        content = res->body;
        std::filesystem::create_directories(cache_path.parent_path());
        std::ofstream out(cache_path);
        out << content;
    }

    auto rows = parse_bfile(content);
    if (rows.empty()) return {3, "no entries parsed from " + cache_path.string()};
    long checked = 0;
    for (long n = 0; n <= limit; ++n) {
        auto it = rows.find(n);
        if (it == rows.end()) {
            if (n == 0) continue;  // some b-files start at 1
            return {3, "entry " + std::to_string(n) + " missing from b-file"};
        }
        Int ours = local(n);
        if (it->second != ours)
            return {3, "mismatch at n=" + std::to_string(n) + ": b-file " +
                           it->second.get_str() + " vs local " + ours.get_str()};
        ++checked;
    }
    return {0, canon + ": " + std::to_string(checked) + " entries match"};
}

}  // namespace telescope
