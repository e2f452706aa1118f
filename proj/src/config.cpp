#include "froglab/config.hpp"

#include <fstream>
#include <sstream>

namespace froglab {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        cfg.values_[section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) != 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    auto it = values_.find(section + "." + key);
    if (it == values_.end())
        throw ConfigError("missing config key [" + section + "] " + key);
    return it->second;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

std::int64_t Config::get_int(const std::string& section, const std::string& key) const {
    const std::string v = get_string(section, key);
    try {
        std::size_t used = 0;
        const std::int64_t n = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing");
        return n;
    } catch (...) {
        throw ConfigError("config key [" + section + "] " + key +
                          ": not an integer: " + v);
    }
}

std::int64_t Config::get_int(const std::string& section, const std::string& key,
                             std::int64_t fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_uint(const std::string& section, const std::string& key,
                               std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key);
    try {
        std::size_t used = 0;
        const std::uint64_t n = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing");
        return n;
    } catch (...) {
        throw ConfigError("config key [" + section + "] " + key +
                          ": not an unsigned integer: " + v);
    }
}

double Config::get_real(const std::string& section, const std::string& key,
                        double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key);
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (...) {
        throw ConfigError("config key [" + section + "] " + key + ": not a real: " + v);
    }
}

std::vector<std::int64_t> Config::get_int_list(const std::string& section,
                                               const std::string& key) const {
    std::vector<std::int64_t> out;
    std::istringstream ss(get_string(section, key));
    std::string word;
    while (ss >> word) {
        try {
            out.push_back(std::stoll(word));
        } catch (...) {
            throw ConfigError("config key [" + section + "] " + key +
                              ": bad integer list element: " + word);
        }
    }
    if (out.empty())
        throw ConfigError("config key [" + section + "] " + key + ": empty list");
    return out;
}

std::vector<std::string> Config::get_word_list(const std::string& section,
                                               const std::string& key) const {
    std::vector<std::string> out;
    std::istringstream ss(get_string(section, key));
    std::string word;
    while (ss >> word) out.push_back(word);
    return out;
}

}  // namespace froglab
