#ifndef FROGLAB_CONFIG_HPP
#define FROGLAB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace froglab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// UTF-8 text config: `key = value` lines, `#` comments, `[section]`
/// headers. Values keep their raw text; typed getters parse on access.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;

    std::int64_t get_int(const std::string& section, const std::string& key) const;
    std::int64_t get_int(const std::string& section, const std::string& key,
                         std::int64_t fallback) const;

    std::uint64_t get_uint(const std::string& section, const std::string& key,
                           std::uint64_t fallback) const;

    double get_real(const std::string& section, const std::string& key,
                    double fallback) const;

    /// Whitespace-separated integer list.
    std::vector<std::int64_t> get_int_list(const std::string& section,
                                           const std::string& key) const;
    /// Whitespace-separated word list.
    std::vector<std::string> get_word_list(const std::string& section,
                                           const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

  private:
    // keys stored as "section.key" ("" section for preamble keys)
    std::map<std::string, std::string> values_;
};

}  // namespace froglab

#endif
