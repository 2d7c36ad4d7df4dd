#pragma once

#include <map>
#include <optional>
#include <string>

#include "exdom/model.hpp"

namespace exdom {

/// `key = value` configuration file: one pair per line, '#' starts a comment,
/// blank lines ignored.
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;
    double get_number(const std::string& key, double fallback) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }
    const std::string& origin() const { return origin_; }

private:
    std::map<std::string, std::string> entries_;
    std::string origin_;
};

/// Reads every ModelParams field from a config file. alpha_star and alpha_min
/// are hard-required: they have no published value and must be chosen per
/// experiment. All other keys fall back to the reference set.
ModelParams load_model_params(const KeyValueFile& cfg);

TractionMode parse_traction_mode(const std::string& s);

} // namespace exdom
