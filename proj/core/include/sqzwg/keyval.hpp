#ifndef SQZWG_KEYVAL_HPP
#define SQZWG_KEYVAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sqzwg {

// Line-oriented `key = value` text format used for material coefficient
// files. `#` starts a comment, blank lines are ignored, keys are unique.
// All errors cite the 1-based line number of the offense.
class KeyValueFile {
public:
    static KeyValueFile parse_file(const std::string& path);
    static KeyValueFile parse_string(std::string_view text, std::string origin = "<string>");

    bool has(const std::string& key) const;
    const std::string& origin() const { return origin_; }
    int line_of(const std::string& key) const; // 0 if absent

    // Typed getters; a missing key or a malformed value throws ParseError.
    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    std::vector<double> get_doubles(const std::string& key) const; // whitespace-separated

    std::vector<std::string> keys() const;

private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries_;
    std::string origin_;

    const Entry& require(const std::string& key) const;
};

} // namespace sqzwg

#endif // SQZWG_KEYVAL_HPP
