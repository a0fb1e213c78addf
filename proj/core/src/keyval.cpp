#include "sqzwg/keyval.hpp"
#include "sqzwg/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sqzwg {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(std::string_view token, const std::string& key, const std::string& origin,
                    int line) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(origin + ":" + std::to_string(line) + ": key '" + key +
                             "': cannot parse '" + std::string(token) + "' as a number",
                         line);
    return value;
}

} // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

KeyValueFile KeyValueFile::parse_string(std::string_view text, std::string origin) {
    KeyValueFile kv;
    kv.origin_ = std::move(origin);

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                                 ": expected 'key = value', got '" + std::string(line) + "'",
                             line_no);
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty())
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) + ": empty key", line_no);
        if (kv.entries_.count(key))
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) + ": duplicate key '" +
                                 key + "' (first at line " +
                                 std::to_string(kv.entries_[key].line) + ")",
                             line_no);
        kv.entries_[key] = Entry{value, line_no};
    }
    return kv;
}

bool KeyValueFile::has(const std::string& key) const {
    return entries_.count(key) != 0;
}

int KeyValueFile::line_of(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
}

const KeyValueFile::Entry& KeyValueFile::require(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end())
        throw ParseError(origin_ + ": missing required key '" + key + "'", 0);
    return it->second;
}

std::string KeyValueFile::get_string(const std::string& key) const {
    return require(key).value;
}

double KeyValueFile::get_double(const std::string& key) const {
    const Entry& e = require(key);
    return parse_double(trim(e.value), key, origin_, e.line);
}

std::vector<double> KeyValueFile::get_doubles(const std::string& key) const {
    const Entry& e = require(key);
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
        rest = trim(rest);
        if (rest.empty())
            break;
        auto end = rest.find_first_of(" \t");
        const std::string_view token = rest.substr(0, end);
        out.push_back(parse_double(token, key, origin_, e.line));
        if (end == std::string_view::npos)
            break;
        rest = rest.substr(end);
    }
    if (out.empty())
        throw ParseError(origin_ + ":" + std::to_string(e.line) + ": key '" + key +
                             "' has no values",
                         e.line);
    return out;
}

std::vector<std::string> KeyValueFile::keys() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, _] : entries_)
        out.push_back(k);
    return out;
}

} // namespace sqzwg
