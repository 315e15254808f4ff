#include "subdivlab/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subdiv::toml {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::runtime_error("toml line " + std::to_string(lineno) + ": " + what);
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// removes an unquoted '#' comment
std::string strip_comment(const std::string& s) {
    bool in_string = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_string = !in_string;
        if (s[i] == '#' && !in_string) return s.substr(0, i);
    }
    return s;
}

Value parse_scalar(const std::string& text, int lineno) {
    if (text.empty()) fail(lineno, "empty value");
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') fail(lineno, "unterminated string");
        return Value(text.substr(1, text.size() - 2));
    }
    if (text == "true") return Value(true);
    if (text == "false") return Value(false);
    if (text.find_first_of(".eE") != std::string::npos &&
        text.find_first_not_of("+-0123456789.eE") == std::string::npos) {
        try {
            size_t pos = 0;
            double d = std::stod(text, &pos);
            if (pos == text.size()) return Value(d);
        } catch (const std::exception&) {
        }
    }
    try {
        size_t pos = 0;
        long long i = std::stoll(text, &pos);
        if (pos == text.size()) return Value(i);
    } catch (const std::exception&) {
    }
    fail(lineno, "cannot parse value '" + text + "'");
}

Value parse_value(const std::string& text, int lineno) {
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail(lineno, "unterminated array");
        Array items;
        std::string body = text.substr(1, text.size() - 2);
        std::string piece;
        bool in_string = false;
        for (char c : body) {
            if (c == '"') in_string = !in_string;
            if (c == ',' && !in_string) {
                std::string item = strip(piece);
                if (!item.empty()) items.push_back(parse_scalar(item, lineno));
                piece.clear();
            } else {
                piece += c;
            }
        }
        std::string item = strip(piece);
        if (!item.empty()) items.push_back(parse_scalar(item, lineno));
        return Value(items);
    }
    return parse_scalar(text, lineno);
}

}  // namespace

Table parse(const std::string& text) {
    Table root;
    Table* current = &root;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            bool is_array = line.size() > 1 && line[1] == '[';
            size_t close = line.find(is_array ? "]]" : "]");
            if (close == std::string::npos) fail(lineno, "unterminated table header");
            std::string name = strip(line.substr(is_array ? 2 : 1, close - (is_array ? 2 : 1)));
            if (name.empty()) fail(lineno, "empty table name");
            if (is_array) {
                auto [it, inserted] = root.try_emplace(name, Value(std::vector<Table>{}));
                if (!it->second.is_table_array()) fail(lineno, "'" + name + "' is not a table array");
                auto& vec = std::get<std::vector<Table>>(it->second.storage());
                vec.emplace_back();
                current = &vec.back();
            } else {
                auto [it, inserted] = root.try_emplace(name, Value(Table{}));
                if (!it->second.is_table()) fail(lineno, "'" + name + "' is not a table");
                current = &std::get<Table>(it->second.storage());
            }
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        (*current)[key] = parse_value(value, lineno);
    }
    return root;
}

Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string get_string(const Table& t, const std::string& key, const std::string& fallback) {
    auto it = t.find(key);
    if (it == t.end()) return fallback;
    if (!it->second.is_string()) throw std::runtime_error("config key '" + key + "': expected string");
    return it->second.as_string();
}

long long get_int(const Table& t, const std::string& key, long long fallback) {
    auto it = t.find(key);
    if (it == t.end()) return fallback;
    if (!it->second.is_int()) throw std::runtime_error("config key '" + key + "': expected integer");
    return it->second.as_int();
}

double get_number(const Table& t, const std::string& key, double fallback) {
    auto it = t.find(key);
    if (it == t.end()) return fallback;
    if (!it->second.is_int() && !it->second.is_float())
        throw std::runtime_error("config key '" + key + "': expected number");
    return it->second.as_number();
}

bool get_bool(const Table& t, const std::string& key, bool fallback) {
    auto it = t.find(key);
    if (it == t.end()) return fallback;
    if (!it->second.is_bool()) throw std::runtime_error("config key '" + key + "': expected bool");
    return it->second.as_bool();
}

}  // namespace subdiv::toml
