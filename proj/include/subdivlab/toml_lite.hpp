#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace subdiv::toml {

// Minimal TOML subset: top-level keys, [tables], [[arrays-of-tables]],
// strings, integers, floats, booleans, and flat arrays of those. Enough for
// experiment configs; not a general TOML implementation.
class Value;
using Table = std::map<std::string, Value>;
using Array = std::vector<Value>;

class Value {
public:
    using Storage =
        std::variant<std::string, long long, double, bool, Array, Table, std::vector<Table>>;

    Value() : storage_(std::string{}) {}
    template <typename T>
    Value(T v) : storage_(std::move(v)) {}

    bool is_string() const { return std::holds_alternative<std::string>(storage_); }
    bool is_int() const { return std::holds_alternative<long long>(storage_); }
    bool is_float() const { return std::holds_alternative<double>(storage_); }
    bool is_bool() const { return std::holds_alternative<bool>(storage_); }
    bool is_array() const { return std::holds_alternative<Array>(storage_); }
    bool is_table() const { return std::holds_alternative<Table>(storage_); }
    bool is_table_array() const { return std::holds_alternative<std::vector<Table>>(storage_); }

    const std::string& as_string() const { return std::get<std::string>(storage_); }
    long long as_int() const { return std::get<long long>(storage_); }
    double as_number() const {
        return is_int() ? static_cast<double>(as_int()) : std::get<double>(storage_);
    }
    bool as_bool() const { return std::get<bool>(storage_); }
    const Array& as_array() const { return std::get<Array>(storage_); }
    const Table& as_table() const { return std::get<Table>(storage_); }
    const std::vector<Table>& as_table_array() const {
        return std::get<std::vector<Table>>(storage_);
    }

    Storage& storage() { return storage_; }

private:
    Storage storage_;
};

Table parse(const std::string& text);
Table parse_file(const std::string& path);

// Lookup helpers with defaults; throw on type mismatch.
std::string get_string(const Table& t, const std::string& key, const std::string& fallback);
long long get_int(const Table& t, const std::string& key, long long fallback);
double get_number(const Table& t, const std::string& key, double fallback);
bool get_bool(const Table& t, const std::string& key, bool fallback);

}  // namespace subdiv::toml
