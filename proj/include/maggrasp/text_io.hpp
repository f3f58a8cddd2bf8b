#pragma once

#include "maggrasp/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace maggrasp {

/// Formats a double so that parsing it back is bit-exact (17 significant
/// digits, shortest form %.17g gives).
std::string format_double(double v);

/// Flat `key = value` text document with dotted keys.
///
/// Values are numbers, booleans, bare strings or numeric lists
/// `[a, b, c]`. `#` starts a comment. Reads track which keys were
/// consumed so callers can reject unknown keys with a field path.
class FlatDoc {
public:
    enum class Type { Number, Boolean, String, NumberList };

    struct Value {
        Type type = Type::Number;
        double number = 0.0;
        bool boolean = false;
        std::string text;
        std::vector<double> list;
    };

    static FlatDoc parse(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double get_number(const std::string& key) const;
    double get_number_or(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    std::vector<double> get_list(const std::string& key) const;
    std::vector<double> get_list_or(const std::string& key,
                                    const std::vector<double>& fallback) const;
    /// List with an exact element count.
    std::vector<double> get_list_n(const std::string& key, std::size_t n) const;

    void set_number(const std::string& key, double v);
    void set_bool(const std::string& key, bool v);
    void set_string(const std::string& key, const std::string& v);
    void set_list(const std::string& key, const std::vector<double>& v);

    /// Keys never consumed by any getter (strict configs reject these).
    std::vector<std::string> unconsumed() const;
    void require_all_consumed() const;

    /// Canonical form: keys sorted, doubles at 17 significant digits.
    std::string serialize() const;

    const std::map<std::string, Value>& entries() const { return values_; }

private:
    const Value& require(const std::string& key, Type type) const;
    std::map<std::string, Value> values_;
    mutable std::map<std::string, bool> consumed_;
};

}  // namespace maggrasp
