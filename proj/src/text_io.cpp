#include "maggrasp/text_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace maggrasp {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_number(const std::string& s, double* out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) return false;
    *out = v;
    return true;
}

bool valid_key(const std::string& key) {
    if (key.empty() || key.front() == '.' || key.back() == '.') return false;
    for (char ch : key) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.'))
            return false;
    }
    return true;
}

}  // namespace

FlatDoc FlatDoc::parse(const std::string& text) {
    FlatDoc doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string raw = trim(line.substr(eq + 1));
        if (!valid_key(key))
            throw ConfigError(key, "line " + std::to_string(lineno) + ": invalid key");
        if (doc.values_.count(key))
            throw ConfigError(key, "line " + std::to_string(lineno) + ": duplicate key");
        if (raw.empty())
            throw ConfigError(key, "line " + std::to_string(lineno) + ": missing value");

        Value v;
        if (raw.front() == '[') {
            if (raw.back() != ']')
                throw ConfigError(key, "line " + std::to_string(lineno) + ": unterminated list");
            v.type = Type::NumberList;
            std::string body = raw.substr(1, raw.size() - 2);
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                std::string item = trim(comma == std::string::npos ? body.substr(pos)
                                                                   : body.substr(pos, comma - pos));
                if (!item.empty()) {
                    double num = 0.0;
                    if (!parse_number(item, &num))
                        throw ConfigError(key, "list element `" + item + "` is not a number");
                    v.list.push_back(num);
                } else if (comma != std::string::npos || !v.list.empty()) {
                    if (!(comma == std::string::npos && v.list.empty()))
                        throw ConfigError(key, "empty list element");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else if (raw == "true" || raw == "false") {
            v.type = Type::Boolean;
            v.boolean = (raw == "true");
        } else if (double num = 0.0; parse_number(raw, &num)) {
            v.type = Type::Number;
            v.number = num;
        } else {
            v.type = Type::String;
            v.text = raw;
        }
        doc.values_.emplace(key, std::move(v));
    }
    return doc;
}

const FlatDoc::Value& FlatDoc::require(const std::string& key, Type type) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(key, "missing required key");
    consumed_[key] = true;
    if (it->second.type != type) {
        static const char* names[] = {"number", "boolean", "string", "number list"};
        throw ConfigError(key, std::string("expected a ") + names[static_cast<int>(type)]);
    }
    return it->second;
}

double FlatDoc::get_number(const std::string& key) const { return require(key, Type::Number).number; }

double FlatDoc::get_number_or(const std::string& key, double fallback) const {
    return has(key) ? get_number(key) : fallback;
}

bool FlatDoc::get_bool(const std::string& key) const { return require(key, Type::Boolean).boolean; }

bool FlatDoc::get_bool_or(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}

std::string FlatDoc::get_string(const std::string& key) const {
    return require(key, Type::String).text;
}

std::string FlatDoc::get_string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

std::vector<double> FlatDoc::get_list(const std::string& key) const {
    return require(key, Type::NumberList).list;
}

std::vector<double> FlatDoc::get_list_or(const std::string& key,
                                         const std::vector<double>& fallback) const {
    return has(key) ? get_list(key) : fallback;
}

std::vector<double> FlatDoc::get_list_n(const std::string& key, std::size_t n) const {
    auto v = get_list(key);
    if (v.size() != n)
        throw ConfigError(key, "expected " + std::to_string(n) + " elements, got " +
                                   std::to_string(v.size()));
    return v;
}

void FlatDoc::set_number(const std::string& key, double v) {
    Value val;
    val.type = Type::Number;
    val.number = v;
    values_[key] = val;
}

void FlatDoc::set_bool(const std::string& key, bool v) {
    Value val;
    val.type = Type::Boolean;
    val.boolean = v;
    values_[key] = val;
}

void FlatDoc::set_string(const std::string& key, const std::string& v) {
    Value val;
    val.type = Type::String;
    val.text = v;
    values_[key] = val;
}

void FlatDoc::set_list(const std::string& key, const std::vector<double>& v) {
    Value val;
    val.type = Type::NumberList;
    val.list = v;
    values_[key] = val;
}

std::vector<std::string> FlatDoc::unconsumed() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_) {
        (void)value;
        auto it = consumed_.find(key);
        if (it == consumed_.end() || !it->second) out.push_back(key);
    }
    return out;
}

void FlatDoc::require_all_consumed() const {
    const auto leftover = unconsumed();
    if (!leftover.empty()) {
        std::string msg = "unknown key";
        if (leftover.size() > 1) msg += "s";
        msg += ":";
        for (const auto& key : leftover) msg += " " + key;
        throw ConfigError(leftover.front(), msg);
    }
}

std::string FlatDoc::serialize() const {
    std::string out;
    for (const auto& [key, v] : values_) {  // std::map iterates sorted
        out += key;
        out += " = ";
        switch (v.type) {
            case Type::Number: out += format_double(v.number); break;
            case Type::Boolean: out += v.boolean ? "true" : "false"; break;
            case Type::String: out += v.text; break;
            case Type::NumberList: {
                out += "[";
                for (std::size_t i = 0; i < v.list.size(); ++i) {
                    if (i) out += ", ";
                    out += format_double(v.list[i]);
                }
                out += "]";
                break;
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace maggrasp
