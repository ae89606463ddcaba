#include "ptdirac/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "ptdirac/errors.hpp"

namespace ptdirac {

std::string format_double(double v) {
    if (v == 0.0)
        return "0";
    char buf[64];
    const auto fmt = (std::fabs(v) < 1e-3) ? std::chars_format::scientific
                                           : std::chars_format::general;
    const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt);
    return std::string(buf, res.ptr);
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

} // namespace

JsonWriter::JsonWriter() = default;

void JsonWriter::comma() {
    if (first_in_scope_.empty()) {
        // root value, nothing to separate
    } else if (first_in_scope_.back()) {
        out_ += '\n';
        first_in_scope_.back() = false;
        indent();
    } else {
        out_ += ",\n";
        indent();
    }
}

void JsonWriter::indent() {
    for (int i = 0; i < depth_; ++i)
        out_ += "  ";
}

void JsonWriter::begin_object() {
    comma();
    out_ += '{';
    first_in_scope_.push_back(true);
    ++depth_;
}

void JsonWriter::begin_object_in_array() { begin_object(); }

void JsonWriter::begin_object(const std::string& key) {
    comma();
    out_ += '"' + escape_json(key) + "\": {";
    first_in_scope_.push_back(true);
    ++depth_;
}

void JsonWriter::begin_array(const std::string& key) {
    comma();
    out_ += '"' + escape_json(key) + "\": [";
    first_in_scope_.push_back(true);
    ++depth_;
}

void JsonWriter::begin_array() {
    comma();
    out_ += '[';
    first_in_scope_.push_back(true);
    ++depth_;
}

void JsonWriter::key_value(const std::string& key, const std::string& v) {
    comma();
    out_ += '"' + escape_json(key) + "\": \"" + escape_json(v) + '"';
}

void JsonWriter::key_value(const std::string& key, const char* v) {
    key_value(key, std::string(v));
}

void JsonWriter::key_value(const std::string& key, double v) {
    comma();
    out_ += '"' + escape_json(key) + "\": " + format_double(v);
}

void JsonWriter::key_value(const std::string& key, int v) {
    comma();
    out_ += '"' + escape_json(key) + "\": " + std::to_string(v);
}

void JsonWriter::key_value(const std::string& key, bool v) {
    comma();
    out_ += '"' + escape_json(key) + "\": " + (v ? "true" : "false");
}

void JsonWriter::key_null(const std::string& key) {
    comma();
    out_ += '"' + escape_json(key) + "\": null";
}

void JsonWriter::value(const std::string& v) {
    comma();
    out_ += '"' + escape_json(v) + '"';
}

void JsonWriter::value(const char* v) { value(std::string(v)); }

void JsonWriter::value(double v) {
    comma();
    out_ += format_double(v);
}

void JsonWriter::value(int v) {
    comma();
    out_ += std::to_string(v);
}

void JsonWriter::value_null() {
    comma();
    out_ += "null";
}

namespace {

void close_scope(std::string& out, std::vector<bool>& scopes, int& depth,
                 char closer) {
    if (scopes.empty())
        throw DomainError("json writer: close without open scope");
    const bool empty_scope = scopes.back();
    scopes.pop_back();
    --depth;
    if (!empty_scope) {
        out += '\n';
        for (int i = 0; i < depth; ++i)
            out += "  ";
    }
    out += closer;
}

} // namespace

void JsonWriter::end_object() { close_scope(out_, first_in_scope_, depth_, '}'); }

void JsonWriter::end_array() { close_scope(out_, first_in_scope_, depth_, ']'); }

std::string JsonWriter::str() const {
    if (!first_in_scope_.empty())
        throw DomainError("json writer: unclosed scope");
    return out_;
}

} // namespace ptdirac
