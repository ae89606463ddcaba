#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptdirac {

// Shortest decimal that round-trips to the same double; scientific form below
// 1e-3 in magnitude, plain otherwise, and exactly "0" for zero.
std::string format_double(double v);

// Minimal CSV writer: comma-joined cells, '\n' line ends, no quoting (cell
// content here is numeric or a bare keyword, never contains commas).
std::string csv_row(const std::vector<std::string>& cells);

// Insertion-ordered JSON writer sufficient for the CLI's output: objects and
// arrays of strings/numbers/null built up imperatively.
class JsonWriter {
public:
    JsonWriter();
    void begin_object();
    void end_object();
    void begin_array(const std::string& key); // inside an object
    void begin_array();                       // inside an array
    void begin_object(const std::string& key);
    void begin_object_in_array();
    void key_value(const std::string& key, const std::string& string_value);
    void key_value(const std::string& key, const char* string_value);
    void key_value(const std::string& key, double number);
    void key_value(const std::string& key, int number);
    void key_value(const std::string& key, bool flag);
    void key_null(const std::string& key);
    // Bare items inside an array.
    void value(const std::string& string_value);
    void value(const char* string_value);
    void value(double number);
    void value(int number);
    void value_null();
    void end_array();
    std::string str() const;

private:
    void comma();
    void indent();
    std::string out_;
    std::vector<bool> first_in_scope_;
    int depth_ = 0;
};

} // namespace ptdirac
