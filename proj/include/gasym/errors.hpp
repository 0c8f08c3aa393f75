#ifndef GASYM_ERRORS_HPP
#define GASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gasym {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct incompatible_extension : error {
    explicit incompatible_extension(const std::string& w = "operands live in different extension fields")
        : error(w) {}
};

struct not_divisible : error {
    explicit not_divisible(const std::string& w = "exact division left a nonzero remainder") : error(w) {}
};

struct invalid_elimination : error {
    explicit invalid_elimination(const std::string& w) : error(w) {}
};

struct invalid_transform : error {
    explicit invalid_transform(const std::string& w = "singular coordinate change") : error(w) {}
};

struct needs_more_terms : error {
    explicit needs_more_terms(const std::string& w = "series truncation too shallow for this operation")
        : error(w) {}
};

struct needs_coordinate_change : error {
    explicit needs_coordinate_change(const std::string& w = "(0:1:0) lies at infinity of the plane curve")
        : error(w) {}
};

struct not_a_curve : error {
    explicit not_a_curve(const std::string& w = "defining polynomials share a common factor") : error(w) {}
};

struct no_valid_direction : error {
    explicit no_valid_direction(const std::string& w = "no valid projection direction found within retry budget")
        : error(w) {}
};

struct unsupported : error {
    explicit unsupported(const std::string& w) : error(w) {}
};

struct internal_inconsistency : error {
    explicit internal_inconsistency(const std::string& w) : error(w) {}
};

// Parse errors carry a 1-based position into the input text.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& w, int line_, int column_)
        : error(w + " at line " + std::to_string(line_) + ", column " + std::to_string(column_)),
          line(line_), column(column_) {}
};

} // namespace gasym

#endif
