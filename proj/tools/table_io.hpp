#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace conformal::cli {

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

// Shortest round-trip decimal form.
std::string format_number(double v);

// Header row, ',' separator, '\n' line ends.
void write_csv(const Table& t, std::ostream& out);

// Line plot of every numeric column against the first one in an 800x600
// viewBox. Columns holding strings are skipped; NaN and inf break the line.
void write_svg(const Table& t, const std::string& title, std::ostream& out);

// Parses "3", "1..4" or "1,3,5" into a list of indices >= 1.
std::vector<std::size_t> parse_index_range(const std::string& text);

}  // namespace conformal::cli
