#pragma once

#include "shs/apps/ed.hpp"
#include "shs/apps/hlp.hpp"
#include "shs/apps/mst.hpp"
#include "shs/apps/pms.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shs::apps {

// Instance-file parse failure carrying the 1-based source location.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& file, std::size_t line, std::size_t column,
               const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

// Coordinate CSV with columns id,x,y (header row optional).
std::vector<std::pair<double, double>> load_xy_csv(const std::filesystem::path& path);

// Plain numeric CSV, one row per machine.
std::vector<std::vector<double>> load_matrix_csv(const std::filesystem::path& path);

// key = value descriptor for a dispatch instance (pmin/pmax/demand/cost_a/
// cost_b/cost_c/b_row lines, optional penalty_weight).
EdInstance load_ed_descriptor(const std::filesystem::path& path);

// key = value descriptor with hub_count, balance_weight and either repeated
// "client = x y" lines or a clients_csv reference.
HlpInstance load_hlp_descriptor(const std::filesystem::path& path);

} // namespace shs::apps
