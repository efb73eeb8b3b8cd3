#include "shs/apps/instances.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace shs::apps {

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path.string());
    return in;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& file, std::size_t line, std::size_t column,
                    const std::string& token) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ParseError(file, line, column, "expected a number, got '" + token + "'");
    }
}

std::vector<double> parse_number_list(const std::string& file, std::size_t line,
                                      const std::string& text, std::size_t column_base) {
    std::vector<double> values;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        values.push_back(parse_number(file, line, column_base, token));
    }
    return values;
}

// Splits "key = value"; returns false for blank/comment lines.
bool split_key_value(const std::string& raw, std::string& key, std::string& value) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') return false;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
        key.clear();
        value = line;
        return true;
    }
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    return true;
}

} // namespace

std::vector<std::pair<double, double>> load_xy_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string file = path.string();
    std::vector<std::pair<double, double>> points;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream stream(line);
        std::string cell;
        while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
        if (lineno == 1 && !cells.empty() &&
            !std::isdigit(static_cast<unsigned char>(cells[0].empty() ? 'x' : cells[0][0])) &&
            cells[0] != "-") {
            continue; // header row
        }
        if (cells.size() != 3) {
            throw ParseError(file, lineno, 1, "expected 3 columns id,x,y");
        }
        const double x = parse_number(file, lineno, 2, cells[1]);
        const double y = parse_number(file, lineno, 3, cells[2]);
        points.emplace_back(x, y);
    }
    if (points.empty()) throw ParseError(file, lineno == 0 ? 1 : lineno, 1, "no coordinate rows");
    return points;
}

std::vector<std::vector<double>> load_matrix_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string file = path.string();
    std::vector<std::vector<double>> rows;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream stream(line);
        std::string cell;
        std::size_t column = 0;
        while (std::getline(stream, cell, ',')) {
            ++column;
            row.push_back(parse_number(file, lineno, column, trim(cell)));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(file, lineno, 1, "ragged matrix row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(file, 1, 1, "no matrix rows");
    return rows;
}

EdInstance load_ed_descriptor(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string file = path.string();
    EdInstance inst;
    std::string raw, key, value;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!split_key_value(raw, key, value)) continue;
        if (key == "pmin") inst.p_min = parse_number_list(file, lineno, value, 1);
        else if (key == "pmax") inst.p_max = parse_number_list(file, lineno, value, 1);
        else if (key == "demand") inst.demand = parse_number(file, lineno, 1, value);
        else if (key == "cost_a") inst.cost_a = parse_number_list(file, lineno, value, 1);
        else if (key == "cost_b") inst.cost_b = parse_number_list(file, lineno, value, 1);
        else if (key == "cost_c") inst.cost_c = parse_number_list(file, lineno, value, 1);
        else if (key == "b_row") inst.loss_b.push_back(parse_number_list(file, lineno, value, 1));
        else if (key == "penalty_weight") inst.penalty_weight = parse_number(file, lineno, 1, value);
        else throw ParseError(file, lineno, 1, "unknown key '" + key + "'");
    }
    if (inst.p_min.empty()) throw ParseError(file, lineno == 0 ? 1 : lineno, 1, "missing pmin");
    return inst;
}

HlpInstance load_hlp_descriptor(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string file = path.string();
    HlpInstance inst;
    std::string raw, key, value;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!split_key_value(raw, key, value)) continue;
        if (key == "hub_count") {
            inst.hub_count = static_cast<std::size_t>(parse_number(file, lineno, 1, value));
        } else if (key == "balance_weight") {
            inst.balance_weight = parse_number(file, lineno, 1, value);
        } else if (key == "client") {
            const auto xy = parse_number_list(file, lineno, value, 1);
            if (xy.size() != 2) throw ParseError(file, lineno, 1, "client needs x y");
            inst.client_xy.emplace_back(xy[0], xy[1]);
        } else if (key == "clients_csv") {
            const auto csv_path = path.parent_path() / value;
            inst.client_xy = load_xy_csv(csv_path);
        } else {
            throw ParseError(file, lineno, 1, "unknown key '" + key + "'");
        }
    }
    if (inst.client_xy.empty()) {
        throw ParseError(file, lineno == 0 ? 1 : lineno, 1, "no clients given");
    }
    return inst;
}

} // namespace shs::apps
