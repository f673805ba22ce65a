#include "zdgame/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zdgame/error.hpp"
#include "text.hpp"

namespace zdgame::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const json& require(const json& doc, const char* field) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  const auto it = doc.find(field);
  if (it == doc.end()) {
    throw SchemaError(std::string("missing field \"") + field + "\"");
  }
  return *it;
}

int require_count(const json& doc, const char* field) {
  const json& value = require(doc, field);
  if (!value.is_number_integer() || value.get<long long>() < 1 ||
      value.get<long long>() > 1'000'000) {
    throw SchemaError(std::string("field \"") + field +
                      "\" must be a positive integer");
  }
  return value.get<int>();
}

Eigen::MatrixXd require_grid(const json& doc, const char* field, int rows,
                             int cols) {
  const json& grid = require(doc, field);
  const std::string name(field);
  if (!grid.is_array() || static_cast<int>(grid.size()) != rows) {
    throw SchemaError(name + " must be an array of " + std::to_string(rows) +
                      " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = grid[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw SchemaError(name + "[" + std::to_string(r) + "] must hold " +
                        std::to_string(cols) + " numbers");
    }
    for (int c = 0; c < cols; ++c) {
      const json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) {
        throw SchemaError(name + "[" + std::to_string(r) + "][" +
                          std::to_string(c) + "] is not a number");
      }
      out(r, c) = x.get<double>();
    }
  }
  return out;
}

void append_grid(std::string& out, const char* field,
                 const Eigen::MatrixXd& grid, bool trailing_comma) {
  out += "  \"";
  out += field;
  out += "\": [\n";
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    out += "    [";
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c > 0) out += ", ";
      out += format_number(grid(r, c));
    }
    out += r + 1 < grid.rows() ? "],\n" : "]\n";
  }
  out += trailing_comma ? "  ],\n" : "  ]\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace

std::string format_number(double x) {
  return detail::shortest(x);
}

BimatrixGame parse_game(std::string_view text) {
  const json doc = parse_json(text);
  const int n = require_count(doc, "n");
  const int m = require_count(doc, "m");
  Eigen::MatrixXd a = require_grid(doc, "A", n, m);
  if (!doc.contains("B")) {
    if (n != m) {
      throw SchemaError("field \"B\" may only be omitted when n == m");
    }
    return make_symmetric(a);
  }
  Eigen::MatrixXd b = require_grid(doc, "B", m, n);
  try {
    return make_game(std::move(a), std::move(b));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

std::string format_game(const BimatrixGame& game) {
  const GameDims dims = game.dims();
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(dims.n) + ",\n";
  out += "  \"m\": " + std::to_string(dims.m) + ",\n";
  append_grid(out, "A", game.alpha_payoffs(), true);
  append_grid(out, "B", game.beta_payoffs(), false);
  out += "}\n";
  return out;
}

BimatrixGame load_game(const std::filesystem::path& path) {
  return parse_game(read_file(path));
}

void save_game(const std::filesystem::path& path, const BimatrixGame& game) {
  write_file(path, format_game(game));
}

MemoryOneStrategy parse_strategy(std::string_view text) {
  const json doc = parse_json(text);
  const json& player_field = require(doc, "player");
  Player player;
  if (player_field == "alpha") {
    player = Player::kAlpha;
  } else if (player_field == "beta") {
    player = Player::kBeta;
  } else {
    throw SchemaError("field \"player\" must be \"alpha\" or \"beta\"");
  }
  const GameDims dims{require_count(doc, "n"), require_count(doc, "m")};
  if (require(doc, "order") != "alpha-major") {
    throw SchemaError("field \"order\" must be \"alpha-major\"");
  }
  Eigen::MatrixXd rows =
      require_grid(doc, "rows", dims.states(), dims.moves(player));
  try {
    return make_strategy(player, dims, std::move(rows));
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
}

std::string format_strategy(const MemoryOneStrategy& strategy) {
  const GameDims dims = strategy.dims();
  std::string out = "{\n";
  out += "  \"player\": \"" + std::string(to_string(strategy.player())) +
         "\",\n";
  out += "  \"n\": " + std::to_string(dims.n) + ",\n";
  out += "  \"m\": " + std::to_string(dims.m) + ",\n";
  out += "  \"order\": \"alpha-major\",\n";
  append_grid(out, "rows", strategy.rows(), false);
  out += "}\n";
  return out;
}

MemoryOneStrategy load_strategy(const std::filesystem::path& path) {
  return parse_strategy(read_file(path));
}

void save_strategy(const std::filesystem::path& path,
                   const MemoryOneStrategy& strategy) {
  write_file(path, format_strategy(strategy));
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k > 0) out_ << ',';
    out_ << header[k];
  }
  out_ << '\n';
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  if (filled_ > 0) out_ << ',';
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    out_ << text;
  } else {
    out_ << '"';
    for (char ch : text) {
      if (ch == '"') out_ << '"';
      out_ << ch;
    }
    out_ << '"';
  }
  ++filled_;
  return *this;
}

CsvWriter& CsvWriter::cell(double x) { return cell(format_number(x)); }

CsvWriter& CsvWriter::cell(long long x) { return cell(std::to_string(x)); }

CsvWriter& CsvWriter::cell(bool x) { return cell(std::string_view(x ? "true" : "false")); }

void CsvWriter::end_row() {
  if (filled_ != columns_) {
    throw InternalError("CSV row has " + std::to_string(filled_) +
                        " cells, header has " + std::to_string(columns_));
  }
  out_ << '\n';
  filled_ = 0;
}

}  // namespace zdgame::io
