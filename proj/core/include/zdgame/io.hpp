#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zdgame/game.hpp"
#include "zdgame/strategy.hpp"

namespace zdgame::io {

// Game document: {"n", "m", "A": n rows of m numbers, "B": m rows of n
// numbers}. B[j][i] is beta's payoff at (alpha_i, beta_j). "B" may be omitted
// when n == m, meaning the symmetric game (beta receives a_ji).
BimatrixGame parse_game(std::string_view text);
std::string format_game(const BimatrixGame& game);
BimatrixGame load_game(const std::filesystem::path& path);
void save_game(const std::filesystem::path& path, const BimatrixGame& game);

// Strategy document: {"player": "alpha"|"beta", "n", "m",
// "order": "alpha-major", "rows": nm rows of K numbers}.
MemoryOneStrategy parse_strategy(std::string_view text);
std::string format_strategy(const MemoryOneStrategy& strategy);
MemoryOneStrategy load_strategy(const std::filesystem::path& path);
void save_strategy(const std::filesystem::path& path,
                   const MemoryOneStrategy& strategy);

// Shortest decimal that reads back to the same double; always '.' separated.
std::string format_number(double x);

// Minimal CSV emitter: header first, then rows of preformatted cells.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(const char* text) { return cell(std::string_view(text)); }
  CsvWriter& cell(double x);
  CsvWriter& cell(long long x);
  CsvWriter& cell(int x) { return cell(static_cast<long long>(x)); }
  CsvWriter& cell(bool x);
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

}  // namespace zdgame::io
