#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zdgame/game.hpp"
#include "zdgame/strategy.hpp"
#include "zdgame/zd.hpp"

namespace zdgame::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kDegenerate = 2,
  kInputError = 3,
};

// Human-readable number: up to 12 significant digits, '.' separated.
std::string pretty(double x);
std::string pretty(const Eigen::VectorXd& v);

// "1,2,3" or "start:stop:step" (stop inclusive).
std::vector<double> parse_grid(const std::string& text);

FillRule parse_fill(const std::string& name);
Player parse_player(const std::string& name);

std::vector<MemoryOneStrategy> random_opponents(Player opponent, GameDims dims,
                                                int count, std::uint64_t seed);

// Alpha strategy comes first whichever player `own` is.
std::pair<const MemoryOneStrategy&, const MemoryOneStrategy&> ordered(
    Player own, const MemoryOneStrategy& mine, const MemoryOneStrategy& theirs);

struct ResidualSummary {
  double max_residual = 0.0;
  int evaluated = 0;
  int skipped = 0;  // opponents without a unique stationary distribution
};

ResidualSummary relation_residuals(const BimatrixGame& game, Player own,
                                   const MemoryOneStrategy& strategy,
                                   const std::vector<MemoryOneStrategy>& opponents,
                                   const ZDCoefficients& coeffs);

void print_violations(std::ostream& out, GameDims dims,
                      const std::vector<Violation>& violations);

std::string state_label(GameDims dims, int state);

}  // namespace zdgame::cli
