#include "support.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "zdgame/chain.hpp"
#include "zdgame/error.hpp"

namespace zdgame::cli {

std::string pretty(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto r =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  return std::string(buf, r.ptr);
}

std::string pretty(const Eigen::VectorXd& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += pretty(v(k));
  }
  return out + ")";
}

namespace {

double parse_double(const std::string& text) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, x);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(x)) {
    throw InvalidArgument("not a number: \"" + text + "\"");
  }
  return x;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty grid");
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw InvalidArgument("range grid must look like start:stop:step");
    }
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
    const double slack = 1e-9 * step;
    for (long k = 0;; ++k) {
      const double x = start + static_cast<double>(k) * step;
      if (x > stop + slack) break;
      values.push_back(x);
      if (values.size() > 10'000'000) throw InvalidArgument("grid too large");
    }
  } else {
    for (const auto& part : split(text, ',')) values.push_back(parse_double(part));
  }
  if (values.empty()) throw InvalidArgument("empty grid \"" + text + "\"");
  return values;
}

FillRule parse_fill(const std::string& name) {
  if (name == "uniform") return FillRule::uniform();
  if (name == "all-to-last") return FillRule::all_to_last();
  throw InvalidArgument("unknown fill rule \"" + name + "\"");
}

Player parse_player(const std::string& name) {
  if (name == "alpha") return Player::kAlpha;
  if (name == "beta") return Player::kBeta;
  throw InvalidArgument("player must be alpha or beta");
}

std::vector<MemoryOneStrategy> random_opponents(Player opponent, GameDims dims,
                                                int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MemoryOneStrategy> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    out.push_back(random_strategy(opponent, dims, rng));
  }
  return out;
}

std::pair<const MemoryOneStrategy&, const MemoryOneStrategy&> ordered(
    Player own, const MemoryOneStrategy& mine,
    const MemoryOneStrategy& theirs) {
  if (own == Player::kAlpha) return {mine, theirs};
  return {theirs, mine};
}

ResidualSummary relation_residuals(
    const BimatrixGame& game, Player own, const MemoryOneStrategy& strategy,
    const std::vector<MemoryOneStrategy>& opponents,
    const ZDCoefficients& coeffs) {
  ResidualSummary summary;
  for (const auto& q : opponents) {
    const auto [alpha, beta] = ordered(own, strategy, q);
    try {
      const auto check = verify_linear_relation(game, alpha, beta, coeffs, 0.0);
      summary.max_residual = std::max(summary.max_residual, check.residual);
      ++summary.evaluated;
    } catch (const NonUniqueStationary&) {
      ++summary.skipped;
    }
  }
  return summary;
}

std::string state_label(GameDims dims, int state) {
  const auto s = StateIndex::from_flat(state, dims);
  return "(alpha_" + std::to_string(s.i + 1) + ", beta_" +
         std::to_string(s.j + 1) + ")";
}

void print_violations(std::ostream& out, GameDims dims,
                      const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    out << "  state " << v.state << " " << state_label(dims, v.state)
        << ": first-move probability " << pretty(v.value)
        << " outside [0, 1]\n";
  }
}

}  // namespace zdgame::cli
