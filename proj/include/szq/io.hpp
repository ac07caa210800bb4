#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szq/measures.hpp"
#include "szq/polynomial.hpp"

namespace szq {

/// `re` or `re,im`.
[[nodiscard]] Complex parse_complex(std::string_view text);
/// `re,im;re,im;...`; the empty string gives an empty list.
[[nodiscard]] std::vector<Complex> parse_complex_list(std::string_view text);

/// One `re im` pair per line (a lone `re` is allowed); blank lines and `#`
/// comments are ignored.
[[nodiscard]] std::vector<Complex> read_moment_file(const std::string& path);
/// First line: grid size; then that many nonnegative reals.
[[nodiscard]] std::vector<double> read_density_file(const std::string& path);
/// One real per line.
[[nodiscard]] std::vector<double> read_interval_moment_file(const std::string& path);

/// lebesgue | bernstein-szego:<roots> | geronimus:<a> | verblunsky:<coeffs> |
/// moments:<path> | density:<path> | interval-moments:<path>
[[nodiscard]] MeasureSpec parse_measure(std::string_view text);

struct RuleFile {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::optional<std::size_t> m;
  std::string measure_id;
};

/// JSON ({"nodes": [...], "weights": [...], "m": ...}) or CSV (`node_rad,weight`).
[[nodiscard]] RuleFile read_rule_file(const std::string& path);

}  // namespace szq
